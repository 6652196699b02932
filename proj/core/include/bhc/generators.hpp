#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "bhc/topology.hpp"

namespace bhc {

enum class Generator { uniform, dim_heavy, star, f4_forge, subcube_heavy };

inline constexpr Generator kAllGenerators[] = {Generator::uniform, Generator::dim_heavy, Generator::star,
                                               Generator::f4_forge, Generator::subcube_heavy};

const char* to_string(Generator g);
std::optional<Generator> parse_generator(std::string_view name);

/// Shape knobs; unset fields are drawn from the instance RNG.
struct GeneratorParams {
    std::optional<int> dimension;    // dim-heavy: the loaded dimension; star, f4-forge, subcube-heavy: the spared split
    std::optional<int> load;         // dim-heavy: |F_i| floor; star: faults per hub; subcube-heavy: |F^0|
    std::optional<int> hubs;         // star: 1 or 2
    std::optional<bool> near_miss;   // f4-forge: leave one edge of the pattern intact
};

/// Per-instance RNG: mt19937_64 seeded with seed_seq{seed low, seed high, id low, id high}.
std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t instance);

/// Exactly min(count, |E|) distinct faulty edges, canonical and sorted. The
/// structured generators build their pattern first (truncated to `count`)
/// and pad the rest with edges of the spared dimension where they have one.
std::vector<Edge> generate_faults(Generator g, const Topology& t, int count, std::mt19937_64& rng,
                                  const GeneratorParams& params = {});

}  // namespace bhc
