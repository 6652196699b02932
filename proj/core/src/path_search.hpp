#pragma once

// Depth-first Hamiltonian path search shared by the oracles.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "bhc/fault_model.hpp"
#include "bhc/oracles.hpp"
#include "bhc/topology.hpp"

namespace bhc::detail {

/// Compact undirected graph over local ids 0..size-1; local ids follow
/// increasing global encoding.
class SearchGraph {
public:
    /// BH_n - F, minus the vertices in `removed`.
    SearchGraph(const Topology& t, const FaultSet& f, std::span<const Vertex> removed = {});

    int size() const { return static_cast<int>(global_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool adjacent(int a, int b) const { return adjm_[static_cast<std::size_t>(a) * global_.size() + b] != 0; }
    int cls(int v) const { return cls_[static_cast<std::size_t>(v)]; }
    Vertex global(int v) const { return global_[static_cast<std::size_t>(v)]; }
    /// Local id of a global vertex, or -1 when absent.
    int local(Vertex v) const { return v < local_.size() ? local_[v] : -1; }

    void add_edge(int a, int b);
    void remove_edge(int a, int b);

private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint8_t> adjm_;
    std::vector<int> cls_;
    std::vector<Vertex> global_;
    std::vector<int> local_;
};

/// Searches for a path from `start` to `target` visiting every vertex. When
/// `link` = (a, b) is set, the path must traverse a then immediately b, and b
/// may be entered only from a.
class PathSearch {
public:
    /// A nonzero `shuffle_seed` breaks ties between equally constrained
    /// candidates pseudo-randomly instead of by increasing local id.
    PathSearch(const SearchGraph& g, int start, int target, std::optional<std::pair<int, int>> link,
               std::uint64_t budget, std::uint64_t shuffle_seed = 0);

    SearchStatus run();
    const std::vector<int>& path() const { return path_; }
    std::uint64_t expansions() const { return expansions_; }

private:
    bool extend(int cur);
    void visit(int v);
    void unvisit(int v);
    bool feasible_after_move(int prev, int cur) const;
    /// Necessary conditions on the unvisited graph plus cur: connected, no
    /// cut vertex that strands a block away from the target, balanced blocks.
    bool structure_ok(int cur) const;

    const SearchGraph& g_;
    int start_;
    int target_;
    int link_from_ = -1;
    int link_to_ = -1;
    std::uint64_t budget_;
    std::uint64_t expansions_ = 0;
    bool shuffle_ = false;
    std::mt19937_64 rng_;
    bool exhausted_ = false;

    std::vector<std::uint8_t> visited_;
    std::vector<int> unvisited_degree_;
    std::vector<int> path_;
    std::array<int, 2> unvisited_by_class_{};
    int unvisited_ = 0;

    mutable std::vector<std::uint32_t> stamp_;
    mutable std::uint32_t epoch_ = 0;
    mutable std::vector<int> disc_, low_, end_, parent_, next_;
    mutable std::vector<std::array<int, 2>> sub_;
    mutable std::vector<int> stack_;
};

struct SearchRun {
    SearchStatus status = SearchStatus::unknown;
    std::vector<int> path;
    std::uint64_t expansions = 0;
};

/// Short shuffled runs with doubling caps, then one exhaustive run in id order
/// with whatever budget is left. Any run that ends below its cap is conclusive.
SearchRun search_with_restarts(const SearchGraph& g, int start, int target, std::optional<std::pair<int, int>> link,
                               std::uint64_t budget);

}  // namespace bhc::detail
