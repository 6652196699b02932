#pragma once

// Shared machinery for the case analyses: one split of one BH_n instance, the
// ring orientation over its four subcubes, cached subcube oracles and the
// ring completion searches used by every case.

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "bhc/constructor.hpp"
#include "bhc/fault_model.hpp"
#include "bhc/oracles.hpp"
#include "bhc/topology.hpp"

namespace bhc::detail {

using Path = std::vector<Vertex>;
using Segments = std::vector<Path>;

/// Cycle written as a vertex sequence starting at `from` and ending at `to`,
/// where from-to is an edge of the cycle that the sequence does not use.
Path open_cycle(const Path& cycle, Vertex from, Vertex to);
/// Cycle rotated to start with `first, second` (consecutive on the cycle).
Path rotate_cycle(const Path& cycle, Vertex first, Vertex second);
bool cycle_has_edge(const Path& cycle, const Edge& e);
std::vector<Edge> cycle_edges(const Path& cycle);
Path reversed(Path p);

/// A case's product before stitching.
struct Built {
    Segments segments;
    std::string label;
    std::vector<Edge> r_edges;
    std::vector<Edge> non_r_edges;
    std::vector<Vertex> f4_pair;
    std::vector<TraceLevel> sublevels;
    std::vector<std::string> events;
};

/// Request to redo the level on another split dimension.
struct Redecompose {
    int split = -1;
    std::string label;
};

/// How a ring lane crosses one subcube: a laceable path between its entry and
/// exit, or a Hamiltonian cycle opened at the subcube edge joining them.
enum class LaneMode { laceable, through };

struct Classification {
    std::array<int, 4> min_degree{};
    std::vector<Vertex> pivots;
    std::vector<Vertex> isolated;
    std::vector<F4Cycle> f4;  // f4-cycles read inside the subcubes
    int max_part = 0;         // part with the most inner faults, ties to the smallest index
    int role0 = 0;            // part holding the degenerate vertex or f4-cycle, else max_part
};

struct Induced {
    Path cycle;
    std::vector<TraceLevel> levels;
    bool via_oracle = false;
};

class Level {
public:
    Level(const Topology& t, const FaultSet& f, int split, const ConstructOptions& options, int depth);

    const Topology& t;
    const FaultSet& f;
    const int n;
    const int split;
    const int depth;
    const ConstructOptions& options;
    SubcubeDecomposition d;
    FaultPartition p;
    const Topology& sub;
    std::array<FaultSet, 4> sub_faults;
    Classification cls;

    int base = 0;
    int dir = 1;
    void set_ring(int role0_part, int direction) {
        base = role0_part;
        dir = direction;
    }
    /// Ring direction for which v's cross edges lead to ring position 1.
    static int dir_exiting(Vertex v) { return partite_class(v) == 0 ? 1 : -1; }

    int part_at(int pos) const { return (((base + dir * pos) % 4) + 4) % 4; }
    int pos_of(Vertex v) const { return ((((static_cast<int>(d.part(v)) - base) * dir) % 4) + 4) % 4; }
    bool exits_forward(Vertex v) const { return partite_class(v) == (dir > 0 ? 0 : 1); }
    int faults_at(int pos) const { return static_cast<int>(p.inside[static_cast<std::size_t>(part_at(pos))].size()); }
    std::vector<Vertex> cross_ok(Vertex v) const;
    bool has_cross_ok(Vertex v) const { return !cross_ok(v).empty(); }
    /// Subcube neighbors of v; only through nonfaulty edges when `alive_only`.
    std::vector<Vertex> inner_neighbors(Vertex v, bool alive_only) const;
    std::vector<Edge> inner_faults_at(Vertex v) const;
    bool is_r_edge(const Edge& e) const { return has_cross_ok(e.u) && has_cross_ok(e.v); }
    bool inner_alive(Vertex a, Vertex b) const;

    // Subcube solvers. Arguments and results are in this level's coordinates;
    // `restored` lists faulty edges of the subcube treated as present.
    std::optional<Path> path(int pos, Vertex s, Vertex t_end);
    std::optional<std::pair<Path, Path>> pair(int pos, Vertex s1, Vertex t1, Vertex s2, Vertex t2);
    std::optional<Path> cycle_through(int pos, std::span<const Edge> restored, const Edge& e);
    std::optional<Path> hyper(int pos, Vertex removed, Vertex s, Vertex t_end);
    std::optional<Induced> induct(int pos, std::span<const Edge> restored);

    /// Segments [H1, H2, H3, H0] closing a ring around h0 = b0 .. a0.
    std::optional<Segments> single_ring(const Path& h0, std::array<LaneMode, 3> modes);
    /// Two segments in subcube 0, joined through positions 1..3 by two lanes.
    std::optional<Segments> double_ring(const Path& a, const Path& b, bool allow_hyper);
    /// Isolated u exits to both lanes; h0 = d0 .. b0 covers the rest of subcube 0.
    std::optional<Segments> u_turn(Vertex u, const Path& h0);

    /// Parts to try as subcube 0: the designated one, then the rest when `all`.
    std::vector<int> role0_candidates(bool all) const;

    std::vector<std::string> events;
    int oracle_calls = 0;

private:
    struct Lanes {
        std::array<Path, 3> first;   // b_j .. a_j
        std::array<Path, 3> second;  // d_j .. c_j (position 3 unused in hyper mode)
        Path hyper;                  // b_3 .. d_3 avoiding a_3
    };
    std::optional<std::array<Path, 3>> single_lane(Vertex b1, Vertex a3, std::array<LaneMode, 3> modes);
    std::optional<Lanes> double_lane(Vertex b1, Vertex d1, Vertex a3, Vertex c3, bool hyper_mode);
    std::optional<Path> lane_segment(int pos, Vertex entry, Vertex exit, LaneMode mode);
    bool spend();
    bool exhausted() const { return lane_budget_ == 0; }

    Vertex to_local(Vertex v) const { return d.to_local(v); }
    Path to_global(int part, const std::vector<Vertex>& local) const;
    FaultSet restored_faults(int part, std::span<const Edge> restored) const;
    void note_outcome(const char* what, SearchStatus status, bool beyond);

    std::map<std::tuple<int, int, Vertex, Vertex, Vertex, Vertex, std::vector<Edge>>, std::optional<Path>> cache_;
    std::map<std::tuple<int, Vertex, Vertex, Vertex, Vertex>, std::optional<std::pair<Path, Path>>> pair_cache_;
    std::map<std::pair<int, std::vector<Edge>>, std::optional<Induced>> induct_cache_;
    int lane_budget_ = -1;  // negative: unlimited
};

Classification classify(const Topology& t, const FaultSet& f, const SubcubeDecomposition& d, const FaultPartition& p);

/// Split dimensions ordered by the tie-break: larger |F_i| first, then smaller i.
std::vector<int> split_order(const FaultSet& f, int min_faults);

/// Records the finished case on `trace`.
TraceLevel make_level_record(const Level& level, const Built& built, const std::string& dictated, bool sibling);
TraceLevel make_redecompose_record(const Level& level, const Redecompose& r, const std::string& dictated);

ConstructResult construct_at_depth(const Topology& t, const FaultSet& f, const ConstructOptions& options, int depth);

using Outcome = std::variant<std::monostate, Built, Redecompose>;
/// A case handler enumerates its witnesses; `sibling` widens the search to
/// every choice of subcube 0 instead of the one the counts designate.
using Handler = Outcome (*)(Level&, bool sibling);

struct CaseFamily {
    std::string (*dictate)(const Level&);
    std::vector<std::pair<std::string, Handler>> handlers;  // keyed by dictated label
    int threshold;                                          // preferred minimum |F_i| of the split
};

const CaseFamily& lemma8_family();
const CaseFamily& inductive_family();

/// Runs the case analysis of `family` over the split ladder; nullopt when
/// every case reached an impasse.
std::optional<HamCycle> solve_cases(const Topology& t, const FaultSet& f, const ConstructOptions& options, int depth,
                                    const CaseFamily& family, CaseTrace& trace);

}  // namespace bhc::detail
