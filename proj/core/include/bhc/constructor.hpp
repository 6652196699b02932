#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bhc/fault_model.hpp"
#include "bhc/oracles.hpp"
#include "bhc/topology.hpp"

namespace bhc {

/// Outcome of checking |F| <= 5n-7, min degree >= 2 and absence of f4-cycles.
struct PreconditionReport {
    std::size_t fault_count = 0;
    long bound = 0;
    bool size_ok = false;
    int min_degree = 0;
    bool degree_ok = false;
    std::vector<Vertex> low_degree_vertices;
    std::vector<F4Cycle> f4_cycles;
    bool f4_free() const { return f4_cycles.empty(); }
    bool ok() const { return size_ok && degree_ok && f4_free(); }
};

PreconditionReport check_preconditions(const Topology& t, const FaultSet& f);

/// Named objects a case picked. All edges and vertices are in the coordinates
/// of the level they belong to.
struct TraceWitnesses {
    std::vector<Edge> cross_edges;   // junctions between consecutive ring segments
    std::vector<Edge> r_edges;       // edges used as r-edges (faulty or not)
    std::vector<Edge> non_r_edges;   // faulty non-r-edges the case reroutes around
    std::vector<Vertex> pivots;
    std::vector<Vertex> isolated;
    std::vector<Vertex> f4_pair;
};

/// One application of the case analysis to one BH_n instance.
struct TraceLevel {
    int depth = 0;
    int n = 0;
    std::vector<Edge> faults;
    int split_dim = -1;
    int role0_part = 0;            // subcube playing the role of subcube 0
    int ring_dir = 1;              // ring position r is part (role0_part + ring_dir * r) mod 4
    int cross_faults = 0;          // |F_i|
    std::array<int, 4> subcube_faults{};  // |F^j| indexed by part
    std::string dictated;          // case the counts select
    std::string case_label;        // case that produced the cycle
    bool sibling = false;          // produced by a case other than the dictated one
    TraceWitnesses witnesses;
    std::vector<std::string> events;
};

struct CaseTrace {
    std::vector<TraceLevel> levels;
    std::vector<std::string> fallbacks;
    std::size_t impasses = 0;

    std::vector<std::string> case_path() const;
};

enum class ConstructStatus {
    constructed,          // the case analysis produced the cycle
    fallback,             // global search produced the cycle
    no_cycle,             // global search proved absence
    unknown,              // an oracle budget was exhausted
    precondition_failed,
};

const char* to_string(ConstructStatus s);

struct ConstructOptions {
    SearchBudget subcall_budget{2'000'000};
    SearchBudget fallback_budget{50'000'000};
    bool global_fallback = true;
    /// Oracle calls one ring completion may spend before declaring an impasse.
    int lane_attempts = 48;
};

struct ConstructResult {
    ConstructStatus status = ConstructStatus::unknown;
    std::optional<HamCycle> cycle;
    CaseTrace trace;
};

/// Dispatch: n = 2 by exact search, n = 3 by the |F| <= 8 case analysis,
/// n >= 4 by the inductive case analysis.
ConstructResult construct(const Topology& t, const FaultSet& f, const ConstructOptions& options = {});
ConstructResult lemma8_construct(const Topology& t, const FaultSet& f, const ConstructOptions& options = {});
ConstructResult inductive_construct(const Topology& t, const FaultSet& f, const ConstructOptions& options = {});

class StitchError : public std::runtime_error {
public:
    enum class Kind { coverage_gap, overlap, parity_mismatch, faulty_junction, not_cross_edge, broken_segment };
    StitchError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Joins ring segments (paths given in traversal order) into one Hamiltonian
/// cycle. Consecutive segments, and the last with the first, must be joined by
/// nonfaulty edges of `split_dim`.
HamCycle stitch(const Topology& t, const FaultSet& f, int split_dim, const std::vector<std::vector<Vertex>>& segments);

}  // namespace bhc
