#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bhc/fault_model.hpp"
#include "bhc/topology.hpp"

namespace bhc {

struct HamPath {
    std::vector<Vertex> order;
    Vertex front() const { return order.front(); }
    Vertex back() const { return order.back(); }
};

struct HamCycle {
    std::vector<Vertex> order;  // closing edge back() -> front() is implicit
};

struct DisjointPathPair {
    HamPath first;
    HamPath second;
};

enum class SearchStatus { found, absent, unknown };

const char* to_string(SearchStatus s);

/// Node-expansion cap for one oracle call; hitting it yields SearchStatus::unknown.
struct SearchBudget {
    std::uint64_t max_expansions = 50'000'000;
};

template <class T>
struct SearchOutcome {
    SearchStatus status = SearchStatus::unknown;
    std::optional<T> value;
    std::uint64_t expansions = 0;
    /// The fault count exceeds the bound of the theorem this oracle stands in for.
    bool beyond_cited_bound = false;

    bool found() const { return status == SearchStatus::found; }
};

/// Exact Hamiltonian-cycle decision for BH_n - F.
SearchOutcome<HamCycle> ham_cycle(const Topology& t, const FaultSet& f, SearchBudget budget = {});

/// Hamiltonian s-t path of BH_n - F; s and t must lie in different partite classes.
SearchOutcome<HamPath> ham_path_laceable(const Topology& t, const FaultSet& f, Vertex s, Vertex t_end,
                                         SearchBudget budget = {});

/// Two vertex-disjoint paths s1-t1 and s2-t2 covering BH_n - F. {s1, s2} must lie in one
/// partite class and {t1, t2} in the other; all four endpoints distinct.
SearchOutcome<DisjointPathPair> two_disjoint_paths(const Topology& t, const FaultSet& f, Vertex s1, Vertex t1,
                                                   Vertex s2, Vertex t2, SearchBudget budget = {});

/// Hamiltonian cycle of BH_n - F through the nonfaulty edge e.
SearchOutcome<HamCycle> ham_cycle_through_edge(const Topology& t, const FaultSet& f, const Edge& e,
                                               SearchBudget budget = {});

/// Hamiltonian s-t path of BH_n - {v}; s, t in one class, v in the other.
SearchOutcome<HamPath> ham_path_minus_vertex(const Topology& t, Vertex v, Vertex s, Vertex t_end,
                                             SearchBudget budget = {});

}  // namespace bhc
