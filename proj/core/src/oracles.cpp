#include "bhc/oracles.hpp"

#include <algorithm>
#include <stdexcept>

#include "path_search.hpp"

namespace bhc {

using detail::search_with_restarts;
using detail::SearchGraph;

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::absent: return "absent";
        case SearchStatus::unknown: return "unknown";
    }
    return "unknown";
}

namespace {

std::vector<Vertex> to_global(const SearchGraph& g, const std::vector<int>& local) {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (int v : local) out.push_back(g.global(v));
    return out;
}

void require_vertex(const Topology& t, Vertex v) {
    if (!t.contains(v)) throw std::invalid_argument("vertex outside BH_n");
}

}  // namespace

SearchOutcome<HamCycle> ham_cycle(const Topology& t, const FaultSet& f, SearchBudget budget) {
    SearchOutcome<HamCycle> out;
    SearchGraph g(t, f);
    // A Hamiltonian cycle uses two edges at the minimum-degree vertex s; if it avoids
    // s-x_0 .. s-x_{k-1} it must use s-x_k for some later k, so trying the first d-1
    // neighbors in turn with the previous ones removed is exhaustive.
    int s = 0;
    for (int v = 1; v < g.size(); ++v)
        if (g.neighbors(v).size() < g.neighbors(s).size()) s = v;
    const std::vector<int> around = g.neighbors(s);
    bool unknown = false;
    for (std::size_t k = 0; k + 1 < around.size(); ++k) {
        const auto run = search_with_restarts(g, s, around[k], std::nullopt,
                                              budget.max_expansions - std::min(budget.max_expansions, out.expansions));
        const auto status = run.status;
        out.expansions += run.expansions;
        if (status == SearchStatus::found) {
            out.status = SearchStatus::found;
            out.value = HamCycle{to_global(g, run.path)};
            return out;
        }
        if (status == SearchStatus::unknown) {
            unknown = true;
            break;
        }
        g.remove_edge(s, around[k]);
    }
    out.status = unknown ? SearchStatus::unknown : SearchStatus::absent;
    return out;
}

SearchOutcome<HamPath> ham_path_laceable(const Topology& t, const FaultSet& f, Vertex s, Vertex t_end,
                                         SearchBudget budget) {
    require_vertex(t, s);
    require_vertex(t, t_end);
    if (partite_class(s) == partite_class(t_end))
        throw std::invalid_argument("laceable path endpoints must lie in different partite classes");
    SearchOutcome<HamPath> out;
    out.beyond_cited_bound = static_cast<int>(f.size()) > 2 * t.dimension() - 2;
    SearchGraph g(t, f);
    const auto run = search_with_restarts(g, g.local(s), g.local(t_end), std::nullopt, budget.max_expansions);
    out.status = run.status;
    out.expansions = run.expansions;
    if (out.found()) out.value = HamPath{to_global(g, run.path)};
    return out;
}

SearchOutcome<DisjointPathPair> two_disjoint_paths(const Topology& t, const FaultSet& f, Vertex s1, Vertex t1,
                                                   Vertex s2, Vertex t2, SearchBudget budget) {
    for (Vertex v : {s1, t1, s2, t2}) require_vertex(t, v);
    if (s1 == s2 || t1 == t2 || s1 == t1 || s1 == t2 || s2 == t1 || s2 == t2)
        throw std::invalid_argument("disjoint path endpoints must be distinct");
    if (partite_class(s1) != partite_class(s2) || partite_class(t1) != partite_class(t2) ||
        partite_class(s1) == partite_class(t1))
        throw std::invalid_argument("{s1,s2} and {t1,t2} must lie in different partite classes");
    SearchOutcome<DisjointPathPair> out;
    out.beyond_cited_bound = static_cast<int>(f.size()) > 2 * t.dimension() - 3;

    // One Hamiltonian path s1 .. t1 -> s2 .. t2 over a virtual link t1 -> s2.
    SearchGraph g(t, f);
    const int lt1 = g.local(t1);
    const int ls2 = g.local(s2);
    g.add_edge(lt1, ls2);
    const auto run = search_with_restarts(g, g.local(s1), g.local(t2), std::make_pair(lt1, ls2), budget.max_expansions);
    out.status = run.status;
    out.expansions = run.expansions;
    if (out.found()) {
        const auto path = to_global(g, run.path);
        const auto cut = std::find(path.begin(), path.end(), t1) + 1;
        DisjointPathPair pair;
        pair.first.order.assign(path.begin(), cut);
        pair.second.order.assign(cut, path.end());
        out.value = std::move(pair);
    }
    return out;
}

SearchOutcome<HamCycle> ham_cycle_through_edge(const Topology& t, const FaultSet& f, const Edge& e,
                                               SearchBudget budget) {
    if (!t.is_edge(e)) throw std::invalid_argument("ham_cycle_through_edge: not an edge");
    if (f.contains(e)) throw std::invalid_argument("ham_cycle_through_edge: edge is faulty");
    SearchOutcome<HamCycle> out;
    out.beyond_cited_bound = static_cast<int>(f.size()) > 4 * t.dimension() - 5;
    SearchGraph g(t, f);
    if (g.size() == 2) {
        out.status = SearchStatus::absent;
        return out;
    }
    const auto run = search_with_restarts(g, g.local(e.u), g.local(e.v), std::nullopt, budget.max_expansions);
    out.status = run.status;
    out.expansions = run.expansions;
    if (out.found()) out.value = HamCycle{to_global(g, run.path)};
    return out;
}

SearchOutcome<HamPath> ham_path_minus_vertex(const Topology& t, Vertex v, Vertex s, Vertex t_end,
                                             SearchBudget budget) {
    for (Vertex x : {v, s, t_end}) require_vertex(t, x);
    if (partite_class(s) != partite_class(t_end) || partite_class(v) == partite_class(s))
        throw std::invalid_argument("hyper-laceable path needs s, t in one class and v in the other");
    if (s == t_end) throw std::invalid_argument("hyper-laceable path endpoints must differ");
    SearchOutcome<HamPath> out;
    const std::vector<Vertex> removed{v};
    SearchGraph g(t, FaultSet::empty(t), removed);
    const auto run = search_with_restarts(g, g.local(s), g.local(t_end), std::nullopt, budget.max_expansions);
    out.status = run.status;
    out.expansions = run.expansions;
    if (out.found()) out.value = HamPath{to_global(g, run.path)};
    return out;
}

}  // namespace bhc
