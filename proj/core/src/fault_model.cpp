#include "bhc/fault_model.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace bhc {

FaultSet::FaultSet(const Topology& t, std::span<const Edge> edges) : n_(t.dimension()) {
    masks_.assign(t.vertex_count(), 0u);
    per_dimension_.assign(static_cast<std::size_t>(n_), 0);
    edges_.reserve(edges.size());
    for (std::size_t pos = 0; pos < edges.size(); ++pos) {
        const Edge e(edges[pos].u, edges[pos].v);
        if (!t.is_edge(e))
            throw FaultSetError("fault #" + std::to_string(pos) + " is not an edge of BH_" + std::to_string(n_), pos);
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const auto& e : edges_) {
        masks_[e.u] |= 1u << t.slot_of(e.u, e.v);
        masks_[e.v] |= 1u << t.slot_of(e.v, e.u);
        ++per_dimension_[static_cast<std::size_t>(t.edge_dimension(e))];
    }
}

bool FaultSet::contains(Vertex u, Vertex v) const {
    const Edge e(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

FaultSet FaultSet::with(const Topology& t, const Edge& e) const {
    auto edges = edges_;
    edges.push_back(e);
    return FaultSet(t, edges);
}

FaultSet FaultSet::without(const Topology& t, std::span<const Edge> removed) const {
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (const auto& e : edges_)
        if (std::find(removed.begin(), removed.end(), e) == removed.end()) edges.push_back(e);
    return FaultSet(t, edges);
}

FaultPartition partition(const Topology& t, const FaultSet& f, const SubcubeDecomposition& d) {
    FaultPartition p;
    p.split_dimension = d.split_dimension;
    for (const auto& e : f.edges()) {
        if (t.edge_dimension(e) == d.split_dimension)
            p.cross.push_back(e);
        else
            p.inside[d.part(e.u)].push_back(e);
    }
    return p;
}

FaultPartition partition(const Topology& t, const FaultSet& f, int split_dimension) {
    return partition(t, f, decompose(t, split_dimension));
}

FaultSet local_faults(const Topology& sub, const FaultSet& f, const SubcubeDecomposition& d, int part) {
    std::vector<Edge> local;
    for (const auto& e : f.edges())
        if (d.part(e.u) == part && d.part(e.v) == part) local.emplace_back(d.to_local(e.u), d.to_local(e.v));
    return FaultSet(sub, local);
}

int nonfaulty_in_dimension(const Topology&, const FaultSet& f, Vertex v, int i) {
    const auto mask = f.faulty_slots(v);
    return 2 - static_cast<int>(((mask >> (2 * i)) & 1u) + ((mask >> (2 * i + 1)) & 1u));
}

EdgeClass classify_edge(const Topology& t, const FaultSet& f, int split_dimension, const Edge& e) {
    const auto dim = t.edge_dimension(e.u, e.v);
    if (!dim) throw std::invalid_argument("classify_edge: not an edge");
    if (*dim == split_dimension) throw std::invalid_argument("classify_edge: cross edge has no r-class");
    const bool u_ok = nonfaulty_in_dimension(t, f, e.u, split_dimension) > 0;
    const bool v_ok = nonfaulty_in_dimension(t, f, e.v, split_dimension) > 0;
    return (u_ok && v_ok) ? EdgeClass::r_edge : EdgeClass::non_r_edge;
}

int surviving_degree(const Topology& t, const FaultSet& f, Vertex v, std::optional<int> deleted_dimension) {
    std::uint32_t alive = ((1u << t.degree()) - 1u) & ~f.faulty_slots(v);
    if (deleted_dimension) alive &= ~(3u << (2 * *deleted_dimension));
    return std::popcount(alive);
}

std::vector<Vertex> pivot_vertices(const Topology& t, const FaultSet& f, const SubcubeDecomposition& d, int part) {
    std::vector<Vertex> out;
    for (Vertex v : d.parts[static_cast<std::size_t>(part)])
        if (surviving_degree(t, f, v, d.split_dimension) == 1) out.push_back(v);
    return out;
}

std::vector<Vertex> isolated_vertices(const Topology& t, const FaultSet& f, const SubcubeDecomposition& d, int part) {
    std::vector<Vertex> out;
    for (Vertex v : d.parts[static_cast<std::size_t>(part)])
        if (surviving_degree(t, f, v, d.split_dimension) == 0) out.push_back(v);
    return out;
}

namespace {

std::vector<Vertex> surviving_neighbors(const Topology& t, const FaultSet& f, Vertex v, std::optional<int> deleted) {
    std::vector<Vertex> out;
    const auto mask = f.faulty_slots(v);
    auto nb = t.neighbors(v);
    for (int s = 0; s < t.degree(); ++s) {
        if (mask & (1u << s)) continue;
        if (deleted && s / 2 == *deleted) continue;
        out.push_back(nb[static_cast<std::size_t>(s)]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<F4Cycle> find_f4_cycles(const Topology& t, const FaultSet& f, std::optional<int> deleted_dimension) {
    // In a bipartite graph the nonadjacent pair of a 4-cycle is a same-class
    // pair with two common neighbors; with both degrees equal to two, those
    // common neighbors are the whole neighborhood.
    std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> by_neighborhood;
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
        if (surviving_degree(t, f, v, deleted_dimension) != 2) continue;
        const auto nb = surviving_neighbors(t, f, v, deleted_dimension);
        by_neighborhood[{nb[0], nb[1]}].push_back(v);
    }
    std::vector<F4Cycle> out;
    for (const auto& [nb, group] : by_neighborhood) {
        for (std::size_t a = 0; a < group.size(); ++a) {
            for (std::size_t b = a + 1; b < group.size(); ++b) {
                F4Cycle c;
                c.cycle = {group[a], nb.first, group[b], nb.second};
                c.degree_two = {group[a], group[b]};
                out.push_back(c);
            }
        }
    }
    // A 4-cycle whose two opposite pairs both qualify is reported once.
    std::vector<F4Cycle> unique;
    for (const auto& c : out) {
        auto sorted = c.cycle;
        std::sort(sorted.begin(), sorted.end());
        const bool seen = std::any_of(unique.begin(), unique.end(), [&](const F4Cycle& u) {
            auto s = u.cycle;
            std::sort(s.begin(), s.end());
            return s == sorted;
        });
        if (!seen) unique.push_back(c);
    }
    std::sort(unique.begin(), unique.end(), [](const F4Cycle& a, const F4Cycle& b) { return a.cycle < b.cycle; });
    return unique;
}

int min_degree(const Topology& t, const FaultSet& f, std::optional<int> deleted_dimension) {
    int best = t.degree();
    for (Vertex v = 0; v < t.vertex_count(); ++v) best = std::min(best, surviving_degree(t, f, v, deleted_dimension));
    return best;
}

}  // namespace bhc
