#pragma once

// Reference implementations written straight from the definitions, kept apart
// from the library so tests can compare against them.

#include <bhc/fault_model.hpp>
#include <bhc/topology.hpp>

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <set>
#include <vector>

namespace ref {

using bhc::Edge;
using bhc::Vertex;

inline Vertex label(std::initializer_list<int> digits) {
    Vertex v = 0;
    int i = 0;
    for (int d : digits) v |= static_cast<Vertex>(d) << (2 * i++);
    return v;
}

inline int digit(Vertex v, int i) { return static_cast<int>((v >> (2 * i)) & 3u); }

inline Vertex set_digit(Vertex v, int i, int d) {
    v &= ~(Vertex{3} << (2 * i));
    return v | (static_cast<Vertex>(((d % 4) + 4) % 4) << (2 * i));
}

/// Neighbors straight from the formulas: a0 +- 1, and for i >= 1 also a_i
/// moved by (-1)^{a0}.
inline std::set<Vertex> neighbors(Vertex v, int n) {
    std::set<Vertex> out;
    const int a0 = digit(v, 0);
    const int sign = a0 % 2 == 0 ? 1 : -1;
    for (int s : {1, -1}) {
        const Vertex w = set_digit(v, 0, a0 + s);
        out.insert(w);
        for (int i = 1; i < n; ++i) out.insert(set_digit(w, i, digit(v, i) + sign));
    }
    return out;
}

inline std::set<Edge> edges(int n) {
    std::set<Edge> out;
    for (Vertex v = 0; v < (Vertex{1} << (2 * n)); ++v)
        for (Vertex w : neighbors(v, n)) out.insert(Edge(v, w));
    return out;
}

inline std::vector<std::set<Vertex>> surviving(int n, const std::vector<Edge>& faults) {
    const std::set<Edge> f(faults.begin(), faults.end());
    std::vector<std::set<Vertex>> adj(std::size_t{1} << (2 * n));
    for (Vertex v = 0; v < adj.size(); ++v)
        for (Vertex w : neighbors(v, n))
            if (!f.count(Edge(v, w))) adj[v].insert(w);
    return adj;
}

/// f4-cycles by scanning every vertex quadruple: vertex sets of 4-cycles
/// with a nonadjacent pair whose degrees are both two.
inline std::set<std::set<Vertex>> f4_by_quadruples(int n, const std::vector<Edge>& faults) {
    const auto adj = surviving(n, faults);
    const Vertex m = static_cast<Vertex>(adj.size());
    std::set<std::set<Vertex>> out;
    auto e = [&](Vertex a, Vertex b) { return adj[a].count(b) > 0; };
    for (Vertex a = 0; a < m; ++a)
        for (Vertex b = a + 1; b < m; ++b)
            for (Vertex c = b + 1; c < m; ++c)
                for (Vertex d = c + 1; d < m; ++d) {
                    // The three ways to arrange four vertices on a cycle.
                    const Vertex q[3][4] = {{a, b, c, d}, {a, b, d, c}, {a, c, b, d}};
                    for (const auto& o : q) {
                        if (!(e(o[0], o[1]) && e(o[1], o[2]) && e(o[2], o[3]) && e(o[3], o[0]))) continue;
                        const bool p1 = !e(o[0], o[2]) && adj[o[0]].size() == 2 && adj[o[2]].size() == 2;
                        const bool p2 = !e(o[1], o[3]) && adj[o[1]].size() == 2 && adj[o[3]].size() == 2;
                        if (p1 || p2) out.insert({a, b, c, d});
                    }
                }
    return out;
}

/// Plain backtracking Hamiltonian-cycle test for small graphs.
inline bool hamiltonian(const std::vector<std::set<Vertex>>& adj) {
    const std::size_t m = adj.size();
    std::vector<char> seen(m, 0);
    std::function<bool(Vertex, std::size_t)> go = [&](Vertex v, std::size_t depth) {
        if (depth == m) return adj[v].count(0) > 0;
        for (Vertex w : adj[v]) {
            if (seen[w]) continue;
            seen[w] = 1;
            if (go(w, depth + 1)) return true;
            seen[w] = 0;
        }
        return false;
    };
    seen[0] = 1;
    return go(0, 1);
}

}  // namespace ref
