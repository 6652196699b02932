#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bhc {

/// Vertex of BH_n packed as sum(digit[i] * 4^i); digit 0 is the inner index.
using Vertex = std::uint32_t;

inline constexpr int kMaxDimension = 12;

/// Expanded base-4 label. digits[0] is the inner index a_0.
struct VertexLabel {
    std::vector<int> digits;

    static VertexLabel decode(Vertex v, int n);
    Vertex encode() const;
    std::string to_string() const;
    bool operator==(const VertexLabel&) const = default;
};

inline int digit_of(Vertex v, int i) { return static_cast<int>((v >> (2 * i)) & 3u); }
inline Vertex with_digit(Vertex v, int i, int d) {
    return (v & ~(Vertex{3} << (2 * i))) | (static_cast<Vertex>(d & 3) << (2 * i));
}
/// Partite class: parity of the inner index.
inline int partite_class(Vertex v) { return static_cast<int>(v & 1u); }

/// Undirected edge in canonical form (u < v).
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool touches(Vertex x) const { return u == x || v == x; }
    Vertex other(Vertex x) const { return x == u ? v : u; }
    std::uint64_t key() const { return (std::uint64_t{u} << 32) | v; }
    auto operator<=>(const Edge&) const = default;
};

/// Immutable BH_n. Neighbor lists are stored in dimension order: slots 2i and
/// 2i+1 hold the two dimension-i neighbors of a vertex.
class Topology {
public:
    static Topology build_direct(int n);
    static Topology build_recursive(int n);

    int dimension() const { return n_; }
    std::size_t vertex_count() const { return std::size_t{1} << (2 * n_); }
    std::size_t edge_count() const { return vertex_count() * static_cast<std::size_t>(n_); }
    int degree() const { return 2 * n_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + static_cast<std::size_t>(v) * degree(), static_cast<std::size_t>(degree())};
    }
    std::array<Vertex, 2> neighbors_in_dimension(Vertex v, int i) const {
        auto nb = neighbors(v);
        return {nb[2 * i], nb[2 * i + 1]};
    }
    /// Slot index of v in the neighbor list of u, or -1.
    int slot_of(Vertex u, Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return slot_of(u, v) >= 0; }
    /// Dimension of edge uv, or nullopt when u and v are not adjacent.
    std::optional<int> edge_dimension(Vertex u, Vertex v) const;
    int edge_dimension(const Edge& e) const;
    bool is_edge(const Edge& e) const { return e.u < vertex_count() && e.v < vertex_count() && adjacent(e.u, e.v); }
    bool contains(Vertex v) const { return v < vertex_count(); }

    /// All edges, canonical and sorted.
    std::vector<Edge> edges() const;

    /// The vertex with the same neighborhood: inner index shifted by 2.
    static Vertex backup_vertex(Vertex v) { return with_digit(v, 0, (digit_of(v, 0) + 2) & 3); }

private:
    explicit Topology(int n);
    void finalize_from_edges(const std::vector<Edge>& edges);

    int n_ = 0;
    std::vector<Vertex> adjacency_;
};

/// Returns a shared instance of BH_n (built once per n, thread-safe).
const Topology& topology_for(int n);

/// BH_n with the dimension-i edges removed splits into four copies of BH_{n-1}.
/// For i >= 1 the part index is digit i and the local label drops digit i.
/// For i == 0 the part index is (a_0 mod 2 - sum_{k>=1} a_k) mod 4 and the local
/// label drops digit 1. In both cases a cross edge leaves an even vertex of part j
/// towards part j+1 and an odd vertex of part j towards part j-1.
struct SubcubeDecomposition {
    int n = 0;
    int split_dimension = 0;
    std::array<std::vector<Vertex>, 4> parts;
    std::vector<Edge> cross_edges;
    std::vector<std::uint8_t> part_of;
    std::vector<Vertex> local_of;
    std::array<std::vector<Vertex>, 4> global_of;

    int part(Vertex v) const { return part_of[v]; }
    Vertex to_local(Vertex v) const { return local_of[v]; }
    Vertex to_global(int part, Vertex local) const { return global_of[static_cast<std::size_t>(part)][local]; }
};

SubcubeDecomposition decompose(const Topology& t, int split_dimension);

}  // namespace bhc
