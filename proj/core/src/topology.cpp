#include "bhc/topology.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace bhc {

VertexLabel VertexLabel::decode(Vertex v, int n) {
    VertexLabel label;
    label.digits.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) label.digits[static_cast<std::size_t>(i)] = digit_of(v, i);
    return label;
}

Vertex VertexLabel::encode() const {
    if (digits.empty() || static_cast<int>(digits.size()) > kMaxDimension)
        throw std::invalid_argument("vertex label length out of range");
    Vertex v = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] < 0 || digits[i] > 3) throw std::invalid_argument("vertex digit outside {0,1,2,3}");
        v |= static_cast<Vertex>(digits[i]) << (2 * i);
    }
    return v;
}

std::string VertexLabel::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < digits.size(); ++i) os << (i ? "," : "") << digits[i];
    os << ')';
    return os.str();
}

Topology::Topology(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("balanced hypercube dimension must be >= 1");
    if (n > kMaxDimension) throw std::invalid_argument("balanced hypercube dimension too large");
}

Topology Topology::build_direct(int n) {
    Topology t(n);
    const auto count = t.vertex_count();
    t.adjacency_.resize(count * static_cast<std::size_t>(t.degree()));
    for (Vertex v = 0; v < count; ++v) {
        const int a0 = digit_of(v, 0);
        const int shift = (a0 % 2 == 0) ? 1 : 3;  // (-1)^{a0} mod 4
        Vertex* slots = t.adjacency_.data() + static_cast<std::size_t>(v) * t.degree();
        const Vertex up = with_digit(v, 0, (a0 + 1) & 3);
        const Vertex down = with_digit(v, 0, (a0 + 3) & 3);
        slots[0] = up;
        slots[1] = down;
        for (int i = 1; i < n; ++i) {
            const int ai = (digit_of(v, i) + shift) & 3;
            slots[2 * i] = with_digit(up, i, ai);
            slots[2 * i + 1] = with_digit(down, i, ai);
        }
    }
    return t;
}

Topology Topology::build_recursive(int n) {
    if (n < 1) throw std::invalid_argument("balanced hypercube dimension must be >= 1");
    // BH_1: the 4-cycle 0-1-2-3-0.
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    for (int m = 2; m <= n; ++m) {
        const Vertex block = Vertex{1} << (2 * (m - 1));
        std::vector<Edge> next;
        next.reserve(edges.size() * 4 + block * 4);
        for (Vertex j = 0; j < 4; ++j)
            for (const auto& e : edges) next.emplace_back(e.u + j * block, e.v + j * block);
        for (Vertex j = 0; j < 4; ++j) {
            for (Vertex low = 0; low < block; ++low) {
                const int a0 = digit_of(low, 0);
                const Vertex jn = (a0 % 2 == 0) ? ((j + 1) & 3) : ((j + 3) & 3);
                const Vertex self = low + j * block;
                next.emplace_back(self, with_digit(low, 0, (a0 + 1) & 3) + jn * block);
                next.emplace_back(self, with_digit(low, 0, (a0 + 3) & 3) + jn * block);
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        edges = std::move(next);
    }
    Topology t(n);
    t.finalize_from_edges(edges);
    return t;
}

void Topology::finalize_from_edges(const std::vector<Edge>& edges) {
    const auto count = vertex_count();
    std::vector<std::vector<Vertex>> lists(count);
    for (const auto& e : edges) {
        lists[e.u].push_back(e.v);
        lists[e.v].push_back(e.u);
    }
    adjacency_.assign(count * static_cast<std::size_t>(degree()), 0);
    for (Vertex v = 0; v < count; ++v) {
        if (lists[v].size() != static_cast<std::size_t>(degree()))
            throw std::logic_error("recursive construction produced irregular vertex");
        std::array<int, kMaxDimension> filled{};
        for (Vertex w : lists[v]) {
            // Dimension from labels: 0 when only the inner index differs.
            int dim = 0;
            for (int i = 1; i < n_; ++i)
                if (digit_of(v, i) != digit_of(w, i)) dim = i;
            auto& f = filled[static_cast<std::size_t>(dim)];
            if (f >= 2) throw std::logic_error("more than two neighbors in one dimension");
            // Keep the (a0+1, a0-1) order used by build_direct.
            const int slot = (digit_of(w, 0) == ((digit_of(v, 0) + 1) & 3)) ? 0 : 1;
            adjacency_[static_cast<std::size_t>(v) * degree() + 2 * dim + slot] = w;
            ++f;
        }
    }
}

int Topology::slot_of(Vertex u, Vertex v) const {
    if (u >= vertex_count()) return -1;
    auto nb = neighbors(u);
    for (int s = 0; s < degree(); ++s)
        if (nb[static_cast<std::size_t>(s)] == v) return s;
    return -1;
}

std::optional<int> Topology::edge_dimension(Vertex u, Vertex v) const {
    const int s = slot_of(u, v);
    if (s < 0) return std::nullopt;
    return s / 2;
}

int Topology::edge_dimension(const Edge& e) const {
    auto d = edge_dimension(e.u, e.v);
    if (!d) throw std::invalid_argument("not an edge of BH_n");
    return *d;
}

std::vector<Edge> Topology::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex v = 0; v < vertex_count(); ++v)
        for (Vertex w : neighbors(v))
            if (v < w) out.emplace_back(v, w);
    std::sort(out.begin(), out.end());
    return out;
}

const Topology& topology_for(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<Topology>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<Topology>(Topology::build_direct(n));
    return *slot;
}

SubcubeDecomposition decompose(const Topology& t, int split_dimension) {
    const int n = t.dimension();
    if (n < 2) throw std::invalid_argument("decomposition needs n >= 2");
    if (split_dimension < 0 || split_dimension >= n)
        throw std::invalid_argument("split dimension out of range");

    SubcubeDecomposition d;
    d.n = n;
    d.split_dimension = split_dimension;
    const auto count = t.vertex_count();
    d.part_of.resize(count);
    d.local_of.resize(count);
    for (auto& g : d.global_of) g.resize(count / 4);

    // Digit removed from the label when relabeling into BH_{n-1}.
    const int dropped = split_dimension == 0 ? 1 : split_dimension;
    for (Vertex v = 0; v < count; ++v) {
        int part = 0;
        if (split_dimension > 0) {
            part = digit_of(v, split_dimension);
        } else {
            int sum = 0;
            for (int k = 1; k < n; ++k) sum += digit_of(v, k);
            part = ((digit_of(v, 0) & 1) - sum) & 3;
        }
        const Vertex low = v & ((Vertex{1} << (2 * dropped)) - 1);
        const Vertex high = v >> (2 * (dropped + 1));
        const Vertex local = low | (high << (2 * dropped));
        d.part_of[v] = static_cast<std::uint8_t>(part);
        d.local_of[v] = local;
        d.global_of[static_cast<std::size_t>(part)][local] = v;
        d.parts[static_cast<std::size_t>(part)].push_back(v);
    }
    for (Vertex v = 0; v < count; ++v)
        for (Vertex w : t.neighbors_in_dimension(v, split_dimension))
            if (v < w) d.cross_edges.emplace_back(v, w);
    std::sort(d.cross_edges.begin(), d.cross_edges.end());
    return d;
}

}  // namespace bhc
