#include "bhc/generators.hpp"

#include <algorithm>
#include <set>

namespace bhc {

const char* to_string(Generator g) {
    switch (g) {
        case Generator::uniform: return "uniform";
        case Generator::dim_heavy: return "dim-heavy";
        case Generator::star: return "star";
        case Generator::f4_forge: return "f4-forge";
        case Generator::subcube_heavy: return "subcube-heavy";
    }
    return "uniform";
}

std::optional<Generator> parse_generator(std::string_view name) {
    for (Generator g : kAllGenerators)
        if (name == to_string(g)) return g;
    return std::nullopt;
}

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t instance) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(instance), static_cast<std::uint32_t>(instance >> 32)};
    return std::mt19937_64(seq);
}

namespace {

// Draws and shuffles are written out so that replays do not depend on the
// standard library's distribution implementations.
std::size_t pick(std::mt19937_64& rng, std::size_t bound) { return bound ? static_cast<std::size_t>(rng() % bound) : 0; }

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[pick(rng, i)]);
}

class Picker {
public:
    Picker(const Topology& t, int count, std::mt19937_64& rng)
        : t_(t), want_(std::min<std::size_t>(static_cast<std::size_t>(std::max(count, 0)), t.edge_count())), rng_(rng) {}

    bool full() const { return chosen_.size() >= want_; }
    std::size_t size() const { return chosen_.size(); }
    std::vector<Edge> edges() const { return {chosen_.begin(), chosen_.end()}; }
    void add(const Edge& e) {
        if (!full()) chosen_.insert(e);
    }
    /// Adds random edges of `pool` that avoid `avoid` until full.
    void pad(std::vector<Edge> pool, const std::vector<Vertex>& avoid = {}) {
        shuffle(pool, rng_);
        for (const Edge& e : pool) {
            if (full()) return;
            if (std::any_of(avoid.begin(), avoid.end(), [&](Vertex v) { return e.touches(v); })) continue;
            chosen_.insert(e);
        }
    }
    std::vector<Edge> finish(const std::vector<Edge>& preferred, const std::vector<Vertex>& avoid) {
        pad(preferred, avoid);
        pad(t_.edges(), avoid);
        pad(t_.edges());
        return {chosen_.begin(), chosen_.end()};
    }

private:
    const Topology& t_;
    std::size_t want_;
    std::mt19937_64& rng_;
    std::set<Edge> chosen_;
};

std::vector<Edge> dimension_edges(const Topology& t, int i) {
    std::vector<Edge> out;
    for (const Edge& e : t.edges())
        if (t.edge_dimension(e) == i) out.push_back(e);
    return out;
}

// Edges at v outside the listed dimensions.
std::vector<Edge> edges_outside(const Topology& t, Vertex v, std::initializer_list<int> spared) {
    std::vector<Edge> out;
    for (int i = 0; i < t.dimension(); ++i) {
        if (std::find(spared.begin(), spared.end(), i) != spared.end()) continue;
        for (Vertex w : t.neighbors_in_dimension(v, i)) out.emplace_back(v, w);
    }
    return out;
}

int clamp_dim(const Topology& t, std::optional<int> d, int lo, std::mt19937_64& rng) {
    const int n = t.dimension();
    if (d) return std::clamp(*d, 0, n - 1);
    return lo + static_cast<int>(pick(rng, static_cast<std::size_t>(std::max(n - lo, 1))));
}

}  // namespace

std::vector<Edge> generate_faults(Generator g, const Topology& t, int count, std::mt19937_64& rng,
                                  const GeneratorParams& params) {
    const int n = t.dimension();
    Picker out(t, count, rng);
    if (g == Generator::uniform || n < 2) return out.finish({}, {});

    switch (g) {
        case Generator::dim_heavy: {
            const int i = clamp_dim(t, params.dimension, 0, rng);
            const int lo = (count + 1) / 2;
            const int load = params.load ? *params.load : lo + static_cast<int>(pick(rng, static_cast<std::size_t>(count - lo + 1)));
            Picker core(t, load, rng);
            core.pad(dimension_edges(t, i));
            for (const Edge& e : core.finish({}, {})) out.add(e);
            std::vector<Edge> rest;
            for (const Edge& e : t.edges())
                if (t.edge_dimension(e) != i) rest.push_back(e);
            return out.finish(rest, {});
        }
        case Generator::star: {
            const int i = clamp_dim(t, params.dimension, 0, rng);
            const int hubs = params.hubs ? std::clamp(*params.hubs, 1, 2) : 1 + static_cast<int>(pick(rng, 2));
            const int load = std::clamp(params.load ? *params.load : 2 * n - 3 + static_cast<int>(pick(rng, 2)), 0, 2 * n - 2);
            std::vector<Vertex> hub{static_cast<Vertex>(pick(rng, t.vertex_count()))};
            if (hubs == 2) {
                // Second hub in the same subcube: an inner neighbor half the time.
                const auto d = decompose(t, i);
                std::vector<Vertex> same;
                for (Vertex v : d.parts[static_cast<std::size_t>(d.part(hub[0]))])
                    if (v != hub[0] && v != Topology::backup_vertex(hub[0])) same.push_back(v);
                std::vector<Vertex> close;
                for (const Edge& e : edges_outside(t, hub[0], {i})) close.push_back(e.other(hub[0]));
                const auto& from = pick(rng, 2) == 0 ? close : same;
                if (!from.empty()) hub.push_back(from[pick(rng, from.size())]);
            }
            for (Vertex h : hub) {
                auto at = edges_outside(t, h, {i});
                shuffle(at, rng);
                for (int k = 0; k < load && k < static_cast<int>(at.size()); ++k) out.add(at[static_cast<std::size_t>(k)]);
            }
            // Enough of D_i to make it the split, then anywhere away from the hubs.
            const int split_load = static_cast<int>(out.size()) + 2 * n - 3;
            Picker cross(t, split_load, rng);
            for (const Edge& e : out.edges()) cross.add(e);
            cross.pad(dimension_edges(t, i), hub);
            for (const Edge& e : cross.edges()) out.add(e);
            return out.finish({}, hub);
        }
        case Generator::f4_forge: {
            // u and its backup w have the same neighbors. For n >= 3 every edge at
            // both outside dimension 0 and the split is faulted, leaving both at
            // degree 2 on the inner 4-cycle of the subcube. For n = 2 the edges to
            // the two neighbors with inner index 3 go, so u, w keep (1,0) and (1,1)
            // and the far endpoints keep different neighborhoods: one f4-cycle.
            const int i = n >= 3 ? clamp_dim(t, params.dimension, 1, rng) : 0;
            Vertex u = 0;
            if (n >= 3) u = static_cast<Vertex>(pick(rng, t.vertex_count())) & ~Vertex{2};
            const Vertex w = Topology::backup_vertex(u);
            std::vector<Edge> pattern;
            for (Vertex x : {u, w}) {
                if (n >= 3) {
                    for (const Edge& e : edges_outside(t, x, {0, i})) pattern.push_back(e);
                } else {
                    for (Vertex y : t.neighbors(x))
                        if (digit_of(y, 0) == 3) pattern.emplace_back(x, y);
                }
            }
            const bool near = params.near_miss ? *params.near_miss : (n >= 3 && pick(rng, 4) == 0);
            if (near && !pattern.empty()) pattern.erase(pattern.begin() + static_cast<long>(pick(rng, pattern.size())));
            for (const Edge& e : pattern) out.add(e);
            return out.finish(n >= 3 ? dimension_edges(t, i) : std::vector<Edge>{}, {u, w});
        }
        case Generator::subcube_heavy: {
            const int i = clamp_dim(t, params.dimension, 0, rng);
            const auto d = decompose(t, i);
            const int part = static_cast<int>(pick(rng, 4));
            std::vector<int> thresholds{5 * n - 11, 5 * n - 12};
            if (n == 3) thresholds.push_back(5);
            const int load = params.load ? *params.load : thresholds[pick(rng, thresholds.size())];
            std::vector<Edge> inside;
            for (Vertex v : d.parts[static_cast<std::size_t>(part)])
                for (const Edge& e : edges_outside(t, v, {i}))
                    if (e.u == v) inside.push_back(e);
            Picker core(t, std::max(load, 0), rng);
            if (pick(rng, 3) == 0) {
                // Non-r flavour: cut both cross edges at a few vertices of the
                // part and put the inner faults at those vertices.
                auto members = d.parts[static_cast<std::size_t>(part)];
                shuffle(members, rng);
                for (Vertex b : members) {
                    if (core.full()) break;
                    auto at = edges_outside(t, b, {i});
                    shuffle(at, rng);
                    for (std::size_t k = 0; k < 2 && k < at.size(); ++k) core.add(at[k]);
                    for (Vertex w : t.neighbors_in_dimension(b, i)) out.add(Edge(b, w));
                }
            }
            core.pad(inside);
            for (const Edge& e : core.finish({}, {})) out.add(e);
            return out.finish(dimension_edges(t, i), {});
        }
        case Generator::uniform: break;
    }
    return out.finish({}, {});
}

}  // namespace bhc
