// Inductive case analysis for BH_n, n >= 4, with at most 5n-7 faulty edges.

#include <algorithm>

#include "construct_detail.hpp"

namespace bhc::detail {

namespace {

constexpr std::array<LaneMode, 3> kLaceable{LaneMode::laceable, LaneMode::laceable, LaneMode::laceable};
constexpr std::array<LaneMode, 3> kVariant1{LaneMode::through, LaneMode::laceable, LaneMode::through};
constexpr std::array<LaneMode, 3> kVariant2{LaneMode::through, LaneMode::through, LaneMode::laceable};
constexpr std::size_t kOpeningCap = 12;

int fmax(const Level& L) { return static_cast<int>(L.p.inside[static_cast<std::size_t>(L.cls.max_part)].size()); }

std::string dictate(const Level& L) {
    const auto& c = L.cls;
    if (!c.isolated.empty()) return (c.isolated.size() == 1 && c.pivots.empty()) ? "T/3.1" : "T/3.2";
    if (!c.pivots.empty()) return c.pivots.size() == 1 ? "T/2.1" : "T/2.2";
    if (!c.f4.empty()) return "T/1.2";
    return fmax(L) >= 5 * L.n - 11 ? "T/1.1.1" : "T/1.1.2";
}

struct Variant {
    std::array<LaneMode, 3> modes;
    std::string suffix;
};

// Lane variants for a ring whose H0 comes from C0. The laceable lane goes to
// the position with the fewest faults, ties in the order 2, 3, 1; position 1
// is the mirror image of position 3 and is left to the reversed ring.
std::vector<Variant> lane_variants(const Level& L, bool sibling) {
    const int bound = 2 * L.n - 4;
    const int f1 = L.faults_at(1), f2 = L.faults_at(2), f3 = L.faults_at(3);
    std::vector<Variant> out;
    int best = 2;
    if (f3 < L.faults_at(best)) best = 3;
    if (f1 < L.faults_at(best)) best = 1;
    if (best == 2 && f2 <= bound) out.push_back({kVariant1, "(1)"});
    if (best == 3 && f3 <= bound) out.push_back({kVariant2, "(2)"});
    if (sibling) {
        if (best != 2 && f2 <= bound) out.push_back({kVariant1, "(1)"});
        if (best != 3 && f3 <= bound) out.push_back({kVariant2, "(2)"});
    }
    return out;
}

// Every lane laceable; used once the through-edge variants fail in both ring directions.
const std::vector<Variant> kAllLaceable{{kLaceable, "(3)"}};

// Edges at which C0 may be opened: the one restored edge it uses, or else its
// nonfaulty r-edges.
std::vector<Edge> openings(const Level& L, const Path& c0, std::span<const Edge> restored) {
    std::vector<Edge> used;
    for (const Edge& e : restored)
        if (cycle_has_edge(c0, e)) used.push_back(e);
    if (used.size() > 1) return {};
    if (used.size() == 1) return L.is_r_edge(used.front()) ? used : std::vector<Edge>{};
    std::vector<Edge> out;
    for (const Edge& e : cycle_edges(c0)) {
        if (L.is_r_edge(e)) out.push_back(e);
        if (out.size() >= kOpeningCap) break;
    }
    return out;
}

std::optional<Built> ring_from(Level& L, const Induced& c0, std::span<const Edge> restored,
                               const std::vector<Variant>& variants, const std::string& label) {
    const auto edges = openings(L, c0.cycle, restored);
    for (const Variant& v : variants) {
        for (const Edge& e : edges) {
            const Vertex a = L.exits_forward(e.u) ? e.u : e.v;
            const Path h0 = open_cycle(c0.cycle, e.other(a), a);
            if (auto segs = L.single_ring(h0, v.modes)) {
                Built b;
                b.segments = std::move(*segs);
                b.label = label + v.suffix;
                b.r_edges = {e};
                b.sublevels = c0.levels;
                if (c0.via_oracle) b.events.push_back("subcube cycle by global search");
                return b;
            }
        }
    }
    return std::nullopt;
}

const std::vector<Edge>& faults_in(const Level& L, int part) { return L.p.inside[static_cast<std::size_t>(part)]; }

std::vector<Vertex> in_part(const std::vector<Vertex>& vs, const Level& L, int part) {
    std::vector<Vertex> out;
    for (Vertex v : vs)
        if (L.d.part(v) == part) out.push_back(v);
    return out;
}

// |F^0| = 5n-11: a faulty r-edge f0 of F^0 restored, C0 by induction.
Outcome case111(Level& L, bool sibling) {
    for (int role0 : L.role0_candidates(sibling)) {
        for (const Edge& f0 : faults_in(L, role0)) {
            L.set_ring(role0, 1);
            if (!L.is_r_edge(f0)) continue;
            const std::array<Edge, 1> restored{f0};
            const auto c0 = L.induct(0, restored);
            if (!c0) continue;
            for (int dir : {1, -1}) {
                L.set_ring(role0, dir);
                if (auto b = ring_from(L, *c0, restored, {{kLaceable, ""}}, "T/1.1.1")) return *b;
            }
        }
    }
    return {};
}

// |F^0| <= 5n-12: C0 by induction, opened at a nonfaulty r-edge.
Outcome case112(Level& L, bool sibling) {
    for (int role0 : L.role0_candidates(sibling)) {
        L.set_ring(role0, 1);
        const auto c0 = L.induct(0, {});
        if (!c0) continue;
        for (bool plain : {false, true}) {
            for (int dir : {1, -1}) {
                L.set_ring(role0, dir);
                if (auto b = ring_from(L, *c0, {}, plain ? kAllLaceable : lane_variants(L, sibling), "T/1.1.2"))
                    return *b;
            }
        }
    }
    return {};
}

// f4-cycle inside subcube 0: a degree-two vertex x of the pair leaves through a
// cross edge and a faulty r-edge at x is restored.
Outcome case12(Level& L, bool sibling) {
    for (int role0 : L.role0_candidates(sibling)) {
        for (const F4Cycle& c : L.cls.f4) {
            if (L.d.part(c.degree_two[0]) != role0) continue;
            for (Vertex x : c.degree_two) {
                if (!L.has_cross_ok(x)) continue;
                for (const Edge& f0 : L.inner_faults_at(x)) {
                    if (!L.is_r_edge(f0)) continue;
                    L.set_ring(role0, 1);
                    const std::array<Edge, 1> restored{f0};
                    const auto c0 = L.induct(0, restored);
                    if (!c0) continue;
                    for (int dir : {1, -1}) {
                        L.set_ring(role0, dir);
                        if (auto b = ring_from(L, *c0, restored, {{kLaceable, ""}}, "T/1.2")) {
                            b->f4_pair = {c.degree_two[0], c.degree_two[1]};
                            return *b;
                        }
                    }
                }
            }
        }
    }
    return {};
}

// One pivot u: a faulty r-edge at u restored, C0 by induction, lanes as in 1.1.2.
Outcome case21(Level& L, bool sibling) {
    for (int role0 : L.role0_candidates(sibling)) {
        for (Vertex u : in_part(L.cls.pivots, L, role0)) {
            for (const Edge& f0 : L.inner_faults_at(u)) {
                if (!L.is_r_edge(f0)) continue;
                L.set_ring(role0, 1);
                const std::array<Edge, 1> restored{f0};
                const auto c0 = L.induct(0, restored);
                if (!c0) continue;
                for (bool plain : {false, true}) {
                    for (int dir : {1, -1}) {
                        L.set_ring(role0, dir);
                        if (auto b = ring_from(L, *c0, restored, plain ? kAllLaceable : lane_variants(L, sibling),
                                               "T/2.1"))
                            return *b;
                    }
                }
            }
        }
    }
    return {};
}

int faulty_in_dimension(const Level& L, Vertex v, int i) {
    int k = 0;
    for (Vertex w : L.t.neighbors_in_dimension(v, i))
        if (L.f.contains(v, w)) ++k;
    return k;
}

// A dimension other than the split where u and v both carry two faulty edges
// and |F_i| >= 4.
std::optional<int> shared_dimension(const Level& L, Vertex u, Vertex v) {
    for (int i : split_order(L.f, 4)) {
        if (i == L.split || L.f.count_in_dimension(i) < 4) continue;
        if (faulty_in_dimension(L, u, i) == 2 && faulty_in_dimension(L, v, i) == 2) return i;
    }
    return std::nullopt;
}

// Two pivots u, v. A faulty subcube edge uv is restored and opened; otherwise
// the instance is decomposed again.
Outcome case22(Level& L, bool) {
    const auto& pv = L.cls.pivots;
    for (std::size_t x = 0; x < pv.size(); ++x) {
        for (std::size_t y = x + 1; y < pv.size(); ++y) {
            const Vertex u = pv[x], v = pv[y];
            const int role0 = L.d.part(u);
            if (L.d.part(v) == role0 && L.f.contains(u, v) && L.t.adjacent(u, v) &&
                L.t.edge_dimension(Edge(u, v)) != L.split) {
                const Edge f0(u, v);
                if (!L.is_r_edge(f0)) continue;
                L.set_ring(role0, 1);
                const std::array<Edge, 1> restored{f0};
                const auto c0 = L.induct(0, restored);
                if (!c0) continue;
                for (int dir : {1, -1}) {
                    L.set_ring(role0, dir);
                    if (auto b = ring_from(L, *c0, restored, {{kLaceable, ""}}, "T/2.2")) return *b;
                }
                continue;
            }
            if (auto i = shared_dimension(L, u, v)) {
                L.set_ring(role0, 1);
                return Redecompose{*i, "T/2.2-redec"};
            }
        }
    }
    return {};
}

// Exactly one isolated u. With every other |F_i| <= 3 both cross edges of u
// are used and two faulty r-edges at u are restored; otherwise decompose again.
Outcome case31(Level& L, bool sibling) {
    if (L.cls.isolated.empty()) return {};
    const Vertex u = L.cls.isolated.front();
    const int role0 = L.d.part(u);
    bool others_small = true;
    for (int i = 0; i < L.n; ++i)
        if (i != L.split && L.f.count_in_dimension(i) > 3) others_small = false;
    if (!others_small && !sibling) {
        for (int i : split_order(L.f, 4)) {
            if (i == L.split || L.f.count_in_dimension(i) < 4) continue;
            L.set_ring(role0, Level::dir_exiting(u));
            return Redecompose{i, "T/3.1-redec"};
        }
        return {};
    }
    L.set_ring(role0, Level::dir_exiting(u));
    const auto fs = L.inner_faults_at(u);
    for (std::size_t x = 0; x < fs.size(); ++x) {
        for (std::size_t y = x + 1; y < fs.size(); ++y) {
            if (!L.is_r_edge(fs[x]) || !L.is_r_edge(fs[y])) continue;
            const std::array<Edge, 2> restored{fs[x], fs[y]};
            const auto c0 = L.induct(0, restored);
            if (!c0 || !cycle_has_edge(c0->cycle, fs[x]) || !cycle_has_edge(c0->cycle, fs[y])) continue;
            const Path s = rotate_cycle(c0->cycle, u, fs[x].other(u));
            const Path h0 = reversed(Path(s.begin() + 1, s.end()));
            for (const Path& h : {h0, reversed(h0)}) {
                if (auto segs = L.u_turn(u, h)) {
                    Built b;
                    b.segments = std::move(*segs);
                    b.label = "T/3.1";
                    b.r_edges = {fs[x], fs[y]};
                    b.sublevels = c0->levels;
                    if (c0->via_oracle) b.events.push_back("subcube cycle by global search");
                    return b;
                }
            }
        }
    }
    return {};
}

// Two isolated vertices, or a pivot and an isolated vertex: decompose again on
// a dimension where both carry two faulty edges.
Outcome case32(Level& L, bool) {
    std::vector<Vertex> deg = L.cls.isolated;
    deg.insert(deg.end(), L.cls.pivots.begin(), L.cls.pivots.end());
    for (std::size_t x = 0; x < deg.size(); ++x) {
        for (std::size_t y = x + 1; y < deg.size(); ++y) {
            if (auto i = shared_dimension(L, deg[x], deg[y])) {
                L.set_ring(L.d.part(deg[x]), 1);
                return Redecompose{*i, "T/3.2-redec"};
            }
        }
    }
    return {};
}

}  // namespace

const CaseFamily& inductive_family() {
    static const CaseFamily family{
        dictate,
        {
            {"T/1.1.1", case111},
            {"T/1.1.2", case112},
            {"T/1.2", case12},
            {"T/2.1", case21},
            {"T/2.2", case22},
            {"T/3.1", case31},
            {"T/3.2", case32},
        },
        4,
    };
    return family;
}

}  // namespace bhc::detail
