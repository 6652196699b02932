// Case analysis for BH_3 with at most eight faulty edges.

#include <algorithm>

#include "construct_detail.hpp"

namespace bhc::detail {

namespace {

constexpr std::array<LaneMode, 3> kLaceable{LaneMode::laceable, LaneMode::laceable, LaneMode::laceable};

int fmax(const Level& L) { return static_cast<int>(L.p.inside[static_cast<std::size_t>(L.cls.max_part)].size()); }

std::string dictate(const Level& L) {
    const auto& c = L.cls;
    if (!c.isolated.empty()) return "L8/3";
    if (!c.pivots.empty()) {
        if (fmax(L) >= 5) return c.pivots.size() >= 2 ? "L8/2.1.2" : "L8/2.1.1";
        return "L8/2.2";
    }
    if (fmax(L) <= 3) return "L8/1.1";
    if (fmax(L) == 4) return "L8/1.2";
    return "L8/1.3";
}

const std::vector<Edge>& faults_in(const Level& L, int part) { return L.p.inside[static_cast<std::size_t>(part)]; }

// Endpoints (b, a) of e with a leaving forward, or nullopt when the ring
// orientation does not fit or either endpoint lacks a nonfaulty cross edge.
std::optional<std::pair<Vertex, Vertex>> oriented(const Level& L, const Edge& e) {
    const Vertex a = L.exits_forward(e.u) ? e.u : e.v;
    const Vertex b = e.other(a);
    if (!L.has_cross_ok(a) || !L.has_cross_ok(b)) return std::nullopt;
    return std::make_pair(b, a);
}

Outcome single_ring_at(Level& L, const Path& c0, const Edge& e, const std::string& label) {
    const auto ends = oriented(L, e);
    if (!ends) return {};
    const Path h0 = open_cycle(c0, ends->first, ends->second);
    if (auto segs = L.single_ring(h0, kLaceable)) {
        Built b;
        b.segments = std::move(*segs);
        b.label = label;
        b.r_edges = {e};
        return b;
    }
    return {};
}

// One nonfaulty r-edge e0 of subcube 0 on a Hamiltonian cycle C0, opened.
Outcome case11(Level& L, bool sibling) {
    for (int role0 : L.role0_candidates(sibling)) {
        for (int dir : {1, -1}) {
            L.set_ring(role0, dir);
            for (Vertex a0 : L.d.parts[static_cast<std::size_t>(role0)]) {
                if (!L.exits_forward(a0) || !L.has_cross_ok(a0)) continue;
                for (Vertex b0 : L.inner_neighbors(a0, true)) {
                    if (!L.has_cross_ok(b0)) continue;
                    const Edge e0(a0, b0);
                    const auto c0 = L.cycle_through(0, {}, e0);
                    if (!c0) continue;
                    auto out = single_ring_at(L, *c0, e0, "L8/1.1");
                    if (!std::holds_alternative<std::monostate>(out)) return out;
                }
            }
        }
    }
    return {};
}

// A faulty f0 = a0 b0 restored into C0. An r-edge opens directly; otherwise b0
// has no cross edge and the ring re-routes through a neighbor c0 of b0.
Outcome case12(Level& L, bool sibling) {
    for (int role0 : L.role0_candidates(sibling)) {
        std::vector<Edge> order = faults_in(L, role0);
        std::stable_partition(order.begin(), order.end(), [&](const Edge& e) { return L.is_r_edge(e); });
        for (int dir : {1, -1}) {
            L.set_ring(role0, dir);
            for (const Edge& f0 : order) {
                for (Vertex a0 : {f0.u, f0.v}) {
                    const Vertex b0 = f0.other(a0);
                    if (!L.exits_forward(a0) || !L.has_cross_ok(a0)) continue;
                    const std::array<Edge, 1> restored{f0};
                    const auto c0 = L.cycle_through(0, restored, f0);
                    if (!c0) continue;
                    if (L.has_cross_ok(b0)) {
                        auto out = single_ring_at(L, *c0, f0, "L8/1.2-r");
                        if (!std::holds_alternative<std::monostate>(out)) return out;
                        continue;
                    }
                    const Path p = open_cycle(*c0, a0, b0);  // a0 .. b0
                    const std::size_t last = p.size() - 1;
                    for (Vertex c : L.inner_neighbors(b0, true)) {
                        const auto k = static_cast<std::size_t>(std::find(p.begin(), p.end(), c) - p.begin());
                        if (k < 1 || k + 1 >= last) continue;
                        const Vertex d0 = p[k + 1];
                        const Path h00_rev = reversed(Path(p.begin(), p.begin() + static_cast<long>(k)));  // e0 .. a0
                        const Path h01(p.begin() + static_cast<long>(k) + 1, p.end());                    // d0 .. b0
                        if (L.has_cross_ok(d0)) {
                            Path h0 = h01;
                            h0.push_back(c);
                            h0.insert(h0.end(), h00_rev.begin(), h00_rev.end());
                            if (auto segs = L.single_ring(h0, kLaceable)) {
                                Built b;
                                b.segments = std::move(*segs);
                                b.label = "L8/1.2-nonr";
                                b.non_r_edges = {f0};
                                return b;
                            }
                            continue;
                        }
                        if (!L.has_cross_ok(h00_rev.front())) continue;
                        // Split C00 = <b0, c0, d0, H01, b0> at an r-edge g0 f0' of H01.
                        for (std::size_t m = 0; m + 1 < h01.size(); m += 2) {
                            const Vertex fv = h01[m];
                            const Vertex g = h01[m + 1];
                            if (!L.has_cross_ok(fv) || !L.has_cross_ok(g)) continue;
                            Path a = reversed(Path(h01.begin(), h01.begin() + static_cast<long>(m) + 1));
                            a.push_back(c);
                            const Path tail = reversed(Path(h01.begin() + static_cast<long>(m) + 1, h01.end()));
                            a.insert(a.end(), tail.begin(), tail.end());
                            if (auto segs = L.double_ring(a, h00_rev, false)) {
                                Built b;
                                b.segments = std::move(*segs);
                                b.label = "L8/1.2-nonr";
                                b.r_edges = {Edge(fv, g)};
                                b.non_r_edges = {f0};
                                return b;
                            }
                        }
                    }
                }
            }
        }
    }
    return {};
}

// Two faulty r-edges f1, f2 restored into C0 through f1.
Outcome case13(Level& L, bool sibling) {
    for (int role0 : L.role0_candidates(sibling)) {
        std::vector<Edge> r;
        for (const Edge& e : faults_in(L, role0))
            if (L.is_r_edge(e)) r.push_back(e);
        if (r.size() < 2) L.events.push_back("fewer than two faulty r-edges in subcube 0");
        for (int dir : {1, -1}) {
            L.set_ring(role0, dir);
            for (const Edge& f1 : r) {
                for (const Edge& f2 : r) {
                    if (f1 == f2) continue;
                    const std::array<Edge, 2> restored{f1, f2};
                    const auto c0 = L.cycle_through(0, restored, f1);
                    if (!c0) continue;
                    if (!cycle_has_edge(*c0, f2)) {
                        auto out = single_ring_at(L, *c0, f1, "L8/1.3");
                        if (!std::holds_alternative<std::monostate>(out)) return out;
                        continue;
                    }
                    const bool adjacent = f1.touches(f2.u) || f1.touches(f2.v);
                    if (adjacent) {
                        const Vertex a0 = f1.touches(f2.u) ? f2.u : f2.v;
                        if (!L.exits_forward(a0)) continue;
                        const Vertex b0 = f1.other(a0);
                        const Path s = rotate_cycle(*c0, a0, b0);  // a0, b0, ..., d0
                        const std::size_t last = s.size() - 1;
                        for (Vertex q0 : L.inner_neighbors(a0, true)) {
                            const auto k = static_cast<std::size_t>(std::find(s.begin(), s.end(), q0) - s.begin());
                            if (k < 2 || k >= last) continue;
                            const Path a(s.begin() + 1, s.begin() + static_cast<long>(k));  // b0 .. t0
                            Path b = reversed(Path(s.begin() + static_cast<long>(k), s.end()));  // d0 .. q0
                            b.push_back(a0);
                            if (auto segs = L.double_ring(a, b, true)) {
                                Built out;
                                out.segments = std::move(*segs);
                                out.label = "L8/1.3.1";
                                out.r_edges = {f1, f2};
                                return out;
                            }
                        }
                        continue;
                    }
                    const Vertex a0 = L.exits_forward(f1.u) ? f1.u : f1.v;
                    const Path s = rotate_cycle(*c0, a0, f1.other(a0));  // a0, b0, ..., c0, d0, ..., end
                    const std::size_t i = static_cast<std::size_t>(
                        std::find_if(s.begin(), s.end(), [&](Vertex v) { return f2.touches(v); }) - s.begin());
                    if (i + 1 >= s.size() || !L.exits_forward(s[i])) continue;
                    const Path a(s.begin() + 1, s.begin() + static_cast<long>(i) + 1);  // b0 .. c0
                    Path b(s.begin() + static_cast<long>(i) + 1, s.end());              // d0 .. a0
                    b.push_back(a0);
                    if (auto segs = L.double_ring(a, b, true)) {
                        Built out;
                        out.segments = std::move(*segs);
                        out.label = "L8/1.3.2";
                        out.r_edges = {f1, f2};
                        return out;
                    }
                }
            }
        }
    }
    return {};
}

std::vector<Vertex> pivots_in(const Level& L, int part) {
    std::vector<Vertex> out;
    for (Vertex v : L.cls.pivots)
        if (L.d.part(v) == part) out.push_back(v);
    return out;
}

// Open C0 at the single restored edge it uses; restored edges off C0 stay out.
Outcome open_at_restored(Level& L, const Path& c0, std::span<const Edge> restored, const std::string& label) {
    std::optional<Edge> used;
    for (const Edge& e : restored) {
        if (!cycle_has_edge(c0, e)) continue;
        if (used) return {};
        used = e;
    }
    if (!used) return {};
    return single_ring_at(L, c0, *used, label);
}

// One pivot a0: two faulty edges at a0 restored, C0 through its surviving edge e0.
Outcome case211(Level& L, bool sibling) {
    for (int role0 : L.role0_candidates(sibling)) {
        for (Vertex a0 : pivots_in(L, role0)) {
            const auto alive = L.inner_neighbors(a0, true);
            if (alive.size() != 1) continue;
            const Edge e0(a0, alive.front());
            const auto fs = L.inner_faults_at(a0);
            for (int dir : {1, -1}) {
                L.set_ring(role0, dir);
                for (std::size_t x = 0; x < fs.size(); ++x) {
                    for (std::size_t y = x + 1; y < fs.size(); ++y) {
                        const std::array<Edge, 2> restored{fs[x], fs[y]};
                        const auto c0 = L.cycle_through(0, restored, e0);
                        if (!c0) continue;
                        auto out = open_at_restored(L, *c0, restored, "L8/2.1.1");
                        if (!std::holds_alternative<std::monostate>(out)) return out;
                    }
                }
            }
        }
    }
    return {};
}

// Two pivots joined by the faulty f0.
Outcome case212(Level& L, bool sibling) {
    for (int role0 : L.role0_candidates(sibling)) {
        const auto pv = pivots_in(L, role0);
        for (Vertex a0 : pv) {
            for (Vertex b0 : pv) {
                if (a0 == b0 || !L.f.contains(a0, b0) || !L.t.adjacent(a0, b0)) continue;
                const Edge f0(a0, b0);
                const auto alive = L.inner_neighbors(a0, true);
                if (alive.size() != 1) continue;
                const Edge e0(a0, alive.front());
                for (int dir : {1, -1}) {
                    L.set_ring(role0, dir);
                    for (const Edge& f1 : L.inner_faults_at(a0)) {
                        if (f1 == f0) continue;
                        const std::array<Edge, 2> restored{f0, f1};
                        const auto c0 = L.cycle_through(0, restored, e0);
                        if (!c0 || !cycle_has_edge(*c0, f0) || cycle_has_edge(*c0, f1)) continue;
                        auto out = single_ring_at(L, *c0, f0, "L8/2.1.2");
                        if (!std::holds_alternative<std::monostate>(out)) return out;
                    }
                }
            }
        }
    }
    return {};
}

// One pivot, |F^0| <= 4: a faulty r-edge at the pivot restored and opened.
Outcome case22(Level& L, bool sibling) {
    for (int role0 : L.role0_candidates(sibling)) {
        for (Vertex a0 : pivots_in(L, role0)) {
            for (int dir : {1, -1}) {
                L.set_ring(role0, dir);
                for (const Edge& f0 : L.inner_faults_at(a0)) {
                    if (!L.is_r_edge(f0)) continue;
                    const std::array<Edge, 1> restored{f0};
                    const auto c0 = L.cycle_through(0, restored, f0);
                    if (!c0) continue;
                    auto out = single_ring_at(L, *c0, f0, "L8/2.2");
                    if (!std::holds_alternative<std::monostate>(out)) return out;
                }
            }
        }
    }
    return {};
}

// Isolated a0: both cross edges used, two faulty r-edges at a0 restored.
Outcome case3(Level& L, bool sibling) {
    for (int role0 : L.role0_candidates(sibling)) {
        for (Vertex a0 : L.cls.isolated) {
            if (L.d.part(a0) != role0) continue;
            L.set_ring(role0, Level::dir_exiting(a0));
            const auto fs = L.inner_faults_at(a0);
            for (std::size_t x = 0; x < fs.size(); ++x) {
                for (std::size_t y = x + 1; y < fs.size(); ++y) {
                    if (!L.is_r_edge(fs[x]) || !L.is_r_edge(fs[y])) continue;
                    const std::array<Edge, 2> restored{fs[x], fs[y]};
                    const auto c0 = L.cycle_through(0, restored, fs[x]);
                    if (!c0 || !cycle_has_edge(*c0, fs[y])) continue;
                    const Path s = rotate_cycle(*c0, a0, fs[x].other(a0));
                    const Path h0 = reversed(Path(s.begin() + 1, s.end()));
                    for (const Path& h : {h0, reversed(h0)}) {
                        if (auto segs = L.u_turn(a0, h)) {
                            Built b;
                            b.segments = std::move(*segs);
                            b.label = "L8/3";
                            b.r_edges = {fs[x], fs[y]};
                            return b;
                        }
                    }
                }
            }
        }
    }
    return {};
}

}  // namespace

const CaseFamily& lemma8_family() {
    static const CaseFamily family{
        dictate,
        {
            {"L8/1.1", case11},
            {"L8/1.2", case12},
            {"L8/1.3", case13},
            {"L8/2.1.1", case211},
            {"L8/2.1.2", case212},
            {"L8/2.2", case22},
            {"L8/3", case3},
        },
        3,
    };
    return family;
}

}  // namespace bhc::detail
