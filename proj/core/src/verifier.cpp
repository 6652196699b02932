#include "bhc/verifier.hpp"

#include <algorithm>
#include <optional>
#include <string_view>

#include "construct_detail.hpp"

namespace bhc {

const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::wrong_length: return "wrong_length";
        case ViolationKind::foreign_vertex: return "foreign_vertex";
        case ViolationKind::repeated_vertex: return "repeated_vertex";
        case ViolationKind::missing_vertex: return "missing_vertex";
        case ViolationKind::not_adjacent: return "not_adjacent";
        case ViolationKind::faulty_edge: return "faulty_edge";
        case ViolationKind::malformed_level: return "malformed_level";
        case ViolationKind::count_mismatch: return "count_mismatch";
        case ViolationKind::dictated_mismatch: return "dictated_mismatch";
        case ViolationKind::guard_failed: return "guard_failed";
        case ViolationKind::cross_edge_invalid: return "cross_edge_invalid";
        case ViolationKind::r_edge_invalid: return "r_edge_invalid";
        case ViolationKind::non_r_edge_invalid: return "non_r_edge_invalid";
        case ViolationKind::pivot_mismatch: return "pivot_mismatch";
        case ViolationKind::isolated_mismatch: return "isolated_mismatch";
        case ViolationKind::f4_witness_invalid: return "f4_witness_invalid";
        case ViolationKind::redecompose_mismatch: return "redecompose_mismatch";
        case ViolationKind::depth_mismatch: return "depth_mismatch";
    }
    return "unknown";
}

bool VerifyReport::has(ViolationKind k) const {
    return std::any_of(violations.begin(), violations.end(), [k](const Violation& v) { return v.kind == k; });
}

VerifyReport verify_cycle(const Topology& t, const FaultSet& f, const HamCycle& c) {
    VerifyReport r;
    const auto& o = c.order;
    if (o.size() != t.vertex_count())
        r.violations.push_back({ViolationKind::wrong_length, -1, -1,
                                std::to_string(o.size()) + " vertices, expected " + std::to_string(t.vertex_count())});
    std::vector<long> first_seen(t.vertex_count(), -1);
    for (std::size_t i = 0; i < o.size(); ++i) {
        const long pos = static_cast<long>(i);
        if (!t.contains(o[i])) {
            r.violations.push_back({ViolationKind::foreign_vertex, -1, pos, std::to_string(o[i])});
            continue;
        }
        if (first_seen[o[i]] >= 0)
            r.violations.push_back({ViolationKind::repeated_vertex, -1, pos,
                                    std::to_string(o[i]) + " first at " + std::to_string(first_seen[o[i]])});
        else
            first_seen[o[i]] = pos;
    }
    for (Vertex v = 0; v < t.vertex_count(); ++v)
        if (first_seen[v] < 0) r.violations.push_back({ViolationKind::missing_vertex, -1, -1, std::to_string(v)});
    if (o.size() < 2) return r;
    for (std::size_t i = 0; i < o.size(); ++i) {
        const Vertex a = o[i], b = o[(i + 1) % o.size()];
        if (!t.contains(a) || !t.contains(b)) continue;
        const std::string pair = std::to_string(a) + "-" + std::to_string(b);
        if (!t.adjacent(a, b))
            r.violations.push_back({ViolationKind::not_adjacent, -1, static_cast<long>(i), pair});
        else if (f.contains(a, b))
            r.violations.push_back({ViolationKind::faulty_edge, -1, static_cast<long>(i), pair});
    }
    return r;
}

namespace {

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

std::string edge_str(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

// Failure reason when the counts of `L` do not admit `label`, nullopt otherwise.
std::optional<std::string> guard(const std::string& label, const detail::Level& L, const TraceLevel& rec) {
    const auto& c = L.cls;
    const int fmax = static_cast<int>(L.p.inside[static_cast<std::size_t>(c.max_part)].size());
    const int f0 = rec.subcube_faults[static_cast<std::size_t>(rec.role0_part)];
    const auto need = [](bool ok, std::string why) -> std::optional<std::string> {
        if (ok) return std::nullopt;
        return why;
    };
    const std::size_t np = c.pivots.size(), ni = c.isolated.size();
    if (L.n == 3) {
        if (starts_with(label, "L8/1"))
            if (np + ni) return "case 1 with " + std::to_string(np) + " pivots and " + std::to_string(ni) + " isolated";
        if (starts_with(label, "L8/1.1")) return need(fmax <= 3, "max |F^j| = " + std::to_string(fmax) + ", needs <= 3");
        if (starts_with(label, "L8/1.2")) return need(fmax == 4, "max |F^j| = " + std::to_string(fmax) + ", needs 4");
        if (starts_with(label, "L8/1.3")) return need(fmax >= 5, "max |F^j| = " + std::to_string(fmax) + ", needs >= 5");
        if (starts_with(label, "L8/2")) {
            if (ni || !np) return std::string("case 2 needs pivots and no isolated vertex");
            if (starts_with(label, "L8/2.1.1")) return need(fmax >= 5 && np == 1, "needs one pivot and max |F^j| >= 5");
            if (starts_with(label, "L8/2.1.2")) return need(fmax >= 5 && np >= 2, "needs two pivots and max |F^j| >= 5");
            if (starts_with(label, "L8/2.2")) return need(fmax <= 4, "max |F^j| = " + std::to_string(fmax) + ", needs <= 4");
        }
        if (starts_with(label, "L8/3")) return need(ni > 0, "no isolated vertex");
        return "unknown label " + label;
    }
    const int big = 5 * L.n - 11;
    if (starts_with(label, "T/1")) {
        if (np + ni) return "case 1 with " + std::to_string(np) + " pivots and " + std::to_string(ni) + " isolated";
        if (starts_with(label, "T/1.1.1"))
            return need(c.f4.empty() && f0 >= big, "|F^0| = " + std::to_string(f0) + ", needs >= " + std::to_string(big));
        if (starts_with(label, "T/1.1.2"))
            return need(c.f4.empty() && f0 < big, "|F^0| = " + std::to_string(f0) + ", needs < " + std::to_string(big));
        if (starts_with(label, "T/1.2")) return need(!c.f4.empty(), "no f4-cycle inside the subcubes");
    }
    if (starts_with(label, "T/2")) {
        if (ni || !np) return std::string("case 2 needs pivots and no isolated vertex");
        if (starts_with(label, "T/2.1")) return need(np == 1, std::to_string(np) + " pivots, needs 1");
        if (starts_with(label, "T/2.2")) return need(np >= 2, std::to_string(np) + " pivots, needs >= 2");
    }
    if (starts_with(label, "T/3.1")) return need(ni == 1 && np == 0, "needs exactly one isolated vertex and no pivot");
    if (starts_with(label, "T/3.2")) return need(ni > 0 && (ni + np) >= 2, "needs an isolated vertex and another degenerate one");
    return "unknown label " + label;
}

void check_level(const std::vector<TraceLevel>& levels, std::size_t k, VerifyReport& r) {
    static const ConstructOptions kOptions;
    const TraceLevel& rec = levels[k];
    const long idx = static_cast<long>(k);
    auto add = [&](ViolationKind kind, long pos, std::string what) { r.violations.push_back({kind, idx, pos, std::move(what)}); };

    if (rec.n < 1 || rec.n > 8) return add(ViolationKind::malformed_level, -1, "n = " + std::to_string(rec.n));
    const Topology& t = topology_for(rec.n);
    std::optional<FaultSet> f;
    try {
        f.emplace(t, rec.faults);
    } catch (const FaultSetError& e) {
        return add(ViolationKind::malformed_level, static_cast<long>(e.position()), e.what());
    }
    if (rec.dictated == "base") {
        if (rec.n > 2) add(ViolationKind::malformed_level, -1, "base level at n = " + std::to_string(rec.n));
        return;
    }
    if (rec.n < 3) return add(ViolationKind::malformed_level, -1, "case level at n = " + std::to_string(rec.n));
    if (rec.split_dim < 0 || rec.split_dim >= rec.n)
        return add(ViolationKind::malformed_level, -1, "split dimension " + std::to_string(rec.split_dim));
    if (rec.role0_part < 0 || rec.role0_part > 3 || (rec.ring_dir != 1 && rec.ring_dir != -1))
        return add(ViolationKind::malformed_level, -1, "ring orientation out of range");

    detail::Level L(t, *f, rec.split_dim, kOptions, rec.depth);
    L.set_ring(rec.role0_part, rec.ring_dir);

    if (rec.cross_faults != static_cast<int>(L.p.cross.size()))
        add(ViolationKind::count_mismatch, -1,
            "|F_i| recorded " + std::to_string(rec.cross_faults) + ", actual " + std::to_string(L.p.cross.size()));
    for (int j = 0; j < 4; ++j) {
        const auto actual = L.p.inside[static_cast<std::size_t>(j)].size();
        if (rec.subcube_faults[static_cast<std::size_t>(j)] != static_cast<int>(actual))
            add(ViolationKind::count_mismatch, j,
                "|F^" + std::to_string(j) + "| recorded " + std::to_string(rec.subcube_faults[static_cast<std::size_t>(j)]) +
                    ", actual " + std::to_string(actual));
    }
    auto sorted = [](std::vector<Vertex> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    if (sorted(rec.witnesses.pivots) != sorted(L.cls.pivots)) add(ViolationKind::pivot_mismatch, -1, "pivot set differs");
    if (sorted(rec.witnesses.isolated) != sorted(L.cls.isolated))
        add(ViolationKind::isolated_mismatch, -1, "isolated set differs");

    const auto& family = rec.n == 3 ? detail::lemma8_family() : detail::inductive_family();
    const std::string dictated = family.dictate(L);
    if (dictated != rec.dictated) add(ViolationKind::dictated_mismatch, -1, "recorded " + rec.dictated + ", counts give " + dictated);
    if (!rec.sibling) {
        if (!starts_with(rec.case_label, dictated))
            add(ViolationKind::guard_failed, -1, rec.case_label + " is not a refinement of " + dictated);
        if (auto why = guard(rec.case_label, L, rec)) add(ViolationKind::guard_failed, -1, rec.case_label + ": " + *why);
    }

    const auto& w = rec.witnesses;
    for (std::size_t i = 0; i < w.cross_edges.size(); ++i) {
        const Edge& e = w.cross_edges[i];
        if (!t.is_edge(e) || t.edge_dimension(e) != rec.split_dim)
            add(ViolationKind::cross_edge_invalid, static_cast<long>(i), edge_str(e) + " is not in D_" + std::to_string(rec.split_dim));
        else if (f->contains(e))
            add(ViolationKind::cross_edge_invalid, static_cast<long>(i), edge_str(e) + " is faulty");
    }
    for (std::size_t i = 0; i < w.r_edges.size(); ++i) {
        const Edge& e = w.r_edges[i];
        if (!t.is_edge(e) || t.edge_dimension(e) == rec.split_dim || !L.is_r_edge(e))
            add(ViolationKind::r_edge_invalid, static_cast<long>(i), edge_str(e));
    }
    for (std::size_t i = 0; i < w.non_r_edges.size(); ++i) {
        const Edge& e = w.non_r_edges[i];
        if (!t.is_edge(e) || t.edge_dimension(e) == rec.split_dim || L.is_r_edge(e))
            add(ViolationKind::non_r_edge_invalid, static_cast<long>(i), edge_str(e));
    }
    if (!w.f4_pair.empty()) {
        bool found = false;
        for (const auto& c : L.cls.f4) {
            auto pair = sorted({c.degree_two[0], c.degree_two[1]});
            if (pair == sorted(w.f4_pair)) found = true;
        }
        if (!found) add(ViolationKind::f4_witness_invalid, -1, "pair is not the degree-2 pair of an f4-cycle");
    } else if (starts_with(rec.case_label, "T/1.2")) {
        add(ViolationKind::f4_witness_invalid, -1, "case 1.2 without an f4 pair");
    }

    for (const auto& ev : rec.events) {
        if (!starts_with(ev, "redecompose ")) continue;
        const int target = std::stoi(ev.substr(12));
        const TraceLevel* next = k + 1 < levels.size() ? &levels[k + 1] : nullptr;
        if (!next || next->depth != rec.depth || next->split_dim != target || next->faults != rec.faults)
            add(ViolationKind::redecompose_mismatch, -1, "next level does not split on " + std::to_string(target));
    }
}

}  // namespace

VerifyReport verify_trace(const CaseTrace& trace) {
    VerifyReport r;
    const auto& levels = trace.levels;
    for (std::size_t k = 0; k < levels.size(); ++k) {
        if (k == 0 ? levels[k].depth != 0 : levels[k].depth > levels[k - 1].depth + 1)
            r.violations.push_back({ViolationKind::depth_mismatch, static_cast<long>(k), -1,
                                    "depth " + std::to_string(levels[k].depth)});
        if (levels[k].depth > 0) {
            // The enclosing level is the nearest earlier one a depth up.
            for (std::size_t j = k; j-- > 0;) {
                if (levels[j].depth == levels[k].depth - 1) {
                    if (levels[j].n != levels[k].n + 1)
                        r.violations.push_back({ViolationKind::depth_mismatch, static_cast<long>(k), -1,
                                                "n = " + std::to_string(levels[k].n) + " inside n = " + std::to_string(levels[j].n)});
                    break;
                }
            }
        }
        check_level(levels, k, r);
    }
    return r;
}

VerifyReport verify_result(const Topology& t, const FaultSet& f, const ConstructResult& res) {
    VerifyReport r;
    if (res.cycle) r = verify_cycle(t, f, *res.cycle);
    auto tr = verify_trace(res.trace);
    r.violations.insert(r.violations.end(), tr.violations.begin(), tr.violations.end());
    return r;
}

}  // namespace bhc
