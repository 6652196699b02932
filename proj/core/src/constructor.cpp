#include "bhc/constructor.hpp"

#include <algorithm>
#include <stdexcept>

#include "construct_detail.hpp"

namespace bhc {

const char* to_string(ConstructStatus s) {
    switch (s) {
        case ConstructStatus::constructed: return "constructed";
        case ConstructStatus::fallback: return "fallback";
        case ConstructStatus::no_cycle: return "no_cycle";
        case ConstructStatus::unknown: return "unknown";
        case ConstructStatus::precondition_failed: return "precondition_failed";
    }
    return "unknown";
}

std::vector<std::string> CaseTrace::case_path() const {
    std::vector<std::string> out;
    for (const auto& level : levels) out.push_back(level.case_label);
    return out;
}

PreconditionReport check_preconditions(const Topology& t, const FaultSet& f) {
    PreconditionReport r;
    const int n = t.dimension();
    r.fault_count = f.size();
    r.bound = 5L * n - 7;
    r.size_ok = static_cast<long>(r.fault_count) <= r.bound;
    r.min_degree = t.degree();
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
        const int deg = surviving_degree(t, f, v);
        r.min_degree = std::min(r.min_degree, deg);
        if (deg < 2) r.low_degree_vertices.push_back(v);
    }
    r.degree_ok = r.min_degree >= 2;
    r.f4_cycles = find_f4_cycles(t, f);
    return r;
}

HamCycle stitch(const Topology& t, const FaultSet& f, int split_dim, const std::vector<std::vector<Vertex>>& segments) {
    using K = StitchError::Kind;
    std::vector<std::uint8_t> seen(t.vertex_count(), 0);
    HamCycle out;
    out.order.reserve(t.vertex_count());
    for (std::size_t k = 0; k < segments.size(); ++k) {
        const auto& seg = segments[k];
        if (seg.empty()) throw StitchError(K::broken_segment, "segment " + std::to_string(k) + " is empty");
        for (std::size_t i = 0; i < seg.size(); ++i) {
            const Vertex v = seg[i];
            if (!t.contains(v)) throw StitchError(K::broken_segment, "vertex outside BH_n in segment " + std::to_string(k));
            if (seen[v]) throw StitchError(K::overlap, "vertex " + std::to_string(v) + " appears twice");
            seen[v] = 1;
            out.order.push_back(v);
            if (i + 1 < seg.size() && (!t.adjacent(v, seg[i + 1]) || f.contains(v, seg[i + 1])))
                throw StitchError(K::broken_segment, "segment " + std::to_string(k) + " breaks at position " +
                                                         std::to_string(i));
        }
    }
    if (out.order.size() != t.vertex_count())
        throw StitchError(K::coverage_gap, std::to_string(t.vertex_count() - out.order.size()) + " vertices uncovered");
    for (std::size_t k = 0; k < segments.size(); ++k) {
        const Vertex a = segments[k].back();
        const Vertex b = segments[(k + 1) % segments.size()].front();
        const std::string where = "junction after segment " + std::to_string(k);
        if (partite_class(a) == partite_class(b)) throw StitchError(K::parity_mismatch, where);
        const auto dim = t.edge_dimension(a, b);
        if (!dim || *dim != split_dim) throw StitchError(K::not_cross_edge, where);
        if (f.contains(a, b)) throw StitchError(K::faulty_junction, where);
    }
    return out;
}

namespace detail {

namespace {

constexpr int kMaxRedecompositions = 3;

std::optional<HamCycle> solve_split(const Topology& t, const FaultSet& f, const ConstructOptions& options, int depth,
                                    const CaseFamily& family, CaseTrace& trace, std::optional<int> forced,
                                    int redecompositions) {
    const std::vector<int> order = forced ? std::vector<int>{*forced} : split_order(f, family.threshold);
    for (std::size_t k = 0; k < order.size(); ++k) {
        Level level(t, f, order[k], options, depth);
        const std::string dictated = family.dictate(level);
        if (k > 0) level.events.push_back("split ladder step " + std::to_string(k));
        std::vector<std::pair<std::string, Handler>> seq;
        for (const auto& h : family.handlers)
            if (h.first == dictated) seq.push_back(h);
        for (const auto& h : family.handlers)
            if (h.first != dictated) seq.push_back(h);
        for (const auto& [key, handler] : seq) {
            const bool sibling = key != dictated;
            Outcome out = handler(level, sibling);
            if (auto* built = std::get_if<Built>(&out)) {
                try {
                    HamCycle c = stitch(t, f, level.split, built->segments);
                    trace.levels.push_back(make_level_record(level, *built, dictated, sibling));
                    for (auto& sub : built->sublevels) trace.levels.push_back(std::move(sub));
                    return c;
                } catch (const StitchError& e) {
                    level.events.push_back(std::string("stitch rejected ") + built->label + ": " + e.what());
                    ++trace.impasses;
                    continue;
                }
            }
            if (auto* r = std::get_if<Redecompose>(&out)) {
                if (redecompositions < kMaxRedecompositions && r->split != level.split) {
                    CaseTrace inner;
                    if (auto c = solve_split(t, f, options, depth, family, inner, r->split, redecompositions + 1)) {
                        trace.levels.push_back(make_redecompose_record(level, *r, dictated));
                        for (auto& l : inner.levels) trace.levels.push_back(std::move(l));
                        trace.impasses += inner.impasses;
                        return c;
                    }
                    trace.impasses += inner.impasses;
                }
            }
            ++trace.impasses;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<HamCycle> solve_cases(const Topology& t, const FaultSet& f, const ConstructOptions& options, int depth,
                                    const CaseFamily& family, CaseTrace& trace) {
    return solve_split(t, f, options, depth, family, trace, std::nullopt, 0);
}

ConstructResult construct_at_depth(const Topology& t, const FaultSet& f, const ConstructOptions& options, int depth) {
    ConstructResult res;
    if (!check_preconditions(t, f).ok()) {
        res.status = ConstructStatus::precondition_failed;
        return res;
    }
    if (t.dimension() >= 3) {
        const CaseFamily& family = t.dimension() == 3 ? lemma8_family() : inductive_family();
        if (auto c = solve_cases(t, f, options, depth, family, res.trace)) {
            res.status = ConstructStatus::constructed;
            res.cycle = std::move(c);
            return res;
        }
        if (!options.global_fallback) {
            res.status = ConstructStatus::unknown;
            return res;
        }
        res.trace.fallbacks.push_back("global search at depth " + std::to_string(depth) + " after " +
                                      std::to_string(res.trace.impasses) + " impasses");
    }
    const auto r = ham_cycle(t, f, options.fallback_budget);
    if (t.dimension() < 3 && r.status != SearchStatus::unknown) {
        TraceLevel base;
        base.depth = depth;
        base.n = t.dimension();
        base.faults = f.edges();
        base.dictated = base.case_label = "base";
        res.trace.levels.push_back(std::move(base));
    }
    switch (r.status) {
        case SearchStatus::found:
            res.status = t.dimension() < 3 ? ConstructStatus::constructed : ConstructStatus::fallback;
            res.cycle = r.value;
            break;
        case SearchStatus::absent: res.status = ConstructStatus::no_cycle; break;
        case SearchStatus::unknown: res.status = ConstructStatus::unknown; break;
    }
    return res;
}

}  // namespace detail

ConstructResult construct(const Topology& t, const FaultSet& f, const ConstructOptions& options) {
    return detail::construct_at_depth(t, f, options, 0);
}

ConstructResult lemma8_construct(const Topology& t, const FaultSet& f, const ConstructOptions& options) {
    if (t.dimension() != 3) throw std::invalid_argument("lemma8_construct needs BH_3");
    return detail::construct_at_depth(t, f, options, 0);
}

ConstructResult inductive_construct(const Topology& t, const FaultSet& f, const ConstructOptions& options) {
    if (t.dimension() < 4) throw std::invalid_argument("inductive_construct needs n >= 4");
    return detail::construct_at_depth(t, f, options, 0);
}

}  // namespace bhc
