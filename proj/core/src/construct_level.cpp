#include <algorithm>
#include <numeric>

#include "construct_detail.hpp"

namespace bhc::detail {

Path open_cycle(const Path& cycle, Vertex from, Vertex to) {
    const std::size_t n = cycle.size();
    const auto i = static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), from) - cycle.begin());
    const bool backward = cycle[(i + 1) % n] == to;
    Path out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back(backward ? cycle[(i + n - k) % n] : cycle[(i + k) % n]);
    return out;
}

Path rotate_cycle(const Path& cycle, Vertex first, Vertex second) {
    const std::size_t n = cycle.size();
    const auto i = static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), first) - cycle.begin());
    const bool forward = cycle[(i + 1) % n] == second;
    Path out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back(forward ? cycle[(i + k) % n] : cycle[(i + n - k) % n]);
    return out;
}

bool cycle_has_edge(const Path& cycle, const Edge& e) {
    const std::size_t n = cycle.size();
    for (std::size_t k = 0; k < n; ++k)
        if (Edge(cycle[k], cycle[(k + 1) % n]) == e) return true;
    return false;
}

std::vector<Edge> cycle_edges(const Path& cycle) {
    std::vector<Edge> out;
    const std::size_t n = cycle.size();
    for (std::size_t k = 0; k < n; ++k) out.emplace_back(cycle[k], cycle[(k + 1) % n]);
    return out;
}

Path reversed(Path p) {
    std::reverse(p.begin(), p.end());
    return p;
}

Classification classify(const Topology& t, const FaultSet& f, const SubcubeDecomposition& d, const FaultPartition& p) {
    Classification c;
    for (int j = 0; j < 4; ++j) {
        int lo = 2 * t.dimension();
        for (Vertex v : d.parts[static_cast<std::size_t>(j)]) lo = std::min(lo, surviving_degree(t, f, v, d.split_dimension));
        c.min_degree[static_cast<std::size_t>(j)] = lo;
        for (Vertex v : pivot_vertices(t, f, d, j)) c.pivots.push_back(v);
        for (Vertex v : isolated_vertices(t, f, d, j)) c.isolated.push_back(v);
        if (p.inside[static_cast<std::size_t>(j)].size() > p.inside[static_cast<std::size_t>(c.max_part)].size())
            c.max_part = j;
    }
    c.f4 = find_f4_cycles(t, f, d.split_dimension);
    if (!c.isolated.empty())
        c.role0 = d.part(c.isolated.front());
    else if (!c.pivots.empty())
        c.role0 = d.part(c.pivots.front());
    else if (!c.f4.empty())
        c.role0 = d.part(c.f4.front().degree_two[0]);
    else
        c.role0 = c.max_part;
    return c;
}

std::vector<int> split_order(const FaultSet& f, int min_faults) {
    std::vector<int> dims(static_cast<std::size_t>(f.dimension()));
    std::iota(dims.begin(), dims.end(), 0);
    std::stable_sort(dims.begin(), dims.end(), [&](int a, int b) {
        const bool ha = f.count_in_dimension(a) >= min_faults;
        const bool hb = f.count_in_dimension(b) >= min_faults;
        if (ha != hb) return ha;
        return f.count_in_dimension(a) > f.count_in_dimension(b);
    });
    return dims;
}

Level::Level(const Topology& t_, const FaultSet& f_, int split_, const ConstructOptions& options_, int depth_)
    : t(t_),
      f(f_),
      n(t_.dimension()),
      split(split_),
      depth(depth_),
      options(options_),
      d(decompose(t_, split_)),
      p(partition(t_, f_, d)),
      sub(topology_for(t_.dimension() - 1)) {
    for (int j = 0; j < 4; ++j) sub_faults[static_cast<std::size_t>(j)] = local_faults(sub, f, d, j);
    cls = classify(t, f, d, p);
}

std::vector<int> Level::role0_candidates(bool all) const {
    std::vector<int> out{cls.role0};
    if (all)
        for (int j = 0; j < 4; ++j)
            if (j != cls.role0) out.push_back(j);
    return out;
}

std::vector<Vertex> Level::cross_ok(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w : t.neighbors_in_dimension(v, split))
        if (!f.contains(v, w)) out.push_back(w);
    return out;
}

std::vector<Vertex> Level::inner_neighbors(Vertex v, bool alive_only) const {
    std::vector<Vertex> out;
    for (int k = 0; k < n; ++k) {
        if (k == split) continue;
        for (Vertex w : t.neighbors_in_dimension(v, k))
            if (!alive_only || !f.contains(v, w)) out.push_back(w);
    }
    return out;
}

std::vector<Edge> Level::inner_faults_at(Vertex v) const {
    std::vector<Edge> out;
    for (Vertex w : inner_neighbors(v, false))
        if (f.contains(v, w)) out.emplace_back(v, w);
    return out;
}

bool Level::inner_alive(Vertex a, Vertex b) const {
    const auto dim = t.edge_dimension(a, b);
    return dim && *dim != split && !f.contains(a, b);
}

Path Level::to_global(int part, const std::vector<Vertex>& local) const {
    Path out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(d.to_global(part, v));
    return out;
}

FaultSet Level::restored_faults(int part, std::span<const Edge> restored) const {
    const auto& base_faults = sub_faults[static_cast<std::size_t>(part)];
    if (restored.empty()) return base_faults;
    std::vector<Edge> local;
    for (const Edge& e : restored) local.emplace_back(to_local(e.u), to_local(e.v));
    return base_faults.without(sub, local);
}

bool Level::spend() {
    if (lane_budget_ < 0) return true;
    if (lane_budget_ == 0) return false;
    --lane_budget_;
    return true;
}

void Level::note_outcome(const char* what, SearchStatus status, bool beyond) {
    ++oracle_calls;
    if (status == SearchStatus::unknown) events.push_back(std::string("unknown: ") + what);
    if (beyond && status != SearchStatus::found) events.push_back(std::string("beyond cited bound: ") + what);
}

std::optional<Path> Level::path(int pos, Vertex s, Vertex t_end) {
    const int part = part_at(pos);
    if (d.part(s) != part || d.part(t_end) != part || partite_class(s) == partite_class(t_end)) return std::nullopt;
    const auto key = std::make_tuple(0, part, s, t_end, Vertex{0}, Vertex{0}, std::vector<Edge>{});
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    if (!spend()) return std::nullopt;
    const auto r = ham_path_laceable(sub, sub_faults[static_cast<std::size_t>(part)], to_local(s), to_local(t_end),
                                     options.subcall_budget);
    note_outcome("laceable path", r.status, r.beyond_cited_bound);
    std::optional<Path> out;
    if (r.found()) out = to_global(part, r.value->order);
    cache_.emplace(key, out);
    return out;
}

std::optional<std::pair<Path, Path>> Level::pair(int pos, Vertex s1, Vertex t1, Vertex s2, Vertex t2) {
    const int part = part_at(pos);
    for (Vertex v : {s1, t1, s2, t2})
        if (d.part(v) != part) return std::nullopt;
    if (s1 == s2 || t1 == t2 || partite_class(s1) != partite_class(s2) || partite_class(t1) != partite_class(t2) ||
        partite_class(s1) == partite_class(t1))
        return std::nullopt;
    const auto key = std::make_tuple(part, s1, t1, s2, t2);
    if (auto it = pair_cache_.find(key); it != pair_cache_.end()) return it->second;
    if (!spend()) return std::nullopt;
    const auto r = two_disjoint_paths(sub, sub_faults[static_cast<std::size_t>(part)], to_local(s1), to_local(t1),
                                      to_local(s2), to_local(t2), options.subcall_budget);
    note_outcome("disjoint paths", r.status, r.beyond_cited_bound);
    std::optional<std::pair<Path, Path>> out;
    if (r.found()) out = std::make_pair(to_global(part, r.value->first.order), to_global(part, r.value->second.order));
    pair_cache_.emplace(key, out);
    return out;
}

std::optional<Path> Level::cycle_through(int pos, std::span<const Edge> restored, const Edge& e) {
    const int part = part_at(pos);
    if (d.part(e.u) != part || d.part(e.v) != part || !t.is_edge(e) || t.edge_dimension(e) == split)
        return std::nullopt;
    std::vector<Edge> sorted(restored.begin(), restored.end());
    std::sort(sorted.begin(), sorted.end());
    const auto key = std::make_tuple(2, part, e.u, e.v, Vertex{0}, Vertex{0}, sorted);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const FaultSet faults = restored_faults(part, sorted);
    const Edge local(to_local(e.u), to_local(e.v));
    std::optional<Path> out;
    if (!faults.contains(local)) {
        if (!spend()) return std::nullopt;
        const auto r = ham_cycle_through_edge(sub, faults, local, options.subcall_budget);
        note_outcome("cycle through edge", r.status, r.beyond_cited_bound);
        if (r.found()) out = to_global(part, r.value->order);
    }
    cache_.emplace(key, out);
    return out;
}

std::optional<Path> Level::hyper(int pos, Vertex removed, Vertex s, Vertex t_end) {
    const int part = part_at(pos);
    if (!sub_faults[static_cast<std::size_t>(part)].empty()) return std::nullopt;
    for (Vertex v : {removed, s, t_end})
        if (d.part(v) != part) return std::nullopt;
    if (s == t_end || partite_class(s) != partite_class(t_end) || partite_class(removed) == partite_class(s))
        return std::nullopt;
    const auto key = std::make_tuple(3, part, removed, s, t_end, Vertex{0}, std::vector<Edge>{});
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    if (!spend()) return std::nullopt;
    const auto r = ham_path_minus_vertex(sub, to_local(removed), to_local(s), to_local(t_end), options.subcall_budget);
    note_outcome("hyper-laceable path", r.status, false);
    std::optional<Path> out;
    if (r.found()) out = to_global(part, r.value->order);
    cache_.emplace(key, out);
    return out;
}

std::optional<Induced> Level::induct(int pos, std::span<const Edge> restored) {
    const int part = part_at(pos);
    std::vector<Edge> sorted(restored.begin(), restored.end());
    std::sort(sorted.begin(), sorted.end());
    const auto key = std::make_pair(part, sorted);
    if (auto it = induct_cache_.find(key); it != induct_cache_.end()) return it->second;
    const FaultSet faults = restored_faults(part, sorted);
    std::optional<Induced> out;
    const auto report = check_preconditions(sub, faults);
    if (sub.dimension() >= 3 && report.ok()) {
        auto r = construct_at_depth(sub, faults, options, depth + 1);
        if (r.cycle) {
            Induced ind;
            ind.cycle = to_global(part, r.cycle->order);
            ind.levels = std::move(r.trace.levels);
            ind.via_oracle = r.status != ConstructStatus::constructed;
            out = std::move(ind);
        } else if (r.status == ConstructStatus::unknown) {
            events.push_back("unknown: induction");
        }
    } else {
        const auto r = ham_cycle(sub, faults, options.subcall_budget);
        note_outcome("subcube cycle", r.status, false);
        if (r.found()) {
            Induced ind;
            ind.cycle = to_global(part, r.value->order);
            ind.via_oracle = sub.dimension() >= 3;
            out = std::move(ind);
        }
    }
    induct_cache_.emplace(key, out);
    return out;
}

std::optional<Path> Level::lane_segment(int pos, Vertex entry, Vertex exit, LaneMode mode) {
    if (mode == LaneMode::laceable) return path(pos, entry, exit);
    if (!inner_alive(entry, exit)) return std::nullopt;
    const auto c = cycle_through(pos, {}, Edge(entry, exit));
    if (!c) return std::nullopt;
    return open_cycle(*c, entry, exit);
}

std::optional<std::array<Path, 3>> Level::single_lane(Vertex b1, Vertex a3, std::array<LaneMode, 3> modes) {
    auto exits = [&](int pos, Vertex entry, LaneMode m) {
        std::vector<Vertex> out;
        if (m == LaneMode::through) {
            for (Vertex w : inner_neighbors(entry, true))
                if (exits_forward(w) && has_cross_ok(w)) out.push_back(w);
        } else {
            for (Vertex v : d.parts[static_cast<std::size_t>(part_at(pos))])
                if (exits_forward(v) && has_cross_ok(v)) out.push_back(v);
        }
        return out;
    };
    for (Vertex a1 : exits(1, b1, modes[0])) {
        const auto h1 = lane_segment(1, b1, a1, modes[0]);
        if (!h1) {
            if (exhausted()) return std::nullopt;
            continue;
        }
        for (Vertex b2 : cross_ok(a1)) {
            for (Vertex a2 : exits(2, b2, modes[1])) {
                for (Vertex b3 : cross_ok(a2)) {
                    if (modes[2] == LaneMode::through && !inner_alive(b3, a3)) continue;
                    const auto h2 = lane_segment(2, b2, a2, modes[1]);
                    if (!h2) {
                        if (exhausted()) return std::nullopt;
                        break;
                    }
                    const auto h3 = lane_segment(3, b3, a3, modes[2]);
                    if (h3) return std::array<Path, 3>{*h1, *h2, *h3};
                    if (exhausted()) return std::nullopt;
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Level::Lanes> Level::double_lane(Vertex b1, Vertex d1, Vertex a3, Vertex c3, bool hyper_mode) {
    auto exits = [&](int pos) {
        std::vector<Vertex> out;
        for (Vertex v : d.parts[static_cast<std::size_t>(part_at(pos))])
            if (exits_forward(v) && has_cross_ok(v)) out.push_back(v);
        return out;
    };
    const auto e1 = exits(1);
    const auto e2 = exits(2);
    for (Vertex a1 : e1) {
        for (Vertex c1 : e1) {
            if (a1 == c1) continue;
            const auto p1 = pair(1, b1, a1, d1, c1);
            if (!p1) {
                if (exhausted()) return std::nullopt;
                continue;
            }
            for (Vertex b2 : cross_ok(a1)) {
                for (Vertex d2 : cross_ok(c1)) {
                    if (b2 == d2) continue;
                    for (Vertex a2 : e2) {
                        for (Vertex c2 : e2) {
                            if (a2 == c2) continue;
                            bool p2_failed = false;
                            for (Vertex b3 : cross_ok(a2)) {
                                for (Vertex d3 : cross_ok(c2)) {
                                    if (b3 == d3) continue;
                                    const auto p2 = pair(2, b2, a2, d2, c2);
                                    if (!p2) {
                                        p2_failed = true;
                                        break;
                                    }
                                    Lanes lanes;
                                    lanes.first = {p1->first, p2->first, {}};
                                    lanes.second = {p1->second, p2->second, {}};
                                    if (hyper_mode) {
                                        const auto h = hyper(3, a3, b3, d3);
                                        if (h) {
                                            lanes.hyper = *h;
                                            return lanes;
                                        }
                                    } else {
                                        const auto p3 = pair(3, b3, a3, d3, c3);
                                        if (p3) {
                                            lanes.first[2] = p3->first;
                                            lanes.second[2] = p3->second;
                                            return lanes;
                                        }
                                    }
                                    if (exhausted()) return std::nullopt;
                                }
                                if (p2_failed) break;
                            }
                            if (exhausted()) return std::nullopt;
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

// Scoped cap on fresh oracle calls for one ring completion.
class LaneBudget {
public:
    LaneBudget(int& slot, int limit) : slot_(slot) { slot_ = limit; }
    ~LaneBudget() { slot_ = -1; }
    LaneBudget(const LaneBudget&) = delete;
    LaneBudget& operator=(const LaneBudget&) = delete;

private:
    int& slot_;
};

}  // namespace

std::optional<Segments> Level::single_ring(const Path& h0, std::array<LaneMode, 3> modes) {
    const Vertex b0 = h0.front();
    const Vertex a0 = h0.back();
    if (!exits_forward(a0) || exits_forward(b0)) return std::nullopt;
    for (Vertex b1 : cross_ok(a0)) {
        for (Vertex a3 : cross_ok(b0)) {
            LaneBudget budget(lane_budget_, options.lane_attempts);
            if (auto lanes = single_lane(b1, a3, modes)) return Segments{(*lanes)[0], (*lanes)[1], (*lanes)[2], h0};
        }
    }
    return std::nullopt;
}

std::optional<Segments> Level::double_ring(const Path& a, const Path& b, bool allow_hyper) {
    const Vertex sa = a.front(), ea = a.back(), sb = b.front(), eb = b.back();
    if (!exits_forward(ea) || !exits_forward(eb) || exits_forward(sa) || exits_forward(sb)) return std::nullopt;
    for (Vertex b1 : cross_ok(eb)) {
        for (Vertex d1 : cross_ok(ea)) {
            if (b1 == d1) continue;
            for (Vertex a3 : cross_ok(sa)) {
                for (Vertex c3 : cross_ok(sb)) {
                    LaneBudget budget(lane_budget_, options.lane_attempts);
                    if (a3 != c3) {
                        if (auto l = double_lane(b1, d1, a3, c3, false))
                            return Segments{l->first[0], l->first[1], l->first[2], a,
                                            l->second[0], l->second[1], l->second[2], b};
                    } else if (allow_hyper && faults_at(3) == 0) {
                        if (auto l = double_lane(b1, d1, a3, c3, true))
                            return Segments{l->first[0], l->first[1], l->hyper, reversed(l->second[1]),
                                            reversed(l->second[0]), reversed(a), Path{a3}, b};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Segments> Level::u_turn(Vertex u, const Path& h0) {
    const Vertex d0 = h0.front(), b0 = h0.back();
    if (!exits_forward(u) || exits_forward(d0) || exits_forward(b0)) return std::nullopt;
    const auto out = cross_ok(u);
    if (out.size() != 2) return std::nullopt;
    for (int swap = 0; swap < 2; ++swap) {
        const Vertex b1 = out[static_cast<std::size_t>(swap)];
        const Vertex d1 = out[static_cast<std::size_t>(1 - swap)];
        for (Vertex a3 : cross_ok(d0)) {
            for (Vertex c3 : cross_ok(b0)) {
                if (a3 == c3) continue;
                LaneBudget budget(lane_budget_, options.lane_attempts);
                if (auto l = double_lane(b1, d1, a3, c3, false))
                    return Segments{Path{u}, l->first[0], l->first[1], l->first[2], h0,
                                    reversed(l->second[2]), reversed(l->second[1]), reversed(l->second[0])};
            }
        }
    }
    return std::nullopt;
}

namespace {

void fill_common(TraceLevel& rec, const Level& level, const std::string& dictated) {
    rec.depth = level.depth;
    rec.n = level.n;
    rec.faults = level.f.edges();
    rec.split_dim = level.split;
    rec.role0_part = level.base;
    rec.ring_dir = level.dir;
    rec.cross_faults = static_cast<int>(level.p.cross.size());
    for (int j = 0; j < 4; ++j)
        rec.subcube_faults[static_cast<std::size_t>(j)] = static_cast<int>(level.p.inside[static_cast<std::size_t>(j)].size());
    rec.dictated = dictated;
    rec.witnesses.pivots = level.cls.pivots;
    rec.witnesses.isolated = level.cls.isolated;
    rec.events = level.events;
}

}  // namespace

TraceLevel make_level_record(const Level& level, const Built& built, const std::string& dictated, bool sibling) {
    TraceLevel rec;
    fill_common(rec, level, dictated);
    rec.case_label = built.label;
    rec.sibling = sibling;
    const auto& segs = built.segments;
    for (std::size_t k = 0; k < segs.size(); ++k)
        rec.witnesses.cross_edges.emplace_back(segs[k].back(), segs[(k + 1) % segs.size()].front());
    rec.witnesses.r_edges = built.r_edges;
    rec.witnesses.non_r_edges = built.non_r_edges;
    rec.witnesses.f4_pair = built.f4_pair;
    rec.events.insert(rec.events.end(), built.events.begin(), built.events.end());
    return rec;
}

TraceLevel make_redecompose_record(const Level& level, const Redecompose& r, const std::string& dictated) {
    TraceLevel rec;
    fill_common(rec, level, dictated);
    rec.case_label = r.label;
    rec.sibling = r.label.rfind(dictated, 0) != 0;
    rec.events.push_back("redecompose " + std::to_string(r.split));
    return rec;
}

}  // namespace bhc::detail
