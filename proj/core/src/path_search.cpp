#include "path_search.hpp"

#include <algorithm>

namespace bhc::detail {

SearchGraph::SearchGraph(const Topology& t, const FaultSet& f, std::span<const Vertex> removed) {
    const auto count = t.vertex_count();
    local_.assign(count, -1);
    std::vector<std::uint8_t> gone(count, 0);
    for (Vertex v : removed) gone[v] = 1;
    for (Vertex v = 0; v < count; ++v) {
        if (gone[v]) continue;
        local_[v] = static_cast<int>(global_.size());
        global_.push_back(v);
        cls_.push_back(partite_class(v));
    }
    const auto n = global_.size();
    adj_.assign(n, {});
    adjm_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        const Vertex v = global_[a];
        const auto mask = f.faulty_slots(v);
        auto nb = t.neighbors(v);
        for (int s = 0; s < t.degree(); ++s) {
            if (mask & (1u << s)) continue;
            const int b = local_[nb[static_cast<std::size_t>(s)]];
            if (b < 0) continue;
            adj_[a].push_back(b);
            adjm_[a * n + static_cast<std::size_t>(b)] = 1;
        }
        std::sort(adj_[a].begin(), adj_[a].end());
    }
}

void SearchGraph::add_edge(int a, int b) {
    if (adjacent(a, b)) return;
    const auto n = global_.size();
    adjm_[static_cast<std::size_t>(a) * n + b] = adjm_[static_cast<std::size_t>(b) * n + a] = 1;
    auto& la = adj_[static_cast<std::size_t>(a)];
    la.insert(std::lower_bound(la.begin(), la.end(), b), b);
    auto& lb = adj_[static_cast<std::size_t>(b)];
    lb.insert(std::lower_bound(lb.begin(), lb.end(), a), a);
}

void SearchGraph::remove_edge(int a, int b) {
    if (!adjacent(a, b)) return;
    const auto n = global_.size();
    adjm_[static_cast<std::size_t>(a) * n + b] = adjm_[static_cast<std::size_t>(b) * n + a] = 0;
    auto& la = adj_[static_cast<std::size_t>(a)];
    la.erase(std::find(la.begin(), la.end(), b));
    auto& lb = adj_[static_cast<std::size_t>(b)];
    lb.erase(std::find(lb.begin(), lb.end(), a));
}

PathSearch::PathSearch(const SearchGraph& g, int start, int target, std::optional<std::pair<int, int>> link,
                       std::uint64_t budget, std::uint64_t shuffle_seed)
    : g_(g), start_(start), target_(target), budget_(budget), shuffle_(shuffle_seed != 0), rng_(shuffle_seed) {
    if (link) {
        link_from_ = link->first;
        link_to_ = link->second;
    }
    const auto n = static_cast<std::size_t>(g.size());
    visited_.assign(n, 0);
    unvisited_degree_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        unvisited_degree_[v] = static_cast<int>(g.neighbors(static_cast<int>(v)).size());
        ++unvisited_by_class_[static_cast<std::size_t>(g.cls(static_cast<int>(v)))];
    }
    unvisited_ = static_cast<int>(n);
    stamp_.assign(n, 0);
    disc_.assign(n, 0);
    low_.assign(n, 0);
    end_.assign(n, 0);
    parent_.assign(n, -1);
    next_.assign(n, 0);
    sub_.assign(n, {0, 0});
    stack_.reserve(n);
}

void PathSearch::visit(int v) {
    visited_[static_cast<std::size_t>(v)] = 1;
    for (int w : g_.neighbors(v)) --unvisited_degree_[static_cast<std::size_t>(w)];
    --unvisited_by_class_[static_cast<std::size_t>(g_.cls(v))];
    --unvisited_;
    path_.push_back(v);
}

void PathSearch::unvisit(int v) {
    visited_[static_cast<std::size_t>(v)] = 0;
    for (int w : g_.neighbors(v)) ++unvisited_degree_[static_cast<std::size_t>(w)];
    ++unvisited_by_class_[static_cast<std::size_t>(g_.cls(v))];
    ++unvisited_;
    path_.pop_back();
}

bool PathSearch::structure_ok(int cur) const {
    if (unvisited_ == 0) return true;
    ++epoch_;
    int timer = 0;
    int reached = 0;
    int root_children = 0;
    auto open = [&](int v, int parent) {
        const auto i = static_cast<std::size_t>(v);
        stamp_[i] = epoch_;
        disc_[i] = low_[i] = timer++;
        parent_[i] = parent;
        next_[i] = 0;
        sub_[i] = {0, 0};
        ++sub_[i][static_cast<std::size_t>(g_.cls(v))];
        stack_.push_back(v);
    };
    stack_.clear();
    open(cur, -1);
    while (!stack_.empty()) {
        const int v = stack_.back();
        const auto vi = static_cast<std::size_t>(v);
        const auto& nb = g_.neighbors(v);
        if (next_[vi] < static_cast<int>(nb.size())) {
            const int w = nb[static_cast<std::size_t>(next_[vi]++)];
            const auto wi = static_cast<std::size_t>(w);
            if (visited_[wi] && w != cur) continue;
            if (stamp_[wi] != epoch_) {
                ++reached;
                open(w, v);
            } else if (w != parent_[vi]) {
                low_[vi] = std::min(low_[vi], disc_[wi]);
            }
            continue;
        }
        stack_.pop_back();
        end_[vi] = timer - 1;
        const int p = parent_[vi];
        if (p < 0) continue;
        const auto pi = static_cast<std::size_t>(p);
        low_[pi] = std::min(low_[pi], low_[vi]);
        sub_[pi][0] += sub_[vi][0];
        sub_[pi][1] += sub_[vi][1];
        if (p == cur) {
            if (++root_children > 1) return false;
            continue;
        }
        if (low_[vi] < disc_[pi]) continue;
        // p separates v's subtree: the path must enter it last, through p.
        const auto ti = static_cast<std::size_t>(target_);
        if (p == target_ || stamp_[ti] != epoch_ || disc_[ti] < disc_[vi] || disc_[ti] > end_[vi]) return false;
        const int pc = g_.cls(p);
        std::array<int, 2> c = sub_[vi];
        ++c[static_cast<std::size_t>(pc)];
        const int m = c[0] + c[1];
        if (m % 2 == 0) {
            if (c[0] != c[1] || g_.cls(target_) == pc) return false;
        } else {
            if (c[static_cast<std::size_t>(pc)] != c[static_cast<std::size_t>(pc ^ 1)] + 1 || g_.cls(target_) != pc)
                return false;
        }
    }
    return reached == unvisited_;
}

bool PathSearch::feasible_after_move(int prev, int cur) const {
    const int k = unvisited_;
    if (k == 0) return cur == target_;
    if (cur == target_) return false;

    // Bipartite balance of the remaining alternating path cur -> ... -> target.
    const int opp = g_.cls(cur) ^ 1;
    if (unvisited_by_class_[static_cast<std::size_t>(opp)] != (k + 1) / 2) return false;
    if (unvisited_by_class_[static_cast<std::size_t>(opp ^ 1)] != k / 2) return false;
    if (g_.cls(target_) != ((k % 2 == 1) ? opp : (opp ^ 1))) return false;

    // Vertices next to prev lost one option; each interior vertex needs two.
    if (prev >= 0) {
        for (int x : g_.neighbors(prev)) {
            if (visited_[static_cast<std::size_t>(x)]) continue;
            const int options = unvisited_degree_[static_cast<std::size_t>(x)] + (g_.adjacent(x, cur) ? 1 : 0);
            if (options < (x == target_ ? 1 : 2)) return false;
        }
    }
    const int target_options =
        unvisited_degree_[static_cast<std::size_t>(target_)] + (g_.adjacent(target_, cur) ? 1 : 0);
    if (target_options < 1) return false;
    return structure_ok(cur);
}

bool PathSearch::extend(int cur) {
    if (++expansions_ > budget_) {
        exhausted_ = true;
        return false;
    }
    if (unvisited_ == 0) return cur == target_;

    int candidates[64];
    int count = 0;
    if (cur == link_from_) {
        if (visited_[static_cast<std::size_t>(link_to_)]) return false;
        candidates[count++] = link_to_;
    } else {
        int forced = -1;
        for (int w : g_.neighbors(cur)) {
            if (visited_[static_cast<std::size_t>(w)] || w == target_ || w == link_to_) continue;
            if (unvisited_degree_[static_cast<std::size_t>(w)] <= 1) {
                if (forced >= 0) return false;
                forced = w;
            }
        }
        if (forced >= 0) {
            candidates[count++] = forced;
        } else {
            for (int w : g_.neighbors(cur)) {
                if (visited_[static_cast<std::size_t>(w)] || w == link_to_) continue;
                if (w == target_ && unvisited_ != 1) continue;
                candidates[count++] = w;
            }
            if (shuffle_) std::shuffle(candidates, candidates + count, rng_);
            std::stable_sort(candidates, candidates + count, [&](int a, int b) {
                return unvisited_degree_[static_cast<std::size_t>(a)] < unvisited_degree_[static_cast<std::size_t>(b)];
            });
        }
    }

    for (int i = 0; i < count; ++i) {
        const int w = candidates[i];
        visit(w);
        if (feasible_after_move(cur, w) && extend(w)) return true;
        unvisit(w);
        if (exhausted_) return false;
    }
    return false;
}

SearchStatus PathSearch::run() {
    path_.clear();
    if (g_.size() == 0) return SearchStatus::absent;
    if (start_ == link_to_) return SearchStatus::absent;
    visit(start_);
    if (g_.size() == 1) return start_ == target_ ? SearchStatus::found : SearchStatus::absent;
    if (start_ == target_) return SearchStatus::absent;

    // Initial option count for every vertex.
    for (int x = 0; x < g_.size(); ++x) {
        if (visited_[static_cast<std::size_t>(x)]) continue;
        const int options = unvisited_degree_[static_cast<std::size_t>(x)] + (g_.adjacent(x, start_) ? 1 : 0);
        if (options < (x == target_ ? 1 : 2)) return SearchStatus::absent;
    }
    if (!feasible_after_move(-1, start_)) return SearchStatus::absent;
    if (extend(start_)) return SearchStatus::found;
    return exhausted_ ? SearchStatus::unknown : SearchStatus::absent;
}

SearchRun search_with_restarts(const SearchGraph& g, int start, int target, std::optional<std::pair<int, int>> link,
                               std::uint64_t budget) {
    SearchRun out;
    std::uint64_t cap = 256;
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL ^ (static_cast<std::uint64_t>(start) << 32) ^
                         static_cast<std::uint64_t>(target) ^ (static_cast<std::uint64_t>(g.size()) << 48);
    while (out.expansions + 2 * cap < budget / 2) {
        seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
        PathSearch s(g, start, target, link, cap, seed | 1);
        const auto status = s.run();
        out.expansions += s.expansions();
        if (status != SearchStatus::unknown) {
            out.status = status;
            if (status == SearchStatus::found) out.path = s.path();
            return out;
        }
        cap *= 2;
    }
    PathSearch s(g, start, target, link, budget - out.expansions);
    out.status = s.run();
    out.expansions += s.expansions();
    if (out.status == SearchStatus::found) out.path = s.path();
    return out;
}

}  // namespace bhc::detail
