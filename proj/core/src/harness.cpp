#include "bhc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "bhc/io.hpp"
#include "json.hpp"

namespace bhc {

using nlohmann::json;

const char* to_string(OracleCheck c) {
    switch (c) {
        case OracleCheck::skipped: return "skipped";
        case OracleCheck::agree: return "agree";
        case OracleCheck::disagree: return "disagree";
        case OracleCheck::unknown: return "unknown";
    }
    return "skipped";
}

bool ResultRecord::theorem_violation() const {
    if (!status) return false;
    if (*status == ConstructStatus::no_cycle || oracle == OracleCheck::disagree) return true;
    return !violations.empty();
}

bool ResultRecord::defect() const {
    return theorem_violation() || (status && (*status == ConstructStatus::fallback || *status == ConstructStatus::unknown));
}

void SweepSummary::add(const ResultRecord& r) {
    ++instances;
    if (!r.status) {
        ++precondition_failed;
        return;
    }
    switch (*r.status) {
        case ConstructStatus::constructed: ++constructed; break;
        case ConstructStatus::fallback: ++fallback; break;
        case ConstructStatus::unknown: ++unknown; break;
        default: break;
    }
    if (r.theorem_violation()) ++violations;
    if (r.oracle != OracleCheck::skipped) ++oracle_checked;
    if (r.oracle == OracleCheck::disagree) ++oracle_disagree;
    if (r.oracle == OracleCheck::unknown) ++oracle_unknown;
    for (const auto& l : r.trace.levels) ++labels[l.case_label];
}

int SweepSummary::exit_code(int n) const {
    if (violations) return 1;
    if (n <= 3 && (unknown || oracle_unknown)) return 3;
    return 0;
}

void validate(const SweepConfig& cfg) {
    if (cfg.n < 1 || cfg.n > 6) throw std::invalid_argument("n must be in 1..6");
    if (cfg.max_faults < 0) throw std::invalid_argument("max-faults must be non-negative");
    if (cfg.mode == SweepMode::exhaustive && cfg.n != 2 && cfg.max_faults > 2)
        throw std::invalid_argument("exhaustive mode needs n = 2 or max-faults <= 2");
}

namespace {

std::uint64_t binom(std::uint64_t m, std::uint64_t k) {
    if (k > m) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (m - k + i) / i;
    return r;
}

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

ConstructOptions options_for(const SweepConfig& cfg) {
    ConstructOptions o;
    o.fallback_budget.max_expansions = cfg.budget;
    o.subcall_budget.max_expansions = std::min<std::uint64_t>(o.subcall_budget.max_expansions, cfg.budget);
    return o;
}

json params_json(const GeneratorParams& p) {
    json j = json::object();
    if (p.dimension) j["dimension"] = *p.dimension;
    if (p.load) j["load"] = *p.load;
    if (p.hubs) j["hubs"] = *p.hubs;
    if (p.near_miss) j["near_miss"] = *p.near_miss;
    return j;
}

GeneratorParams parse_params(const json& j) {
    GeneratorParams p;
    if (j.contains("dimension")) p.dimension = j["dimension"].get<int>();
    if (j.contains("load")) p.load = j["load"].get<int>();
    if (j.contains("hubs")) p.hubs = j["hubs"].get<int>();
    if (j.contains("near_miss")) p.near_miss = j["near_miss"].get<bool>();
    return p;
}

json config_json(const SweepConfig& cfg) {
    return {{"n", cfg.n},
            {"mode", cfg.mode == SweepMode::exhaustive ? "exhaustive" : "random"},
            {"max_faults", cfg.max_faults},
            {"samples", cfg.samples},
            {"generator", to_string(cfg.generator)},
            {"params", params_json(cfg.params)},
            {"seed", cfg.seed},
            {"budget", cfg.budget}};
}

json edges_json(const std::vector<Edge>& edges, int n) { return json::parse(faults_to_json(topology_for(n), edges)); }

}  // namespace

std::uint64_t exhaustive_count(const SweepConfig& cfg) {
    const auto m = topology_for(cfg.n).edge_count();
    std::uint64_t total = 0;
    for (int k = 0; k <= cfg.max_faults; ++k) total += binom(m, static_cast<std::uint64_t>(k));
    return total;
}

std::vector<Edge> instance_faults(const SweepConfig& cfg, std::uint64_t id) {
    const Topology& t = topology_for(cfg.n);
    if (cfg.mode == SweepMode::random) {
        auto rng = instance_rng(cfg.seed, id);
        return generate_faults(cfg.generator, t, cfg.max_faults, rng, cfg.params);
    }
    const auto all = t.edges();
    const std::uint64_t m = all.size();
    std::uint64_t k = 0;
    while (id >= binom(m, k)) {
        id -= binom(m, k);
        if (++k > m || k > static_cast<std::uint64_t>(cfg.max_faults)) throw std::out_of_range("instance id beyond the exhaustive range");
    }
    // Unrank the id-th k-subset in lexicographic order.
    std::vector<Edge> out;
    std::uint64_t next = 0;
    for (std::uint64_t left = k; left > 0; --left) {
        while (true) {
            const std::uint64_t block = binom(m - next - 1, left - 1);
            if (id < block) break;
            id -= block;
            ++next;
        }
        out.push_back(all[next++]);
    }
    return out;
}

ResultRecord run_instance(const SweepConfig& cfg, std::uint64_t id, const std::vector<Edge>& faults, bool cross_check) {
    const auto start = std::chrono::steady_clock::now();
    const Topology& t = topology_for(cfg.n);
    const FaultSet f(t, faults);
    ResultRecord r;
    r.id = id;
    r.seed = cfg.seed;
    r.generator = cfg.mode == SweepMode::exhaustive ? "exhaustive" : to_string(cfg.generator);
    r.n = cfg.n;
    r.faults = f.edges();
    r.preconditions = check_preconditions(t, f);
    if (r.preconditions.ok()) {
        auto res = construct(t, f, options_for(cfg));
        r.status = res.status;
        if (res.status == ConstructStatus::constructed || res.status == ConstructStatus::fallback) {
            r.violations = verify_result(t, f, res).violations;
            if (cross_check) {
                const auto o = ham_cycle(t, f, SearchBudget{cfg.budget});
                r.oracle = o.status == SearchStatus::found    ? OracleCheck::agree
                           : o.status == SearchStatus::absent ? OracleCheck::disagree
                                                              : OracleCheck::unknown;
            }
        } else {
            r.violations = verify_trace(res.trace).violations;
        }
        r.trace = std::move(res.trace);
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string record_to_json(const ResultRecord& r) {
    const auto& p = r.preconditions;
    json pre{{"fault_count", p.fault_count}, {"bound", p.bound},         {"size_ok", p.size_ok},
             {"min_degree", p.min_degree},   {"degree_ok", p.degree_ok}, {"f4_cycles", p.f4_cycles.size()}};
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"kind", to_string(v.kind)}, {"level", v.level}, {"position", v.position}, {"detail", v.detail}});
    return json{{"type", "instance"},
                {"id", r.id},
                {"seed", r.seed},
                {"generator", r.generator},
                {"n", r.n},
                {"faults", edges_json(r.faults, r.n)},
                {"preconditions", pre},
                {"outcome", r.status ? to_string(*r.status) : "precondition_failed"},
                {"case_path", r.trace.case_path()},
                {"fallbacks", r.trace.fallbacks},
                {"impasses", r.trace.impasses},
                {"violations", violations},
                {"oracle", to_string(r.oracle)},
                {"wall_ms", r.wall_ms}}
        .dump();
}

std::string summary_to_json(const SweepConfig& cfg, const SweepSummary& s) {
    return json{{"type", "summary"},
                {"config", config_json(cfg)},
                {"instances", s.instances},
                {"precondition_failed", s.precondition_failed},
                {"constructed", s.constructed},
                {"fallback", s.fallback},
                {"unknown", s.unknown},
                {"violations", s.violations},
                {"oracle_checked", s.oracle_checked},
                {"oracle_disagree", s.oracle_disagree},
                {"oracle_unknown", s.oracle_unknown},
                {"labels", s.labels},
                {"wall_s", s.wall_s},
                {"exit_code", s.exit_code(cfg.n)}}
        .dump();
}

std::string replay_bundle(const SweepConfig& cfg, const ResultRecord& r) {
    const Topology& t = topology_for(r.n);
    return json{{"type", "replay"},
                {"config", config_json(cfg)},
                {"id", r.id},
                {"faults", edges_json(r.faults, r.n)},
                {"record", json::parse(record_to_json(r))},
                {"trace", json::parse(trace_to_json(t, r.trace))}}
        .dump(1);
}

ReplayOutcome replay(const std::string& bundle_text) {
    json b;
    try {
        b = json::parse(bundle_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid bundle: ") + e.what(), -1);
    }
    SweepConfig cfg;
    std::uint64_t id = 0;
    std::vector<Edge> stored;
    try {
        const auto& c = b.at("config");
        cfg.n = c.at("n").get<int>();
        cfg.mode = c.at("mode").get<std::string>() == "exhaustive" ? SweepMode::exhaustive : SweepMode::random;
        cfg.max_faults = c.at("max_faults").get<int>();
        const auto g = parse_generator(c.at("generator").get<std::string>());
        if (!g) throw ParseError("unknown generator in bundle", -1);
        cfg.generator = *g;
        cfg.params = parse_params(c.value("params", json::object()));
        cfg.seed = c.at("seed").get<std::uint64_t>();
        cfg.budget = c.at("budget").get<std::uint64_t>();
        id = b.at("id").get<std::uint64_t>();
        validate(cfg);
        stored = parse_faults(topology_for(cfg.n), b.at("faults").dump());
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed bundle: ") + e.what(), -1);
    }
    ReplayOutcome out;
    const auto regenerated = instance_faults(cfg, id);
    out.faults_match = regenerated == stored;
    out.record = run_instance(cfg, id, stored, true);
    return out;
}

SweepSummary sweep(const SweepConfig& cfg, const std::function<void(const ResultRecord&)>& sink) {
    validate(cfg);
    const auto start = std::chrono::steady_clock::now();
    const Topology& t = topology_for(cfg.n);

    struct Job {
        std::uint64_t id;
        std::vector<Edge> faults;
    };
    std::vector<Job> jobs;
    if (cfg.mode == SweepMode::exhaustive) {
        const auto total = exhaustive_count(cfg);
        jobs.reserve(total);
        for (std::uint64_t id = 0; id < total; ++id) jobs.push_back({id, instance_faults(cfg, id)});
    } else {
        // Rejected draws still get records; the cap stops generators whose
        // output never meets the preconditions.
        std::uint64_t accepted = 0;
        const std::uint64_t cap = cfg.samples * 100 + 1000;
        for (std::uint64_t id = 0; accepted < cfg.samples && id < cap; ++id) {
            auto faults = instance_faults(cfg, id);
            if (check_preconditions(t, FaultSet(t, faults)).ok()) ++accepted;
            jobs.push_back({id, std::move(faults)});
        }
    }

    std::ofstream out;
    if (!cfg.out.empty()) {
        out.open(cfg.out, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + cfg.out);
    }
    if (!cfg.defects_dir.empty()) std::filesystem::create_directories(cfg.defects_dir);

    SweepSummary summary;
    std::mutex writer;
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        while (true) {
            const std::size_t k = next.fetch_add(1);
            if (k >= jobs.size()) return;
            const bool check = cfg.oracle_every && splitmix(cfg.seed ^ splitmix(jobs[k].id)) % cfg.oracle_every == 0;
            ResultRecord r = run_instance(cfg, jobs[k].id, jobs[k].faults, check);
            const std::string line = record_to_json(r);
            std::string bundle;
            if (r.defect() && !cfg.defects_dir.empty()) bundle = replay_bundle(cfg, r);
            std::lock_guard lock(writer);
            summary.add(r);
            if (out) out << line << '\n';
            if (!bundle.empty())
                write_file((std::filesystem::path(cfg.defects_dir) / ("instance-" + std::to_string(r.id) + ".json")).string(),
                           bundle);
            if (sink) sink(r);
        }
    };
    unsigned workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(jobs.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    summary.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out) {
        out << summary_to_json(cfg, summary) << '\n';
        if (!out) throw std::runtime_error("write failed for " + cfg.out);
    }
    return summary;
}

}  // namespace bhc
