// bhc: command-line front end for the fault-tolerant Hamiltonian cycle library.
//
// Exit codes: 0 clean, 1 theorem violation (or verification failure),
// 2 precondition or usage error, 3 search budget exhausted at n <= 3.

#include <bhc/constructor.hpp>
#include <bhc/generators.hpp>
#include <bhc/harness.hpp>
#include <bhc/io.hpp>
#include <bhc/oracles.hpp>
#include <bhc/verifier.hpp>

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using namespace bhc;
using nlohmann::json;

constexpr int kClean = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kUnknown = 3;

struct Common {
    int n = 2;
    std::string faults;
    std::string out;
    std::string format = "json";
    std::uint64_t budget = 50'000'000;
};

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
    else
        write_file(path, text);
}

FaultSet load_faults(const Topology& t, const std::string& path) {
    if (path.empty()) return FaultSet::empty(t);
    return FaultSet(t, parse_faults(t, read_file(path)));
}

Vertex parse_label(const std::string& s, int n) {
    std::vector<int> d;
    std::stringstream ss(s);
    for (std::string part; std::getline(ss, part, ',');) d.push_back(std::stoi(part));
    if (static_cast<int>(d.size()) != n) throw CLI::ValidationError("vertex", "expected " + std::to_string(n) + " digits: " + s);
    for (int x : d)
        if (x < 0 || x > 3) throw CLI::ValidationError("vertex", "digits must be 0..3: " + s);
    return from_digits(d);
}

int unknown_code(int n) { return n <= 3 ? kUnknown : kClean; }

json precondition_json(const PreconditionReport& p) {
    return {{"fault_count", p.fault_count}, {"bound", p.bound},         {"size_ok", p.size_ok},
            {"min_degree", p.min_degree},   {"degree_ok", p.degree_ok}, {"f4_cycles", p.f4_cycles.size()}};
}

int run_gen(const Common& c, const std::string& generator, std::uint64_t seed, std::uint64_t id, int max_faults) {
    const Topology& t = topology_for(c.n);
    if (!generator.empty()) {
        const auto g = parse_generator(generator);
        if (!g) throw CLI::ValidationError("--generator", "unknown generator " + generator);
        SweepConfig cfg;
        cfg.n = c.n;
        cfg.generator = *g;
        cfg.seed = seed;
        cfg.max_faults = max_faults;
        emit(c.out, faults_to_json(t, instance_faults(cfg, id)));
        return kClean;
    }
    const auto faults = c.faults.empty() ? std::vector<Edge>{} : parse_faults(t, read_file(c.faults));
    emit(c.out, c.format == "dot" ? topology_to_dot(t, faults) : topology_to_json(t));
    return kClean;
}

int run_construct(const Common& c, const std::string& trace_out) {
    const Topology& t = topology_for(c.n);
    const FaultSet f = load_faults(t, c.faults);
    const auto pre = check_preconditions(t, f);
    if (!pre.ok()) {
        std::cerr << "preconditions fail: " << precondition_json(pre).dump() << "\n";
        return kUsage;
    }
    ConstructOptions options;
    options.fallback_budget.max_expansions = c.budget;
    options.subcall_budget.max_expansions = std::min<std::uint64_t>(options.subcall_budget.max_expansions, c.budget);
    const auto r = construct(t, f, options);
    std::cerr << "status " << to_string(r.status);
    for (const auto& label : r.trace.case_path()) std::cerr << " " << label;
    std::cerr << "\n";
    if (!trace_out.empty()) write_file(trace_out, trace_to_json(t, r.trace));
    if (r.status == ConstructStatus::unknown) return unknown_code(c.n);
    if (!r.cycle) return kViolation;
    if (const auto report = verify_result(t, f, r); !report.ok()) {
        for (const auto& v : report.violations) std::cerr << "violation " << to_string(v.kind) << ": " << v.detail << "\n";
        return kViolation;
    }
    emit(c.out, c.format == "dot" ? topology_to_dot(t, f.edges(), &*r.cycle) : cycle_to_json(t, *r.cycle));
    return kClean;
}

int run_verify(const Common& c, const std::string& cycle_path, const std::string& trace_path) {
    const Topology& t = topology_for(c.n);
    const FaultSet f = load_faults(t, c.faults);
    VerifyReport report;
    if (!cycle_path.empty()) report = verify_cycle(t, f, parse_cycle(t, read_file(cycle_path)));
    if (!trace_path.empty()) {
        const auto tr = verify_trace(parse_trace(read_file(trace_path)));
        report.violations.insert(report.violations.end(), tr.violations.begin(), tr.violations.end());
    }
    json out = json::array();
    for (const auto& v : report.violations)
        out.push_back({{"kind", to_string(v.kind)}, {"level", v.level}, {"position", v.position}, {"detail", v.detail}});
    emit(c.out, json{{"ok", report.ok()}, {"violations", out}}.dump());
    return report.ok() ? kClean : kViolation;
}

int run_oracle(const Common& c, const std::string& from, const std::string& to) {
    const Topology& t = topology_for(c.n);
    const FaultSet f = load_faults(t, c.faults);
    const SearchBudget budget{c.budget};
    json out;
    SearchStatus status;
    if (!from.empty() || !to.empty()) {
        if (from.empty() || to.empty()) throw CLI::ValidationError("--from/--to", "both endpoints are needed");
        const Vertex s = parse_label(from, c.n), e = parse_label(to, c.n);
        if (partite_class(s) == partite_class(e)) throw CLI::ValidationError("--from/--to", "endpoints must lie in different classes");
        const auto r = ham_path_laceable(t, f, s, e, budget);
        status = r.status;
        out = {{"query", "path"}, {"status", to_string(r.status)}, {"expansions", r.expansions}};
        if (r.value) out["path"] = json::parse(cycle_to_json(t, HamCycle{r.value->order}))["cycle"];
        std::cout << out.dump() << "\n";
        return status == SearchStatus::unknown ? unknown_code(c.n) : kClean;
    }
    const auto r = ham_cycle(t, f, budget);
    status = r.status;
    const auto pre = check_preconditions(t, f);
    out = {{"query", "cycle"},
           {"status", to_string(r.status)},
           {"expansions", r.expansions},
           {"preconditions", precondition_json(pre)}};
    std::cout << out.dump() << "\n";
    if (r.value) emit(c.out, c.format == "dot" ? topology_to_dot(t, f.edges(), &*r.value) : cycle_to_json(t, *r.value));
    if (status == SearchStatus::unknown) return unknown_code(c.n);
    if (status == SearchStatus::absent && pre.ok()) return kViolation;
    return kClean;
}

int run_sweep(SweepConfig cfg, const std::string& mode, const std::string& generator) {
    if (mode == "exhaustive")
        cfg.mode = SweepMode::exhaustive;
    else if (mode == "random")
        cfg.mode = SweepMode::random;
    else
        throw CLI::ValidationError("--mode", "expected exhaustive or random");
    const auto g = parse_generator(generator);
    if (!g) throw CLI::ValidationError("--generator", "unknown generator " + generator);
    cfg.generator = *g;
    try {
        validate(cfg);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("sweep", e.what());
    }
    const auto s = sweep(cfg);
    std::cerr << summary_to_json(cfg, s) << "\n";
    return s.exit_code(cfg.n);
}

int run_replay(const std::string& bundle) {
    const auto r = replay(read_file(bundle));
    std::cout << record_to_json(r.record) << "\n";
    if (!r.faults_match) {
        std::cerr << "bundle faults differ from the regenerated instance\n";
        return kUsage;
    }
    if (r.record.theorem_violation()) return kViolation;
    if (r.record.status == ConstructStatus::unknown) return unknown_code(r.record.n);
    return kClean;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian cycles in faulty balanced hypercubes"};
    app.require_subcommand(1);

    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-n", common.n, "Dimension of BH_n")->check(CLI::Range(1, 6));
        sub->add_option("--faults", common.faults, "Fault file (JSON)");
        sub->add_option("--out", common.out, "Output path (default stdout)");
        sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"dot", "json"}));
        sub->add_option("--budget", common.budget, "Oracle expansion cap per search");
    };

    auto* gen = app.add_subcommand("gen", "Export BH_n, or generate a fault file with --generator");
    add_common(gen);
    std::string gen_generator;
    std::uint64_t gen_seed = 1, gen_id = 0;
    int gen_max = 0;
    gen->add_option("--generator", gen_generator, "Fault generator");
    gen->add_option("--seed", gen_seed, "Seed");
    gen->add_option("--id", gen_id, "Instance id");
    gen->add_option("--max-faults", gen_max, "Number of faults");

    auto* con = app.add_subcommand("construct", "Build a fault-free Hamiltonian cycle");
    add_common(con);
    std::string trace_out;
    con->add_option("--trace", trace_out, "Write the case trace (JSON)");

    auto* ver = app.add_subcommand("verify", "Check a cycle file and/or a trace file");
    add_common(ver);
    std::string cycle_in, trace_in;
    ver->add_option("--cycle", cycle_in, "Cycle file (JSON)");
    ver->add_option("--trace", trace_in, "Trace file (JSON)");

    auto* orc = app.add_subcommand("oracle", "Exact search: Hamiltonian cycle, or a path with --from/--to");
    add_common(orc);
    std::string from, to;
    orc->add_option("--from", from, "Path start, digits a0,a1,...");
    orc->add_option("--to", to, "Path end, digits a0,a1,...");

    auto* swp = app.add_subcommand("sweep", "Exhaustive or randomized experiment, JSONL output");
    SweepConfig cfg;
    std::string mode = "random", generator = "uniform";
    swp->add_option("-n", cfg.n, "Dimension of BH_n")->check(CLI::Range(1, 6));
    swp->add_option("--mode", mode, "exhaustive or random");
    swp->add_option("--max-faults", cfg.max_faults, "Fault count (random) or maximum (exhaustive)");
    swp->add_option("--samples", cfg.samples, "Instances meeting the preconditions (random)");
    swp->add_option("--seed", cfg.seed, "Seed");
    swp->add_option("--generator", generator, "uniform, dim-heavy, star, f4-forge, subcube-heavy");
    swp->add_option("--budget", cfg.budget, "Oracle expansion cap per search");
    swp->add_option("--out", cfg.out, "JSONL output path");
    swp->add_option("--defects", cfg.defects_dir, "Directory for replay bundles");
    swp->add_option("--workers", cfg.workers, "Worker threads (0: all cores)");
    swp->add_option("--oracle-every", cfg.oracle_every, "Cross-check one instance in this many (0: never)");

    auto* rep = app.add_subcommand("replay", "Re-run a replay bundle");
    std::string bundle;
    rep->add_option("bundle", bundle, "Bundle file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kClean : kUsage;
    }

    try {
        if (*gen) return run_gen(common, gen_generator, gen_seed, gen_id, gen_max);
        if (*con) return run_construct(common, trace_out);
        if (*ver) return run_verify(common, cycle_in, trace_in);
        if (*orc) return run_oracle(common, from, to);
        if (*swp) return run_sweep(cfg, mode, generator);
        if (*rep) return run_replay(bundle);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const FaultSetError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
