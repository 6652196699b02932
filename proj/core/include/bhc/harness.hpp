#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bhc/constructor.hpp"
#include "bhc/generators.hpp"
#include "bhc/verifier.hpp"

namespace bhc {

enum class SweepMode { exhaustive, random };

struct SweepConfig {
    int n = 3;
    SweepMode mode = SweepMode::random;
    int max_faults = 8;
    std::uint64_t samples = 1000;  // random mode: instances meeting the preconditions
    Generator generator = Generator::uniform;
    GeneratorParams params;
    std::uint64_t seed = 1;
    std::uint64_t budget = 50'000'000;  // oracle expansions per search
    std::string out;                    // JSONL path; empty for none
    std::string defects_dir;            // replay bundles; empty for none
    unsigned workers = 0;               // 0: hardware concurrency
    unsigned oracle_every = 10;         // cross-check one instance in this many (0: never)
};

enum class OracleCheck { skipped, agree, disagree, unknown };
const char* to_string(OracleCheck c);

struct ResultRecord {
    std::uint64_t id = 0;
    std::uint64_t seed = 0;
    std::string generator;
    int n = 0;
    std::vector<Edge> faults;
    PreconditionReport preconditions;
    std::optional<ConstructStatus> status;  // unset when the preconditions fail
    CaseTrace trace;
    std::vector<Violation> violations;
    OracleCheck oracle = OracleCheck::skipped;
    double wall_ms = 0;

    /// Preconditions hold and no verified cycle came back.
    bool theorem_violation() const;
    bool defect() const;
};

struct SweepSummary {
    std::uint64_t instances = 0;
    std::uint64_t precondition_failed = 0;
    std::uint64_t constructed = 0;
    std::uint64_t fallback = 0;
    std::uint64_t unknown = 0;
    std::uint64_t violations = 0;
    std::uint64_t oracle_checked = 0;
    std::uint64_t oracle_disagree = 0;
    std::uint64_t oracle_unknown = 0;
    std::map<std::string, std::uint64_t> labels;  // case labels at every level
    double wall_s = 0;

    void add(const ResultRecord& r);
    /// 0 clean, 1 theorem violation, 3 unknown outcomes at n <= 3.
    int exit_code(int n) const;
};

/// Exhaustive mode needs n = 2 or max_faults <= 2.
void validate(const SweepConfig& cfg);

/// Number of instances exhaustive mode enumerates.
std::uint64_t exhaustive_count(const SweepConfig& cfg);

/// Fault set of instance `id`: the id-th subset in exhaustive mode (by size,
/// then lexicographic), or the generator's output under instance_rng(seed, id).
std::vector<Edge> instance_faults(const SweepConfig& cfg, std::uint64_t id);

/// Runs one instance: preconditions, construction, verification and, when
/// `cross_check`, agreement with the exact oracle.
ResultRecord run_instance(const SweepConfig& cfg, std::uint64_t id, const std::vector<Edge>& faults, bool cross_check);

/// Runs the sweep on a worker pool. `sink` sees every record from a single
/// thread, in completion order. Writes cfg.out (records, then the summary as
/// the last line) and a replay bundle per defect into cfg.defects_dir.
SweepSummary sweep(const SweepConfig& cfg, const std::function<void(const ResultRecord&)>& sink = {});

std::string record_to_json(const ResultRecord& r);
std::string summary_to_json(const SweepConfig& cfg, const SweepSummary& s);

/// Self-contained reproduction of one instance: config, id, fault list, trace.
std::string replay_bundle(const SweepConfig& cfg, const ResultRecord& r);

struct ReplayOutcome {
    bool faults_match = false;  // regenerated faults equal the stored ones
    ResultRecord record;
};

/// Regenerates the bundle's instance from (n, generator, seed, id), checks it
/// against the stored fault list and reruns it.
ReplayOutcome replay(const std::string& bundle_text);

}  // namespace bhc
