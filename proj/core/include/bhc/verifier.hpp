#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bhc/constructor.hpp"
#include "bhc/fault_model.hpp"
#include "bhc/oracles.hpp"
#include "bhc/topology.hpp"

namespace bhc {

enum class ViolationKind {
    wrong_length,
    foreign_vertex,
    repeated_vertex,
    missing_vertex,
    not_adjacent,
    faulty_edge,
    malformed_level,
    count_mismatch,
    dictated_mismatch,
    guard_failed,
    cross_edge_invalid,
    r_edge_invalid,
    non_r_edge_invalid,
    pivot_mismatch,
    isolated_mismatch,
    f4_witness_invalid,
    redecompose_mismatch,
    depth_mismatch,
};

const char* to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    long level = -1;     // index into CaseTrace::levels, -1 for the cycle itself
    long position = -1;  // cycle position or witness index, -1 when not applicable
    std::string detail;
};

struct VerifyReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    bool has(ViolationKind k) const;
};

/// Checks that `c` visits every vertex of BH_n once and uses only nonfaulty edges.
VerifyReport verify_cycle(const Topology& t, const FaultSet& f, const HamCycle& c);

/// Re-derives every recorded level from its own fault set: counts, the
/// dictated case, the guards of the produced case and each named witness.
VerifyReport verify_trace(const CaseTrace& trace);

/// Both of the above for a constructed result.
VerifyReport verify_result(const Topology& t, const FaultSet& f, const ConstructResult& r);

}  // namespace bhc
