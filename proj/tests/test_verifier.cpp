#include <bhc/constructor.hpp>
#include <bhc/generators.hpp>
#include <bhc/verifier.hpp>
#include <gtest/gtest.h>

using namespace bhc;

namespace {

struct Sample {
    FaultSet f;
    ConstructResult r;
};

Sample sample(int n, Generator g, std::uint64_t seed, const std::string& wanted_prefix, GeneratorParams p = {}) {
    const auto& t = topology_for(n);
    for (std::uint64_t id = 0; id < 5000; ++id) {
        auto rng = instance_rng(seed, id);
        FaultSet f(t, generate_faults(g, t, 5 * n - 7, rng, p));
        if (!check_preconditions(t, f).ok()) continue;
        auto r = construct(t, f);
        if (r.status == ConstructStatus::constructed && r.trace.levels[0].case_label.starts_with(wanted_prefix))
            return {f, std::move(r)};
    }
    throw std::runtime_error("no sample for " + wanted_prefix);
}

}  // namespace

TEST(VerifyCycle, AcceptsConstructorOutput) {
    const auto s = sample(3, Generator::uniform, 1, "L8/");
    EXPECT_TRUE(verify_cycle(topology_for(3), s.f, *s.r.cycle).ok());
}

TEST(VerifyCycle, RepeatedVertex) {
    const auto& t = topology_for(3);
    auto s = sample(3, Generator::uniform, 2, "L8/");
    auto c = *s.r.cycle;
    c.order[10] = c.order[20];
    const auto v = verify_cycle(t, s.f, c);
    ASSERT_TRUE(v.has(ViolationKind::repeated_vertex));
    EXPECT_TRUE(v.has(ViolationKind::missing_vertex));
    for (const auto& x : v.violations)
        if (x.kind == ViolationKind::repeated_vertex) EXPECT_EQ(x.position, 20);
}

TEST(VerifyCycle, FaultyEdge) {
    const auto& t = topology_for(3);
    auto s = sample(3, Generator::uniform, 3, "L8/");
    const auto& c = *s.r.cycle;
    const FaultSet with_cut = s.f.with(t, Edge(c.order[5], c.order[6]));
    const auto v = verify_cycle(t, with_cut, c);
    ASSERT_EQ(v.violations.size(), 1u);
    EXPECT_EQ(v.violations[0].kind, ViolationKind::faulty_edge);
    EXPECT_EQ(v.violations[0].position, 5);
}

TEST(VerifyCycle, NonAdjacentAndLength) {
    const auto& t = topology_for(1);
    const auto v = verify_cycle(t, FaultSet::empty(t), HamCycle{{0, 2, 1, 3}});
    EXPECT_TRUE(v.has(ViolationKind::not_adjacent));
    EXPECT_TRUE(verify_cycle(t, FaultSet::empty(t), HamCycle{{0, 1, 2}}).has(ViolationKind::wrong_length));
}

TEST(VerifyTrace, GenuineTracePasses) {
    const auto s = sample(4, Generator::star, 4, "T/2.1");
    EXPECT_TRUE(verify_trace(s.r.trace).ok());
}

TEST(VerifyTrace, Case111WithWrongF0IsFlagged) {
    auto s = sample(4, Generator::uniform, 5, "T/1.1.2");
    auto trace = s.r.trace;
    trace.levels[0].case_label = "T/1.1.1";
    trace.levels[0].dictated = "T/1.1.1";
    const auto v = verify_trace(trace);
    EXPECT_TRUE(v.has(ViolationKind::guard_failed));
    EXPECT_TRUE(v.has(ViolationKind::dictated_mismatch));
}

TEST(VerifyTrace, CrossWitnessInFaultSetIsFlagged) {
    auto s = sample(3, Generator::uniform, 6, "L8/1.1");
    auto trace = s.r.trace;
    auto& level = trace.levels[0];
    // Mark a used junction as faulty; the recorded counts go stale too.
    const Edge junction = level.witnesses.cross_edges.front();
    level.faults.push_back(junction);
    std::sort(level.faults.begin(), level.faults.end());
    const auto v = verify_trace(trace);
    EXPECT_TRUE(v.has(ViolationKind::cross_edge_invalid));
    EXPECT_TRUE(v.has(ViolationKind::count_mismatch));
}

TEST(VerifyTrace, NonCrossWitnessIsFlagged) {
    auto s = sample(3, Generator::uniform, 7, "L8/1.1");
    auto trace = s.r.trace;
    const auto& t = topology_for(3);
    const Vertex a = trace.levels[0].witnesses.cross_edges[0].u;
    const int other = (trace.levels[0].split_dim + 1) % 3;
    trace.levels[0].witnesses.cross_edges[0] = Edge(a, t.neighbors_in_dimension(a, other)[0]);
    EXPECT_TRUE(verify_trace(trace).has(ViolationKind::cross_edge_invalid));
}

TEST(VerifyTrace, PivotListMustMatch) {
    auto s = sample(3, Generator::star, 8, "L8/2.2");
    auto trace = s.r.trace;
    trace.levels[0].witnesses.pivots.clear();
    EXPECT_TRUE(verify_trace(trace).has(ViolationKind::pivot_mismatch));
}

TEST(VerifyTrace, REdgeWitnessMustBeREdge) {
    auto s = sample(3, Generator::subcube_heavy, 9, "L8/1.2-nonr");
    auto trace = s.r.trace;
    ASSERT_FALSE(trace.levels[0].witnesses.non_r_edges.empty());
    trace.levels[0].witnesses.r_edges.push_back(trace.levels[0].witnesses.non_r_edges[0]);
    EXPECT_TRUE(verify_trace(trace).has(ViolationKind::r_edge_invalid));
}
