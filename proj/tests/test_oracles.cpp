#include <bhc/oracles.hpp>
#include <bhc/verifier.hpp>
#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace bhc;
using ref::label;

namespace {

bool valid_path(const Topology& t, const FaultSet& f, const std::vector<Vertex>& p, std::size_t expected) {
    if (p.size() != expected) return false;
    std::set<Vertex> seen(p.begin(), p.end());
    if (seen.size() != p.size()) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!t.adjacent(p[i], p[i + 1]) || f.contains(p[i], p[i + 1])) return false;
    return true;
}

}  // namespace

TEST(Oracles, EmptyFaultsGiveCycles) {
    for (int n = 1; n <= 3; ++n) {
        const auto& t = topology_for(n);
        const auto f = FaultSet::empty(t);
        const auto r = ham_cycle(t, f);
        ASSERT_TRUE(r.found());
        EXPECT_TRUE(verify_cycle(t, f, *r.value).ok());
    }
}

TEST(Oracles, FourCyclePath) {
    const auto& t = topology_for(1);
    const auto r = ham_path_laceable(t, FaultSet::empty(t), 0, 1);
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.value->order, (std::vector<Vertex>{0, 3, 2, 1}));
}

TEST(Oracles, FourCycleMinusVertex) {
    const auto& t = topology_for(1);
    const auto r = ham_path_minus_vertex(t, 0, 1, 3);
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.value->order, (std::vector<Vertex>{1, 2, 3}));
}

TEST(Oracles, FourCycleThroughEdge) {
    const auto& t = topology_for(1);
    const auto r = ham_cycle_through_edge(t, FaultSet::empty(t), Edge(0, 1));
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.value->order.size(), 4u);
}

TEST(Oracles, ParityAndArgumentErrors) {
    const auto& t = topology_for(2);
    const auto f = FaultSet::empty(t);
    EXPECT_THROW(ham_path_laceable(t, f, 0, 2), std::invalid_argument);
    EXPECT_THROW(two_disjoint_paths(t, f, 0, 1, 0, 3), std::invalid_argument);
    EXPECT_THROW(ham_path_minus_vertex(t, 0, 2, 4), std::invalid_argument);
    const FaultSet one(t, std::vector<Edge>{{0, 1}});
    EXPECT_THROW(ham_cycle_through_edge(t, one, Edge(0, 1)), std::invalid_argument);
}

TEST(Oracles, F4SetIsNotHamiltonian) {
    const auto& t = topology_for(2);
    const std::vector<Edge> faults{{label({0, 0}), label({1, 1})}, {label({0, 0}), label({3, 1})},
                                   {label({2, 0}), label({1, 1})}, {label({2, 0}), label({3, 1})}};
    const auto r = ham_cycle(t, FaultSet(t, faults));
    EXPECT_EQ(r.status, SearchStatus::absent);
    EXPECT_FALSE(ref::hamiltonian(ref::surviving(2, faults)));
}

TEST(Oracles, CycleAgreesWithReferenceSearchAtN2) {
    const auto& t = topology_for(2);
    std::mt19937_64 rng(5);
    auto all = t.edges();
    for (int round = 0; round < 300; ++round) {
        std::shuffle(all.begin(), all.end(), rng);
        const std::vector<Edge> faults(all.begin(), all.begin() + round % 9);
        const FaultSet f(t, faults);
        const auto r = ham_cycle(t, f);
        ASSERT_NE(r.status, SearchStatus::unknown);
        ASSERT_EQ(r.found(), ref::hamiltonian(ref::surviving(2, faults))) << round;
        if (r.found()) {
            ASSERT_TRUE(verify_cycle(t, f, *r.value).ok());
        }
    }
}

TEST(Oracles, DisjointPathsCoverEverything) {
    const auto& t = topology_for(3);
    const auto f = FaultSet::empty(t);
    const auto r = two_disjoint_paths(t, f, label({0, 0, 0}), label({1, 0, 0}), label({2, 1, 0}), label({3, 2, 1}));
    ASSERT_TRUE(r.found());
    std::set<Vertex> all(r.value->first.order.begin(), r.value->first.order.end());
    all.insert(r.value->second.order.begin(), r.value->second.order.end());
    EXPECT_EQ(all.size(), t.vertex_count());
    EXPECT_EQ(r.value->first.front(), label({0, 0, 0}));
    EXPECT_EQ(r.value->second.back(), label({3, 2, 1}));
    EXPECT_TRUE(valid_path(t, f, r.value->first.order, r.value->first.order.size()));
    EXPECT_TRUE(valid_path(t, f, r.value->second.order, r.value->second.order.size()));
}

TEST(Oracles, LaceablePathsInBH3) {
    const auto& t = topology_for(3);
    std::mt19937_64 rng(9);
    auto all = t.edges();
    for (int round = 0; round < 30; ++round) {
        std::shuffle(all.begin(), all.end(), rng);
        const FaultSet f(t, std::vector<Edge>(all.begin(), all.begin() + 4));
        const Vertex s = static_cast<Vertex>(rng() % 64) & ~Vertex{1};
        const Vertex e = static_cast<Vertex>(rng() % 64) | Vertex{1};
        const auto r = ham_path_laceable(t, f, s, e);
        ASSERT_TRUE(r.found()) << "|F| = 4 is within 2n-2";
        EXPECT_TRUE(valid_path(t, f, r.value->order, t.vertex_count()));
        EXPECT_EQ(r.value->front(), s);
        EXPECT_EQ(r.value->back(), e);
    }
}

TEST(Oracles, BudgetExhaustionIsUnknown) {
    const auto& t = topology_for(3);
    const auto r = ham_cycle(t, FaultSet::empty(t), SearchBudget{3});
    EXPECT_EQ(r.status, SearchStatus::unknown);
}

TEST(Oracles, BeyondCitedBoundIsFlagged) {
    const auto& t = topology_for(2);
    const FaultSet f(t, std::vector<Edge>{{label({0, 0}), label({1, 0})}, {label({2, 1}), label({1, 1})}, {label({3, 3}), label({0, 3})}});
    const auto r = ham_path_laceable(t, f, label({0, 0}), label({1, 0}));
    EXPECT_TRUE(r.beyond_cited_bound);
}
