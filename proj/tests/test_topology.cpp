#include <bhc/topology.hpp>
#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace bhc;
using ref::label;

namespace {

std::set<Vertex> neighbor_set(const Topology& t, Vertex v) {
    auto nb = t.neighbors(v);
    return {nb.begin(), nb.end()};
}

}  // namespace

TEST(Topology, NeighborsOfOrigin) {
    const auto& t = topology_for(2);
    EXPECT_EQ(neighbor_set(t, label({0, 0})), (std::set<Vertex>{label({1, 0}), label({3, 0}), label({1, 1}), label({3, 1})}));
}

TEST(Topology, NeighborsOfOddVertexShiftDown) {
    const auto& t = topology_for(2);
    EXPECT_EQ(neighbor_set(t, label({1, 0})), (std::set<Vertex>{label({2, 0}), label({0, 0}), label({2, 3}), label({0, 3})}));
}

TEST(Topology, MatchesReferenceFormulas) {
    for (int n = 1; n <= 4; ++n) {
        const auto& t = topology_for(n);
        for (Vertex v = 0; v < t.vertex_count(); ++v) ASSERT_EQ(neighbor_set(t, v), ref::neighbors(v, n)) << "n=" << n << " v=" << v;
    }
}

TEST(Topology, RecursiveBuildEqualsDirect) {
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(Topology::build_direct(n).edges(), Topology::build_recursive(n).edges()) << n;
}

TEST(Topology, OneDimensionalIsFourCycle) {
    const auto t = Topology::build_direct(1);
    EXPECT_EQ(t.edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
}

TEST(Topology, RegularBipartiteTwoPerDimension) {
    for (int n = 1; n <= 4; ++n) {
        const auto& t = topology_for(n);
        EXPECT_EQ(t.edge_count(), t.edges().size());
        for (Vertex v = 0; v < t.vertex_count(); ++v) {
            EXPECT_EQ(neighbor_set(t, v).size(), static_cast<std::size_t>(2 * n));
            for (int i = 0; i < n; ++i) {
                const auto pair = t.neighbors_in_dimension(v, i);
                EXPECT_NE(pair[0], pair[1]);
                for (Vertex w : pair) {
                    EXPECT_NE(partite_class(v), partite_class(w));
                    EXPECT_EQ(t.edge_dimension(v, w), i);
                }
            }
        }
    }
}

TEST(Topology, BackupVertexSharesNeighborhood) {
    const auto& t2 = topology_for(2);
    EXPECT_EQ(Topology::backup_vertex(label({0, 0})), label({2, 0}));
    for (int n = 1; n <= 4; ++n) {
        const auto& t = topology_for(n);
        for (Vertex v = 0; v < t.vertex_count(); ++v) {
            const Vertex b = Topology::backup_vertex(v);
            EXPECT_NE(b, v);
            EXPECT_EQ(neighbor_set(t, v), neighbor_set(t, b));
        }
    }
    EXPECT_EQ(neighbor_set(t2, label({0, 0})), neighbor_set(t2, label({2, 0})));
}

TEST(Topology, DecompositionPartsAreSubcubes) {
    for (int n = 2; n <= 4; ++n) {
        const auto& t = topology_for(n);
        const auto& sub = topology_for(n - 1);
        for (int i = 0; i < n; ++i) {
            const auto d = decompose(t, i);
            std::size_t covered = 0;
            for (int j = 0; j < 4; ++j) {
                const auto& part = d.parts[static_cast<std::size_t>(j)];
                covered += part.size();
                ASSERT_EQ(part.size(), sub.vertex_count());
                std::set<Edge> inner;
                for (Vertex v : part) {
                    EXPECT_EQ(d.to_global(j, d.to_local(v)), v);
                    for (Vertex w : t.neighbors(v))
                        if (t.edge_dimension(v, w) != i) {
                            EXPECT_EQ(d.part(w), j);
                            inner.insert(Edge(d.to_local(v), d.to_local(w)));
                        }
                }
                const auto expected = sub.edges();
                EXPECT_EQ(std::vector<Edge>(inner.begin(), inner.end()), expected) << "n=" << n << " i=" << i << " j=" << j;
            }
            EXPECT_EQ(covered, t.vertex_count());
            EXPECT_EQ(d.cross_edges.size(), t.vertex_count());
            for (const Edge& e : d.cross_edges) {
                EXPECT_EQ(t.edge_dimension(e), i);
                // Even endpoints step to the next part, odd ones to the previous.
                const Vertex even = partite_class(e.u) == 0 ? e.u : e.v;
                EXPECT_EQ(d.part(e.other(even)), (d.part(even) + 1) % 4);
            }
        }
    }
}

TEST(Topology, DigitSplitDropsDigit) {
    const auto& t = topology_for(3);
    const auto d = decompose(t, 2);
    const Vertex v = label({3, 1, 2});
    EXPECT_EQ(d.part(v), 2);
    EXPECT_EQ(d.to_local(v), label({3, 1}));
}
