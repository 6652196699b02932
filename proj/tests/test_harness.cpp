#include <bhc/constructor.hpp>
#include <bhc/generators.hpp>
#include <bhc/harness.hpp>
#include <bhc/io.hpp>
#include <bhc/verifier.hpp>
#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "support.hpp"

using namespace bhc;
using ref::label;

namespace {

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("bhc-test-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST(Generators, NamesRoundTrip) {
    for (Generator g : kAllGenerators) EXPECT_EQ(parse_generator(to_string(g)), g);
    EXPECT_FALSE(parse_generator("nope").has_value());
}

TEST(Generators, SeedReplayIsIdentical) {
    for (Generator g : kAllGenerators) {
        for (std::uint64_t id = 0; id < 20; ++id) {
            auto a = instance_rng(42, id), b = instance_rng(42, id);
            const auto& t = topology_for(3);
            EXPECT_EQ(faults_to_json(t, generate_faults(g, t, 8, a)), faults_to_json(t, generate_faults(g, t, 8, b)));
        }
    }
}

TEST(Generators, ExactCountsAndDistinctEdges) {
    for (int n : {2, 3, 4}) {
        const auto& t = topology_for(n);
        for (Generator g : kAllGenerators) {
            for (std::uint64_t id = 0; id < 30; ++id) {
                auto rng = instance_rng(7, id);
                const auto faults = generate_faults(g, t, 5 * n - 7, rng);
                EXPECT_EQ(faults.size(), static_cast<std::size_t>(5 * n - 7));
                EXPECT_TRUE(std::is_sorted(faults.begin(), faults.end()));
                EXPECT_EQ(std::adjacent_find(faults.begin(), faults.end()), faults.end());
                for (const Edge& e : faults) EXPECT_TRUE(t.is_edge(e));
            }
        }
    }
}

TEST(Generators, F4ForgeAtN2) {
    const auto& t = topology_for(2);
    const std::vector<Edge> expected{{label({0, 0}), label({3, 0})}, {label({0, 0}), label({3, 1})},
                                     {label({2, 0}), label({3, 0})}, {label({2, 0}), label({3, 1})}};
    for (std::uint64_t seed : {1, 2, 3}) {
        auto rng = instance_rng(seed, 0);
        auto faults = generate_faults(Generator::f4_forge, t, 4, rng);
        std::vector<Edge> sorted = expected;
        std::sort(sorted.begin(), sorted.end());
        EXPECT_EQ(faults, sorted);
    }
}

TEST(Generators, StarWithFullHubIsolatesInSubcube) {
    const auto& t = topology_for(3);
    GeneratorParams p;
    p.hubs = 1;
    p.load = 2 * 3 - 2;
    for (std::uint64_t id = 0; id < 20; ++id) {
        p.dimension = static_cast<int>(id % 3);
        auto rng = instance_rng(11, id);
        const FaultSet f(t, generate_faults(Generator::star, t, 4, rng, p));
        std::size_t isolated = 0;
        const auto d = decompose(t, *p.dimension);
        for (int j = 0; j < 4; ++j) isolated += isolated_vertices(t, f, d, j).size();
        EXPECT_EQ(isolated, 1u);
    }
}

TEST(Generators, DimHeavyLoadsDimension) {
    const auto& t = topology_for(4);
    GeneratorParams p;
    p.load = 4;
    for (int i = 0; i < 4; ++i) {
        p.dimension = i;
        auto rng = instance_rng(3, static_cast<std::uint64_t>(i));
        const FaultSet f(t, generate_faults(Generator::dim_heavy, t, 13, rng, p));
        EXPECT_GE(f.count_in_dimension(i), 4);
    }
}

TEST(Generators, SubcubeHeavyHitsThresholds) {
    const auto& t = topology_for(4);
    GeneratorParams p;
    p.dimension = 3;
    for (int load : {5 * 4 - 11, 5 * 4 - 12}) {
        p.load = load;
        auto rng = instance_rng(5, static_cast<std::uint64_t>(load));
        const FaultSet f(t, generate_faults(Generator::subcube_heavy, t, 30, rng, p));
        const auto part = partition(t, f, 3);
        std::size_t most = 0;
        for (const auto& in : part.inside) most = std::max(most, in.size());
        EXPECT_GE(most, static_cast<std::size_t>(load));
    }
}

TEST(Sweep, ExhaustiveCountAtN2) {
    SweepConfig cfg;
    cfg.n = 2;
    cfg.mode = SweepMode::exhaustive;
    cfg.max_faults = 3;
    EXPECT_EQ(exhaustive_count(cfg), 1u + 32u + 496u + 4960u);
    EXPECT_TRUE(instance_faults(cfg, 0).empty());
    EXPECT_EQ(instance_faults(cfg, 1).size(), 1u);
    EXPECT_EQ(instance_faults(cfg, 33).size(), 2u);
    EXPECT_EQ(instance_faults(cfg, 5488).size(), 3u);
    EXPECT_THROW(instance_faults(cfg, 5489 + 100000), std::out_of_range);
    cfg.n = 3;
    EXPECT_THROW(validate(cfg), std::invalid_argument);
}

TEST(Sweep, JsonlRecordsThenSummary) {
    const auto dir = scratch("jsonl");
    SweepConfig cfg;
    cfg.n = 3;
    cfg.max_faults = 8;
    cfg.samples = 40;
    cfg.seed = 77;
    cfg.generator = Generator::star;
    cfg.out = (dir / "out.jsonl").string();
    cfg.workers = 2;
    const auto s = sweep(cfg);
    EXPECT_EQ(s.instances - s.precondition_failed, 40u);
    EXPECT_EQ(s.violations, 0u);
    EXPECT_EQ(s.exit_code(3), 0);
    const auto rows = lines(read_file(cfg.out));
    ASSERT_EQ(rows.size(), s.instances + 1);
    EXPECT_NE(rows.back().find("\"type\":\"summary\""), std::string::npos);
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        EXPECT_NE(rows[i].find("\"type\":\"instance\""), std::string::npos);
        EXPECT_NE(rows[i].find("\"seed\":77"), std::string::npos);
    }
}

TEST(Sweep, SameSeedSameSummary) {
    SweepConfig cfg;
    cfg.n = 3;
    cfg.max_faults = 8;
    cfg.samples = 30;
    cfg.seed = 5;
    cfg.workers = 3;
    const auto a = sweep(cfg);
    cfg.workers = 1;
    const auto b = sweep(cfg);
    EXPECT_EQ(a.labels, b.labels);
    EXPECT_EQ(a.instances, b.instances);
    EXPECT_EQ(a.oracle_checked, b.oracle_checked);
}

TEST(Replay, BundleReproducesInstance) {
    SweepConfig cfg;
    cfg.n = 3;
    cfg.max_faults = 8;
    cfg.generator = Generator::subcube_heavy;
    cfg.seed = 12;
    const std::uint64_t id = 3;
    const auto faults = instance_faults(cfg, id);
    const auto record = run_instance(cfg, id, faults, false);
    const auto bundle = replay_bundle(cfg, record);
    const auto out = replay(bundle);
    EXPECT_TRUE(out.faults_match);
    EXPECT_EQ(out.record.faults, record.faults);
    EXPECT_EQ(out.record.trace.case_path(), record.trace.case_path());
}

TEST(Replay, TamperedBundleIsDetected) {
    SweepConfig cfg;
    cfg.n = 3;
    cfg.max_faults = 8;
    cfg.seed = 12;
    auto record = run_instance(cfg, 0, instance_faults(cfg, 0), false);
    record.faults.pop_back();
    EXPECT_FALSE(replay(replay_bundle(cfg, record)).faults_match);
}

TEST(Export, FourCycleDot) {
    const auto dot = topology_to_dot(topology_for(1));
    std::size_t nodes = 0, edges = 0;
    for (const auto& l : lines(dot)) {
        if (l.find(" -- ") != std::string::npos)
            ++edges;
        else if (l.find("\"(") != std::string::npos)
            ++nodes;
    }
    EXPECT_EQ(nodes, 4u);
    EXPECT_EQ(edges, 4u);
    EXPECT_EQ(dot, topology_to_dot(topology_for(1)));
}

TEST(Export, TopologyJsonListsDigitsAndDimensions) {
    const auto j = topology_to_json(topology_for(2));
    EXPECT_NE(j.find("\"dimension\":1"), std::string::npos);
    EXPECT_NE(j.find("[[0,0],[1,0]]"), std::string::npos);
}

TEST(Export, FaultFileRoundTripAndErrors) {
    const auto& t = topology_for(2);
    const std::vector<Edge> faults{{label({0, 0}), label({1, 1})}, {label({2, 3}), label({3, 3})}};
    EXPECT_EQ(parse_faults(t, faults_to_json(t, faults)), faults);
    try {
        parse_faults(t, "[[[0,0],[1,0]],[[0,0],[2,0]]]");
        FAIL() << "accepted a non-edge";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 1);
    }
    EXPECT_THROW(parse_faults(t, "[[[0,0,0],[1,0,0]]]"), ParseError);
    EXPECT_THROW(parse_faults(t, "not json"), ParseError);
}

TEST(Export, CycleAndTraceRoundTrip) {
    const auto& t = topology_for(3);
    SweepConfig cfg;
    cfg.n = 3;
    cfg.max_faults = 8;
    cfg.generator = Generator::star;
    cfg.seed = 21;
    for (std::uint64_t id = 0; id < 50; ++id) {
        const FaultSet f(t, instance_faults(cfg, id));
        if (!check_preconditions(t, f).ok()) continue;
        const auto r = construct(t, f);
        ASSERT_TRUE(r.cycle);
        const auto c = parse_cycle(t, cycle_to_json(t, *r.cycle));
        EXPECT_EQ(c.order, r.cycle->order);
        EXPECT_TRUE(verify_cycle(t, f, c).ok());
        const auto tr = parse_trace(trace_to_json(t, r.trace));
        EXPECT_EQ(tr.case_path(), r.trace.case_path());
        EXPECT_TRUE(verify_trace(tr).ok());
        EXPECT_EQ(trace_to_json(t, tr), trace_to_json(t, r.trace));
    }
}
