#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

using namespace snp;

namespace {

struct Fixture {
    SNPSystem sys;
    ConfigGraph graph;
};

Fixture load(const std::string& name, ExploreLimits limits = {10000, 0, 0}) {
    Fixture f;
    f.sys = testutil::load_fixture(name);
    f.graph = explore(f.sys, limits);
    return f;
}

}  // namespace

TEST_CASE("bounded: generator is bounded with s = 2") {
    Fixture f = load("example1.snp");
    Verdict v = check_bounded(f.graph);
    CHECK(v.answer == Answer::Yes);
    CHECK(v.detail["bound"] == 2);
}

TEST_CASE("bounded: one-shot neuron is 1-bounded") {
    SNPSystem sys;
    sys.name = "single";
    sys.neuron_count = 1;
    sys.neuron_names = {"n1"};
    sys.initial = {1};
    sys.rules = {{1, 1, RuleKind::Spiking, singleton_set(1), 1, 1, "r1", ""}};
    sys.out_neuron = 1;
    REQUIRE(validate(sys).ok());
    ConfigGraph g = explore(sys, {100, 0, 0});
    Verdict v = check_bounded(g);
    CHECK(v.answer == Answer::Yes);
    CHECK(v.detail["bound"] == 1);
}

TEST_CASE("bounded: truncated growth exploration is inconclusive") {
    Fixture f = load("growth.snp", {100, 0, 0});
    CHECK_FALSE(f.graph.complete());
    CHECK(check_bounded(f.graph).answer == Answer::Inconclusive);
}

TEST_CASE("safe") {
    Fixture gen = load("example1.snp");
    Verdict v = check_safe(gen.graph);
    CHECK(v.answer == Answer::No);  // (2,1,1) already holds two spikes

    Fixture ring = load("ring.snp");
    CHECK(check_safe(ring.graph).answer == Answer::Yes);

    // zero-spike system with nothing applicable
    SNPSystem sys = ring.sys;
    sys.initial = {0, 0};
    ConfigGraph g = explore(sys, {100, 0, 0});
    CHECK(check_safe(g).answer == Answer::Yes);

    // a truncated graph already showing 2 spikes refutes safety
    Fixture growth = load("growth.snp", {50, 0, 0});
    CHECK(check_safe(growth.graph).answer == Answer::No);
}

TEST_CASE("deadlock-free") {
    Fixture gen = load("example1.snp");
    Verdict v = check_deadlock_free(gen.graph);
    CHECK(v.answer == Answer::No);
    CHECK(v.witness.find("(1,0,0)") != std::string::npos);

    Fixture ring = load("ring.snp");
    CHECK(check_deadlock_free(ring.graph).answer == Answer::Yes);

    Fixture growth = load("growth.snp", {100, 0, 0});
    CHECK(check_deadlock_free(growth.graph).answer == Answer::Inconclusive);
}

TEST_CASE("quasi-live") {
    Fixture gen = load("example1.snp");
    Verdict v = check_quasi_live(gen.sys, gen.graph);
    CHECK(v.answer == Answer::Yes);  // all five rules appear on some edge

    // guard {3} unreachable from a single spike
    SNPSystem sys;
    sys.name = "stuck";
    sys.neuron_count = 1;
    sys.neuron_names = {"n1"};
    sys.initial = {1};
    sys.rules = {{1, 1, RuleKind::Spiking, singleton_set(3), 3, 1, "r1", "a^3"}};
    sys.out_neuron = 1;
    REQUIRE(validate(sys).ok());
    ConfigGraph g = explore(sys, {100, 0, 0});
    v = check_quasi_live(sys, g);
    CHECK(v.answer == Answer::No);
    CHECK(v.detail["rules"]["r1"] == "No");

    // rules fired on a truncated prefix are definitely quasi-live
    Fixture growth = load("growth.snp", {100, 0, 0});
    v = check_quasi_live(growth.sys, growth.graph);
    CHECK(v.answer == Answer::Yes);
}

TEST_CASE("live") {
    Fixture gen = load("example1.snp");
    Verdict v = check_live(gen.sys, gen.graph);
    CHECK(v.answer == Answer::No);  // nothing fires from the (1,0,0) sink

    Fixture ring = load("ring.snp");
    CHECK(check_live(ring.sys, ring.graph).answer == Answer::Yes);

    // single vertex, no edges, one rule
    SNPSystem sys = ring.sys;
    sys.initial = {0, 0};
    ConfigGraph g = explore(sys, {100, 0, 0});
    CHECK(check_live(sys, g).answer == Answer::No);

    Fixture growth = load("growth.snp", {100, 0, 0});
    CHECK(check_live(growth.sys, growth.graph).answer == Answer::Inconclusive);
}

TEST_CASE("reversible") {
    Fixture gen = load("example1.snp");
    Verdict v = check_reversible(gen.graph);
    CHECK(v.answer == Answer::No);

    Fixture ring = load("ring.snp");
    CHECK(check_reversible(ring.graph).answer == Answer::Yes);

    // one vertex, zero edges: trivially reversible
    SNPSystem sys = ring.sys;
    sys.initial = {0, 0};
    ConfigGraph g = explore(sys, {100, 0, 0});
    CHECK(check_reversible(g).answer == Answer::Yes);
}

TEST_CASE("verdicts match the brute-force oracles on complete fixtures") {
    for (const char* name : {"example1.snp", "ring.snp", "partial.snp"}) {
        Fixture f = load(name);
        REQUIRE(f.graph.complete());
        CHECK((check_deadlock_free(f.graph).answer == Answer::Yes) ==
              testutil::oracle_deadlock_free(f.graph));
        CHECK((check_reversible(f.graph).answer == Answer::Yes) ==
              testutil::oracle_strongly_connected(f.graph));
        bool all_live = true;
        for (const Rule& r : f.sys.rules)
            if (!testutil::oracle_rule_live(f.graph, r.id)) all_live = false;
        CHECK((check_live(f.sys, f.graph).answer == Answer::Yes) == all_live);
    }
}

TEST_CASE("cross-property implications hold on every fixture") {
    for (const char* name : {"example1.snp", "ring.snp", "partial.snp", "growth.snp"}) {
        Fixture f = load(name, {200, 0, 0});
        Verdict live = check_live(f.sys, f.graph);
        Verdict quasi = check_quasi_live(f.sys, f.graph);
        if (f.graph.complete() && live.answer == Answer::Yes)
            CHECK(quasi.answer == Answer::Yes);
        Verdict rev = check_reversible(f.graph);
        if (f.graph.complete() && rev.answer == Answer::Yes && !f.graph.edges.empty())
            CHECK(check_deadlock_free(f.graph).answer == Answer::Yes);
    }
}
