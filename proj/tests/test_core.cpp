#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

using namespace snp;

namespace {

SNPSystem example1() { return testutil::load_fixture("example1.snp"); }

SNPSystem ring() { return testutil::load_fixture("ring.snp"); }

SNPSystem two_neurons_no_synapse() {
    SNPSystem sys;
    sys.name = "lonely";
    sys.neuron_count = 2;
    sys.neuron_names = {"n1", "n2"};
    sys.initial = {1, 0};
    Rule r;
    r.id = 1;
    r.owner = 1;
    r.kind = RuleKind::Spiking;
    r.guard = singleton_set(1);
    r.consumed = 1;
    r.produced = 1;
    r.name = "r1";
    sys.rules.push_back(r);
    sys.out_neuron = 1;
    return sys;
}

}  // namespace

TEST_CASE("validate accepts the generator fixture") {
    SNPSystem sys = example1();
    ValidationReport report = validate(sys);
    CHECK(report.ok());
    CHECK(report.warnings.empty());
}

TEST_CASE("validate rejects a forgetting amount inside a spiking guard") {
    SNPSystem sys;
    sys.name = "bad";
    sys.neuron_count = 1;
    sys.neuron_names = {"n1"};
    sys.initial = {1};
    Rule spike{1, 1, RuleKind::Spiking, singleton_set(1), 1, 1, "r1", ""};
    Rule forget{2, 1, RuleKind::Forgetting, singleton_set(1), 1, 0, "r2", ""};
    sys.rules = {spike, forget};
    ValidationReport report = validate(sys);
    CHECK_FALSE(report.ok());
}

TEST_CASE("validate rejects c < p") {
    SNPSystem sys;
    sys.name = "bad";
    sys.neuron_count = 1;
    sys.neuron_names = {"n1"};
    sys.initial = {2};
    Rule r{1, 1, RuleKind::Spiking, singleton_set(2), 1, 3, "r1", "a^2"};
    sys.rules = {r};
    CHECK_FALSE(validate(sys).ok());
}

TEST_CASE("validate rejects a guard admitting fewer spikes than consumed") {
    SNPSystem sys;
    sys.name = "bad";
    sys.neuron_count = 1;
    sys.neuron_names = {"n1"};
    sys.initial = {1};
    Rule r{1, 1, RuleKind::Spiking, compile(*parse_regex("a+")), 2, 1, "r1", "a+"};
    sys.rules = {r};
    CHECK_FALSE(validate(sys).ok());
}

TEST_CASE("validate warns on unsatisfiable guards") {
    SNPSystem sys = two_neurons_no_synapse();
    sys.rules[0].guard = UnarySet{0, 1, {}, {false}};
    ValidationReport report = validate(sys);
    CHECK(report.ok());
    CHECK(report.warnings.size() == 1);
}

TEST_CASE("build_matrix matches the published rows for the generator") {
    SpikingMatrix m = build_matrix(example1());
    REQUIRE(m.rows == 5);
    REQUIRE(m.cols == 3);
    CHECK(m.entries[0] == std::vector<Nat>{-1, 1, 1});
    CHECK(m.entries[1] == std::vector<Nat>{-2, 1, 1});
    CHECK(m.entries[2] == std::vector<Nat>{1, -1, 1});
    CHECK(m.entries[3] == std::vector<Nat>{0, 0, -1});
    CHECK(m.entries[4] == std::vector<Nat>{0, 0, -2});
}

TEST_CASE("build_matrix without synapses has no positive entries") {
    SpikingMatrix m = build_matrix(two_neurons_no_synapse());
    REQUIRE(m.rows == 1);
    CHECK(m.entries[0] == std::vector<Nat>{-1, 0});
}

TEST_CASE("build_matrix for the ring") {
    SpikingMatrix m = build_matrix(ring());
    REQUIRE(m.rows == 2);
    CHECK(m.entries[0] == std::vector<Nat>{-1, 1});
    CHECK(m.entries[1] == std::vector<Nat>{1, -1});
}

TEST_CASE("matrix shape: one negative entry per row, owners own the columns") {
    for (const char* fixture : {"example1.snp", "ring.snp", "growth.snp", "partial.snp"}) {
        SNPSystem sys = testutil::load_fixture(fixture);
        SpikingMatrix m = build_matrix(sys);
        for (int i = 0; i < m.rows; ++i) {
            int negatives = 0;
            for (int j = 0; j < m.cols; ++j)
                if (m.entries[i][j] < 0) {
                    ++negatives;
                    CHECK(j == sys.rules[i].owner - 1);
                }
            CHECK(negatives == 1);
        }
    }
}

TEST_CASE("applicable_rules on the generator") {
    SNPSystem sys = example1();
    auto app = applicable_rules(sys, {2, 1, 1});
    CHECK(app[0] == std::vector<int>{1, 2});
    CHECK(app[1] == std::vector<int>{3});
    CHECK(app[2] == std::vector<int>{4});

    app = applicable_rules(sys, {1, 0, 0});
    CHECK(app[0].empty());
    CHECK(app[1].empty());
    CHECK(app[2].empty());
}

TEST_CASE("enumerate_spiking_vectors on the generator") {
    SNPSystem sys = example1();

    auto vs = enumerate_spiking_vectors(sys, {2, 1, 1});
    REQUIRE(vs.size() == 2);
    CHECK(vs[0] == SpikingVector{1, 0, 1, 1, 0});
    CHECK(vs[1] == SpikingVector{0, 1, 1, 1, 0});

    vs = enumerate_spiking_vectors(sys, {2, 1, 2});
    REQUIRE(vs.size() == 2);
    CHECK(vs[0] == SpikingVector{1, 0, 1, 0, 1});
    CHECK(vs[1] == SpikingVector{0, 1, 1, 0, 1});

    CHECK(enumerate_spiking_vectors(sys, {1, 0, 0}).empty());
}

TEST_CASE("enumerated vectors select one rule per firing-capable neuron") {
    for (const char* fixture : {"example1.snp", "ring.snp", "partial.snp"}) {
        SNPSystem sys = testutil::load_fixture(fixture);
        ConfigGraph g = explore(sys, {1000, 0, 0});
        for (const Config& c : g.vertices) {
            auto app = applicable_rules(sys, c);
            for (const SpikingVector& sp : enumerate_spiking_vectors(sys, c)) {
                int total = 0;
                for (int j = 0; j < sys.neuron_count; ++j) {
                    int selected = 0;
                    for (const Rule& r : sys.rules)
                        if (r.owner == j + 1 && sp[r.id - 1]) ++selected;
                    CHECK(selected == (app[j].empty() ? 0 : 1));
                    total += selected;
                }
                CHECK(total <= sys.neuron_count);
            }
        }
    }
}

TEST_CASE("net_gain sums the selected rows") {
    SpikingMatrix m = build_matrix(example1());
    CHECK(net_gain(m, {0, 1, 1, 1, 0}) == std::vector<Nat>{-1, 0, 1});
    CHECK(net_gain(m, {0, 0, 0, 0, 0}) == std::vector<Nat>{0, 0, 0});
    CHECK(net_gain(m, {1, 0, 1, 0, 1}) == std::vector<Nat>{0, 0, 0});
}

TEST_CASE("step applies the state equation and rejects invalid vectors") {
    SNPSystem sys = example1();
    SpikingMatrix m = build_matrix(sys);
    CHECK(step(sys, m, {2, 1, 1}, {0, 1, 1, 1, 0}) == Config{1, 1, 2});
    CHECK(step(sys, m, {2, 1, 1}, {1, 0, 1, 1, 0}) == Config{2, 1, 2});
    CHECK(step(sys, m, {1, 0, 1}, {0, 0, 0, 1, 0}) == Config{1, 0, 0});

    // both rules of neuron one selected at once
    CHECK_THROWS_AS(step(sys, m, {2, 1, 1}, SpikingVector{1, 1, 1, 1, 0}),
                    std::invalid_argument);
    // abstention of a firing-capable neuron
    CHECK_THROWS_AS(step(sys, m, {2, 1, 1}, SpikingVector{1, 0, 0, 1, 0}),
                    std::invalid_argument);
    // step equals config + net_gain componentwise
    Config c{2, 1, 1};
    SpikingVector sp{0, 1, 1, 1, 0};
    Config next = step(sys, m, c, sp);
    auto gain = net_gain(m, sp);
    for (int j = 0; j < 3; ++j) {
        CHECK(next[j] == c[j] + gain[j]);
        CHECK(next[j] >= 0);
    }
}

TEST_CASE("run with the first strategy walks a legal trace") {
    SNPSystem sys = example1();
    SpikingMatrix m = build_matrix(sys);
    Trace trace = run(sys, Strategy::First, 0, 12);
    CHECK(trace.initial == Config{2, 1, 1});
    for (const TraceStep& s : trace.steps)
        CHECK(step(sys, m, s.before, s.chosen) == s.after);
}

TEST_CASE("run records output spikes and the first gap") {
    SNPSystem sys = example1();
    // strategy First picks r1 forever: C0 -> (2,1,2) -> self-loop where r5
    // forgets, so the output neuron spikes exactly once, at step 1
    Trace trace = run(sys, Strategy::First, 0, 6);
    CHECK(trace.output_spike_times == std::vector<int>{1});
    CHECK_FALSE(trace.first_gap.has_value());

    // the r2 branch leads to a halt with spikes at steps 1 and 3: gap 2
    bool found_gap_2 = false;
    for (std::uint64_t seed = 0; seed < 64 && !found_gap_2; ++seed) {
        Trace t = run(sys, Strategy::Random, seed, 12);
        if (t.first_gap && *t.first_gap == 2) found_gap_2 = true;
    }
    CHECK(found_gap_2);
}

TEST_CASE("run halts immediately when nothing is applicable") {
    SNPSystem sys = two_neurons_no_synapse();
    sys.initial = {0, 0};
    Trace trace = run(sys, Strategy::First, 0, 10);
    CHECK(trace.steps.empty());
    CHECK(trace.halted);
    CHECK_FALSE(trace.first_gap.has_value());
}

TEST_CASE("run with a seed is reproducible") {
    SNPSystem sys = example1();
    Trace a = run(sys, Strategy::Random, 7, 20);
    Trace b = run(sys, Strategy::Random, 7, 20);
    REQUIRE(a.steps.size() == b.steps.size());
    for (std::size_t i = 0; i < a.steps.size(); ++i) CHECK(a.steps[i].chosen == b.steps[i].chosen);
}
