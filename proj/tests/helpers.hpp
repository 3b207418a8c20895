#pragma once

// Shared fixtures and independent oracles for the test suites. Everything in
// here stays off the implementation paths it is used to check: graph oracles
// are plain path searches, the feasibility oracle is exhaustive enumeration,
// and regex membership is re-derived by stepping the NFA.

#include <array>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "snp/behavioral.hpp"
#include "snp/graph.hpp"
#include "snp/parser.hpp"
#include "snp/semantics.hpp"
#include "snp/structural.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& name) {
    return std::string(SNP_FIXTURE_DIR) + "/" + name;
}

inline snp::SNPSystem load_fixture(const std::string& name) {
    snp::SNPSystem sys = snp::parse_system_file(fixture_path(name));
    snp::ValidationReport report = snp::validate(sys);
    if (!report.ok()) throw std::runtime_error("fixture " + name + " failed validation");
    return sys;
}

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

inline CommandResult run_cli(const std::string& args) {
    std::string cmd = std::string(SNP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    CommandResult result;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// --- graph oracles (naive path searches over explored edges) ---

inline std::vector<std::vector<bool>> reachability_closure(const snp::ConfigGraph& g) {
    std::size_t n = g.vertices.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
    for (const snp::GraphEdge& e : g.edges) reach[e.src][e.dst] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    return reach;
}

inline bool oracle_strongly_connected(const snp::ConfigGraph& g) {
    auto reach = reachability_closure(g);
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        for (std::size_t j = 0; j < g.vertices.size(); ++j)
            if (!reach[i][j]) return false;
    return true;
}

inline bool oracle_deadlock_free(const snp::ConfigGraph& g) {
    std::vector<int> deg = g.out_degrees();
    for (int d : deg)
        if (d == 0) return false;
    return true;
}

// Rule r (1-based) is live iff from every vertex some path reaches an edge
// firing r.
inline bool oracle_rule_live(const snp::ConfigGraph& g, int rule_id) {
    auto reach = reachability_closure(g);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        bool ok = false;
        for (const snp::GraphEdge& e : g.edges)
            if (e.label[rule_id - 1] && reach[v][e.src]) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

// --- feasibility oracle: exhaustive integer search up to `cap` per entry ---

inline bool oracle_feasible(const snp::FeasibilityProblem& p, int cap) {
    std::size_t m = p.cols();
    std::vector<int> y(m, 0);
    for (;;) {
        bool bound_ok;
        if (p.bound == snp::VarBound::PositiveInteger) {
            bound_ok = true;
            for (int v : y)
                if (v < 1) bound_ok = false;
        } else {
            bound_ok = false;
            for (int v : y)
                if (v > 0) bound_ok = true;
        }
        if (bound_ok) {
            bool rows_ok = true;
            for (std::size_t i = 0; i < p.rows() && rows_ok; ++i) {
                snp::BigInt dot = 0;
                for (std::size_t j = 0; j < m; ++j) dot += p.matrix[i][j] * y[j];
                if (p.relations[i] == snp::RowRelation::EqZero ? dot != 0 : dot > 0)
                    rows_ok = false;
            }
            if (rows_ok) return true;
        }
        std::size_t k = 0;
        while (k < m && ++y[k] > cap) y[k++] = 0;
        if (k == m) return false;
    }
}

// --- randomized small systems for the theorem-level property tests ---

inline snp::SNPSystem random_small_system(std::mt19937_64& rng) {
    static const std::array<const char*, 5> guard_pool = {"a", "a^2", "a(aa)*", "a+", "a^3"};
    auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };

    snp::SNPSystem sys;
    sys.name = "random";
    sys.neuron_count = pick(1, 3);
    for (int j = 1; j <= sys.neuron_count; ++j) {
        sys.neuron_names.push_back("n" + std::to_string(j));
        sys.initial.push_back(pick(0, 3));
    }
    for (int j = 1; j <= sys.neuron_count; ++j) {
        int rules_here = pick(1, 2);
        for (int k = 0; k < rules_here; ++k) {
            snp::Rule r;
            r.owner = j;
            r.id = static_cast<int>(sys.rules.size()) + 1;
            r.name = "r" + std::to_string(r.id);
            if (pick(0, 4) == 0) {
                r.kind = snp::RuleKind::Forgetting;
                r.consumed = pick(1, 3);
                r.produced = 0;
                r.guard = snp::singleton_set(static_cast<std::uint64_t>(r.consumed));
            } else {
                r.kind = snp::RuleKind::Spiking;
                const char* guard_text = guard_pool[pick(0, static_cast<int>(guard_pool.size()) - 1)];
                r.guard = snp::compile(*snp::parse_regex(guard_text));
                r.guard_text = guard_text;
                // keep c within the guard's minimum so validation passes
                std::uint64_t min_member = 0;
                while (min_member < 16 && !r.guard.contains(min_member)) ++min_member;
                r.consumed = std::max<snp::Nat>(1, pick(1, static_cast<int>(min_member)));
                r.produced = pick(1, static_cast<int>(r.consumed));
            }
            sys.rules.push_back(std::move(r));
        }
    }
    for (int i = 1; i <= sys.neuron_count; ++i)
        for (int j = 1; j <= sys.neuron_count; ++j)
            if (i != j && pick(0, 1)) sys.synapses.emplace(i, j);
    sys.out_neuron = 1;
    return sys;
}

}  // namespace testutil
