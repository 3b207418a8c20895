#pragma once

// Graph-based property checkers for a fixed initial configuration. Each
// checker returns a verdict with a witness; on truncated graphs only
// one-sided conclusions that stay sound on a prefix of the state space are
// given, everything else is Inconclusive.

#include <string>

#include "nlohmann/json.hpp"
#include "snp/graph.hpp"

namespace snp {

enum class Answer { Yes, No, Inconclusive };

std::string answer_to_string(Answer a);

struct Verdict {
    std::string property;
    Answer answer = Answer::Inconclusive;
    std::string witness;           // human-readable; empty when not applicable
    nlohmann::ordered_json detail; // structured payload (bound, tables, vertices)
    GraphStatus graph_status = GraphStatus::Complete;
};

// Bounded: complete graph -> Yes with the minimal bound s (max spike count
// over all vertices and neurons); truncated -> Inconclusive, unboundedness
// is never claimed.
Verdict check_bounded(const ConfigGraph& graph);

// Safe: bounded with s <= 1. A vertex with an entry >= 2 refutes safety
// even on a truncated graph.
Verdict check_safe(const ConfigGraph& graph);

// Deadlock-free: a fully expanded vertex with out-degree 0 is a definite
// counterexample; Yes needs a complete graph.
Verdict check_deadlock_free(const ConfigGraph& graph);

// Quasi-live: rule r fires on some explored edge. Per-rule Yes is definite
// even on truncated graphs; per-rule No needs a complete graph.
Verdict check_quasi_live(const SNPSystem& system, const ConfigGraph& graph);

// Live: every rule is fireable from every reachable configuration, decided
// per rule by backward reachability from the sources of r-labeled edges.
Verdict check_live(const SNPSystem& system, const ConfigGraph& graph);

// Reversible: the initial configuration is reachable from everywhere, i.e.
// the complete graph is a single strongly connected component.
Verdict check_reversible(const ConfigGraph& graph);

}  // namespace snp
