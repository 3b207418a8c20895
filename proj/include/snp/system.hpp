#pragma once

// SN P systems without delay: neurons holding spike counts, a globally
// ordered rule list, and a synapse digraph. Rule ids are 1-based and sorted
// by (owner neuron, declaration order); that order fixes the indexing of
// spiking vectors and of the transition matrix rows.

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "snp/unary.hpp"

namespace snp {

using Nat = std::int64_t;
using Config = std::vector<Nat>;          // one spike count per neuron
using SpikingVector = std::vector<std::uint8_t>;  // one 0/1 entry per rule

enum class RuleKind { Spiking, Forgetting };

struct Rule {
    int id = 0;        // 1..n
    int owner = 0;     // 1..m
    RuleKind kind = RuleKind::Spiking;
    UnarySet guard;    // L(E); for forgetting rules the singleton {s}
    Nat consumed = 0;  // c (== s for forgetting)
    Nat produced = 0;  // p; 0 for forgetting
    std::string name;        // e.g. "r1"
    std::string guard_text;  // surface regex, empty when the sugar form was used
};

struct SNPSystem {
    std::string name;
    int neuron_count = 0;  // m
    std::vector<std::string> neuron_names;       // size m
    Config initial;                              // size m
    std::vector<Rule> rules;                     // size n, ordered by id
    std::set<std::pair<int, int>> synapses;      // 1-based (i, j), i != j
    int out_neuron = 0;  // 1-based; 0 = unset
    int in_neuron = 0;   // 1-based; 0 = unset (parsed, no semantics here)

    int rule_count() const { return static_cast<int>(rules.size()); }
    const std::string& neuron_name(int idx1) const { return neuron_names[idx1 - 1]; }
};

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    bool ok() const { return errors.empty(); }
};

// Checks the structural constraints of the model: rule id numbering,
// c >= p >= 1 for spiking rules, forgetting guards equal to {s}, the
// forgetting-vs-spiking guard separation within each neuron, no
// self-synapses, and that no guard admits a count smaller than the rule's
// consumption. Unsatisfiable guards are warnings.
ValidationReport validate(const SNPSystem& system);

std::string config_to_string(const Config& config);
std::string spiking_vector_to_string(const SpikingVector& sp);

}  // namespace snp
