#pragma once

// The spiking transition matrix M: one row per rule, one column per neuron.
// Row i holds -c_i in the owner's column and +p_i in every synapse target's
// column; a step is C' = C + sp * M.

#include <vector>

#include "snp/system.hpp"

namespace snp {

struct SpikingMatrix {
    int rows = 0;  // n, rules
    int cols = 0;  // m, neurons
    std::vector<std::vector<Nat>> entries;  // rows x cols

    Nat at(int rule_idx0, int neuron_idx0) const { return entries[rule_idx0][neuron_idx0]; }
    bool operator==(const SpikingMatrix&) const = default;
};

SpikingMatrix build_matrix(const SNPSystem& system);

// sp * M, the per-neuron net spike change of firing exactly the rules
// selected in sp.
std::vector<Nat> net_gain(const SpikingMatrix& matrix, const SpikingVector& sp);

}  // namespace snp
