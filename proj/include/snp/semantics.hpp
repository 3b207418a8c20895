#pragma once

// Step semantics: rule applicability, valid spiking vectors, and the state
// equation C' = C + sp * M. A neuron with at least one applicable rule
// selects exactly one; neurons without applicable rules stay silent.

#include <cstdint>
#include <optional>
#include <vector>

#include "snp/matrix.hpp"
#include "snp/system.hpp"

namespace snp {

// Per neuron (outer index 0..m-1), the 1-based ids of applicable rules in
// id order.
std::vector<std::vector<int>> applicable_rules(const SNPSystem& system, const Config& config);

// All valid spiking vectors at `config`: the Cartesian product of each
// firing-capable neuron's applicable-rule choices. Ordered lexicographically
// by selected rule ids (earlier neurons vary slowest), so the output is a
// pure function of (system, config). Empty iff no neuron can fire.
std::vector<SpikingVector> enumerate_spiking_vectors(const SNPSystem& system,
                                                     const Config& config);

// True iff sp is a valid spiking vector at config (exactly one applicable
// rule selected per firing-capable neuron, nothing else set).
bool is_valid_spiking_vector(const SNPSystem& system, const Config& config,
                             const SpikingVector& sp);

// Applies sp; throws std::invalid_argument if sp is not valid at config.
// The result never has a negative entry (checked).
Config step(const SNPSystem& system, const SpikingMatrix& matrix, const Config& config,
            const SpikingVector& sp);

enum class Strategy { First, Random };

struct TraceStep {
    Config before;
    SpikingVector chosen;
    Config after;
};

struct Trace {
    Config initial;
    std::vector<TraceStep> steps;
    bool halted = false;                   // no applicable rule at the final config
    std::vector<int> output_spike_times;   // 1-based step indices where a spiking
                                           // rule of the output neuron fired
    std::optional<int> first_gap;          // steps between the first two output spikes

    const Config& final_config() const {
        return steps.empty() ? initial : steps.back().after;
    }
};

// Runs up to max_steps steps from the initial configuration. Strategy First
// always takes the lexicographically first vector; Random draws uniformly
// from a generator seeded with `seed`. The multi-step identity
// C_k = C_0 + (sum of chosen vectors) * M is re-checked on the finished trace.
Trace run(const SNPSystem& system, Strategy strategy, std::uint64_t seed, int max_steps);

}  // namespace snp
