#include "snp/semantics.hpp"

#include <random>
#include <stdexcept>

namespace snp {

std::vector<std::vector<int>> applicable_rules(const SNPSystem& sys, const Config& config) {
    std::vector<std::vector<int>> per_neuron(sys.neuron_count);
    for (const Rule& r : sys.rules) {
        Nat spikes = config[r.owner - 1];
        if (spikes >= 0 && r.guard.contains(static_cast<std::uint64_t>(spikes)))
            per_neuron[r.owner - 1].push_back(r.id);
    }
    return per_neuron;
}

std::vector<SpikingVector> enumerate_spiking_vectors(const SNPSystem& sys, const Config& config) {
    auto choices = applicable_rules(sys, config);
    std::vector<const std::vector<int>*> active;
    for (const auto& c : choices)
        if (!c.empty()) active.push_back(&c);
    if (active.empty()) return {};

    std::vector<SpikingVector> out;
    std::vector<std::size_t> pick(active.size(), 0);
    for (;;) {
        SpikingVector sp(sys.rule_count(), 0);
        for (std::size_t k = 0; k < active.size(); ++k) sp[(*active[k])[pick[k]] - 1] = 1;
        out.push_back(std::move(sp));

        // odometer increment, last neuron fastest
        std::size_t k = active.size();
        while (k > 0) {
            --k;
            if (++pick[k] < active[k]->size()) break;
            pick[k] = 0;
            if (k == 0) return out;
        }
    }
}

bool is_valid_spiking_vector(const SNPSystem& sys, const Config& config, const SpikingVector& sp) {
    if (static_cast<int>(sp.size()) != sys.rule_count()) return false;
    auto choices = applicable_rules(sys, config);
    std::vector<int> selected(sys.neuron_count, 0);
    for (int i = 0; i < sys.rule_count(); ++i) {
        if (!sp[i]) continue;
        const Rule& r = sys.rules[i];
        Nat spikes = config[r.owner - 1];
        if (!r.guard.contains(static_cast<std::uint64_t>(spikes))) return false;
        selected[r.owner - 1] += 1;
    }
    for (int j = 0; j < sys.neuron_count; ++j) {
        bool can_fire = !choices[j].empty();
        if (selected[j] != (can_fire ? 1 : 0)) return false;
    }
    return true;
}

Config step(const SNPSystem& sys, const SpikingMatrix& matrix, const Config& config,
            const SpikingVector& sp) {
    if (!is_valid_spiking_vector(sys, config, sp))
        throw std::invalid_argument("not a valid spiking vector at " + config_to_string(config) +
                                    ": " + spiking_vector_to_string(sp));
    std::vector<Nat> gain = net_gain(matrix, sp);
    Config next(config);
    for (int j = 0; j < matrix.cols; ++j) {
        next[j] += gain[j];
        if (next[j] < 0)
            throw std::logic_error("step produced a negative spike count at " +
                                   config_to_string(next));
    }
    return next;
}

Trace run(const SNPSystem& sys, Strategy strategy, std::uint64_t seed, int max_steps) {
    SpikingMatrix matrix = build_matrix(sys);
    std::mt19937_64 rng(seed);

    Trace trace;
    trace.initial = sys.initial;
    Config current = sys.initial;
    for (int k = 1; k <= max_steps; ++k) {
        auto vectors = enumerate_spiking_vectors(sys, current);
        if (vectors.empty()) {
            trace.halted = true;
            break;
        }
        std::size_t pick = 0;
        if (strategy == Strategy::Random && vectors.size() > 1)
            pick = std::uniform_int_distribution<std::size_t>(0, vectors.size() - 1)(rng);
        const SpikingVector& sp = vectors[pick];

        bool out_spiked = false;
        for (const Rule& r : sys.rules)
            if (sp[r.id - 1] && r.kind == RuleKind::Spiking && r.owner == sys.out_neuron)
                out_spiked = true;

        Config next = step(sys, matrix, current, sp);
        trace.steps.push_back({current, sp, next});
        if (out_spiked) trace.output_spike_times.push_back(k);
        current = std::move(next);
    }
    if (!trace.halted) trace.halted = enumerate_spiking_vectors(sys, current).empty();

    if (trace.output_spike_times.size() >= 2)
        trace.first_gap = trace.output_spike_times[1] - trace.output_spike_times[0];

    // Multi-step identity: C_k = C_0 + (sum of chosen vectors) * M.
    std::vector<Nat> summed(sys.rule_count(), 0);
    for (const TraceStep& s : trace.steps)
        for (int i = 0; i < sys.rule_count(); ++i) summed[i] += s.chosen[i];
    Config expected = trace.initial;
    for (int j = 0; j < matrix.cols; ++j)
        for (int i = 0; i < matrix.rows; ++i) expected[j] += summed[i] * matrix.entries[i][j];
    if (expected != trace.final_config())
        throw std::logic_error("multi-step state identity violated on trace");

    return trace;
}

}  // namespace snp
