#include "snp/system.hpp"

#include <sstream>

namespace snp {

namespace {

std::string rule_label(const SNPSystem& sys, const Rule& r) {
    std::ostringstream os;
    os << "rule " << (r.name.empty() ? "#" + std::to_string(r.id) : r.name) << " in neuron "
       << sys.neuron_name(r.owner);
    return os.str();
}

}  // namespace

ValidationReport validate(const SNPSystem& sys) {
    ValidationReport report;
    auto error = [&](const std::string& msg) { report.errors.push_back(msg); };
    auto warn = [&](const std::string& msg) { report.warnings.push_back(msg); };

    if (sys.neuron_count < 1) error("system must have at least one neuron");
    if (static_cast<int>(sys.neuron_names.size()) != sys.neuron_count ||
        static_cast<int>(sys.initial.size()) != sys.neuron_count)
        error("neuron name/initial-spike tables do not match the neuron count");

    for (int j = 0; j < static_cast<int>(sys.initial.size()); ++j)
        if (sys.initial[j] < 0)
            error("neuron " + sys.neuron_names[j] + " has negative initial spikes");

    for (int i = 0; i < sys.rule_count(); ++i) {
        const Rule& r = sys.rules[i];
        if (r.id != i + 1) error("rule ids must be contiguous 1..n in declaration order");
        if (r.owner < 1 || r.owner > sys.neuron_count) {
            error("rule #" + std::to_string(r.id) + " references an unknown neuron");
            continue;
        }
        if (i > 0 && sys.rules[i - 1].owner > r.owner)
            error("rules must be grouped by neuron in declaration order");

        if (r.kind == RuleKind::Spiking) {
            if (r.consumed < 1 || r.produced < 1 || r.consumed < r.produced)
                error(rule_label(sys, r) + ": spiking rule requires c >= p >= 1 (c=" +
                      std::to_string(r.consumed) + ", p=" + std::to_string(r.produced) + ")");
            // A guard member below c would drive the neuron negative on firing.
            for (Nat n = 0; n < r.consumed; ++n) {
                if (r.guard.contains(static_cast<std::uint64_t>(n))) {
                    error(rule_label(sys, r) + ": guard accepts " + std::to_string(n) +
                          " spikes but the rule consumes " + std::to_string(r.consumed));
                    break;
                }
            }
        } else {
            if (r.produced != 0)
                error(rule_label(sys, r) + ": forgetting rule must produce nothing");
            if (r.consumed < 1)
                error(rule_label(sys, r) + ": forgetting rule requires s >= 1");
            if (!is_exactly(r.guard, static_cast<std::uint64_t>(r.consumed)))
                error(rule_label(sys, r) + ": forgetting rule guard must be exactly {" +
                      std::to_string(r.consumed) + "}");
        }
        if (r.guard.empty())
            warn(rule_label(sys, r) + ": guard is unsatisfiable, the rule can never fire");
    }

    // Within a neuron, a forgetting amount s may not satisfy any spiking guard.
    for (const Rule& forget : sys.rules) {
        if (forget.kind != RuleKind::Forgetting) continue;
        for (const Rule& spike : sys.rules) {
            if (spike.kind != RuleKind::Spiking || spike.owner != forget.owner) continue;
            if (spike.guard.contains(static_cast<std::uint64_t>(forget.consumed)))
                error(rule_label(sys, forget) + ": s=" + std::to_string(forget.consumed) +
                      " is in L(E) of " + rule_label(sys, spike));
        }
    }

    for (const auto& [i, j] : sys.synapses) {
        if (i == j)
            error("self-synapse on neuron " +
                  (i >= 1 && i <= sys.neuron_count ? sys.neuron_name(i) : std::to_string(i)));
        if (i < 1 || i > sys.neuron_count || j < 1 || j > sys.neuron_count)
            error("synapse (" + std::to_string(i) + "," + std::to_string(j) +
                  ") references an unknown neuron");
    }

    if (sys.out_neuron < 0 || sys.out_neuron > sys.neuron_count)
        error("output neuron index out of range");
    if (sys.in_neuron < 0 || sys.in_neuron > sys.neuron_count)
        error("input neuron index out of range");

    return report;
}

std::string config_to_string(const Config& config) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < config.size(); ++i) {
        if (i) os << ',';
        os << config[i];
    }
    os << ')';
    return os.str();
}

std::string spiking_vector_to_string(const SpikingVector& sp) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < sp.size(); ++i) {
        if (i) os << ',';
        os << int(sp[i]);
    }
    os << ')';
    return os.str();
}

}  // namespace snp
