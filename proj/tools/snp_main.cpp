#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "snp/behavioral.hpp"
#include "snp/graph.hpp"
#include "snp/parser.hpp"
#include "snp/report.hpp"
#include "snp/semantics.hpp"
#include "snp/structural.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInputError = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

snp::SNPSystem load_system(const std::string& path) {
    snp::SNPSystem sys;
    try {
        sys = snp::parse_system_file(path);
    } catch (const std::exception& e) {
        throw InputError(path + ": " + e.what());
    }
    snp::ValidationReport report = snp::validate(sys);
    for (const std::string& w : report.warnings) std::cerr << "warning: " << w << "\n";
    if (!report.ok()) {
        std::ostringstream os;
        os << path << ": invalid system";
        for (const std::string& e : report.errors) os << "\n  error: " << e;
        throw InputError(os.str());
    }
    return sys;
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

void print_matrix(std::ostream& os, const std::vector<std::vector<snp::Nat>>& rows) {
    std::size_t width = 1;
    for (const auto& row : rows)
        for (snp::Nat v : row) width = std::max(width, std::to_string(v).size());
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j)
            os << (j ? " " : "") << std::setw(static_cast<int>(width)) << row[j];
        os << "\n";
    }
}

snp::Verdict structural_verdict(const std::string& property, const snp::StructuralResult& r) {
    snp::Verdict v;
    v.property = property;
    v.answer = r.answer;
    if (r.certificate.feasible) {
        std::string y = "y = (";
        for (std::size_t i = 0; i < r.certificate.solution.size(); ++i)
            y += (i ? "," : "") + r.certificate.solution[i].str();
        v.witness = y + ")";
    } else {
        v.witness = "infeasible (Farkas combination attached)";
    }
    v.detail["certificate"] = snp::certificate_to_json(r.certificate);
    return v;
}

int run_matrix(const std::string& file, bool as_json) {
    snp::SNPSystem sys = load_system(file);
    snp::SpikingMatrix m = snp::build_matrix(sys);
    snp::StructMatrix s = snp::struct_matrix(sys);
    if (as_json) {
        nlohmann::ordered_json j;
        j["matrix"] = m.entries;
        j["struct_matrix"] = s.adjacency;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "spiking transition matrix (" << m.rows << " x " << m.cols << "):\n";
    print_matrix(std::cout, m.entries);
    std::cout << "synapse adjacency matrix (" << s.size << " x " << s.size << "):\n";
    std::vector<std::vector<snp::Nat>> adj;
    for (const auto& row : s.adjacency) adj.emplace_back(row.begin(), row.end());
    print_matrix(std::cout, adj);
    return kExitOk;
}

int run_run(const std::string& file, int steps, const std::string& strategy, std::uint64_t seed) {
    snp::SNPSystem sys = load_system(file);
    snp::Strategy strat;
    if (strategy == "first")
        strat = snp::Strategy::First;
    else if (strategy == "random")
        strat = snp::Strategy::Random;
    else
        throw InputError("unknown strategy '" + strategy + "'");

    snp::Trace trace = snp::run(sys, strat, seed, steps);
    std::cout << "step 0: " << snp::config_to_string(trace.initial) << "\n";
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const snp::TraceStep& s = trace.steps[k];
        bool spiked = std::find(trace.output_spike_times.begin(), trace.output_spike_times.end(),
                                static_cast<int>(k + 1)) != trace.output_spike_times.end();
        std::cout << "step " << k + 1 << ": " << snp::config_to_string(s.after) << "  sp "
                  << snp::spiking_vector_to_string(s.chosen) << (spiked ? "  spike!" : "") << "\n";
    }
    if (trace.halted) std::cout << "halted after " << trace.steps.size() << " step(s)\n";
    if (!trace.output_spike_times.empty()) {
        std::cout << "output spikes at steps:";
        for (int t : trace.output_spike_times) std::cout << " " << t;
        std::cout << "\n";
    }
    if (trace.first_gap)
        std::cout << "first-two-spike gap: " << *trace.first_gap << "\n";
    return kExitOk;
}

int run_explore(const std::string& file, const snp::ExploreLimits& limits, int threads,
                const std::string& dot_path, const std::string& json_path) {
    snp::SNPSystem sys = load_system(file);
    snp::ConfigGraph g = snp::explore(sys, limits, threads);
    std::cout << "vertices: " << g.vertices.size() << "\n";
    std::cout << "edges:    " << g.edges.size() << "\n";
    std::cout << "status:   " << snp::graph_status_to_string(g.status) << "\n";
    if (!dot_path.empty()) write_output(dot_path, snp::to_dot(g));
    if (!json_path.empty()) write_output(json_path, snp::to_json(g).dump(2) + "\n");
    return kExitOk;
}

int run_reach(const std::string& file, const std::string& target_text,
              const snp::ExploreLimits& limits) {
    snp::SNPSystem sys = load_system(file);
    snp::Config target;
    try {
        target = snp::parse_config_literal(target_text);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
    if (static_cast<int>(target.size()) != sys.neuron_count)
        throw InputError("target has " + std::to_string(target.size()) + " entries, system has " +
                         std::to_string(sys.neuron_count) + " neurons");

    snp::ReachResult r = snp::reachable(sys, target, limits);
    switch (r.verdict) {
        case snp::ReachVerdict::Reachable: {
            std::cout << "Reachable in " << r.path.size() << " step(s)\n";
            std::cout << "  " << snp::config_to_string(sys.initial) << "\n";
            for (const auto& [label, config] : r.path)
                std::cout << "  --" << snp::spiking_vector_to_string(label) << "--> "
                          << snp::config_to_string(config) << "\n";
            return kExitOk;
        }
        case snp::ReachVerdict::NotReachable:
            std::cout << "NotReachable (graph complete)\n";
            return kExitNo;
        case snp::ReachVerdict::Inconclusive:
            std::cout << "Inconclusive (exploration " << snp::graph_status_to_string(r.graph_status)
                      << ")\n";
            return kExitInconclusive;
    }
    return kExitOk;
}

const std::vector<std::string> kAllProps = {
    "bounded",      "safe",         "deadlock-free",        "live",
    "quasi-live",   "reversible",   "structurally-bounded", "conservative",
    "partial-conservative", "cycle"};

int run_check(const std::string& file, std::string props_arg, const snp::ExploreLimits& limits,
              int threads, const std::string& graph_in, const std::string& json_path) {
    snp::SNPSystem sys = load_system(file);
    snp::SpikingMatrix matrix = snp::build_matrix(sys);

    std::vector<std::string> props;
    if (props_arg.empty()) {
        props = kAllProps;
    } else {
        std::stringstream ss(props_arg);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (std::find(kAllProps.begin(), kAllProps.end(), item) == kAllProps.end())
                throw InputError("unknown property '" + item + "'");
            props.push_back(item);
        }
    }

    bool needs_graph = false;
    for (const std::string& p : props)
        if (p == "bounded" || p == "safe" || p == "deadlock-free" || p == "live" ||
            p == "quasi-live" || p == "reversible")
            needs_graph = true;

    std::optional<snp::ConfigGraph> graph;
    if (needs_graph) {
        if (!graph_in.empty()) {
            std::ifstream in(graph_in);
            if (!in) throw InputError("cannot open " + graph_in);
            nlohmann::json j;
            try {
                in >> j;
                graph = snp::graph_from_json(j);
            } catch (const std::exception& e) {
                throw InputError(graph_in + ": " + e.what());
            }
            if (graph->vertices.empty() || graph->vertices[graph->root] != sys.initial)
                throw InputError(graph_in + ": graph root does not match the system's initial "
                                            "configuration");
        } else {
            graph = snp::explore(sys, limits, threads);
        }
    }

    snp::Report report;
    report.system_name = sys.name;
    report.neurons = sys.neuron_count;
    report.rules = sys.rule_count();
    report.matrix = matrix.entries;
    report.struct_matrix = snp::struct_matrix(sys).adjacency;
    if (graph) {
        report.graph_vertices = graph->vertices.size();
        report.graph_edges = graph->edges.size();
        report.graph_status = snp::graph_status_to_string(graph->status);
    }

    for (const std::string& p : props) {
        snp::Verdict v;
        if (p == "bounded") v = snp::check_bounded(*graph);
        else if (p == "safe") v = snp::check_safe(*graph);
        else if (p == "deadlock-free") v = snp::check_deadlock_free(*graph);
        else if (p == "live") v = snp::check_live(sys, *graph);
        else if (p == "quasi-live") v = snp::check_quasi_live(sys, *graph);
        else if (p == "reversible") v = snp::check_reversible(*graph);
        else if (p == "structurally-bounded")
            v = structural_verdict(p, snp::check_structurally_bounded(matrix));
        else if (p == "conservative")
            v = structural_verdict(p, snp::check_conservative(matrix));
        else if (p == "partial-conservative")
            v = structural_verdict(p, snp::check_partial_conservative(matrix));
        else if (p == "cycle") {
            snp::CycleReport cycle = snp::has_synapse_cycle(sys);
            v.property = "cycle";
            v.answer = cycle.has_cycle ? snp::Answer::Yes : snp::Answer::No;
            if (cycle.has_cycle) {
                std::string w = "cycle through neurons";
                for (int idx : cycle.cycle) w += " " + sys.neuron_name(idx);
                v.witness = w;
            }
            v.detail["struct_matrix_rank"] = cycle.rank;
        }
        report.verdicts.push_back(std::move(v));
    }

    for (const snp::Verdict& v : report.verdicts) {
        std::cout << v.property << ": " << snp::answer_to_string(v.answer);
        if (!v.witness.empty()) std::cout << " (" << v.witness << ")";
        std::cout << "\n";
    }

    if (!json_path.empty()) write_output(json_path, snp::report_to_json(report).dump(2) + "\n");

    bool any_no = false, any_inconclusive = false;
    for (const snp::Verdict& v : report.verdicts) {
        if (v.answer == snp::Answer::No) any_no = true;
        if (v.answer == snp::Answer::Inconclusive) any_inconclusive = true;
    }
    if (any_no) return kExitNo;  // a refuted property outranks Inconclusive
    if (any_inconclusive) return kExitInconclusive;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analyzer for spiking neural P systems without delay"};
    app.require_subcommand(1);

    std::string file, props, strategy = "first", dot_path, json_path, graph_in, target;
    int steps = 100, threads = 1;
    std::uint64_t seed = 0;
    bool as_json = false;
    snp::ExploreLimits limits{10000, 0, 0};

    auto add_limits = [&](CLI::App* cmd) {
        cmd->add_option("--max-vertices", limits.max_vertices,
                        "vertex limit for exploration (0 = unlimited)");
        cmd->add_option("--max-depth", limits.max_depth, "BFS depth limit (0 = unlimited)");
        cmd->add_option("--max-spikes", limits.max_spikes_per_neuron,
                        "per-neuron spike limit (0 = unlimited)");
    };

    CLI::App* cmd_matrix = app.add_subcommand("matrix", "print the transition matrix");
    cmd_matrix->add_option("file", file)->required();
    cmd_matrix->add_flag("--json", as_json, "machine-readable output");

    CLI::App* cmd_run = app.add_subcommand("run", "simulate one computation");
    cmd_run->add_option("file", file)->required();
    cmd_run->add_option("--steps", steps, "maximum number of steps");
    cmd_run->add_option("--strategy", strategy, "first|random");
    cmd_run->add_option("--seed", seed, "RNG seed for --strategy random");

    CLI::App* cmd_explore = app.add_subcommand("explore", "build the configuration graph");
    cmd_explore->add_option("file", file)->required();
    add_limits(cmd_explore);
    cmd_explore->add_option("--threads", threads, "exploration worker threads");
    cmd_explore->add_option("--dot", dot_path, "write Graphviz DOT here ('-' = stdout)");
    cmd_explore->add_option("--json", json_path, "write graph JSON here ('-' = stdout)");

    CLI::App* cmd_check = app.add_subcommand("check", "decide properties");
    cmd_check->add_option("file", file)->required();
    cmd_check->add_option("--props", props, "comma-separated property list (default: all)");
    add_limits(cmd_check);
    cmd_check->add_option("--threads", threads, "exploration worker threads");
    cmd_check->add_option("--graph-in", graph_in, "reuse a previously exported graph JSON");
    cmd_check->add_option("--json", json_path, "write the JSON report here ('-' = stdout)");

    CLI::App* cmd_reach = app.add_subcommand("reach", "reachability query");
    cmd_reach->add_option("file", file)->required();
    cmd_reach->add_option("--target", target, "configuration literal, e.g. \"(1,0,0)\"")
        ->required();
    add_limits(cmd_reach);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_matrix->parsed()) return run_matrix(file, as_json);
        if (cmd_run->parsed()) return run_run(file, steps, strategy, seed);
        if (cmd_explore->parsed()) return run_explore(file, limits, threads, dot_path, json_path);
        if (cmd_check->parsed())
            return run_check(file, props, limits, threads, graph_in, json_path);
        if (cmd_reach->parsed()) return run_reach(file, target, limits);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
