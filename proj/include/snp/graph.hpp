#pragma once

// Configuration graph: breadth-first fixpoint over reachable configurations,
// with edges labeled by the spiking vector that produces them. Exploration
// limits turn an infinite state space into a truncated graph; truncation is
// a status, not an error.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"
#include "snp/semantics.hpp"

namespace snp {

enum class GraphStatus { Complete, TruncatedVertexLimit, TruncatedDepthLimit, TruncatedSpikeLimit };

std::string graph_status_to_string(GraphStatus status);
GraphStatus graph_status_from_string(const std::string& text);

struct GraphEdge {
    int src = 0;
    int dst = 0;
    SpikingVector label;
    bool operator==(const GraphEdge&) const = default;
};

struct ConfigGraph {
    std::vector<Config> vertices;  // BFS insertion order, deduplicated
    int root = 0;                  // index of the initial configuration
    std::vector<GraphEdge> edges;
    GraphStatus status = GraphStatus::Complete;
    std::vector<char> expanded;    // per vertex: full successor set present
    std::vector<int> depth;        // per vertex: BFS depth from root

    std::optional<int> find_vertex(const Config& config) const;
    std::vector<int> out_degrees() const;
    bool complete() const { return status == GraphStatus::Complete; }
};

struct ExploreLimits {
    std::size_t max_vertices = 0;          // 0 = unlimited
    std::size_t max_depth = 0;             // 0 = unlimited
    std::size_t max_spikes_per_neuron = 0; // 0 = unlimited
};

// BFS fixpoint from the initial configuration. Within a BFS level, newly
// discovered configurations are assigned indices in lexicographic order.
// With threads > 1, frontier vertices are expanded in parallel; the merge
// is sequential, so the result is identical to the single-threaded one.
ConfigGraph explore(const SNPSystem& system, const ExploreLimits& limits, int threads = 1);

// The lexicographically smallest valid spiking vector taking `from` to `to`
// in one step, if any.
std::optional<SpikingVector> directly_reachable(const SNPSystem& system, const Config& from,
                                                const Config& to);

enum class ReachVerdict { Reachable, NotReachable, Inconclusive };

struct ReachResult {
    ReachVerdict verdict = ReachVerdict::Inconclusive;
    // Shortest witness path as (label, configuration reached) pairs; empty
    // when the target is the initial configuration.
    std::vector<std::pair<SpikingVector, Config>> path;
    GraphStatus graph_status = GraphStatus::Complete;
};

ReachResult reachable(const SNPSystem& system, const Config& target, const ExploreLimits& limits);

std::string to_dot(const ConfigGraph& graph);
nlohmann::ordered_json to_json(const ConfigGraph& graph);
ConfigGraph graph_from_json(const nlohmann::json& j);

}  // namespace snp
