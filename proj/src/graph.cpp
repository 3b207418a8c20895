#include "snp/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace snp {

namespace {

struct ConfigHash {
    std::size_t operator()(const Config& c) const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (Nat v : c) {
            h ^= static_cast<std::size_t>(v);
            h *= 0x100000001b3ULL;
        }
        return h;
    }
};

}  // namespace

std::string graph_status_to_string(GraphStatus status) {
    switch (status) {
        case GraphStatus::Complete: return "complete";
        case GraphStatus::TruncatedVertexLimit: return "truncated:vertex-limit";
        case GraphStatus::TruncatedDepthLimit: return "truncated:depth-limit";
        case GraphStatus::TruncatedSpikeLimit: return "truncated:spike-limit";
    }
    throw std::logic_error("bad graph status");
}

GraphStatus graph_status_from_string(const std::string& text) {
    if (text == "complete") return GraphStatus::Complete;
    if (text == "truncated:vertex-limit") return GraphStatus::TruncatedVertexLimit;
    if (text == "truncated:depth-limit") return GraphStatus::TruncatedDepthLimit;
    if (text == "truncated:spike-limit") return GraphStatus::TruncatedSpikeLimit;
    throw std::invalid_argument("unknown graph status: " + text);
}

std::optional<int> ConfigGraph::find_vertex(const Config& config) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == config) return static_cast<int>(i);
    return std::nullopt;
}

std::vector<int> ConfigGraph::out_degrees() const {
    std::vector<int> deg(vertices.size(), 0);
    for (const GraphEdge& e : edges) ++deg[e.src];
    return deg;
}

ConfigGraph explore(const SNPSystem& sys, const ExploreLimits& limits, int threads) {
    SpikingMatrix matrix = build_matrix(sys);

    ConfigGraph g;
    g.vertices.push_back(sys.initial);
    g.depth.push_back(0);
    g.expanded.push_back(0);
    std::unordered_map<Config, int, ConfigHash> index;
    index.emplace(sys.initial, 0);

    auto note_truncation = [&](GraphStatus reason) {
        if (g.status == GraphStatus::Complete) g.status = reason;
    };

    std::vector<int> level{0};
    std::size_t current_depth = 0;
    while (!level.empty()) {
        if (limits.max_depth != 0 && current_depth >= limits.max_depth) {
            note_truncation(GraphStatus::TruncatedDepthLimit);
            break;
        }

        // Expansion is pure per vertex; only the merge below mutates the graph.
        std::vector<std::vector<std::pair<SpikingVector, Config>>> successors(level.size());
        auto expand_range = [&](std::size_t lo, std::size_t hi) {
            for (std::size_t k = lo; k < hi; ++k) {
                const Config& c = g.vertices[level[k]];
                for (const SpikingVector& sp : enumerate_spiking_vectors(sys, c))
                    successors[k].emplace_back(sp, step(sys, matrix, c, sp));
            }
        };
        if (threads > 1 && level.size() > 1) {
            std::vector<std::thread> pool;
            std::size_t chunk = (level.size() + threads - 1) / threads;
            for (std::size_t lo = 0; lo < level.size(); lo += chunk)
                pool.emplace_back(expand_range, lo, std::min(lo + chunk, level.size()));
            for (auto& t : pool) t.join();
        } else {
            expand_range(0, level.size());
        }

        // New configurations of this level get indices in lexicographic order.
        std::vector<Config> fresh;
        for (const auto& succ : successors)
            for (const auto& [sp, target] : succ) {
                if (limits.max_spikes_per_neuron != 0 &&
                    std::any_of(target.begin(), target.end(), [&](Nat v) {
                        return static_cast<std::size_t>(v) > limits.max_spikes_per_neuron;
                    }))
                    continue;
                if (!index.count(target)) fresh.push_back(target);
            }
        std::sort(fresh.begin(), fresh.end());
        fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());

        std::vector<int> next_level;
        for (const Config& c : fresh) {
            if (limits.max_vertices != 0 && g.vertices.size() >= limits.max_vertices) {
                note_truncation(GraphStatus::TruncatedVertexLimit);
                break;
            }
            int id = static_cast<int>(g.vertices.size());
            g.vertices.push_back(c);
            g.depth.push_back(static_cast<int>(current_depth) + 1);
            g.expanded.push_back(0);
            index.emplace(c, id);
            next_level.push_back(id);
        }

        for (std::size_t k = 0; k < level.size(); ++k) {
            bool omitted = false;
            for (const auto& [sp, target] : successors[k]) {
                if (limits.max_spikes_per_neuron != 0 &&
                    std::any_of(target.begin(), target.end(), [&](Nat v) {
                        return static_cast<std::size_t>(v) > limits.max_spikes_per_neuron;
                    })) {
                    note_truncation(GraphStatus::TruncatedSpikeLimit);
                    omitted = true;
                    continue;
                }
                auto it = index.find(target);
                if (it == index.end()) {
                    // dropped by the vertex limit above
                    omitted = true;
                    continue;
                }
                g.edges.push_back({level[k], it->second, sp});
            }
            g.expanded[level[k]] = omitted ? 0 : 1;
        }

        level = std::move(next_level);
        ++current_depth;
    }

    if (g.status == GraphStatus::Complete &&
        std::any_of(g.expanded.begin(), g.expanded.end(), [](char e) { return !e; }))
        throw std::logic_error("exploration fixpoint left unexpanded vertices");
    return g;
}

std::optional<SpikingVector> directly_reachable(const SNPSystem& sys, const Config& from,
                                                const Config& to) {
    SpikingMatrix matrix = build_matrix(sys);
    for (const SpikingVector& sp : enumerate_spiking_vectors(sys, from))
        if (step(sys, matrix, from, sp) == to) return sp;
    return std::nullopt;
}

ReachResult reachable(const SNPSystem& sys, const Config& target, const ExploreLimits& limits) {
    ConfigGraph g = explore(sys, limits);
    ReachResult result;
    result.graph_status = g.status;

    auto target_idx = g.find_vertex(target);
    if (!target_idx) {
        result.verdict = g.complete() ? ReachVerdict::NotReachable : ReachVerdict::Inconclusive;
        return result;
    }

    // Shortest path by BFS over the explored edges.
    std::vector<int> parent(g.vertices.size(), -1);
    std::vector<int> parent_edge(g.vertices.size(), -1);
    std::vector<char> seen(g.vertices.size(), 0);
    std::vector<std::vector<int>> out(g.vertices.size());
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) out[g.edges[e].src].push_back(e);

    std::deque<int> queue{g.root};
    seen[g.root] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == *target_idx) break;
        for (int e : out[v]) {
            int w = g.edges[e].dst;
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                parent_edge[w] = e;
                queue.push_back(w);
            }
        }
    }

    result.verdict = ReachVerdict::Reachable;
    std::vector<std::pair<SpikingVector, Config>> rev;
    for (int v = *target_idx; v != g.root; v = parent[v]) {
        const GraphEdge& e = g.edges[parent_edge[v]];
        rev.emplace_back(e.label, g.vertices[v]);
    }
    result.path.assign(rev.rbegin(), rev.rend());
    return result;
}

std::string to_dot(const ConfigGraph& g) {
    std::ostringstream os;
    os << "digraph CG {\n";
    os << "  rankdir=TB;\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        os << "  v" << i << " [label=\"" << config_to_string(g.vertices[i]) << "\"";
        if (static_cast<int>(i) == g.root) os << ", peripheries=2";
        os << "];\n";
    }
    for (const GraphEdge& e : g.edges)
        os << "  v" << e.src << " -> v" << e.dst << " [label=\""
           << spiking_vector_to_string(e.label) << "\"];\n";
    os << "}\n";
    return os.str();
}

nlohmann::ordered_json to_json(const ConfigGraph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = g.vertices;
    j["root"] = g.root;
    j["edges"] = nlohmann::ordered_json::array();
    for (const GraphEdge& e : g.edges) {
        nlohmann::ordered_json je;
        je["src"] = e.src;
        je["dst"] = e.dst;
        je["label"] = std::vector<int>(e.label.begin(), e.label.end());
        j["edges"].push_back(std::move(je));
    }
    j["status"] = graph_status_to_string(g.status);
    return j;
}

ConfigGraph graph_from_json(const nlohmann::json& j) {
    ConfigGraph g;
    g.vertices = j.at("vertices").get<std::vector<Config>>();
    g.root = j.at("root").get<int>();
    for (const auto& je : j.at("edges")) {
        GraphEdge e;
        e.src = je.at("src").get<int>();
        e.dst = je.at("dst").get<int>();
        auto bits = je.at("label").get<std::vector<int>>();
        e.label.assign(bits.begin(), bits.end());
        g.edges.push_back(std::move(e));
    }
    g.status = graph_status_from_string(j.at("status").get<std::string>());

    // Expanded flags are not part of the wire format: a complete graph is
    // fully expanded, a truncated one is read conservatively.
    g.expanded.assign(g.vertices.size(), g.complete() ? 1 : 0);
    g.depth.assign(g.vertices.size(), -1);
    std::vector<std::vector<int>> out(g.vertices.size());
    for (const GraphEdge& e : g.edges) out[e.src].push_back(e.dst);
    std::deque<int> queue{g.root};
    g.depth[g.root] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : out[v])
            if (g.depth[w] < 0) {
                g.depth[w] = g.depth[v] + 1;
                queue.push_back(w);
            }
    }
    return g;
}

}  // namespace snp
