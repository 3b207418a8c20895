#include "snp/behavioral.hpp"

#include <algorithm>
#include <deque>

namespace snp {

namespace {

std::vector<std::vector<int>> forward_adjacency(const ConfigGraph& g) {
    std::vector<std::vector<int>> adj(g.vertices.size());
    for (const GraphEdge& e : g.edges) adj[e.src].push_back(e.dst);
    return adj;
}

std::vector<std::vector<int>> reverse_adjacency(const ConfigGraph& g) {
    std::vector<std::vector<int>> adj(g.vertices.size());
    for (const GraphEdge& e : g.edges) adj[e.dst].push_back(e.src);
    return adj;
}

std::vector<char> bfs_closure(const std::vector<std::vector<int>>& adj, std::vector<int> seeds) {
    std::vector<char> seen(adj.size(), 0);
    std::deque<int> queue;
    for (int s : seeds)
        if (!seen[s]) {
            seen[s] = 1;
            queue.push_back(s);
        }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    }
    return seen;
}

Verdict base_verdict(const std::string& property, const ConfigGraph& g) {
    Verdict v;
    v.property = property;
    v.graph_status = g.status;
    return v;
}

}  // namespace

std::string answer_to_string(Answer a) {
    switch (a) {
        case Answer::Yes: return "Yes";
        case Answer::No: return "No";
        case Answer::Inconclusive: return "Inconclusive";
    }
    return "?";
}

Verdict check_bounded(const ConfigGraph& g) {
    Verdict v = base_verdict("bounded", g);
    if (!g.complete()) {
        v.answer = Answer::Inconclusive;
        v.witness = "exploration truncated; finiteness undecided";
        return v;
    }
    Nat bound = 0;
    for (const Config& c : g.vertices)
        for (Nat entry : c) bound = std::max(bound, entry);
    v.answer = Answer::Yes;
    v.detail["bound"] = bound;
    v.witness = "s = " + std::to_string(bound) + " over " + std::to_string(g.vertices.size()) +
                " reachable configurations";
    return v;
}

Verdict check_safe(const ConfigGraph& g) {
    Verdict v = base_verdict("safe", g);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (Nat entry : g.vertices[i]) {
            if (entry >= 2) {
                // sound even on a truncated graph: the vertex is reachable
                v.answer = Answer::No;
                v.witness = "configuration " + config_to_string(g.vertices[i]) +
                            " holds " + std::to_string(entry) + " spikes in one neuron";
                v.detail["vertex"] = static_cast<int>(i);
                return v;
            }
        }
    }
    if (!g.complete()) {
        v.answer = Answer::Inconclusive;
        v.witness = "no violation in the explored prefix; exploration truncated";
        return v;
    }
    v.answer = Answer::Yes;
    return v;
}

Verdict check_deadlock_free(const ConfigGraph& g) {
    Verdict v = base_verdict("deadlock-free", g);
    std::vector<int> deg = g.out_degrees();
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (g.expanded[i] && deg[i] == 0) {
            v.answer = Answer::No;
            v.witness = "deadlock at " + config_to_string(g.vertices[i]);
            v.detail["vertex"] = static_cast<int>(i);
            return v;
        }
    }
    if (!g.complete()) {
        v.answer = Answer::Inconclusive;
        v.witness = "no deadlock among expanded vertices; exploration truncated";
        return v;
    }
    v.answer = Answer::Yes;
    return v;
}

Verdict check_quasi_live(const SNPSystem& sys, const ConfigGraph& g) {
    Verdict v = base_verdict("quasi-live", g);
    std::vector<char> fired(sys.rule_count(), 0);
    for (const GraphEdge& e : g.edges)
        for (int i = 0; i < sys.rule_count(); ++i)
            if (e.label[i]) fired[i] = 1;

    nlohmann::ordered_json table = nlohmann::ordered_json::object();
    bool all_fired = true;
    int first_unfired = -1;
    for (const Rule& r : sys.rules) {
        bool f = fired[r.id - 1];
        table[r.name.empty() ? "#" + std::to_string(r.id) : r.name] =
            f ? "Yes" : (g.complete() ? "No" : "Inconclusive");
        if (!f) {
            all_fired = false;
            if (first_unfired < 0) first_unfired = r.id;
        }
    }
    v.detail["rules"] = std::move(table);

    if (all_fired) {
        // every rule already fires on the explored prefix, sound either way
        v.answer = Answer::Yes;
        return v;
    }
    if (!g.complete()) {
        v.answer = Answer::Inconclusive;
        v.witness = "rule " + sys.rules[first_unfired - 1].name +
                    " not fired in the explored prefix; exploration truncated";
        return v;
    }
    v.answer = Answer::No;
    v.witness = "rule " + sys.rules[first_unfired - 1].name + " fires on no reachable edge";
    return v;
}

Verdict check_live(const SNPSystem& sys, const ConfigGraph& g) {
    Verdict v = base_verdict("live", g);
    if (sys.rule_count() == 0) {
        v.answer = Answer::Yes;
        return v;
    }

    if (!g.complete()) {
        // a fully expanded sink refutes liveness of every rule
        std::vector<int> deg = g.out_degrees();
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            if (g.expanded[i] && deg[i] == 0) {
                v.answer = Answer::No;
                v.witness = "no rule is fireable from deadlock " + config_to_string(g.vertices[i]);
                v.detail["vertex"] = static_cast<int>(i);
                v.detail["rule"] = sys.rules.front().name;
                return v;
            }
        }
        v.answer = Answer::Inconclusive;
        v.witness = "exploration truncated";
        return v;
    }

    auto rev = reverse_adjacency(g);
    nlohmann::ordered_json table = nlohmann::ordered_json::object();
    v.answer = Answer::Yes;
    for (const Rule& r : sys.rules) {
        std::vector<int> sources;
        for (const GraphEdge& e : g.edges)
            if (e.label[r.id - 1]) sources.push_back(e.src);
        // vertices that can reach a configuration firing r
        std::vector<char> can_fire = bfs_closure(rev, std::move(sources));
        int failing = -1;
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
            if (!can_fire[i]) {
                failing = static_cast<int>(i);
                break;
            }
        const std::string key = r.name.empty() ? "#" + std::to_string(r.id) : r.name;
        if (failing < 0) {
            table[key] = "live";
        } else {
            table[key] = "unreachable from " + config_to_string(g.vertices[failing]);
            if (v.answer == Answer::Yes) {
                v.answer = Answer::No;
                v.witness = "rule " + key + " cannot fire from " +
                            config_to_string(g.vertices[failing]);
                v.detail["rule"] = key;
                v.detail["vertex"] = failing;
            }
        }
    }
    v.detail["rules"] = std::move(table);
    return v;
}

Verdict check_reversible(const ConfigGraph& g) {
    Verdict v = base_verdict("reversible", g);
    auto rev = reverse_adjacency(g);
    // vertices from which the initial configuration is reachable
    std::vector<char> reaches_root = bfs_closure(rev, {g.root});

    if (g.complete()) {
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            if (!reaches_root[i]) {
                v.answer = Answer::No;
                v.witness = config_to_string(g.vertices[i]) + " cannot reach " +
                            config_to_string(g.vertices[g.root]);
                v.detail["vertex"] = static_cast<int>(i);
                return v;
            }
        }
        // every vertex reaches the root and is reachable from it, so the
        // graph is one strongly connected component
        v.answer = Answer::Yes;
        return v;
    }

    auto fwd = forward_adjacency(g);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (reaches_root[i]) continue;
        // definite only if this vertex's entire forward closure is expanded
        std::vector<char> closure = bfs_closure(fwd, {static_cast<int>(i)});
        bool fully_expanded = true;
        for (std::size_t w = 0; w < closure.size(); ++w)
            if (closure[w] && !g.expanded[w]) fully_expanded = false;
        if (fully_expanded && !closure[g.root]) {
            v.answer = Answer::No;
            v.witness = config_to_string(g.vertices[i]) + " cannot reach " +
                        config_to_string(g.vertices[g.root]);
            v.detail["vertex"] = static_cast<int>(i);
            return v;
        }
    }
    v.answer = Answer::Inconclusive;
    v.witness = "exploration truncated";
    return v;
}

}  // namespace snp
