#include "dsr/oracle.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

namespace dsr {

FeasibilityPredicate domination_predicate() {
    return [](const Graph& g, const Configuration& c) { return is_dominating(g, c); };
}

namespace {

std::size_t key_bytes(const Configuration& c) {
    // Rough accounting for the stored key: entry storage plus map overhead.
    return sizeof(Configuration) + c.entries().size() * sizeof(std::pair<int, int>) + 32;
}

void push_if_feasible(const Graph& g, const Configuration& base, Move m,
                      const FeasibilityPredicate& feasible,
                      std::vector<std::pair<Move, Configuration>>& out) {
    Configuration next = apply_move(g, base, m);
    if (feasible(g, next)) out.emplace_back(m, std::move(next));
}

} // namespace

std::vector<std::pair<Move, Configuration>> neighbors(const Graph& g, const Configuration& c,
                                                      Rule rule, int cap,
                                                      const FeasibilityPredicate& feasible) {
    std::vector<std::pair<Move, Configuration>> out;
    // Iterating over the (sorted) support visits every distinct move once,
    // so no dedup pass is needed: tokens carry no identity.
    switch (rule) {
        case Rule::TS:
            for (int u : c.support())
                for (int v : g.neighbors(u)) push_if_feasible(g, c, Move::slide(u, v), feasible, out);
            break;
        case Rule::TJ:
            for (int u : c.support())
                for (int v = 0; v < g.vertex_count(); ++v) {
                    if (v == u) continue;
                    push_if_feasible(g, c, Move::jump(u, v), feasible, out);
                }
            break;
        case Rule::TAR: {
            if (cap <= 0) throw InputError("token addition/removal requires a positive cap");
            if (c.size() < cap)
                for (int v = 0; v < g.vertex_count(); ++v)
                    push_if_feasible(g, c, Move::add(v), feasible, out);
            for (int u : c.support()) push_if_feasible(g, c, Move::remove(u), feasible, out);
            break;
        }
    }
    return out;
}

std::vector<std::pair<Move, Configuration>> neighbors(const Graph& g, const Configuration& c,
                                                      Rule rule, int cap) {
    return neighbors(g, c, rule, cap, domination_predicate());
}

namespace {

void validate_instance(const Instance& inst, const FeasibilityPredicate& feasible) {
    for (int v : inst.source.support()) inst.graph.check_vertex(v);
    for (int v : inst.target.support()) inst.graph.check_vertex(v);
    if (inst.rule != Rule::TAR && inst.source.size() != inst.target.size())
        throw InputError("source and target must hold the same number of tokens");
    if (!feasible(inst.graph, inst.source)) throw InputError("source configuration is not feasible");
    if (!feasible(inst.graph, inst.target)) throw InputError("target configuration is not feasible");
    if (inst.rule == Rule::TAR && inst.source.size() > effective_tar_cap(inst))
        throw InputError("source exceeds the cap");
    if (inst.rule == Rule::TAR && inst.target.size() > effective_tar_cap(inst))
        throw InputError("target exceeds the cap");
}

} // namespace

ReachResult reachable(const Instance& inst, const FeasibilityPredicate& feasible,
                      const SearchLimits& limits) {
    validate_instance(inst, feasible);
    const Graph& g = inst.graph;
    const int cap = inst.rule == Rule::TAR ? effective_tar_cap(inst) : 0;

    std::vector<Configuration> configs;
    std::vector<std::pair<int, Move>> parent; // (parent index, arriving move)
    std::unordered_map<Configuration, int, ConfigurationHash> index;
    std::size_t bytes = 0;

    auto intern = [&](const Configuration& c, int par, Move via) -> int {
        auto [it, fresh] = index.try_emplace(c, static_cast<int>(configs.size()));
        if (!fresh) return -1;
        if (configs.size() >= limits.max_states)
            throw ResourceError("state guard exceeded after exploring " +
                                    std::to_string(configs.size()) + " configurations",
                                configs.size());
        bytes += key_bytes(c);
        if (bytes > limits.max_key_bytes)
            throw ResourceError("key storage guard exceeded after exploring " +
                                    std::to_string(configs.size()) + " configurations",
                                configs.size());
        configs.push_back(c);
        parent.emplace_back(par, via);
        return it->second;
    };

    intern(inst.source, -1, Move{});
    int found = inst.source == inst.target ? 0 : -1;

    // Plain FIFO breadth-first search. Neighbor generation is already in
    // ascending move order, so the first path found to any configuration
    // is the lexicographically least among the shortest ones.
    for (std::size_t head = 0; head < configs.size() && found < 0; ++head) {
        Configuration cur = configs[head]; // copy: configs may reallocate
        for (auto& [mv, nxt] : neighbors(g, cur, inst.rule, cap, feasible)) {
            int id = intern(nxt, static_cast<int>(head), mv);
            if (id >= 0 && nxt == inst.target) {
                found = id;
                break;
            }
        }
    }

    ReachResult res;
    res.states_explored = configs.size();
    if (found < 0) return res;
    res.reachable = true;
    ReconfSequence wit;
    wit.rule = inst.rule;
    wit.tar_cap = cap;
    wit.start = inst.source;
    std::vector<Move> rev;
    for (int at = found; parent[at].first >= 0; at = parent[at].first)
        rev.push_back(parent[at].second);
    wit.moves.assign(rev.rbegin(), rev.rend());
    res.witness = std::move(wit);
    return res;
}

ReachResult reachable(const Instance& inst, const SearchLimits& limits) {
    return reachable(inst, domination_predicate(), limits);
}

std::optional<int> shortest_distance(const Instance& inst, const SearchLimits& limits) {
    ReachResult r = reachable(inst, limits);
    if (!r.reachable) return std::nullopt;
    return static_cast<int>(r.witness->moves.size());
}

namespace {

// Enumerates all multisets of the given size as non-decreasing vertex
// lists, in lexicographic order.
void for_each_multiset(int n, int size, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& fn) {
    if (static_cast<int>(cur.size()) == size) {
        fn(cur);
        return;
    }
    int lo = cur.empty() ? 0 : cur.back();
    for (int v = lo; v < n; ++v) {
        cur.push_back(v);
        for_each_multiset(n, size, cur, fn);
        cur.pop_back();
    }
}

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(std::size_t n) : up(n) {
        for (std::size_t i = 0; i < n; ++i) up[i] = static_cast<int>(i);
    }
    int find(int x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    }
    void unite(int a, int b) { up[find(a)] = find(b); }
};

} // namespace

ReconfGraphStats reconf_graph_stats(const Graph& g, int k, Rule rule, int cap,
                                    const FeasibilityPredicate& feasible,
                                    const SearchLimits& limits) {
    if (k <= 0) throw InputError("token count must be positive");
    if (rule == Rule::TAR && cap <= 0) cap = k + 1;

    ReconfGraphStats stats;
    std::unordered_map<Configuration, int, ConfigurationHash> index;

    auto enumerate = [&](int size) {
        std::vector<int> cur;
        for_each_multiset(g.vertex_count(), size, cur, [&](const std::vector<int>& vs) {
            Configuration c = Configuration::from_vertices(vs);
            if (!feasible(g, c)) return;
            if (stats.configs.size() >= limits.max_states)
                throw ResourceError("state guard exceeded after enumerating " +
                                        std::to_string(stats.configs.size()) + " configurations",
                                    stats.configs.size());
            index.emplace(c, static_cast<int>(stats.configs.size()));
            stats.configs.push_back(std::move(c));
        });
    };
    if (rule == Rule::TAR)
        for (int size = 1; size <= cap; ++size) enumerate(size);
    else
        enumerate(k);

    const std::size_t nconf = stats.configs.size();
    stats.num_configs = nconf;
    UnionFind uf(nconf);
    std::vector<std::vector<int>> adj(nconf);
    for (std::size_t i = 0; i < nconf; ++i) {
        for (auto& [mv, nxt] : neighbors(g, stats.configs[i], rule, cap, feasible)) {
            auto it = index.find(nxt);
            if (it == index.end() || it->second == static_cast<int>(i)) continue;
            adj[i].push_back(it->second);
            uf.unite(static_cast<int>(i), it->second);
        }
    }

    stats.component_id.assign(nconf, -1);
    std::unordered_map<int, int> comp_of_root;
    for (std::size_t i = 0; i < nconf; ++i) {
        int r = uf.find(static_cast<int>(i));
        auto [it, fresh] = comp_of_root.try_emplace(r, static_cast<int>(comp_of_root.size()));
        stats.component_id[i] = it->second;
        if (adj[i].empty()) stats.frozen.push_back(stats.configs[i]);
    }
    stats.num_components = comp_of_root.size();

    if (nconf > 0 && stats.num_components == 1) {
        // Exact diameter by BFS from every node.
        std::size_t diam = 0;
        std::vector<int> dist(nconf);
        for (std::size_t s = 0; s < nconf; ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            std::deque<int> q{static_cast<int>(s)};
            dist[s] = 0;
            while (!q.empty()) {
                int x = q.front();
                q.pop_front();
                diam = std::max(diam, static_cast<std::size_t>(dist[x]));
                for (int y : adj[x])
                    if (dist[y] < 0) {
                        dist[y] = dist[x] + 1;
                        q.push_back(y);
                    }
            }
        }
        stats.diameter = diam;
    }
    return stats;
}

ReconfGraphStats reconf_graph_stats(const Graph& g, int k, Rule rule, int cap,
                                    const SearchLimits& limits) {
    return reconf_graph_stats(g, k, rule, cap, domination_predicate(), limits);
}

} // namespace dsr
