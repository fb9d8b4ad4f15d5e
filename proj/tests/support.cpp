#include "support.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>

namespace testsupport {

using namespace dsr;

Graph graph_from(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph::from_edges(n, edges);
}

Configuration cfg(std::initializer_list<int> vs) {
    return Configuration::from_vertices(std::vector<int>(vs));
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::vector<Graph> nonisomorphic_graphs(int n, bool connected_only) {
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> idx(n, std::vector<int>(n, -1));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            idx[u][v] = idx[v][u] = static_cast<int>(pairs.size());
            pairs.emplace_back(u, v);
        }
    const int bits = static_cast<int>(pairs.size());

    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
        // Keep the mask only if it is the minimum over all relabelings.
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        bool canonical = true;
        do {
            std::uint64_t code = 0;
            for (int e = 0; e < bits; ++e)
                if (mask >> e & 1) code |= 1ull << idx[perm[pairs[e].first]][perm[pairs[e].second]];
            if (code < mask) {
                canonical = false;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!canonical) continue;

        std::vector<std::pair<int, int>> edges;
        for (int e = 0; e < bits; ++e)
            if (mask >> e & 1) edges.push_back(pairs[e]);
        Graph g = Graph::from_edges(n, edges);
        if (connected_only && !is_connected(g)) continue;
        out.push_back(std::move(g));
    }
    return out;
}

namespace {

void enumerate_multisets(int n, int k, std::vector<int>& cur,
                         const std::function<void(const std::vector<int>&)>& fn) {
    if (static_cast<int>(cur.size()) == k) {
        fn(cur);
        return;
    }
    for (int v = cur.empty() ? 0 : cur.back(); v < n; ++v) {
        cur.push_back(v);
        enumerate_multisets(n, k, cur, fn);
        cur.pop_back();
    }
}

bool covers_edges(const Graph& g, const Configuration& c) {
    for (auto [u, v] : g.edges())
        if (c.count(u) == 0 && c.count(v) == 0) return false;
    return true;
}

} // namespace

std::vector<Configuration> dominating_configs(const Graph& g, int k) {
    std::vector<Configuration> out;
    std::vector<int> cur;
    enumerate_multisets(g.vertex_count(), k, cur, [&](const std::vector<int>& vs) {
        Configuration c = Configuration::from_vertices(vs);
        if (is_dominating(g, c)) out.push_back(std::move(c));
    });
    return out;
}

std::vector<Configuration> vertex_cover_configs(const Graph& g, int k) {
    std::vector<Configuration> out;
    std::vector<int> cur;
    enumerate_multisets(g.vertex_count(), k, cur, [&](const std::vector<int>& vs) {
        Configuration c = Configuration::from_vertices(vs);
        if (covers_edges(g, c)) out.push_back(std::move(c));
    });
    return out;
}

FeasibilityPredicate vertex_cover_predicate() {
    return [](const Graph& g, const Configuration& c) { return covers_edges(g, c); };
}

} // namespace testsupport
