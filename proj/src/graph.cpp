#include "dsr/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace dsr {

namespace {
int checked_vertex_count(int n) {
    if (n < 0) throw InputError("graph size must be non-negative");
    return n;
}
} // namespace

Graph::Graph(int n) : n_(checked_vertex_count(n)), adj_(static_cast<std::size_t>(n_)) {}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v)
            throw InputError("self-loop at vertex " + std::to_string(u + 1));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (int u = 0; u < n; ++u) {
        auto& a = g.adj_[u];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw InputError("duplicate edge at vertex " + std::to_string(u + 1));
    }
    g.m_ = static_cast<int>(edges.size());
    return g;
}

const std::vector<int>& Graph::neighbors(int u) const {
    check_vertex(u);
    return adj_[u];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw InputError("vertex id " + std::to_string(v + 1) + " out of range 1.." +
                         std::to_string(n_));
}

VertexSet::VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {
    if (universe < 0) throw InputError("vertex set universe must be non-negative");
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.insert(v);
    return s;
}

bool VertexSet::contains(int v) const {
    if (v < 0 || v >= n_) throw InputError("vertex id out of universe");
    return (words_[v >> 6] >> (v & 63)) & 1u;
}

void VertexSet::insert(int v) {
    if (!contains(v)) {
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
        ++count_;
    }
}

void VertexSet::erase(int v) {
    if (contains(v)) {
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        --count_;
    }
}

void VertexSet::unite(const VertexSet& other) {
    if (other.n_ != n_) throw InputError("vertex set universe mismatch");
    count_ = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= other.words_[i];
        count_ += __builtin_popcountll(words_[i]);
    }
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    if (other.n_ != n_) throw InputError("vertex set universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(count_);
    for (int v = 0; v < n_; ++v)
        if ((words_[v >> 6] >> (v & 63)) & 1u) out.push_back(v);
    return out;
}

VertexSet closed_neighborhood(const Graph& g, int u) {
    VertexSet s(g.vertex_count());
    s.insert(u);
    for (int v : g.neighbors(u)) s.insert(v);
    return s;
}

bool dominates(const Graph& g, const VertexSet& s) {
    if (s.universe_size() != g.vertex_count())
        throw InputError("vertex set universe mismatch");
    VertexSet covered(g.vertex_count());
    for (int v : s.members()) covered.unite(closed_neighborhood(g, v));
    return covered.size() == g.vertex_count();
}

namespace {

// Calls fn on k-subsets of 0..n-1 in lexicographic order until it returns true.
bool first_subset(int n, int k, std::vector<int>& pick,
                  const std::vector<std::uint64_t>& nbhd, std::uint64_t full) {
    // Iterative combination walk; domination is tested with neighborhood masks.
    if (k == 0) return full == 0;
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        std::uint64_t covered = 0;
        for (int i = 0; i < k; ++i) covered |= nbhd[pick[i]];
        if (covered == full) return true;
        int pos = k - 1;
        while (pos >= 0 && pick[pos] == n - k + pos) --pos;
        if (pos < 0) return false;
        ++pick[pos];
        for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
    }
}

} // namespace

DominatingSetResult min_dominating_set_bruteforce(const Graph& g, int limit) {
    const int n = g.vertex_count();
    if (n > limit || n > 64)
        throw ResourceError("dominating set search limited to " + std::to_string(std::min(limit, 64)) +
                                " vertices, got " + std::to_string(n),
                            0);
    if (n == 0) return {0, {}};
    std::vector<std::uint64_t> nbhd(n, 0);
    for (int u = 0; u < n; ++u) {
        nbhd[u] = std::uint64_t{1} << u;
        for (int v : g.neighbors(u)) nbhd[u] |= std::uint64_t{1} << v;
    }
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> pick(k);
        if (first_subset(n, k, pick, nbhd, full)) return {k, pick};
    }
    // Unreachable: the full vertex set always dominates.
    return {n, {}};
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = 1;
                    q.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<int> bfs_distances(const Graph& g, int u) {
    g.check_vertex(u);
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : g.neighbors(x))
            if (dist[y] == kUnreachable) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
    }
    return dist;
}

int eccentricity(const Graph& g, int u, bool require_all_reachable) {
    auto dist = bfs_distances(g, u);
    int ecc = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (dist[v] == kUnreachable) {
            if (require_all_reachable)
                throw DomainError("eccentricity undefined: vertex " + std::to_string(v + 1) +
                                  " unreachable from " + std::to_string(u + 1));
            continue;
        }
        ecc = std::max(ecc, dist[v]);
    }
    return ecc;
}

int min_eccentricity_vertex(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw DomainError("min eccentricity vertex undefined on empty graph");
    int best = -1, best_ecc = 0;
    for (int u = 0; u < n; ++u) {
        int e = eccentricity(g, u, /*require_all_reachable=*/true);
        if (best < 0 || e < best_ecc) {
            best = u;
            best_ecc = e;
        }
    }
    return best;
}

} // namespace dsr
