#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "dsr/errors.hpp"

namespace dsr {

// Simple undirected graph on dense vertex ids 0..n-1. Immutable after
// construction; neighbor lists are kept sorted. No self-loops, no
// multi-edges. All 1-based ids live at the file-format boundary only.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Throws InputError on out-of-range endpoints, self-loops or
    // duplicate edges (in either orientation).
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    const std::vector<int>& neighbors(int u) const;
    bool has_edge(int u, int v) const;
    int degree(int u) const { return static_cast<int>(neighbors(u).size()); }

    // Edges as sorted (u, v) pairs with u < v.
    std::vector<std::pair<int, int>> edges() const;

    void check_vertex(int v) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Subset of 0..n-1 with bitset storage.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    static VertexSet of(int universe, std::initializer_list<int> vs);

    int universe_size() const { return n_; }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool contains(int v) const;
    void insert(int v);
    void erase(int v);
    void unite(const VertexSet& other);
    bool is_subset_of(const VertexSet& other) const;
    std::vector<int> members() const;

    bool operator==(const VertexSet& other) const = default;

private:
    int n_ = 0;
    int count_ = 0;
    std::vector<std::uint64_t> words_;
};

// A family of closed intervals [left, right], one per vertex, in vertex
// id order. Endpoints may be any reals (integers in practice).
struct Interval {
    double left = 0;
    double right = 0;
};

using IntervalFamily = std::vector<Interval>;

// Result of the exact dominating set search.
struct DominatingSetResult {
    int gamma = 0;               // domination number
    std::vector<int> witness;    // lexicographically least optimum, sorted
};

VertexSet closed_neighborhood(const Graph& g, int u);
bool dominates(const Graph& g, const VertexSet& s);

// Exhaustive search in size-then-lexicographic order, so the witness is
// deterministic. Guarded: throws ResourceError when n exceeds `limit`.
DominatingSetResult min_dominating_set_bruteforce(const Graph& g, int limit = 20);

// Connected components, ordered by smallest member; vertices inside a
// component are sorted.
std::vector<std::vector<int>> components(const Graph& g);

inline constexpr int kUnreachable = -1;

// BFS distances from u; kUnreachable marks vertices in other components.
std::vector<int> bfs_distances(const Graph& g, int u);

// Max distance from u over reachable vertices. With require_all_reachable,
// throws DomainError when some vertex cannot be reached.
int eccentricity(const Graph& g, int u, bool require_all_reachable = false);

// Smallest-id vertex of minimum eccentricity. Throws DomainError on
// disconnected input.
int min_eccentricity_vertex(const Graph& g);

} // namespace dsr
