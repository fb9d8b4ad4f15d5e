#include <algorithm>

#include "doctest.h"
#include "dsr/errors.hpp"
#include "dsr/graph.hpp"
#include "support.hpp"

using namespace dsr;
using testsupport::graph_from;

TEST_CASE("graph construction and lookup") {
    Graph g = graph_from(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_AS(graph_from(2, {{0, 2}}), InputError);
    CHECK_THROWS_AS(graph_from(2, {{-1, 0}}), InputError);
    CHECK_THROWS_AS(graph_from(2, {{1, 1}}), InputError);
    CHECK_THROWS_AS(graph_from(3, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(-1, {}), InputError);
}

TEST_CASE("vertex set operations") {
    VertexSet s(5);
    CHECK(s.empty());
    s.insert(1);
    s.insert(3);
    CHECK(s.size() == 2);
    CHECK(s.contains(3));
    CHECK(!s.contains(2));
    s.erase(3);
    CHECK(!s.contains(3));
    VertexSet t(5);
    t.insert(1);
    t.insert(2);
    s.unite(t);
    CHECK(s.members() == std::vector<int>{1, 2});
    VertexSet u(5);
    u.insert(1);
    CHECK(u.is_subset_of(s));
    CHECK(!s.is_subset_of(u));
}

TEST_CASE("closed neighborhood and domination") {
    Graph p3 = graph_from(3, {{0, 1}, {1, 2}});
    VertexSet n0 = closed_neighborhood(p3, 0);
    CHECK(n0.members() == std::vector<int>{0, 1});
    CHECK(dominates(p3, VertexSet::of(3, {1})));
    CHECK(!dominates(p3, VertexSet::of(3, {0})));
    CHECK(dominates(p3, VertexSet::of(3, {0, 2})));
}

TEST_CASE("brute force domination number") {
    CHECK(min_dominating_set_bruteforce(graph_from(3, {{0, 1}, {1, 2}})).gamma == 1);
    CHECK(min_dominating_set_bruteforce(graph_from(4, {{0, 1}, {1, 2}, {2, 3}})).gamma == 2);
    CHECK(min_dominating_set_bruteforce(graph_from(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})).gamma ==
          2);
    CHECK(min_dominating_set_bruteforce(graph_from(1, {})).gamma == 1);
    CHECK(min_dominating_set_bruteforce(graph_from(3, {})).gamma == 3);
    Graph k4 = graph_from(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    DominatingSetResult r = min_dominating_set_bruteforce(k4);
    CHECK(r.gamma == 1);
    VertexSet w(4);
    for (int v : r.witness) w.insert(v);
    CHECK(dominates(k4, w));
    CHECK(static_cast<int>(r.witness.size()) == r.gamma);
}

TEST_CASE("components are sorted by smallest member") {
    Graph g = graph_from(6, {{3, 4}, {0, 5}});
    auto comps = components(g);
    REQUIRE(comps.size() == 4);
    CHECK(comps[0] == std::vector<int>{0, 5});
    CHECK(comps[1] == std::vector<int>{1});
    CHECK(comps[2] == std::vector<int>{2});
    CHECK(comps[3] == std::vector<int>{3, 4});
}

TEST_CASE("bfs distances and eccentricity") {
    Graph p5 = graph_from(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    auto dist = bfs_distances(p5, 0);
    CHECK(dist == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(eccentricity(p5, 0) == 4);
    CHECK(eccentricity(p5, 2) == 2);
    CHECK(min_eccentricity_vertex(p5) == 2);

    Graph split = graph_from(4, {{0, 1}, {2, 3}});
    auto d2 = bfs_distances(split, 0);
    CHECK(d2[2] == kUnreachable);
    CHECK_THROWS_AS(eccentricity(split, 0, true), DomainError);
    CHECK(min_eccentricity_vertex(graph_from(1, {})) == 0);
}

TEST_CASE("nonisomorphic graph counts match the catalog") {
    CHECK(testsupport::nonisomorphic_graphs(1).size() == 1);
    CHECK(testsupport::nonisomorphic_graphs(2).size() == 2);
    CHECK(testsupport::nonisomorphic_graphs(3).size() == 4);
    CHECK(testsupport::nonisomorphic_graphs(4).size() == 11);
    CHECK(testsupport::nonisomorphic_graphs(5).size() == 34);
    CHECK(testsupport::nonisomorphic_graphs(4, true).size() == 6);
    CHECK(testsupport::nonisomorphic_graphs(5, true).size() == 21);
}
