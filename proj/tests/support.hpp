#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "dsr/graph.hpp"
#include "dsr/oracle.hpp"
#include "dsr/reconf.hpp"

namespace testsupport {

dsr::Graph graph_from(int n, const std::vector<std::pair<int, int>>& edges);
dsr::Configuration cfg(std::initializer_list<int> vs);

// All graphs on n vertices up to isomorphism, each the lexicographically
// least member of its class (by edge bitmask), optionally connected only.
std::vector<dsr::Graph> nonisomorphic_graphs(int n, bool connected_only = false);

// All size-k configurations of g that dominate it, ascending.
std::vector<dsr::Configuration> dominating_configs(const dsr::Graph& g, int k);

// All size-k configurations whose support covers every edge, ascending.
std::vector<dsr::Configuration> vertex_cover_configs(const dsr::Graph& g, int k);

// Feasibility predicate: the support is a vertex cover.
dsr::FeasibilityPredicate vertex_cover_predicate();

bool is_connected(const dsr::Graph& g);

} // namespace testsupport
