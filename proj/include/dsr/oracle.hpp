#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "dsr/reconf.hpp"

namespace dsr {

// Guards for the exhaustive search. The engine throws ResourceError as
// soon as either bound is hit; results are never silently truncated.
struct SearchLimits {
    std::size_t max_states = 10'000'000;
    std::size_t max_key_bytes = std::size_t{8} << 30;
};

// Feasibility predicate over configurations. The default everywhere is
// domination; tests swap in other predicates (e.g. vertex cover) to reuse
// the same engine for related reconfiguration problems.
using FeasibilityPredicate = std::function<bool(const Graph&, const Configuration&)>;

FeasibilityPredicate domination_predicate();

// All single-move successors of c that stay feasible, deduplicated,
// ordered by move (ascending (from, to); for TAR all adds before all
// removes). cap applies to TAR only.
std::vector<std::pair<Move, Configuration>> neighbors(const Graph& g, const Configuration& c,
                                                      Rule rule, int cap = 0);
std::vector<std::pair<Move, Configuration>> neighbors(const Graph& g, const Configuration& c,
                                                      Rule rule, int cap,
                                                      const FeasibilityPredicate& feasible);

struct ReachResult {
    bool reachable = false;
    // Present iff reachable: a verifier-valid witness of minimum length
    // (ties broken toward the lexicographically smallest move sequence).
    std::optional<ReconfSequence> witness;
    std::size_t states_explored = 0;
};

// Breadth-first search over the reconfiguration space of the instance.
// Source and target must be feasible; TS/TJ additionally require equal
// token counts. Throws InputError on bad instances, ResourceError when a
// guard trips.
ReachResult reachable(const Instance& inst, const SearchLimits& limits = {});
ReachResult reachable(const Instance& inst, const FeasibilityPredicate& feasible,
                      const SearchLimits& limits = {});

// Minimum number of moves, or nullopt when the target is unreachable.
std::optional<int> shortest_distance(const Instance& inst, const SearchLimits& limits = {});

// Whole reconfiguration graph for token count k: every feasible
// configuration becomes a node, single legal moves become edges. For
// TS/TJ the nodes are exactly the size-k feasible configurations; for
// TAR they are the feasible configurations of size 1..cap (default k+1),
// since sizes change move by move.
struct ReconfGraphStats {
    std::size_t num_configs = 0;
    std::size_t num_components = 0;
    // Max shortest-path length; nullopt when infinite (zero configs or
    // more than one component).
    std::optional<std::size_t> diameter;
    std::vector<Configuration> frozen; // nodes with no neighbor at all

    // Enumeration in canonical (ascending) configuration order, with a
    // component id per node. Handy for exhaustive testing.
    std::vector<Configuration> configs;
    std::vector<int> component_id;
};

ReconfGraphStats reconf_graph_stats(const Graph& g, int k, Rule rule, int cap = 0,
                                    const SearchLimits& limits = {});
ReconfGraphStats reconf_graph_stats(const Graph& g, int k, Rule rule, int cap,
                                    const FeasibilityPredicate& feasible,
                                    const SearchLimits& limits = {});

} // namespace dsr
