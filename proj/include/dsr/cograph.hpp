#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dsr/reconf.hpp"

namespace dsr {

// Cotree over a vertex span. Children of a union node are the connected
// components, children of a join node the co-components; either has at
// least two children, and leaves carry single vertices.
struct Cotree {
    enum class Kind { Leaf, Union, Join };
    Kind kind = Kind::Leaf;
    int leaf_vertex = -1;
    std::vector<int> span; // sorted original ids
    std::vector<Cotree> children;
};

struct CographRecognition {
    std::optional<Cotree> cotree;
    // On failure: the span of a node whose graph and complement are both
    // connected (with more than one vertex).
    std::vector<int> failure_witness;
};

// Recursive recognition by complement components. Children are ordered
// by smallest span member.
CographRecognition recognize_cograph(const Graph& g);

// Rebuilds the graph a cotree describes (vertex count n).
Graph expand_cotree(const Cotree& ct, int n);

// Term rendering with 1-based leaf ids, e.g. "J(U(1,3),2)".
std::string cotree_to_string(const Cotree& ct);

// Does some single vertex (bound 1) or pair of vertices (bound 2) inside
// `within` dominate the subgraph induced by `within`?
bool gamma_at_most(const Graph& g, const std::vector<int>& within, int bound);

enum class JoinReason {
    TrivialEqual,       // source equals target
    ConditionSize,      // at least three tokens
    ConditionGamma,     // one side has domination number <= 2
    ConditionConnected, // both sides connected
    ComponentMatch,     // endpoints pair up inside components
    ComponentMismatch,
};

std::string join_reason_name(JoinReason r);

struct JoinVerdict {
    bool reachable = false;
    JoinReason reason = JoinReason::ComponentMismatch;
    std::optional<ReconfSequence> sequence; // present on yes (unless decide-only)
};

// Disjoint union / join of two graphs; the second graph's ids are offset
// by g1.vertex_count().
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join_graphs(const Graph& g1, const Graph& g2);

// Slide reconfiguration over the join of g1 and g2 (configurations use
// join ids: g1 vertices first). Decidable by structure alone: yes when
// k >= 3, when either side has domination number <= 2, or when both
// sides are connected; otherwise both tokens of each endpoint pair off
// across the sides and the answer reduces to a per-side component test.
// Yes-verdicts carry a verifier-valid sequence unless want_sequence is
// false (bulk decision mode).
JoinVerdict decide_join(const Graph& g1, const Graph& g2, const Configuration& source,
                        const Configuration& target, bool want_sequence = true);

// Same decision with the per-join precomputation (side structure,
// domination bounds, components) done once, for deciding many instances
// over one join.
class JoinSolver {
public:
    JoinSolver(Graph g1, Graph g2);

    JoinVerdict decide(const Configuration& source, const Configuration& target,
                       bool want_sequence = true) const;

    const Graph& join() const { return join_; }

private:
    int side_of(int v) const { return v < n1_ ? 0 : 1; }
    int count_on_side(const Configuration& c, int s) const;
    std::vector<Move> route_many(const Configuration& source, const Configuration& target) const;
    std::vector<Move> route_universal(const Configuration& source,
                                      const Configuration& target) const;
    std::vector<Move> route_pair(const Configuration& source, const Configuration& target) const;
    std::vector<Move> route_components(const Configuration& source,
                                       const Configuration& target) const;
    void canonical_pair_moves(Configuration& cur, std::vector<Move>& out) const;

    Graph g1_, g2_, join_;
    int n1_ = 0, n2_ = 0;
    bool gamma1_le1_ = false, gamma1_le2_ = false;
    bool gamma2_le1_ = false, gamma2_le2_ = false;
    int universal_ = -1;                    // smallest join vertex dominating its side
    std::vector<int> dom_pair_;             // lex-least dominating pair of a gamma-2 side
    std::vector<int> comp1_, comp2_;        // per-side component ids
    bool side1_connected_ = false, side2_connected_ = false;
};

// Slide reconfiguration on a cograph given its cotree: union nodes need
// matching per-child token counts and recurse; join nodes flatten to
// first child versus the rest and go through decide_join.
JoinVerdict solve_cograph(const Graph& g, const Cotree& ct, const Configuration& source,
                          const Configuration& target, bool want_sequence = true);

} // namespace dsr
