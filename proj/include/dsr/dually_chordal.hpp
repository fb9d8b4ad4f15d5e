#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dsr/reconf.hpp"

namespace dsr {

// Maximum neighborhood ordering: a vertex order v_1..v_n together with,
// for each vertex, its maximum neighbor taken within the suffix graph
// G_i (the subgraph induced by v_i..v_n). A graph admitting one is
// dually chordal. For a disconnected graph the ordering restricted to
// any connected component is an ordering of that component.
struct Mno {
    std::vector<int> order; // position -> vertex id
    std::vector<int> mn;    // vertex id -> its maximum neighbor
};

struct MnoVerdict {
    bool valid = false;
    // On failure: the first order position whose vertex violates the
    // condition, and a witness neighbor w whose suffix neighborhood is
    // not contained in the claimed maximum neighbor's.
    int violating_position = -1;
    int witness = -1;
    std::string reason;
};

// Checks the defining condition at every position i: mn(v_i) lies in
// N_{G_i}[v_i] and N_{G_i}[w] is contained in N_{G_i}[mn(v_i)] for every
// w in N_{G_i}[v_i]. Malformed input (non-permutation order, ids out of
// range) throws InputError; condition failures come back as verdicts.
MnoVerdict is_mno(const Graph& g, const Mno& m);

// Mno for a tree: root at vertex 0, order children before parents
// (reverse breadth-first order, ties by id), mn = parent, mn(root) =
// root. Throws InputError when g is not a tree.
Mno mno_from_tree(const Graph& g);

// Intersection graph of the intervals (closed; I and J meet iff
// l(J) <= r(I) and l(I) <= r(J)) plus the ordering by ascending right
// endpoint (ties by left endpoint, then index). mn(v) is v's neighbor of
// maximum position in the suffix, or v itself if it has none. Throws
// InputError when some interval has l > r.
std::pair<Graph, Mno> mno_from_intervals(const IntervalFamily& f);

// Backtracking search for an mno, trying candidates ascending and
// preferring vertices whose maximum neighbor differs from themselves.
// Returns nullopt when the graph has no mno (it is not dually chordal).
// Throws ResourceError when the graph has more than `limit` vertices.
std::optional<Mno> find_mno(const Graph& g, int limit = 12);

// Canonical dominating set produced by the triggered scan: walking the
// mno, each still-undominated ("bounded") vertex t fires and requires
// c = mn(t); everything in N[c] becomes free. Pairs are kept in
// trigger-discovery order.
struct TriggeredDS {
    std::vector<std::pair<int, int>> pairs; // (t_i, c_i), discovery order
    std::vector<int> C;                     // {c_i}, ascending vertex id
    std::vector<int> T;                     // {t_i}, ascending vertex id
    // Diagnostic: whether the c_i come out in increasing mno position.
    // Observed true on every tested input; violations are reported, not
    // treated as errors.
    bool pairs_sorted_by_mno = true;
};

// The triggered scan. |C| equals the domination number. Throws
// InputError when m is not a valid mno for g.
TriggeredDS mds(const Graph& g, const Mno& m);

// Slides tokens of the dominating multiset d so that every canonical
// vertex of tds ends up holding one: per pair (t_i, c_i), the token
// x_i = least vertex (by mno position) of the current support inside
// N[t_i] moves to c_i — directly along an edge, or with one stop on
// mn(x_i). A token already on c_i is consumed in place. At most two
// moves per pair; every intermediate configuration keeps dominating.
// Throws InputError when d does not dominate.
std::pair<ReconfSequence, Configuration> canonicalize(const Graph& g, const Mno& m,
                                                      const TriggeredDS& tds,
                                                      const Configuration& d);

struct DcComponentStats {
    std::vector<int> vertices;  // the component, ascending
    int gamma = 0;              // |C| of the component
    int meeting_vertex = -1;    // min-eccentricity vertex extras gather on
    int eccentricity = 0;       // its eccentricity within the component
    int forward_moves = 0;      // source -> canonical form
    int backward_moves = 0;     // target -> canonical form
};

struct DcVerdict {
    bool reachable = false;
    std::string reason; // set on no
    std::optional<ReconfSequence> sequence;
    std::vector<DcComponentStats> components;
};

// Full slide-reconfiguration solver for graphs with an mno: per
// component, source and target must place equally many tokens (else no);
// both are canonicalized onto the triggered dominating set, extra tokens
// slide along shortest paths to the component's minimum-eccentricity
// vertex, and the answer is the forward half followed by the reversed
// target half. Per component and direction this takes at most
// 2*gamma + (k - gamma) * eccentricity moves. Throws InputError on size
// mismatch, non-dominating endpoints, or an invalid mno.
DcVerdict solve_dually_chordal(const Graph& g, const Mno& m, const Configuration& source,
                               const Configuration& target);

// Mno acquisition for solving: tree construction when g is a tree, else
// backtracking search when g has at most search_limit vertices, else
// nullopt. (Interval input, when available, is handled by the caller via
// mno_from_intervals.)
std::optional<Mno> acquire_mno(const Graph& g, int search_limit = 12);

} // namespace dsr
