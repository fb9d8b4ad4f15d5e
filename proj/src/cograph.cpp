#include "dsr/cograph.hpp"

#include <algorithm>
#include <queue>

namespace dsr {

namespace {

// Induced subgraph on a sorted vertex list; local ids follow list order.
struct Induced {
    Graph graph;
    std::vector<int> to_original;
};

Induced induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    std::vector<int> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : vs)
        for (int v : g.neighbors(u))
            if (u < v && local[v] >= 0) edges.emplace_back(local[u], local[v]);
    return {Graph::from_edges(static_cast<int>(vs.size()), edges), vs};
}

// Components of the induced subgraph, each sorted, ordered by smallest
// member (original ids).
std::vector<std::vector<int>> components_within(const Graph& g, const std::vector<int>& vs) {
    Induced ind = induced_subgraph(g, vs);
    std::vector<std::vector<int>> out;
    for (auto& comp : components(ind.graph)) {
        std::vector<int> orig;
        orig.reserve(comp.size());
        for (int v : comp) orig.push_back(ind.to_original[v]);
        out.push_back(std::move(orig));
    }
    return out;
}

// Components of the complement of the induced subgraph. Uses the
// shrinking unvisited set so the complement is never materialized.
std::vector<std::vector<int>> co_components_within(const Graph& g, const std::vector<int>& vs) {
    std::vector<char> in_span(g.vertex_count(), 0);
    for (int v : vs) in_span[v] = 1;
    std::vector<int> unvisited = vs; // sorted
    std::vector<std::vector<int>> out;
    while (!unvisited.empty()) {
        int s = unvisited.front();
        unvisited.erase(unvisited.begin());
        std::vector<int> comp{s};
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            // Complement neighbors of u among the unvisited = unvisited
            // minus real neighbors of u.
            std::vector<int> keep, grabbed;
            const auto& nb = g.neighbors(u);
            for (int w : unvisited) {
                if (std::binary_search(nb.begin(), nb.end(), w))
                    keep.push_back(w);
                else
                    grabbed.push_back(w);
            }
            unvisited = std::move(keep);
            for (int w : grabbed) {
                comp.push_back(w);
                q.push(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

std::optional<Cotree> recognize_rec(const Graph& g, const std::vector<int>& vs,
                                    std::vector<int>& witness) {
    Cotree node;
    node.span = vs;
    if (vs.size() == 1) {
        node.kind = Cotree::Kind::Leaf;
        node.leaf_vertex = vs[0];
        return node;
    }
    auto comps = components_within(g, vs);
    if (comps.size() >= 2) {
        node.kind = Cotree::Kind::Union;
        for (auto& c : comps) {
            auto child = recognize_rec(g, c, witness);
            if (!child) return std::nullopt;
            node.children.push_back(std::move(*child));
        }
        return node;
    }
    auto cocomps = co_components_within(g, vs);
    if (cocomps.size() >= 2) {
        node.kind = Cotree::Kind::Join;
        for (auto& c : cocomps) {
            auto child = recognize_rec(g, c, witness);
            if (!child) return std::nullopt;
            node.children.push_back(std::move(*child));
        }
        return node;
    }
    witness = vs;
    return std::nullopt;
}

} // namespace

CographRecognition recognize_cograph(const Graph& g) {
    CographRecognition out;
    if (g.vertex_count() == 0) {
        out.failure_witness = {};
        return out; // empty graph carries no cotree
    }
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    out.cotree = recognize_rec(g, all, out.failure_witness);
    return out;
}

namespace {

void collect_edges(const Cotree& ct, std::vector<std::pair<int, int>>& edges) {
    for (const Cotree& child : ct.children) collect_edges(child, edges);
    if (ct.kind == Cotree::Kind::Join) {
        for (std::size_t i = 0; i < ct.children.size(); ++i)
            for (std::size_t j = i + 1; j < ct.children.size(); ++j)
                for (int u : ct.children[i].span)
                    for (int v : ct.children[j].span)
                        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
}

} // namespace

Graph expand_cotree(const Cotree& ct, int n) {
    std::vector<std::pair<int, int>> edges;
    collect_edges(ct, edges);
    std::sort(edges.begin(), edges.end());
    return Graph::from_edges(n, edges);
}

std::string cotree_to_string(const Cotree& ct) {
    switch (ct.kind) {
        case Cotree::Kind::Leaf: return std::to_string(ct.leaf_vertex + 1);
        case Cotree::Kind::Union:
        case Cotree::Kind::Join: {
            std::string s = ct.kind == Cotree::Kind::Union ? "U(" : "J(";
            for (std::size_t i = 0; i < ct.children.size(); ++i) {
                if (i) s += ",";
                s += cotree_to_string(ct.children[i]);
            }
            return s + ")";
        }
    }
    return "?";
}

bool gamma_at_most(const Graph& g, const std::vector<int>& within, int bound) {
    if (bound != 1 && bound != 2) throw InputError("domination bound must be 1 or 2");
    if (within.empty()) return true;
    Induced ind = induced_subgraph(g, within);
    const int n = ind.graph.vertex_count();
    std::vector<VertexSet> nbhd;
    nbhd.reserve(n);
    for (int v = 0; v < n; ++v) nbhd.push_back(closed_neighborhood(ind.graph, v));
    for (int v = 0; v < n; ++v) {
        if (nbhd[v].size() == n) return true;
        if (bound == 2)
            for (int w = v + 1; w < n; ++w) {
                VertexSet s = nbhd[v];
                s.unite(nbhd[w]);
                if (s.size() == n) return true;
            }
    }
    return false;
}

std::string join_reason_name(JoinReason r) {
    switch (r) {
        case JoinReason::TrivialEqual: return "trivial-equal";
        case JoinReason::ConditionSize: return "condition-size";
        case JoinReason::ConditionGamma: return "condition-gamma";
        case JoinReason::ConditionConnected: return "condition-connected";
        case JoinReason::ComponentMatch: return "component-match";
        case JoinReason::ComponentMismatch: return "component-mismatch";
    }
    return "?";
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count();
    std::vector<std::pair<int, int>> edges = g1.edges();
    for (auto [u, v] : g2.edges()) edges.emplace_back(n1 + u, n1 + v);
    return Graph::from_edges(n1 + g2.vertex_count(), edges);
}

Graph join_graphs(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count();
    std::vector<std::pair<int, int>> edges = g1.edges();
    for (auto [u, v] : g2.edges()) edges.emplace_back(n1 + u, n1 + v);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < g2.vertex_count(); ++v) edges.emplace_back(u, n1 + v);
    return Graph::from_edges(n1 + g2.vertex_count(), edges);
}

namespace {

std::vector<int> component_ids(const Graph& g) {
    std::vector<int> id(g.vertex_count(), -1);
    int next = 0;
    for (const auto& comp : components(g)) {
        for (int v : comp) id[v] = next;
        ++next;
    }
    return id;
}

std::vector<int> all_vertices(const Graph& g) {
    std::vector<int> vs(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) vs[v] = v;
    return vs;
}

// Lexicographically least pair of vertices dominating the graph.
std::vector<int> least_dominating_pair(const Graph& g) {
    const int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            VertexSet s = closed_neighborhood(g, i);
            s.unite(closed_neighborhood(g, j));
            if (s.size() == n) return {i, j};
        }
    return {};
}

} // namespace

JoinSolver::JoinSolver(Graph g1, Graph g2) : g1_(std::move(g1)), g2_(std::move(g2)) {
    n1_ = g1_.vertex_count();
    n2_ = g2_.vertex_count();
    if (n1_ == 0 || n2_ == 0) throw InputError("join sides must be non-empty");
    join_ = join_graphs(g1_, g2_);
    gamma1_le1_ = gamma_at_most(g1_, all_vertices(g1_), 1);
    gamma1_le2_ = gamma1_le1_ || gamma_at_most(g1_, all_vertices(g1_), 2);
    gamma2_le1_ = gamma_at_most(g2_, all_vertices(g2_), 1);
    gamma2_le2_ = gamma2_le1_ || gamma_at_most(g2_, all_vertices(g2_), 2);
    comp1_ = component_ids(g1_);
    comp2_ = component_ids(g2_);
    side1_connected_ = *std::max_element(comp1_.begin(), comp1_.end()) == 0;
    side2_connected_ = *std::max_element(comp2_.begin(), comp2_.end()) == 0;
    if (gamma1_le1_ || gamma2_le1_) {
        // Smallest join vertex whose side it dominates; such a vertex is
        // adjacent to everything else in the join.
        for (int v = 0; v < n1_ && universal_ < 0; ++v)
            if (closed_neighborhood(g1_, v).size() == n1_) universal_ = v;
        for (int v = 0; v < n2_ && universal_ < 0; ++v)
            if (closed_neighborhood(g2_, v).size() == n2_) universal_ = n1_ + v;
    } else if (gamma1_le2_) {
        dom_pair_ = least_dominating_pair(g1_);
    } else if (gamma2_le2_) {
        dom_pair_ = least_dominating_pair(g2_);
        for (int& v : dom_pair_) v += n1_;
    }
}

int JoinSolver::count_on_side(const Configuration& c, int s) const {
    int total = 0;
    for (auto& [v, k] : c.entries())
        if (side_of(v) == s) total += k;
    return total;
}

JoinVerdict JoinSolver::decide(const Configuration& source, const Configuration& target,
                               bool want_sequence) const {
    if (source.size() != target.size())
        throw InputError("source and target must hold the same number of tokens");
    if (!is_dominating(join_, source)) throw InputError("source does not dominate the join");
    if (!is_dominating(join_, target)) throw InputError("target does not dominate the join");
    const int k = source.size();

    JoinVerdict out;
    auto finish = [&](JoinReason reason, std::vector<Move> moves) {
        out.reachable = true;
        out.reason = reason;
        if (want_sequence) {
            ReconfSequence seq;
            seq.rule = Rule::TS;
            seq.start = source;
            seq.moves = std::move(moves);
            out.sequence = std::move(seq);
        }
        return out;
    };

    if (source == target) return finish(JoinReason::TrivialEqual, {});
    if (k >= 3)
        return finish(JoinReason::ConditionSize,
                      want_sequence ? route_many(source, target) : std::vector<Move>{});
    if (gamma1_le1_ || gamma2_le1_)
        return finish(JoinReason::ConditionGamma,
                      want_sequence ? route_universal(source, target) : std::vector<Move>{});
    if (gamma1_le2_ || gamma2_le2_)
        return finish(JoinReason::ConditionGamma,
                      want_sequence ? route_pair(source, target) : std::vector<Move>{});
    if (side1_connected_ && side2_connected_)
        return finish(JoinReason::ConditionConnected,
                      want_sequence ? route_components(source, target) : std::vector<Move>{});

    // No condition holds, so k = 2, both sides need three or more
    // dominating vertices, and some side is disconnected. Every
    // dominating pair has one token per side, no move may cross the join
    // (two tokens on one side cannot dominate it), and tokens can only
    // slide inside their own components.
    auto cross_split = [&](const Configuration& c) {
        std::vector<int> vs = c.to_vertex_list();
        if (vs.size() != 2 || side_of(vs[0]) != 0 || side_of(vs[1]) != 1)
            throw Error("internal: expected a cross pair");
        return std::pair{vs[0], vs[1] - n1_};
    };
    auto [s1, s2] = cross_split(source);
    auto [t1, t2] = cross_split(target);
    if (comp1_[s1] != comp1_[t1] || comp2_[s2] != comp2_[t2]) {
        out.reachable = false;
        out.reason = JoinReason::ComponentMismatch;
        return out;
    }
    return finish(JoinReason::ComponentMatch,
                  want_sequence ? route_components(source, target) : std::vector<Move>{});
}

namespace {

void emit_slide(const Graph& g, Configuration& cur, int from, int to, std::vector<Move>& out) {
    if (from == to) return;
    cur = apply_move(g, cur, Move::slide(from, to));
    out.push_back(Move::slide(from, to));
}

// Smallest occupied vertex on the given side (join ids), or -1.
int least_token_on_side(const Configuration& c, int n1, int side) {
    for (auto& [v, k] : c.entries())
        if ((v < n1 ? 0 : 1) == side) return v;
    return -1;
}

} // namespace

// Token count at least three: keep each side occupied and the whole
// configuration stays dominating, so tokens can be ferried freely across
// the join. One-sided endpoints get an entry/exit move through the other
// side.
std::vector<Move> JoinSolver::route_many(const Configuration& source,
                                         const Configuration& target) const {
    std::vector<Move> out;
    Configuration cur = source;

    if (count_on_side(cur, 0) == 0 || count_on_side(cur, 1) == 0) {
        const int have = count_on_side(cur, 0) > 0 ? 0 : 1;
        const int entry = have == 0 ? n1_ : 0; // smallest vertex across
        emit_slide(join_, cur, least_token_on_side(cur, n1_, have), entry, out);
    }

    Configuration goal = target;
    Move exit_move = Move::slide(-1, -1);
    bool need_exit = false;
    if (count_on_side(goal, 0) == 0 || count_on_side(goal, 1) == 0) {
        const int have = count_on_side(goal, 0) > 0 ? 0 : 1;
        const int anchor = have == 0 ? n1_ : 0;
        const int t0 = goal.support().front();
        goal.remove(t0);
        goal.add(anchor);
        exit_move = Move::slide(anchor, t0);
        need_exit = true;
    }

    // Cross-side surplus first: slide a surplus token straight across a
    // join edge onto a deficit vertex. The surplus side keeps at least
    // the goal's share, so neither side empties.
    while (count_on_side(cur, 0) != count_on_side(goal, 0)) {
        const int surplus_side = count_on_side(cur, 0) > count_on_side(goal, 0) ? 0 : 1;
        int from = -1, to = -1;
        for (auto& [v, c] : cur.entries())
            if (side_of(v) == surplus_side && c > goal.count(v)) {
                from = v;
                break;
            }
        for (auto& [v, c] : goal.entries())
            if (side_of(v) != surplus_side && c > cur.count(v)) {
                to = v;
                break;
            }
        if (from < 0 || to < 0) throw Error("internal: cross-side rebalancing stuck");
        emit_slide(join_, cur, from, to, out);
    }

    // Same-side relocations: a two-slide detour through the other side,
    // or a borrowed opposite token when the mover is its side's last.
    for (int s = 0; s < 2; ++s) {
        while (true) {
            int from = -1, to = -1;
            for (auto& [v, c] : cur.entries())
                if (side_of(v) == s && c > goal.count(v)) {
                    from = v;
                    break;
                }
            if (from < 0) break;
            for (auto& [v, c] : goal.entries())
                if (side_of(v) == s && c > cur.count(v)) {
                    to = v;
                    break;
                }
            if (to < 0) throw Error("internal: same-side relocation stuck");
            if (count_on_side(cur, s) == 1) {
                const int lender = least_token_on_side(cur, n1_, 1 - s);
                emit_slide(join_, cur, lender, to, out);
                emit_slide(join_, cur, from, lender, out);
            } else {
                const int via = s == 0 ? n1_ : 0;
                emit_slide(join_, cur, from, via, out);
                emit_slide(join_, cur, via, to, out);
            }
        }
    }

    if (need_exit) emit_slide(join_, cur, exit_move.from, exit_move.to, out);
    if (cur != target) throw Error("internal: join routing missed the target");
    return out;
}

// A side has a dominating vertex z: park a token on z (every
// configuration containing z dominates), walk the other token anywhere —
// through z itself if needed, stacking is allowed — and unpark.
std::vector<Move> JoinSolver::route_universal(const Configuration& source,
                                              const Configuration& target) const {
    const int z = universal_;
    std::vector<Move> out;
    Configuration cur = source;
    const int k = source.size();

    if (k == 1) {
        const int p = cur.support().front();
        const int q = target.support().front();
        emit_slide(join_, cur, p, z, out);
        emit_slide(join_, cur, z, q, out);
        if (cur != target) throw Error("internal: universal routing missed the target");
        return out;
    }

    if (cur.count(z) == 0) emit_slide(join_, cur, cur.support().front(), z, out);

    // The non-parked token and its destination.
    Configuration rest = cur;
    rest.remove(z);
    const int f = rest.support().front();
    Configuration tgt_rest = target;
    int final_to = -1;
    if (target.count(z) >= 1) {
        tgt_rest.remove(z);
    } else {
        final_to = tgt_rest.support().front(); // z's token finishes here
        tgt_rest.remove(final_to);
    }
    const int o = tgt_rest.support().front();

    if (f != o) {
        if (join_.has_edge(f, o)) {
            emit_slide(join_, cur, f, o, out);
        } else {
            emit_slide(join_, cur, f, z, out);
            emit_slide(join_, cur, z, o, out);
        }
    }
    if (final_to >= 0) emit_slide(join_, cur, z, final_to, out);
    if (cur != target) throw Error("internal: universal routing missed the target");
    return out;
}

// Both tokens of cur land on the canonical cross pair (least vertex of
// either side). cur must be a pair; appends the moves.
void JoinSolver::canonical_pair_moves(Configuration& cur, std::vector<Move>& out) const {
    const int u1 = 0, u2 = n1_;
    while (true) {
        std::vector<int> vs = cur.to_vertex_list();
        if (vs[0] == u1 && vs[1] == u2) return;
        const int p = vs[0], q = vs[1];
        if (side_of(p) == side_of(q)) {
            // Same side: one token is in the canonical vertex's closed
            // side-neighborhood (the pair dominates it); the other leaves
            // across the join first.
            const int ua = side_of(p) == 0 ? u1 : u2;
            const int ub = side_of(p) == 0 ? u2 : u1;
            const int mover = (p == ua || join_.has_edge(p, ua)) ? p : q;
            const int other = mover == p ? q : p;
            emit_slide(join_, cur, other, ub, out);
            emit_slide(join_, cur, mover, ua, out);
            return;
        }
        // Cross pair away from canonical: pull it onto the stored
        // dominating pair of the gamma-2 side, which lands both tokens on
        // one side; the next loop pass finishes.
        const int star_side = side_of(dom_pair_[0]);
        const int va = side_of(p) == star_side ? p : q;
        const int vb = va == p ? q : p;
        const int w = (va == dom_pair_[0] || join_.has_edge(va, dom_pair_[0])) ? dom_pair_[0]
                                                                               : dom_pair_[1];
        const int w_other = w == dom_pair_[0] ? dom_pair_[1] : dom_pair_[0];
        emit_slide(join_, cur, va, w, out);
        emit_slide(join_, cur, vb, w_other, out);
        // Both tokens now sit on dom_pair_ (same side).
    }
}

// k = 2 with a gamma-2 side and no dominating vertex anywhere: meet at
// the canonical cross pair.
std::vector<Move> JoinSolver::route_pair(const Configuration& source,
                                         const Configuration& target) const {
    std::vector<Move> out;
    Configuration cur = source;
    canonical_pair_moves(cur, out);

    Configuration tgt = target;
    std::vector<Move> back;
    canonical_pair_moves(tgt, back);
    for (auto it = back.rbegin(); it != back.rend(); ++it) {
        cur = apply_move(join_, cur, Move::slide(it->to, it->from));
        out.push_back(Move::slide(it->to, it->from));
    }
    if (cur != target) throw Error("internal: pair routing missed the target");
    return out;
}

// Cross pairs whose endpoints agree per side component-wise: walk each
// token along a side path; any cross pair dominates the whole join.
std::vector<Move> JoinSolver::route_components(const Configuration& source,
                                               const Configuration& target) const {
    std::vector<Move> out;
    Configuration cur = source;
    std::vector<int> svs = cur.to_vertex_list();
    std::vector<int> tvs = target.to_vertex_list();
    if (svs.size() != 2 || side_of(svs[0]) != 0 || side_of(svs[1]) != 1 ||
        side_of(tvs[0]) != 0 || side_of(tvs[1]) != 1)
        throw Error("internal: expected cross pairs");

    auto walk = [&](const Graph& side, int offset, int from, int to) {
        auto dist = bfs_distances(side, to - offset);
        int at = from - offset;
        if (dist[at] == kUnreachable) throw Error("internal: side path missing");
        while (at != to - offset) {
            for (int nb : side.neighbors(at))
                if (dist[nb] == dist[at] - 1) {
                    emit_slide(join_, cur, offset + at, offset + nb, out);
                    at = nb;
                    break;
                }
        }
    };
    walk(g1_, 0, svs[0], tvs[0]);
    walk(g2_, n1_, svs[1], tvs[1]);
    if (cur != target) throw Error("internal: component routing missed the target");
    return out;
}

JoinVerdict decide_join(const Graph& g1, const Graph& g2, const Configuration& source,
                        const Configuration& target, bool want_sequence) {
    return JoinSolver(g1, g2).decide(source, target, want_sequence);
}

namespace {

Configuration restrict_to(const Configuration& c, const std::vector<int>& span) {
    std::vector<int> vs;
    for (int v : c.to_vertex_list())
        if (std::binary_search(span.begin(), span.end(), v)) vs.push_back(v);
    return Configuration::from_vertices(vs);
}

Configuration relabel(const Configuration& c, const std::vector<int>& map) {
    std::vector<int> vs;
    for (int v : c.to_vertex_list()) vs.push_back(map.at(v));
    return Configuration::from_vertices(vs);
}

JoinVerdict solve_node(const Graph& g, const Cotree& node, const Configuration& source,
                       const Configuration& target, bool want_sequence) {
    JoinVerdict out;
    switch (node.kind) {
        case Cotree::Kind::Leaf: {
            if (source != target) {
                out.reason = JoinReason::ComponentMismatch;
                return out;
            }
            out.reachable = true;
            out.reason = JoinReason::TrivialEqual;
            if (want_sequence) {
                out.sequence = ReconfSequence{Rule::TS, 0, source, {}};
            }
            return out;
        }
        case Cotree::Kind::Union: {
            // Tokens cannot leave a component, so their per-child counts
            // must agree; children are independent.
            std::vector<JoinVerdict> parts;
            for (const Cotree& child : node.children) {
                Configuration cs = restrict_to(source, child.span);
                Configuration ct = restrict_to(target, child.span);
                if (cs.size() != ct.size()) {
                    out.reason = JoinReason::ComponentMismatch;
                    return out;
                }
                JoinVerdict sub = solve_node(g, child, cs, ct, want_sequence);
                if (!sub.reachable) return sub;
                parts.push_back(std::move(sub));
            }
            out.reachable = true;
            out.reason = JoinReason::ComponentMatch;
            if (want_sequence) {
                ReconfSequence seq;
                seq.rule = Rule::TS;
                seq.start = source;
                for (auto& part : parts)
                    for (const Move& m : part.sequence->moves) seq.moves.push_back(m);
                out.sequence = std::move(seq);
            }
            return out;
        }
        case Cotree::Kind::Join: {
            // First child versus the join of the rest.
            std::vector<int> span1 = node.children[0].span;
            std::vector<int> span2;
            for (std::size_t i = 1; i < node.children.size(); ++i)
                span2.insert(span2.end(), node.children[i].span.begin(),
                             node.children[i].span.end());
            std::sort(span2.begin(), span2.end());

            std::vector<int> to_local(g.vertex_count(), -1);
            std::vector<int> to_orig(span1.size() + span2.size());
            for (std::size_t i = 0; i < span1.size(); ++i) {
                to_local[span1[i]] = static_cast<int>(i);
                to_orig[i] = span1[i];
            }
            for (std::size_t i = 0; i < span2.size(); ++i) {
                to_local[span2[i]] = static_cast<int>(span1.size() + i);
                to_orig[span1.size() + i] = span2[i];
            }
            Graph side1 = induced_subgraph(g, span1).graph;
            Graph side2 = induced_subgraph(g, span2).graph;

            JoinSolver solver(std::move(side1), std::move(side2));
            JoinVerdict sub = solver.decide(relabel(source, to_local), relabel(target, to_local),
                                            want_sequence);
            out.reachable = sub.reachable;
            out.reason = sub.reason;
            if (sub.reachable && want_sequence) {
                ReconfSequence seq;
                seq.rule = Rule::TS;
                seq.start = source;
                for (const Move& m : sub.sequence->moves)
                    seq.moves.push_back(Move::slide(to_orig[m.from], to_orig[m.to]));
                out.sequence = std::move(seq);
            }
            return out;
        }
    }
    throw Error("internal: unknown cotree node kind");
}

void check_cotree_matches(const Graph& g, const Cotree& ct) {
    if (static_cast<int>(ct.span.size()) != g.vertex_count())
        throw InputError("cotree does not span the graph");
    Graph expanded = expand_cotree(ct, g.vertex_count());
    if (expanded.edge_count() != g.edge_count())
        throw InputError("cotree does not describe this graph");
    for (auto [u, v] : expanded.edges())
        if (!g.has_edge(u, v)) throw InputError("cotree does not describe this graph");
}

} // namespace

JoinVerdict solve_cograph(const Graph& g, const Cotree& ct, const Configuration& source,
                          const Configuration& target, bool want_sequence) {
    if (source.size() != target.size())
        throw InputError("source and target must hold the same number of tokens");
    if (!is_dominating(g, source)) throw InputError("source is not dominating");
    if (!is_dominating(g, target)) throw InputError("target is not dominating");
    check_cotree_matches(g, ct);
    return solve_node(g, ct, source, target, want_sequence);
}

} // namespace dsr
