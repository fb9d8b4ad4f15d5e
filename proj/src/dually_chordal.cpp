#include "dsr/dually_chordal.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <unordered_set>

namespace dsr {

namespace {

std::string vname(int v) { return std::to_string(v + 1); }

// Closed neighborhood of v within the suffix {w : pos[w] >= from}, sorted.
std::vector<int> suffix_nbhd(const Graph& g, const std::vector<int>& pos, int v, int from) {
    std::vector<int> out{v};
    for (int w : g.neighbors(v))
        if (pos[w] >= from) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> positions_of(const Mno& m, int n) {
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) pos[m.order[i]] = i;
    return pos;
}

} // namespace

MnoVerdict is_mno(const Graph& g, const Mno& m) {
    const int n = g.vertex_count();
    if (static_cast<int>(m.order.size()) != n)
        throw InputError("mno order must list every vertex exactly once");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        const int v = m.order[i];
        g.check_vertex(v);
        if (pos[v] != -1) throw InputError("mno order repeats vertex " + vname(v));
        pos[v] = i;
    }
    if (static_cast<int>(m.mn.size()) != n)
        throw InputError("mno must name a maximum neighbor for every vertex");
    for (int v = 0; v < n; ++v) g.check_vertex(m.mn[v]);

    MnoVerdict out;
    for (int i = 0; i < n; ++i) {
        const int v = m.order[i];
        const int c = m.mn[v];
        if (c != v && !(pos[c] >= i && g.has_edge(v, c))) {
            out.violating_position = i;
            out.witness = c;
            out.reason = "mn(" + vname(v) + ") = " + vname(c) +
                         " is outside the closed suffix neighborhood of " + vname(v);
            return out;
        }
        const auto cn = suffix_nbhd(g, pos, c, i);
        for (int w : suffix_nbhd(g, pos, v, i)) {
            for (int x : suffix_nbhd(g, pos, w, i)) {
                if (!std::binary_search(cn.begin(), cn.end(), x)) {
                    out.violating_position = i;
                    out.witness = w;
                    out.reason = "at position " + std::to_string(i + 1) + ", neighbor " +
                                 vname(w) + " of " + vname(v) + " reaches " + vname(x) +
                                 ", which mn(" + vname(v) + ") = " + vname(c) + " does not";
                    return out;
                }
            }
        }
    }
    out.valid = true;
    return out;
}

Mno mno_from_tree(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw InputError("tree must have at least one vertex");
    if (g.edge_count() != n - 1) throw InputError("not a tree: needs exactly n-1 edges");
    std::vector<int> parent(n, -1), bfs;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        bfs.push_back(u);
        for (int w : g.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = u;
                q.push(w);
            }
    }
    if (static_cast<int>(bfs.size()) != n) throw InputError("not a tree: graph is disconnected");
    Mno m;
    m.order.assign(bfs.rbegin(), bfs.rend());
    m.mn.resize(n);
    for (int v = 0; v < n; ++v) m.mn[v] = parent[v] < 0 ? v : parent[v];
    return m;
}

std::pair<Graph, Mno> mno_from_intervals(const IntervalFamily& f) {
    const int n = static_cast<int>(f.size());
    for (int i = 0; i < n; ++i)
        if (f[i].left > f[i].right)
            throw InputError("interval " + vname(i) + " has its left endpoint beyond its right");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (f[j].left <= f[i].right && f[i].left <= f[j].right) edges.emplace_back(i, j);
    Graph g = Graph::from_edges(n, edges);

    Mno m;
    m.order.resize(n);
    for (int i = 0; i < n; ++i) m.order[i] = i;
    std::sort(m.order.begin(), m.order.end(), [&](int a, int b) {
        if (f[a].right != f[b].right) return f[a].right < f[b].right;
        if (f[a].left != f[b].left) return f[a].left < f[b].left;
        return a < b;
    });
    const auto pos = positions_of(m, n);
    m.mn.resize(n);
    for (int v = 0; v < n; ++v) {
        int best = v;
        for (int w : g.neighbors(v))
            if (pos[w] > pos[v] && (best == v || pos[w] > pos[best])) best = w;
        m.mn[v] = best;
    }
    return {std::move(g), std::move(m)};
}

std::optional<Mno> find_mno(const Graph& g, int limit) {
    const int n = g.vertex_count();
    if (n > limit || n > 62)
        throw ResourceError("mno search handles at most " +
                                std::to_string(std::min(limit, 62)) + " vertices (got " +
                                std::to_string(n) + ")",
                            0);
    Mno m;
    if (n == 0) return m;
    std::vector<std::uint64_t> cn(n);
    for (int v = 0; v < n; ++v) {
        std::uint64_t b = std::uint64_t{1} << v;
        for (int w : g.neighbors(v)) b |= std::uint64_t{1} << w;
        cn[v] = b;
    }
    m.order.resize(n);
    m.mn.assign(n, -1);
    std::unordered_set<std::uint64_t> failed;

    auto rec = [&](auto&& self, std::uint64_t r, int depth) -> bool {
        if (r == 0) return true;
        if (failed.count(r)) return false;
        // Candidates in two tiers: vertices with a valid maximum
        // neighbor other than themselves first, self-only ones after.
        std::vector<std::pair<int, int>> tier1, tier2; // (vertex, its mn)
        for (int v = 0; v < n; ++v) {
            if (!(r >> v & 1)) continue;
            const std::uint64_t nv = cn[v] & r;
            std::uint64_t reach = 0; // union of suffix neighborhoods over N_r[v]
            for (int w = 0; w < n; ++w)
                if (nv >> w & 1) reach |= cn[w] & r;
            int pick = -1;
            for (int u = 0; u < n; ++u) {
                if (u == v || !(nv >> u & 1)) continue;
                if ((reach & ~(cn[u] & r)) == 0) {
                    pick = u;
                    break;
                }
            }
            if (pick >= 0)
                tier1.emplace_back(v, pick);
            else if ((reach & ~nv) == 0)
                tier2.emplace_back(v, v);
        }
        for (const auto* tier : {&tier1, &tier2})
            for (auto [v, u] : *tier) {
                m.order[depth] = v;
                m.mn[v] = u;
                if (self(self, r & ~(std::uint64_t{1} << v), depth + 1)) return true;
            }
        failed.insert(r);
        return false;
    };
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    if (!rec(rec, full, 0)) return std::nullopt;
    return m;
}

TriggeredDS mds(const Graph& g, const Mno& m) {
    const MnoVerdict mv = is_mno(g, m);
    if (!mv.valid) throw InputError("invalid mno: " + mv.reason);
    const int n = g.vertex_count();
    const auto pos = positions_of(m, n);

    enum : char { Bounded, Free, Required };
    std::vector<char> label(n, Bounded);
    TriggeredDS out;
    for (int i = 0; i < n; ++i) {
        const int t = m.order[i];
        if (label[t] != Bounded) continue;
        const int c = m.mn[t];
        if (label[c] == Required)
            throw Error("internal: triggered scan required vertex " + vname(c) + " twice");
        label[c] = Required;
        for (int w : g.neighbors(c))
            if (label[w] != Required) label[w] = Free;
        out.pairs.emplace_back(t, c);
    }
    for (int u = 0; u < n; ++u)
        if (label[u] == Bounded)
            throw Error("internal: triggered scan left vertex " + vname(u) + " undominated");
    for (auto [t, c] : out.pairs) {
        out.T.push_back(t);
        out.C.push_back(c);
    }
    std::sort(out.T.begin(), out.T.end());
    std::sort(out.C.begin(), out.C.end());
    for (std::size_t i = 1; i < out.pairs.size(); ++i)
        if (pos[out.pairs[i - 1].second] >= pos[out.pairs[i].second])
            out.pairs_sorted_by_mno = false;
    return out;
}

std::pair<ReconfSequence, Configuration> canonicalize(const Graph& g, const Mno& m,
                                                      const TriggeredDS& tds,
                                                      const Configuration& d) {
    if (!is_dominating(g, d)) throw InputError("configuration does not dominate the graph");
    const int n = g.vertex_count();
    const auto pos = positions_of(m, n);

    ReconfSequence seq;
    seq.rule = Rule::TS;
    seq.start = d;
    Configuration cur = d;
    std::vector<char> placed(n, 0); // canonical vertices already holding their token
    auto emit = [&](int from, int to) {
        cur = apply_move(g, cur, Move::slide(from, to));
        seq.moves.push_back(Move::slide(from, to));
    };
    for (auto [t, c] : tds.pairs) {
        if (cur.count(c) >= 1) {
            placed[c] = 1;
            continue;
        }
        // Least token (by mno position) inside N[t]. It can never sit on
        // an earlier canonical vertex: those already dominate their
        // triggers, and t is not dominated by any of them.
        int x = -1;
        for (int w : cur.support()) {
            if (w != t && !g.has_edge(w, t)) continue;
            if (x < 0 || pos[w] < pos[x]) x = w;
        }
        if (x < 0) throw Error("internal: no token dominates trigger " + vname(t));
        if (placed[x])
            throw Error("internal: token on canonical vertex " + vname(x) + " re-selected");
        if (g.has_edge(x, c)) {
            emit(x, c);
        } else {
            const int y = m.mn[x];
            if (y == x)
                throw Error("internal: maximum neighbor of " + vname(x) +
                            " is itself; no route to " + vname(c));
            emit(x, y);
            emit(y, c);
        }
        placed[c] = 1;
    }
    return {std::move(seq), std::move(cur)};
}

DcVerdict solve_dually_chordal(const Graph& g, const Mno& m, const Configuration& source,
                               const Configuration& target) {
    if (source.size() != target.size())
        throw InputError("source and target must hold the same number of tokens");
    if (!is_dominating(g, source)) throw InputError("source is not dominating");
    if (!is_dominating(g, target)) throw InputError("target is not dominating");
    const MnoVerdict mv = is_mno(g, m);
    if (!mv.valid) throw InputError("invalid mno: " + mv.reason);

    const int n = g.vertex_count();
    DcVerdict out;
    std::vector<Move> forward, backward;
    for (const auto& comp : components(g)) {
        std::vector<int> to_local(n, -1);
        for (std::size_t i = 0; i < comp.size(); ++i) to_local[comp[i]] = static_cast<int>(i);
        auto restrict_cfg = [&](const Configuration& c) {
            Configuration r;
            for (auto [v, cnt] : c.entries())
                if (to_local[v] >= 0)
                    for (int j = 0; j < cnt; ++j) r.add(to_local[v]);
            return r;
        };
        const Configuration src = restrict_cfg(source);
        const Configuration tgt = restrict_cfg(target);
        if (src.size() != tgt.size()) {
            out.reachable = false;
            out.reason = "component containing vertex " + vname(comp.front()) + " holds " +
                         std::to_string(src.size()) + " source tokens but " +
                         std::to_string(tgt.size()) +
                         " target tokens; no slide crosses components";
            out.sequence.reset();
            out.components.clear();
            return out;
        }

        std::vector<std::pair<int, int>> edges;
        for (int u : comp)
            for (int w : g.neighbors(u))
                if (u < w) edges.emplace_back(to_local[u], to_local[w]);
        const Graph cg = Graph::from_edges(static_cast<int>(comp.size()), edges);
        Mno cm;
        for (int v : m.order)
            if (to_local[v] >= 0) cm.order.push_back(to_local[v]);
        cm.mn.resize(comp.size());
        for (int u : comp) cm.mn[to_local[u]] = to_local[m.mn[u]];

        const TriggeredDS tds = mds(cg, cm);
        auto [fseq, ffinal] = canonicalize(cg, cm, tds, src);
        auto [bseq, bfinal] = canonicalize(cg, cm, tds, tgt);

        const int meet = min_eccentricity_vertex(cg);
        const int ecc = eccentricity(cg, meet, true);
        const auto dist = bfs_distances(cg, meet);
        auto route_extras = [&](Configuration cfg, std::vector<Move>& sink) {
            Configuration rest = cfg;
            for (int cv : tds.C) rest.remove(cv);
            for (int e : rest.to_vertex_list()) { // ascending, one per token
                int at = e;
                while (at != meet) {
                    int next = -1;
                    for (int w : cg.neighbors(at))
                        if (dist[w] == dist[at] - 1) {
                            next = w;
                            break;
                        }
                    if (next < 0)
                        throw Error("internal: no descent toward the meeting vertex");
                    cfg = apply_move(cg, cfg, Move::slide(at, next));
                    sink.push_back(Move::slide(at, next));
                    at = next;
                }
            }
            return cfg;
        };
        std::vector<Move> fmoves = fseq.moves;
        std::vector<Move> bmoves = bseq.moves;
        const Configuration fend = route_extras(ffinal, fmoves);
        const Configuration bend = route_extras(bfinal, bmoves);
        if (fend != bend) throw Error("internal: the two canonical halves disagree");

        const int gamma = static_cast<int>(tds.pairs.size());
        const int bound = 2 * gamma + (src.size() - gamma) * ecc;
        if (static_cast<int>(fmoves.size()) > bound ||
            static_cast<int>(bmoves.size()) > bound)
            throw Error("internal: move bound exceeded on a component");

        DcComponentStats st;
        st.vertices = comp;
        st.gamma = gamma;
        st.meeting_vertex = comp[meet];
        st.eccentricity = ecc;
        st.forward_moves = static_cast<int>(fmoves.size());
        st.backward_moves = static_cast<int>(bmoves.size());
        out.components.push_back(std::move(st));

        for (const Move& mo : fmoves) forward.push_back(Move::slide(comp[mo.from], comp[mo.to]));
        for (const Move& mo : bmoves) backward.push_back(Move::slide(comp[mo.from], comp[mo.to]));
    }

    out.reachable = true;
    ReconfSequence seq;
    seq.rule = Rule::TS;
    seq.start = source;
    seq.moves = std::move(forward);
    for (auto it = backward.rbegin(); it != backward.rend(); ++it)
        seq.moves.push_back(Move::slide(it->to, it->from));
    out.sequence = std::move(seq);
    return out;
}

std::optional<Mno> acquire_mno(const Graph& g, int search_limit) {
    const int n = g.vertex_count();
    if (n == 0) return Mno{};
    const auto comps = components(g);
    if (g.edge_count() == n - static_cast<int>(comps.size())) {
        // A forest: reverse-BFS order per component (rooted at its
        // smallest vertex), components concatenated in order.
        Mno m;
        m.mn.assign(n, -1);
        for (const auto& comp : comps) {
            std::vector<int> bfs;
            std::vector<char> seen(n, 0);
            std::queue<int> q;
            q.push(comp.front());
            seen[comp.front()] = 1;
            m.mn[comp.front()] = comp.front();
            while (!q.empty()) {
                const int u = q.front();
                q.pop();
                bfs.push_back(u);
                for (int w : g.neighbors(u))
                    if (!seen[w]) {
                        seen[w] = 1;
                        m.mn[w] = u;
                        q.push(w);
                    }
            }
            m.order.insert(m.order.end(), bfs.rbegin(), bfs.rend());
        }
        return m;
    }
    if (n <= search_limit) return find_mno(g, search_limit);
    return std::nullopt;
}

} // namespace dsr
