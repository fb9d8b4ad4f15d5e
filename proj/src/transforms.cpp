#include "dsr/transforms.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace dsr {

namespace {

// Replays a sequence, requiring legality and domination throughout.
std::vector<Configuration> replay(const Graph& g, const ReconfSequence& seq) {
    std::vector<Configuration> cfgs{seq.start};
    if (!is_dominating(g, seq.start)) throw InputError("sequence start is not dominating");
    for (const Move& m : seq.moves) {
        cfgs.push_back(apply_move(g, cfgs.back(), m));
        if (!is_dominating(g, cfgs.back()))
            throw InputError("sequence passes through a non-dominating configuration");
    }
    return cfgs;
}

} // namespace

ReconfSequence tar_to_tj(const Graph& g, const ReconfSequence& seq) {
    if (seq.rule != Rule::TAR) throw InputError("expected a token addition/removal sequence");
    std::vector<Configuration> cfgs = replay(g, seq);
    std::vector<Move> moves = seq.moves;
    const int k = seq.start.size();
    if (cfgs.back().size() != k)
        throw InputError("endpoints must hold the same number of tokens");
    const int cap = seq.tar_cap > 0 ? seq.tar_cap : k + 1;
    for (const Configuration& c : cfgs)
        if (c.size() > cap) throw InputError("sequence exceeds its cap");
    for (const Move& m : moves)
        if (m.kind != Move::Kind::Add && m.kind != Move::Kind::Remove)
            throw InputError("expected a token addition/removal sequence");

    // Lift every dip below k. A configuration of globally minimum size
    // below k is entered by a removal and left by an addition; if both
    // touch the same vertex the pair is redundant, otherwise swapping the
    // pair raises the minimum. Each pass strictly shrinks the total
    // deficit, so this terminates.
    while (true) {
        int at = -1;
        for (std::size_t i = 0; i < cfgs.size(); ++i)
            if (cfgs[i].size() < k && (at < 0 || cfgs[i].size() < cfgs[at].size()))
                at = static_cast<int>(i);
        if (at < 0) break;
        // at is neither the first nor the last configuration (both size k).
        const Move drop = moves[at - 1]; // remove x
        const Move lift = moves[at];     // add y
        if (drop.kind != Move::Kind::Remove || lift.kind != Move::Kind::Add)
            throw InputError("malformed sequence around a minimum-size configuration");
        if (drop.from == lift.to) {
            moves.erase(moves.begin() + (at - 1), moves.begin() + (at + 1));
            cfgs.erase(cfgs.begin() + at, cfgs.begin() + (at + 2));
        } else {
            moves[at - 1] = lift;
            moves[at] = drop;
            cfgs[at] = cfgs[at - 1];
            cfgs[at].add(lift.to);
        }
    }

    // Sizes now alternate k, k+1, k, ...: fuse each (add v, remove u)
    // into jump(u, v); a pair touching one vertex is a no-op.
    ReconfSequence out;
    out.rule = Rule::TJ;
    out.tar_cap = 0;
    out.start = seq.start;
    if (moves.size() % 2 != 0)
        throw InputError("malformed sequence: odd move count after normalization");
    for (std::size_t i = 0; i < moves.size(); i += 2) {
        const Move& grow = moves[i];
        const Move& shrink = moves[i + 1];
        if (grow.kind != Move::Kind::Add || shrink.kind != Move::Kind::Remove)
            throw InputError("malformed sequence after normalization");
        if (shrink.from != grow.to) out.moves.push_back(Move::jump(shrink.from, grow.to));
    }
    return out;
}

ReconfSequence tj_to_tar(const Graph& g, const ReconfSequence& seq) {
    if (seq.rule != Rule::TJ) throw InputError("expected a jump sequence");
    replay(g, seq); // validity check
    ReconfSequence out;
    out.rule = Rule::TAR;
    out.tar_cap = seq.start.size() + 1;
    out.start = seq.start;
    for (const Move& m : seq.moves) {
        if (m.kind != Move::Kind::Jump) throw InputError("expected a jump sequence");
        if (m.from == m.to) continue;
        out.moves.push_back(Move::add(m.to));
        out.moves.push_back(Move::remove(m.from));
    }
    return out;
}

std::string role_name(VertexRole role) {
    switch (role) {
        case VertexRole::OriginalCopy: return "copy";
        case VertexRole::CliqueSide: return "clique";
        case VertexRole::IndependentSide: return "indep";
        case VertexRole::ZGadget: return "z";
        case VertexRole::ApexX: return "x";
        case VertexRole::PendantY: return "y";
    }
    return "?";
}

ReductionOutput split_reduction(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw InputError("split reduction needs at least one vertex");
    ReductionOutput out;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j); // clique side
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, n + i); // j = i: closed neighborhood
        for (int j : g.neighbors(i)) edges.emplace_back(i, n + j);
    }
    out.graph = Graph::from_edges(2 * n, edges);
    out.vmap.resize(n);
    out.tags.assign(2 * n, VertexRole::CliqueSide);
    out.gadget_edge.assign(2 * n, {-1, -1});
    for (int i = 0; i < n; ++i) {
        out.vmap[i] = i;
        out.tags[n + i] = VertexRole::IndependentSide;
    }
    return out;
}

namespace {

Configuration map_configuration(const std::vector<int>& vmap, const Configuration& c) {
    std::vector<int> vs;
    for (int v : c.to_vertex_list()) vs.push_back(vmap.at(v));
    return Configuration::from_vertices(vs);
}

} // namespace

ReconfSequence split_lift(const ReductionOutput& r, const ReconfSequence& seq) {
    if (seq.rule != Rule::TJ) throw InputError("expected a jump sequence");
    ReconfSequence out;
    out.rule = Rule::TS;
    out.start = map_configuration(r.vmap, seq.start);
    for (const Move& m : seq.moves) {
        if (m.kind != Move::Kind::Jump) throw InputError("expected a jump sequence");
        if (m.from == m.to) continue;
        out.moves.push_back(Move::slide(r.vmap.at(m.from), r.vmap.at(m.to)));
    }
    return out;
}

ReconfSequence split_project(const ReductionOutput& r, const ReconfSequence& seq) {
    if (seq.rule != Rule::TS) throw InputError("expected a slide sequence");
    const int n = static_cast<int>(r.vmap.size());
    auto side = [&](int v) { return v < n ? 0 : 1; }; // 0 = clique copies, 1 = independent
    for (int v : seq.start.support())
        if (side(v) != 0) throw InputError("sequence endpoints must avoid the independent side");

    ReconfSequence out;
    out.rule = Rule::TJ;
    // Tokens visiting the independent side are tracked by origin; the
    // fused jump is emitted when such a token returns. FIFO per vertex
    // keeps the projection deterministic.
    std::map<int, std::deque<int>> transit; // w vertex -> origins
    std::vector<int> start_vs;
    for (int v : seq.start.to_vertex_list()) start_vs.push_back(v);
    out.start = Configuration::from_vertices(start_vs);

    for (const Move& m : seq.moves) {
        if (m.kind != Move::Kind::Slide) throw InputError("expected a slide sequence");
        if (side(m.from) == 0 && side(m.to) == 0) {
            if (m.from != m.to) out.moves.push_back(Move::jump(m.from, m.to));
        } else if (side(m.from) == 0 && side(m.to) == 1) {
            transit[m.to].push_back(m.from);
        } else if (side(m.from) == 1 && side(m.to) == 0) {
            auto it = transit.find(m.from);
            if (it == transit.end() || it->second.empty())
                throw InputError("slide from the independent side without a matching entry");
            int origin = it->second.front();
            it->second.pop_front();
            if (origin != m.to) out.moves.push_back(Move::jump(origin, m.to));
        } else {
            throw InputError("slide within the independent side is impossible");
        }
    }
    for (auto& [w, q] : transit)
        if (!q.empty()) throw InputError("sequence endpoints must avoid the independent side");
    return out;
}

ReductionOutput bipartite_reduction(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw InputError("bipartite reduction needs at least one vertex");
    auto orig_edges = g.edges();
    const int m = static_cast<int>(orig_edges.size());
    // Layout: originals 0..n-1, subdivision vertices n..n+m-1, then x, y.
    const int x = n + m;
    const int y = n + m + 1;
    ReductionOutput out;
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < m; ++e) {
        edges.emplace_back(orig_edges[e].first, n + e);
        edges.emplace_back(orig_edges[e].second, n + e);
    }
    for (int i = 0; i < n; ++i) edges.emplace_back(i, x);
    edges.emplace_back(x, y);
    out.graph = Graph::from_edges(n + m + 2, edges);
    out.vmap.resize(n);
    out.tags.assign(n + m + 2, VertexRole::OriginalCopy);
    out.gadget_edge.assign(n + m + 2, {-1, -1});
    for (int i = 0; i < n; ++i) out.vmap[i] = i;
    for (int e = 0; e < m; ++e) {
        out.tags[n + e] = VertexRole::ZGadget;
        out.gadget_edge[n + e] = orig_edges[e];
    }
    out.tags[x] = VertexRole::ApexX;
    out.tags[y] = VertexRole::PendantY;
    return out;
}

ReductionOutput incidence_subdivision(const Graph& g) {
    const int n = g.vertex_count();
    auto orig_edges = g.edges();
    const int m = static_cast<int>(orig_edges.size());
    ReductionOutput out;
    std::vector<std::pair<int, int>> edges = orig_edges;
    for (int e = 0; e < m; ++e) {
        edges.emplace_back(orig_edges[e].first, n + e);
        edges.emplace_back(orig_edges[e].second, n + e);
    }
    out.graph = Graph::from_edges(n + m, edges);
    out.vmap.resize(n);
    out.tags.assign(n + m, VertexRole::OriginalCopy);
    out.gadget_edge.assign(n + m, {-1, -1});
    for (int i = 0; i < n; ++i) out.vmap[i] = i;
    for (int e = 0; e < m; ++e) {
        out.tags[n + e] = VertexRole::ZGadget;
        out.gadget_edge[n + e] = orig_edges[e];
    }
    return out;
}

int bandwidth_of(const Graph& g, const std::vector<int>& label) {
    if (static_cast<int>(label.size()) != g.vertex_count())
        throw InputError("labeling size mismatch");
    int bw = 0;
    for (auto [u, v] : g.edges()) bw = std::max(bw, std::abs(label[u] - label[v]));
    return bw;
}

Labeling bandwidth_relabel(const std::vector<int>& label, int k, const ReductionOutput& r) {
    const int n = static_cast<int>(r.vmap.size());
    const int total = r.graph.vertex_count();
    if (static_cast<int>(label.size()) != n) throw InputError("labeling size mismatch");
    if (k <= 0) throw InputError("bandwidth must be positive");
    {
        std::vector<int> sorted = label;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("labels must be distinct");
        if (sorted.front() < 1) throw InputError("labels must be positive");
    }
    for (int v = 0; v < total; ++v) {
        if (r.tags[v] == VertexRole::ZGadget) continue;
        if (r.tags[v] != VertexRole::OriginalCopy)
            throw InputError("relabeling applies to incidence subdivisions only");
    }

    // Spread originals k+1 apart, then drop each subdivision vertex into
    // the gap after its lower-labeled endpoint.
    std::vector<long long> spread(total, 0);
    for (int i = 0; i < n; ++i)
        spread[r.vmap[i]] = 1 + static_cast<long long>(label[i] - 1) * (k + 1);
    for (int v = 0; v < total; ++v) {
        if (r.tags[v] != VertexRole::ZGadget) continue;
        auto [a, b] = r.gadget_edge[v];
        int lo = label[a] <= label[b] ? a : b;
        int hi = label[a] <= label[b] ? b : a;
        int gap = label[hi] - label[lo];
        if (gap > k)
            throw InputError("edge " + std::to_string(a + 1) + "-" + std::to_string(b + 1) +
                             " exceeds bandwidth " + std::to_string(k));
        spread[v] = spread[r.vmap[lo]] + gap;
    }

    // Compact to consecutive labels; gaps only shrink.
    std::vector<int> order(total);
    for (int v = 0; v < total; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return spread[a] < spread[b]; });
    Labeling out;
    out.label.assign(total, 0);
    for (int rank = 0; rank < total; ++rank) out.label[order[rank]] = rank + 1;
    out.bandwidth_bound = k * (k + 1);
    return out;
}

NamedGraph gen_gell(int ell) {
    if (ell < 3) throw InputError("gadget family needs at least 3 hubs");
    // Ids: u, v, then hubs w_i, then triangle mates a_i (with u) and b_i
    // (with v).
    const int u = 0, v = 1;
    auto w = [&](int i) { return 2 + i; };
    auto a = [&](int i) { return 2 + ell + i; };
    auto b = [&](int i) { return 2 + 2 * ell + i; };
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < ell; ++i) {
        edges.emplace_back(u, a(i));
        edges.emplace_back(u, w(i));
        edges.emplace_back(a(i), w(i));
        edges.emplace_back(v, b(i));
        edges.emplace_back(v, w(i));
        edges.emplace_back(b(i), w(i));
    }
    NamedGraph out;
    out.graph = Graph::from_edges(3 * ell + 2, edges);
    out.names.assign(3 * ell + 2, "");
    out.names[u] = "u";
    out.names[v] = "v";
    for (int i = 0; i < ell; ++i) {
        out.names[w(i)] = "w" + std::to_string(i + 1);
        out.names[a(i)] = "a" + std::to_string(i + 1);
        out.names[b(i)] = "b" + std::to_string(i + 1);
    }
    return out;
}

NamedGraph gen_star(int n) {
    if (n < 1) throw InputError("star needs at least one leaf");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
    NamedGraph out;
    out.graph = Graph::from_edges(n + 1, edges);
    out.names.assign(n + 1, "");
    out.names[0] = "c";
    for (int i = 1; i <= n; ++i) out.names[i] = "l" + std::to_string(i);
    return out;
}

} // namespace dsr
