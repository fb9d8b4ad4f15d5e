#include "dsr/generators.hpp"

#include <algorithm>

namespace dsr {

int Rng::below(int n) {
    if (n <= 0) throw InputError("random range must be positive");
    return static_cast<int>(next() % static_cast<std::uint64_t>(n));
}

Graph gen_path(int n) {
    if (n < 1) throw InputError("path needs at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph random_tree(int n, Rng& rng) {
    if (n < 1) throw InputError("tree needs at least one vertex");
    if (n == 1) return Graph::from_edges(1, {});
    if (n == 2) return Graph::from_edges(2, {{0, 1}});
    std::vector<int> prufer(n - 2);
    for (int& x : prufer) x = rng.below(n);
    std::vector<int> degree(n, 1);
    for (int x : prufer) ++degree[x];
    std::vector<std::pair<int, int>> edges;
    std::vector<char> used(n, 0);
    for (int x : prufer) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] == 1 && !used[leaf]) {
                edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
                used[leaf] = 1;
                --degree[x];
                break;
            }
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1 && !used[v]) (a < 0 ? a : b) = v;
    edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
}

Graph random_banded_tree(int n, int band, Rng& rng) {
    if (n < 1) throw InputError("tree needs at least one vertex");
    if (band < 1) throw InputError("band must be positive");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) {
        const int parent = i - 1 - rng.below(std::min(i, band));
        edges.emplace_back(parent, i);
    }
    return Graph::from_edges(n, edges);
}

IntervalFamily random_interval_family(int n, Rng& rng) {
    if (n < 1) throw InputError("interval family needs at least one interval");
    IntervalFamily f(n);
    for (int i = 0; i < n; ++i) {
        const int left = 1 + rng.below(2 * n);
        const int len = rng.below(n + 1);
        f[i].left = left;
        f[i].right = left + len;
    }
    return f;
}

namespace {

Cotree build_cotree(std::vector<int> span, Cotree::Kind kind, Rng& rng) {
    std::sort(span.begin(), span.end());
    Cotree node;
    node.span = span;
    if (span.size() == 1) {
        node.kind = Cotree::Kind::Leaf;
        node.leaf_vertex = span[0];
        return node;
    }
    node.kind = kind;
    const int size = static_cast<int>(span.size());
    const int parts = 2 + (size > 2 ? rng.below(std::min(size - 1, 3)) : 0);
    // Random composition: shuffle, then split at sorted random cut points.
    for (int i = size - 1; i > 0; --i) std::swap(span[i], span[rng.below(i + 1)]);
    std::vector<int> cuts{0, size};
    while (static_cast<int>(cuts.size()) < parts + 1) {
        const int c = 1 + rng.below(size - 1);
        if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    const Cotree::Kind child_kind =
        kind == Cotree::Kind::Union ? Cotree::Kind::Join : Cotree::Kind::Union;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        std::vector<int> part(span.begin() + cuts[i], span.begin() + cuts[i + 1]);
        node.children.push_back(build_cotree(std::move(part), child_kind, rng));
    }
    std::sort(node.children.begin(), node.children.end(),
              [](const Cotree& a, const Cotree& b) { return a.span.front() < b.span.front(); });
    return node;
}

} // namespace

Cotree random_cotree(int n, Rng& rng) {
    if (n < 1) throw InputError("cotree needs at least one vertex");
    std::vector<int> span(n);
    for (int i = 0; i < n; ++i) span[i] = i;
    const Cotree::Kind root =
        rng.below(2) == 0 ? Cotree::Kind::Union : Cotree::Kind::Join;
    return build_cotree(std::move(span), root, rng);
}

} // namespace dsr
