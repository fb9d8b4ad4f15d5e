#pragma once

#include <cstdint>
#include <vector>

#include "dsr/cograph.hpp"
#include "dsr/graph.hpp"

namespace dsr {

// Deterministic 64-bit generator (splitmix64), so generated corpora and
// generator output files are byte-identical across platforms and
// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, n); requires n >= 1.
    int below(int n);

private:
    std::uint64_t state_;
};

// Path on n vertices, edges i -- i+1.
Graph gen_path(int n);

// Uniform random labeled tree via a Prüfer sequence (n >= 1).
Graph random_tree(int n, Rng& rng);

// Random tree whose identity labeling v -> v+1 has bandwidth <= band:
// each vertex i >= 1 picks its parent from [max(0, i-band), i-1].
Graph random_banded_tree(int n, int band, Rng& rng);

// n random closed intervals with small integer endpoints.
IntervalFamily random_interval_family(int n, Rng& rng);

// Random cotree over vertices 0..n-1 (children ordered by smallest span
// member, spans sorted); expand_cotree turns it into the cograph.
Cotree random_cotree(int n, Rng& rng);

} // namespace dsr
