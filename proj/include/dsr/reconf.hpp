#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dsr/graph.hpp"

namespace dsr {

// Token multiset over vertices. Several tokens may sit on one vertex;
// tokens carry no identity, so a configuration is exactly its counts.
// Stored as (vertex, count) entries sorted by vertex — that sorted list
// is also the canonical key used for hashing and ordering.
class Configuration {
public:
    Configuration() = default;
    static Configuration from_vertices(const std::vector<int>& vs);

    int count(int v) const;
    int size() const { return size_; }
    bool empty() const { return size_ == 0; }

    void add(int v);
    // Precondition: count(v) >= 1. Throws InputError otherwise.
    void remove(int v);

    // Distinct occupied vertices, ascending.
    std::vector<int> support() const;
    // One entry per token, ascending.
    std::vector<int> to_vertex_list() const;
    const std::vector<std::pair<int, int>>& entries() const { return counts_; }

    bool operator==(const Configuration&) const = default;
    auto operator<=>(const Configuration&) const = default;

private:
    std::vector<std::pair<int, int>> counts_;
    int size_ = 0;
};

struct ConfigurationHash {
    std::size_t operator()(const Configuration& c) const {
        std::size_t h = 1469598103934665603ull;
        for (auto [v, k] : c.entries()) {
            h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
            h = (h ^ static_cast<std::size_t>(k)) * 1099511628211ull;
        }
        return h;
    }
};

enum class Rule { TS, TJ, TAR };

std::string rule_name(Rule r);

struct Move {
    enum class Kind { Slide, Jump, Add, Remove };
    Kind kind = Kind::Slide;
    int from = -1; // unused for Add
    int to = -1;   // unused for Remove

    static Move slide(int u, int v) { return {Kind::Slide, u, v}; }
    static Move jump(int u, int v) { return {Kind::Jump, u, v}; }
    static Move add(int v) { return {Kind::Add, -1, v}; }
    static Move remove(int u) { return {Kind::Remove, u, -1}; }

    bool operator==(const Move&) const = default;
    auto operator<=>(const Move&) const = default;
};

std::string move_name(const Move& m); // e.g. "slide 2 3" (1-based), for diagnostics

// A reconfiguration sequence: starting configuration plus moves. For TAR
// sequences tar_cap bounds every intermediate size; it is ignored for
// TS/TJ.
struct ReconfSequence {
    Rule rule = Rule::TS;
    int tar_cap = 0;
    Configuration start;
    std::vector<Move> moves;
};

struct Instance {
    Graph graph;
    Configuration source;
    Configuration target;
    Rule rule = Rule::TS;
    int tar_cap = 0; // 0 means "default": max endpoint size + 1
};

int effective_tar_cap(const Instance& inst);

// Domination test for a token multiset (counts beyond one don't help).
bool is_dominating(const Graph& g, const Configuration& c);

// Applies one move, validating only move legality (token present, edge
// present, vertex range) — not domination. Throws InputError with the
// offending move otherwise.
Configuration apply_move(const Graph& g, const Configuration& c, const Move& m);

// Verdict of verify_sequence. Configurations are indexed 0..moves.size(),
// with index 0 the start; failing_index names the first bad one.
struct SequenceVerdict {
    bool valid = false;
    int failing_index = -1;
    std::string reason;
};

// Full check of a sequence against an instance: the start must equal the
// instance source, every configuration (start included) must dominate,
// every move must be legal under the rule (TAR sizes capped), and the
// final configuration must equal the target. Never throws on sequence
// problems — they come back as verdicts.
SequenceVerdict verify_sequence(const Instance& inst, const ReconfSequence& seq);

// Exact reversal: slides/jumps flip direction, add(v) becomes remove(v)
// and vice versa. The input must be valid from its own start (domination
// included); throws InputError otherwise.
ReconfSequence reverse_sequence(const Graph& g, const ReconfSequence& seq);

} // namespace dsr
