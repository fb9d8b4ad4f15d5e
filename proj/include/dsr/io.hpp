#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsr/dually_chordal.hpp"
#include "dsr/reconf.hpp"

namespace dsr {

// Text formats (all vertex ids 1-based, whitespace-separated):
//
//   graph file      c <comment>                (anywhere)
//                   p ds <n> <m>               (first non-comment line)
//                   e <u> <v>                  (m lines)
//                   i <v> <left> <right>       (optional; all vertices or none)
//                   l <v> <label>              (optional; all vertices or none)
//
//   instance file   graph file lines plus exactly one of each:
//                   r ts | r tj | r tar [cap]
//                   s <v> <v> ...              (source; one id per token)
//                   t <v> <v> ...              (target)
//
//   sequence file   c comments plus one move per line:
//                   slide <u> <v> | jump <u> <v> | add <v> | rm <u>
//
//   mno file        c comments, one `o <v1> ... <vn>` order line, and
//                   one `n <u> <mn(u)>` line per vertex
//
//   intervals file  c comments plus `i <v> <left> <right>`, every vertex
//                   of 1..n exactly once
//
//   labels file     c comments plus `l <v> <label>`, every vertex once
//
// Unknown line types are errors, not skipped. All parsers throw
// InputError naming the offending line.

struct ParsedGraph {
    Graph graph;
    std::optional<IntervalFamily> intervals;
    std::optional<std::vector<int>> labels; // per vertex
};

struct ParsedInstance {
    Instance instance;
    std::optional<IntervalFamily> intervals;
    std::optional<std::vector<int>> labels;
};

struct ParsedSequence {
    std::vector<Move> moves;
    std::vector<int> lines; // file line number of each move
};

ParsedGraph parse_graph_text(const std::string& text);
ParsedInstance parse_instance_text(const std::string& text);
ParsedSequence parse_sequence_text(const std::string& text);
Mno parse_mno_text(const std::string& text);
IntervalFamily parse_intervals_text(const std::string& text);
std::vector<int> parse_labels_text(const std::string& text);

// Writers emit normalized files: comments first, then the sections in
// the order shown above, edges ascending. Writing what a parser returned
// reproduces the bytes of a written file exactly.
std::string write_graph_text(const Graph& g, const std::vector<std::string>& comments = {},
                             const IntervalFamily* intervals = nullptr,
                             const std::vector<int>* labels = nullptr);
std::string write_instance_text(const Instance& inst,
                                const std::vector<std::string>& comments = {});
std::string write_sequence_text(const std::vector<Move>& moves,
                                const std::vector<std::string>& comments = {});
std::string write_mno_text(const Mno& m, const std::vector<std::string>& comments = {});

// Whole-file helpers; throw InputError on I/O failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace dsr
