#include "dsr/reconf.hpp"

#include <algorithm>

namespace dsr {

Configuration Configuration::from_vertices(const std::vector<int>& vs) {
    Configuration c;
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    for (int v : sorted) {
        if (v < 0) throw InputError("negative vertex id in configuration");
        if (!c.counts_.empty() && c.counts_.back().first == v)
            ++c.counts_.back().second;
        else
            c.counts_.emplace_back(v, 1);
    }
    c.size_ = static_cast<int>(vs.size());
    return c;
}

int Configuration::count(int v) const {
    auto it = std::lower_bound(counts_.begin(), counts_.end(), std::pair{v, 0});
    if (it != counts_.end() && it->first == v) return it->second;
    return 0;
}

void Configuration::add(int v) {
    auto it = std::lower_bound(counts_.begin(), counts_.end(), std::pair{v, 0});
    if (it != counts_.end() && it->first == v)
        ++it->second;
    else
        counts_.insert(it, {v, 1});
    ++size_;
}

void Configuration::remove(int v) {
    auto it = std::lower_bound(counts_.begin(), counts_.end(), std::pair{v, 0});
    if (it == counts_.end() || it->first != v)
        throw InputError("no token on vertex " + std::to_string(v + 1));
    if (--it->second == 0) counts_.erase(it);
    --size_;
}

std::vector<int> Configuration::support() const {
    std::vector<int> out;
    out.reserve(counts_.size());
    for (auto& [v, k] : counts_) out.push_back(v);
    return out;
}

std::vector<int> Configuration::to_vertex_list() const {
    std::vector<int> out;
    out.reserve(size_);
    for (auto& [v, k] : counts_)
        for (int i = 0; i < k; ++i) out.push_back(v);
    return out;
}

std::string rule_name(Rule r) {
    switch (r) {
        case Rule::TS: return "ts";
        case Rule::TJ: return "tj";
        case Rule::TAR: return "tar";
    }
    return "?";
}

std::string move_name(const Move& m) {
    switch (m.kind) {
        case Move::Kind::Slide:
            return "slide " + std::to_string(m.from + 1) + " " + std::to_string(m.to + 1);
        case Move::Kind::Jump:
            return "jump " + std::to_string(m.from + 1) + " " + std::to_string(m.to + 1);
        case Move::Kind::Add: return "add " + std::to_string(m.to + 1);
        case Move::Kind::Remove: return "rm " + std::to_string(m.from + 1);
    }
    return "?";
}

int effective_tar_cap(const Instance& inst) {
    if (inst.tar_cap > 0) return inst.tar_cap;
    return std::max(inst.source.size(), inst.target.size()) + 1;
}

bool is_dominating(const Graph& g, const Configuration& c) {
    VertexSet covered(g.vertex_count());
    for (auto& [v, k] : c.entries()) {
        g.check_vertex(v);
        covered.insert(v);
        for (int w : g.neighbors(v)) covered.insert(w);
    }
    return covered.size() == g.vertex_count();
}

Configuration apply_move(const Graph& g, const Configuration& c, const Move& m) {
    Configuration out = c;
    switch (m.kind) {
        case Move::Kind::Slide:
            g.check_vertex(m.from);
            g.check_vertex(m.to);
            if (c.count(m.from) == 0)
                throw InputError("illegal move (" + move_name(m) + "): no token on source");
            if (!g.has_edge(m.from, m.to))
                throw InputError("illegal move (" + move_name(m) + "): no such edge");
            out.remove(m.from);
            out.add(m.to);
            break;
        case Move::Kind::Jump:
            g.check_vertex(m.from);
            g.check_vertex(m.to);
            if (c.count(m.from) == 0)
                throw InputError("illegal move (" + move_name(m) + "): no token on source");
            out.remove(m.from);
            out.add(m.to);
            break;
        case Move::Kind::Add:
            g.check_vertex(m.to);
            out.add(m.to);
            break;
        case Move::Kind::Remove:
            g.check_vertex(m.from);
            if (c.count(m.from) == 0)
                throw InputError("illegal move (" + move_name(m) + "): no token on source");
            out.remove(m.from);
            break;
    }
    return out;
}

namespace {

bool kind_matches_rule(Move::Kind k, Rule r) {
    switch (r) {
        case Rule::TS: return k == Move::Kind::Slide;
        case Rule::TJ: return k == Move::Kind::Jump;
        case Rule::TAR: return k == Move::Kind::Add || k == Move::Kind::Remove;
    }
    return false;
}

} // namespace

SequenceVerdict verify_sequence(const Instance& inst, const ReconfSequence& seq) {
    const Graph& g = inst.graph;
    if (seq.start != inst.source)
        return {false, 0, "start configuration differs from instance source"};
    if (!is_dominating(g, seq.start)) return {false, 0, "not dominating"};

    const int cap =
        inst.rule == Rule::TAR ? (seq.tar_cap > 0 ? seq.tar_cap : effective_tar_cap(inst)) : 0;
    if (inst.rule == Rule::TAR && seq.start.size() > cap)
        return {false, 0, "size exceeds cap"};

    Configuration cur = seq.start;
    for (std::size_t i = 0; i < seq.moves.size(); ++i) {
        const Move& m = seq.moves[i];
        const int idx = static_cast<int>(i) + 1;
        if (!kind_matches_rule(m.kind, inst.rule))
            return {false, idx, "move kind violates rule (" + move_name(m) + ")"};
        try {
            cur = apply_move(g, cur, m);
        } catch (const InputError& e) {
            return {false, idx, e.what()};
        }
        if (inst.rule == Rule::TAR && cur.size() > cap)
            return {false, idx, "size exceeds cap"};
        if (!is_dominating(g, cur)) return {false, idx, "not dominating"};
    }
    if (cur != inst.target)
        return {false, static_cast<int>(seq.moves.size()), "final configuration mismatch"};
    return {true, -1, ""};
}

ReconfSequence reverse_sequence(const Graph& g, const ReconfSequence& seq) {
    // Replay the input to find its final configuration; the input must be
    // valid on its own (legal moves, every configuration dominating).
    Configuration cur = seq.start;
    if (!is_dominating(g, cur)) throw InputError("sequence start is not dominating");
    for (const Move& m : seq.moves) {
        cur = apply_move(g, cur, m);
        if (!is_dominating(g, cur))
            throw InputError("sequence passes through a non-dominating configuration");
    }
    ReconfSequence out;
    out.rule = seq.rule;
    out.tar_cap = seq.tar_cap;
    out.start = cur;
    out.moves.reserve(seq.moves.size());
    for (auto it = seq.moves.rbegin(); it != seq.moves.rend(); ++it) {
        switch (it->kind) {
            case Move::Kind::Slide: out.moves.push_back(Move::slide(it->to, it->from)); break;
            case Move::Kind::Jump: out.moves.push_back(Move::jump(it->to, it->from)); break;
            case Move::Kind::Add: out.moves.push_back(Move::remove(it->to)); break;
            case Move::Kind::Remove: out.moves.push_back(Move::add(it->from)); break;
        }
    }
    return out;
}

} // namespace dsr
