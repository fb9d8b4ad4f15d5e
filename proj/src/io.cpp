#include "dsr/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace dsr {

namespace {

struct Row {
    int line = 0;                    // 1-based file line
    std::vector<std::string> tokens; // non-empty; tokens[0] is the type
};

[[noreturn]] void fail(int line, const std::string& msg) {
    throw InputError("line " + std::to_string(line) + ": " + msg);
}

// Splits into whitespace-separated token rows, dropping blank lines and
// `c` comment lines.
std::vector<Row> tokenize(const std::string& text) {
    std::vector<Row> rows;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::istringstream ls(raw);
        Row row;
        row.line = line;
        std::string tok;
        while (ls >> tok) row.tokens.push_back(tok);
        if (row.tokens.empty() || row.tokens[0] == "c") continue;
        rows.push_back(std::move(row));
    }
    return rows;
}

long long parse_int(const Row& row, std::size_t idx, const std::string& what) {
    const std::string& s = row.tokens.at(idx);
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (errno != 0 || end != s.c_str() + s.size() || s.empty())
        fail(row.line, what + " must be an integer, got '" + s + "'");
    return v;
}

double parse_real(const Row& row, std::size_t idx, const std::string& what) {
    const std::string& s = row.tokens.at(idx);
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (errno != 0 || end != s.c_str() + s.size() || s.empty())
        fail(row.line, what + " must be a number, got '" + s + "'");
    return v;
}

void want_tokens(const Row& row, std::size_t count, const std::string& shape) {
    if (row.tokens.size() != count)
        fail(row.line, "expected '" + shape + "'");
}

// 1-based vertex id within [1, n].
int parse_vertex(const Row& row, std::size_t idx, int n, const std::string& what) {
    const long long v = parse_int(row, idx, what);
    if (v < 1 || v > n)
        fail(row.line, what + " " + std::to_string(v) + " is outside 1.." + std::to_string(n));
    return static_cast<int>(v - 1);
}

struct GraphSections {
    int n = 0, m = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_lines;
    std::optional<IntervalFamily> intervals;
    std::optional<std::vector<int>> labels;
    // Instance-only rows, collected for the caller.
    std::optional<Row> r_row, s_row, t_row;
};

GraphSections parse_sections(const std::string& text, bool instance_rows_allowed) {
    GraphSections out;
    bool have_p = false;
    std::vector<char> interval_seen, label_seen;
    for (const Row& row : tokenize(text)) {
        const std::string& kind = row.tokens[0];
        if (kind == "p") {
            if (have_p) fail(row.line, "duplicate 'p' header");
            want_tokens(row, 4, "p ds <n> <m>");
            if (row.tokens[1] != "ds")
                fail(row.line, "expected problem type 'ds', got '" + row.tokens[1] + "'");
            const long long n = parse_int(row, 2, "vertex count");
            const long long m = parse_int(row, 3, "edge count");
            if (n < 1 || n > 1000000) fail(row.line, "vertex count must be in 1..1000000");
            if (m < 0) fail(row.line, "edge count must be non-negative");
            out.n = static_cast<int>(n);
            out.m = static_cast<int>(m);
            interval_seen.assign(out.n, 0);
            label_seen.assign(out.n, 0);
            have_p = true;
            continue;
        }
        if (!have_p) fail(row.line, "'" + kind + "' line before the 'p ds <n> <m>' header");
        if (kind == "e") {
            want_tokens(row, 3, "e <u> <v>");
            const int u = parse_vertex(row, 1, out.n, "edge endpoint");
            const int v = parse_vertex(row, 2, out.n, "edge endpoint");
            if (u == v) fail(row.line, "self-loop at vertex " + std::to_string(u + 1));
            out.edges.emplace_back(u, v);
            out.edge_lines.push_back(row.line);
        } else if (kind == "i") {
            want_tokens(row, 4, "i <v> <left> <right>");
            const int v = parse_vertex(row, 1, out.n, "interval vertex");
            const double l = parse_real(row, 2, "left endpoint");
            const double r = parse_real(row, 3, "right endpoint");
            if (l > r) fail(row.line, "interval has left endpoint beyond its right");
            if (!out.intervals) out.intervals.emplace(out.n);
            if (interval_seen[v])
                fail(row.line, "duplicate interval for vertex " + std::to_string(v + 1));
            interval_seen[v] = 1;
            (*out.intervals)[v] = {l, r};
        } else if (kind == "l") {
            want_tokens(row, 3, "l <v> <label>");
            const int v = parse_vertex(row, 1, out.n, "labeled vertex");
            const long long lab = parse_int(row, 2, "label");
            if (lab < 1) fail(row.line, "labels must be positive");
            if (!out.labels) out.labels.emplace(out.n, 0);
            if (label_seen[v]) fail(row.line, "duplicate label for vertex " + std::to_string(v + 1));
            label_seen[v] = 1;
            (*out.labels)[v] = static_cast<int>(lab);
        } else if (kind == "r" || kind == "s" || kind == "t") {
            if (!instance_rows_allowed)
                fail(row.line, "'" + kind + "' is an instance line; this file holds a graph only");
            auto& slot = kind == "r" ? out.r_row : kind == "s" ? out.s_row : out.t_row;
            if (slot) fail(row.line, "duplicate '" + kind + "' line");
            slot = row;
        } else {
            fail(row.line, "unknown line type '" + kind + "'");
        }
    }
    if (!have_p) throw InputError("missing 'p ds <n> <m>' header");
    if (static_cast<int>(out.edges.size()) != out.m)
        throw InputError("header promises " + std::to_string(out.m) + " edges but the file has " +
                         std::to_string(out.edges.size()));
    if (out.intervals)
        for (int v = 0; v < out.n; ++v)
            if (!interval_seen[v])
                throw InputError("interval lines must cover every vertex; vertex " +
                                 std::to_string(v + 1) + " has none");
    if (out.labels)
        for (int v = 0; v < out.n; ++v)
            if (!label_seen[v])
                throw InputError("label lines must cover every vertex; vertex " +
                                 std::to_string(v + 1) + " has none");
    return out;
}

Graph build_graph(const GraphSections& s) {
    // Duplicate detection here so the error can name the line.
    std::vector<std::vector<char>> seen(s.n);
    for (std::size_t i = 0; i < s.edges.size(); ++i) {
        auto [u, v] = s.edges[i];
        const int a = std::min(u, v), b = std::max(u, v);
        if (seen[a].empty()) seen[a].assign(s.n, 0);
        if (seen[a][b])
            fail(s.edge_lines[i], "duplicate edge " + std::to_string(a + 1) + " " +
                                      std::to_string(b + 1));
        seen[a][b] = 1;
    }
    return Graph::from_edges(s.n, s.edges);
}

Configuration parse_config_row(const Row& row, int n) {
    if (row.tokens.size() < 2)
        fail(row.line, "'" + row.tokens[0] + "' line must list at least one token vertex");
    Configuration c;
    for (std::size_t i = 1; i < row.tokens.size(); ++i)
        c.add(parse_vertex(row, i, n, "token vertex"));
    return c;
}

std::string format_endpoint(double x) {
    if (x == std::floor(x) && std::abs(x) < 1e15)
        return std::to_string(static_cast<long long>(x));
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

void write_comments(std::ostringstream& os, const std::vector<std::string>& comments) {
    for (const std::string& c : comments) os << (c.empty() ? "c" : "c " + c) << "\n";
}

void write_graph_sections(std::ostringstream& os, const Graph& g, const IntervalFamily* intervals,
                          const std::vector<int>* labels) {
    os << "p ds " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) os << "e " << u + 1 << " " << v + 1 << "\n";
    if (intervals)
        for (int v = 0; v < g.vertex_count(); ++v)
            os << "i " << v + 1 << " " << format_endpoint((*intervals)[v].left) << " "
               << format_endpoint((*intervals)[v].right) << "\n";
    if (labels)
        for (int v = 0; v < g.vertex_count(); ++v) os << "l " << v + 1 << " " << (*labels)[v]
                                                      << "\n";
}

} // namespace

ParsedGraph parse_graph_text(const std::string& text) {
    GraphSections s = parse_sections(text, false);
    return {build_graph(s), std::move(s.intervals), std::move(s.labels)};
}

ParsedInstance parse_instance_text(const std::string& text) {
    GraphSections s = parse_sections(text, true);
    if (!s.r_row) throw InputError("missing 'r' rule line");
    if (!s.s_row) throw InputError("missing 's' source line");
    if (!s.t_row) throw InputError("missing 't' target line");

    ParsedInstance out;
    out.instance.graph = build_graph(s);
    out.intervals = std::move(s.intervals);
    out.labels = std::move(s.labels);

    const Row& r = *s.r_row;
    if (r.tokens.size() < 2) fail(r.line, "expected 'r ts|tj|tar [cap]'");
    const std::string& rule = r.tokens[1];
    if (rule == "ts")
        out.instance.rule = Rule::TS;
    else if (rule == "tj")
        out.instance.rule = Rule::TJ;
    else if (rule == "tar")
        out.instance.rule = Rule::TAR;
    else
        fail(r.line, "unknown rule '" + rule + "' (want ts, tj or tar)");
    if (r.tokens.size() > 2) {
        if (out.instance.rule != Rule::TAR)
            fail(r.line, "a cap applies to the tar rule only");
        want_tokens(r, 3, "r tar [cap]");
        const long long cap = parse_int(r, 2, "cap");
        if (cap < 1) fail(r.line, "cap must be positive");
        out.instance.tar_cap = static_cast<int>(cap);
    } else if (out.instance.rule == Rule::TAR) {
        out.instance.tar_cap = 0; // default: max endpoint size + 1
    }
    if (r.tokens.size() > 3) fail(r.line, "expected 'r ts|tj|tar [cap]'");

    out.instance.source = parse_config_row(*s.s_row, out.instance.graph.vertex_count());
    out.instance.target = parse_config_row(*s.t_row, out.instance.graph.vertex_count());
    if (out.instance.rule != Rule::TAR &&
        out.instance.source.size() != out.instance.target.size())
        fail(s.t_row->line, "source and target must hold the same number of tokens under " +
                                rule_name(out.instance.rule));
    return out;
}

ParsedSequence parse_sequence_text(const std::string& text) {
    ParsedSequence out;
    for (const Row& row : tokenize(text)) {
        const std::string& kind = row.tokens[0];
        auto vertex = [&](std::size_t idx) {
            const long long v = parse_int(row, idx, "vertex");
            if (v < 1) fail(row.line, "vertex ids are 1-based");
            return static_cast<int>(v - 1);
        };
        if (kind == "slide") {
            want_tokens(row, 3, "slide <u> <v>");
            out.moves.push_back(Move::slide(vertex(1), vertex(2)));
        } else if (kind == "jump") {
            want_tokens(row, 3, "jump <u> <v>");
            out.moves.push_back(Move::jump(vertex(1), vertex(2)));
        } else if (kind == "add") {
            want_tokens(row, 2, "add <v>");
            out.moves.push_back(Move::add(vertex(1)));
        } else if (kind == "rm") {
            want_tokens(row, 2, "rm <u>");
            out.moves.push_back(Move::remove(vertex(1)));
        } else {
            fail(row.line, "unknown move '" + kind + "' (want slide, jump, add or rm)");
        }
        out.lines.push_back(row.line);
    }
    return out;
}

Mno parse_mno_text(const std::string& text) {
    std::optional<Row> order_row;
    std::vector<Row> mn_rows;
    for (const Row& row : tokenize(text)) {
        const std::string& kind = row.tokens[0];
        if (kind == "o") {
            if (order_row) fail(row.line, "duplicate 'o' order line");
            if (row.tokens.size() < 2) fail(row.line, "'o' line must list the full order");
            order_row = row;
        } else if (kind == "n") {
            want_tokens(row, 3, "n <u> <mn(u)>");
            mn_rows.push_back(row);
        } else {
            fail(row.line, "unknown line type '" + kind + "' (want o or n)");
        }
    }
    if (!order_row) throw InputError("missing 'o' order line");
    const int n = static_cast<int>(order_row->tokens.size()) - 1;
    Mno m;
    for (int i = 0; i < n; ++i)
        m.order.push_back(parse_vertex(*order_row, 1 + i, n, "order entry"));
    m.mn.assign(n, -1);
    for (const Row& row : mn_rows) {
        const int u = parse_vertex(row, 1, n, "vertex");
        const int v = parse_vertex(row, 2, n, "maximum neighbor");
        if (m.mn[u] != -1) fail(row.line, "duplicate 'n' line for vertex " + std::to_string(u + 1));
        m.mn[u] = v;
    }
    for (int u = 0; u < n; ++u)
        if (m.mn[u] == -1)
            throw InputError("missing 'n' line for vertex " + std::to_string(u + 1));
    return m;
}

IntervalFamily parse_intervals_text(const std::string& text) {
    struct Item {
        int line;
        int v;
        Interval iv;
    };
    std::vector<Item> items;
    int max_v = 0;
    for (const Row& row : tokenize(text)) {
        if (row.tokens[0] != "i")
            fail(row.line, "unknown line type '" + row.tokens[0] + "' (want i)");
        want_tokens(row, 4, "i <v> <left> <right>");
        const long long v = parse_int(row, 1, "interval vertex");
        if (v < 1) fail(row.line, "vertex ids are 1-based");
        const double l = parse_real(row, 2, "left endpoint");
        const double r = parse_real(row, 3, "right endpoint");
        if (l > r) fail(row.line, "interval has left endpoint beyond its right");
        items.push_back({row.line, static_cast<int>(v - 1), {l, r}});
        max_v = std::max(max_v, static_cast<int>(v));
    }
    if (items.empty()) throw InputError("intervals file holds no 'i' lines");
    IntervalFamily f(max_v);
    std::vector<char> seen(max_v, 0);
    for (const Item& it : items) {
        if (seen[it.v]) fail(it.line, "duplicate interval for vertex " + std::to_string(it.v + 1));
        seen[it.v] = 1;
        f[it.v] = it.iv;
    }
    for (int v = 0; v < max_v; ++v)
        if (!seen[v])
            throw InputError("interval lines must cover every vertex of 1.." +
                             std::to_string(max_v) + "; vertex " + std::to_string(v + 1) +
                             " has none");
    return f;
}

std::vector<int> parse_labels_text(const std::string& text) {
    struct Item {
        int line;
        int v;
        int label;
    };
    std::vector<Item> items;
    int max_v = 0;
    for (const Row& row : tokenize(text)) {
        if (row.tokens[0] != "l")
            fail(row.line, "unknown line type '" + row.tokens[0] + "' (want l)");
        want_tokens(row, 3, "l <v> <label>");
        const long long v = parse_int(row, 1, "labeled vertex");
        if (v < 1) fail(row.line, "vertex ids are 1-based");
        const long long lab = parse_int(row, 2, "label");
        if (lab < 1) fail(row.line, "labels must be positive");
        items.push_back({row.line, static_cast<int>(v - 1), static_cast<int>(lab)});
        max_v = std::max(max_v, static_cast<int>(v));
    }
    if (items.empty()) throw InputError("labels file holds no 'l' lines");
    std::vector<int> labels(max_v, 0);
    for (const Item& it : items) {
        if (labels[it.v] != 0)
            fail(it.line, "duplicate label for vertex " + std::to_string(it.v + 1));
        labels[it.v] = it.label;
    }
    for (int v = 0; v < max_v; ++v)
        if (labels[v] == 0)
            throw InputError("label lines must cover every vertex of 1.." +
                             std::to_string(max_v) + "; vertex " + std::to_string(v + 1) +
                             " has none");
    return labels;
}

std::string write_graph_text(const Graph& g, const std::vector<std::string>& comments,
                             const IntervalFamily* intervals, const std::vector<int>* labels) {
    std::ostringstream os;
    write_comments(os, comments);
    write_graph_sections(os, g, intervals, labels);
    return os.str();
}

std::string write_instance_text(const Instance& inst, const std::vector<std::string>& comments) {
    std::ostringstream os;
    write_comments(os, comments);
    write_graph_sections(os, inst.graph, nullptr, nullptr);
    os << "r " << rule_name(inst.rule);
    if (inst.rule == Rule::TAR && inst.tar_cap > 0) os << " " << inst.tar_cap;
    os << "\n";
    os << "s";
    for (int v : inst.source.to_vertex_list()) os << " " << v + 1;
    os << "\n";
    os << "t";
    for (int v : inst.target.to_vertex_list()) os << " " << v + 1;
    os << "\n";
    return os.str();
}

std::string write_sequence_text(const std::vector<Move>& moves,
                                const std::vector<std::string>& comments) {
    std::ostringstream os;
    write_comments(os, comments);
    for (const Move& m : moves) {
        switch (m.kind) {
            case Move::Kind::Slide: os << "slide " << m.from + 1 << " " << m.to + 1; break;
            case Move::Kind::Jump: os << "jump " << m.from + 1 << " " << m.to + 1; break;
            case Move::Kind::Add: os << "add " << m.to + 1; break;
            case Move::Kind::Remove: os << "rm " << m.from + 1; break;
        }
        os << "\n";
    }
    return os.str();
}

std::string write_mno_text(const Mno& m, const std::vector<std::string>& comments) {
    std::ostringstream os;
    write_comments(os, comments);
    os << "o";
    for (int v : m.order) os << " " << v + 1;
    os << "\n";
    for (std::size_t u = 0; u < m.mn.size(); ++u)
        os << "n " << u + 1 << " " << m.mn[u] + 1 << "\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "' for reading");
    std::ostringstream os;
    os << in.rdbuf();
    if (in.bad()) throw InputError("failed reading '" + path + "'");
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw InputError("failed writing '" + path + "'");
}

} // namespace dsr
