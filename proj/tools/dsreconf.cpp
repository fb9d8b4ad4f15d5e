// dsreconf — dominating set reconfiguration toolkit.
//
// Subcommands:
//   solve   decide an instance (polynomial solvers where possible)
//   verify  check a move sequence against an instance
//   oracle  exact reachability, shortest distance, or state-space stats
//   reduce  emit a reduction of a graph (split / bipartite / incidence)
//   gen     emit generated graph families
//
// Exit codes: 0 = YES/valid, 1 = NO/invalid, 2 = usage or input error,
// 3 = resource guard exceeded.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "dsr/cograph.hpp"
#include "dsr/dually_chordal.hpp"
#include "dsr/errors.hpp"
#include "dsr/generators.hpp"
#include "dsr/graph.hpp"
#include "dsr/io.hpp"
#include "dsr/oracle.hpp"
#include "dsr/reconf.hpp"
#include "dsr/transforms.hpp"

namespace {

using namespace dsr;

std::string v1(int v) { return std::to_string(v + 1); }

std::string vertex_list(const std::vector<int>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ' ';
        s += v1(vs[i]);
    }
    return s;
}

Graph complement_graph(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph::from_edges(g.vertex_count(), edges);
}

bool same_graph(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts, std::vector<int>& to_local) {
    to_local.assign(g.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) to_local[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : verts)
        for (int v : g.neighbors(u))
            if (u < v && to_local[v] >= 0) edges.emplace_back(to_local[u], to_local[v]);
    return Graph::from_edges(static_cast<int>(verts.size()), edges);
}

Configuration relabel_config(const Configuration& c, const std::vector<int>& to_local) {
    std::vector<int> vs;
    for (auto [v, cnt] : c.entries())
        for (int i = 0; i < cnt; ++i) vs.push_back(to_local[v]);
    return Configuration::from_vertices(vs);
}

// ---- solve -----------------------------------------------------------

struct SolveOptions {
    std::string instance_path;
    std::string cls = "auto";
    std::string mno_path;
    std::string intervals_path;
    std::string emit_path;
    bool explain = false;
    std::size_t max_states = SearchLimits{}.max_states;
};

struct SolveOutcome {
    bool yes = false;
    std::optional<ReconfSequence> sequence;
    std::vector<std::string> notes; // printed to stderr under --explain
};

void require_ts(const Instance& inst, const std::string& cls) {
    if (inst.rule != Rule::TS)
        throw InputError("the " + cls + " solver handles the ts rule only; this instance uses " +
                         rule_name(inst.rule));
}

// Resolves the maximum neighborhood ordering to use: an explicit file
// wins, then an interval family (checked against the graph), then
// construction from the graph itself (tree/forest, or bounded search).
std::optional<Mno> resolve_mno(const Graph& g, const SolveOptions& opt,
                               const std::optional<IntervalFamily>& embedded,
                               std::vector<std::string>& notes) {
    if (!opt.mno_path.empty()) {
        notes.push_back("mno: from file");
        return parse_mno_text(read_file(opt.mno_path));
    }
    std::optional<IntervalFamily> fam;
    if (!opt.intervals_path.empty())
        fam = parse_intervals_text(read_file(opt.intervals_path));
    else
        fam = embedded;
    if (fam) {
        auto [ig, m] = mno_from_intervals(*fam);
        if (!same_graph(ig, g))
            throw InputError("the interval family does not describe this graph");
        notes.push_back("mno: from intervals");
        return m;
    }
    auto m = acquire_mno(g);
    if (m) notes.push_back("mno: constructed");
    return m;
}

SolveOutcome solve_with_oracle(const Instance& inst, const SolveOptions& opt) {
    SolveOutcome out;
    out.notes.push_back("class: oracle");
    SearchLimits limits;
    limits.max_states = opt.max_states;
    ReachResult r = reachable(inst, limits);
    out.yes = r.reachable;
    out.sequence = std::move(r.witness);
    out.notes.push_back("states explored: " + std::to_string(r.states_explored));
    return out;
}

SolveOutcome solve_as_cograph(const Instance& inst, const Cotree& ct) {
    SolveOutcome out;
    out.notes.push_back("class: cograph");
    out.notes.push_back("cotree: " + cotree_to_string(ct));
    JoinVerdict v = solve_cograph(inst.graph, ct, inst.source, inst.target);
    out.yes = v.reachable;
    out.sequence = std::move(v.sequence);
    out.notes.push_back("reason: " + join_reason_name(v.reason));
    return out;
}

SolveOutcome solve_as_dually_chordal(const Instance& inst, const Mno& m) {
    SolveOutcome out;
    out.notes.push_back("class: dually-chordal");
    DcVerdict v = solve_dually_chordal(inst.graph, m, inst.source, inst.target);
    out.yes = v.reachable;
    out.sequence = std::move(v.sequence);
    if (!v.reason.empty()) out.notes.push_back("reason: " + v.reason);
    for (const auto& c : v.components)
        out.notes.push_back("component {" + vertex_list(c.vertices) + "}: gamma " +
                            std::to_string(c.gamma) + ", meet " + v1(c.meeting_vertex) +
                            ", eccentricity " + std::to_string(c.eccentricity) + ", forward " +
                            std::to_string(c.forward_moves) + ", backward " +
                            std::to_string(c.backward_moves));
    return out;
}

SolveOutcome solve_as_join(const Instance& inst) {
    const Graph& g = inst.graph;
    auto cocs = components(complement_graph(g));
    if (cocs.size() < 2)
        throw InputError("not a join: the complement of the graph is connected");
    std::vector<int> side1 = cocs[0], side2;
    for (std::size_t i = 1; i < cocs.size(); ++i)
        side2.insert(side2.end(), cocs[i].begin(), cocs[i].end());
    std::sort(side2.begin(), side2.end());

    std::vector<int> order = side1;
    order.insert(order.end(), side2.begin(), side2.end());
    std::vector<int> to_local1, to_local2, to_local(g.vertex_count(), -1);
    Graph g1 = induced_subgraph(g, side1, to_local1);
    Graph g2 = induced_subgraph(g, side2, to_local2);
    for (int v : side1) to_local[v] = to_local1[v];
    for (int v : side2) to_local[v] = static_cast<int>(side1.size()) + to_local2[v];

    SolveOutcome out;
    out.notes.push_back("class: join");
    out.notes.push_back("side 1: {" + vertex_list(side1) + "}");
    out.notes.push_back("side 2: {" + vertex_list(side2) + "}");
    JoinVerdict v = decide_join(g1, g2, relabel_config(inst.source, to_local),
                                relabel_config(inst.target, to_local));
    out.yes = v.reachable;
    out.notes.push_back("reason: " + join_reason_name(v.reason));
    if (v.sequence) {
        ReconfSequence seq;
        seq.rule = Rule::TS;
        seq.start = inst.source;
        for (const Move& m : v.sequence->moves)
            seq.moves.push_back(Move::slide(order[m.from], order[m.to]));
        out.sequence = std::move(seq);
    }
    return out;
}

int cmd_solve(const SolveOptions& opt) {
    ParsedInstance pi = parse_instance_text(read_file(opt.instance_path));
    const Instance& inst = pi.instance;
    SolveOutcome out;

    if (opt.cls == "oracle") {
        out = solve_with_oracle(inst, opt);
    } else if (opt.cls == "cograph") {
        require_ts(inst, opt.cls);
        CographRecognition rec = recognize_cograph(inst.graph);
        if (!rec.cotree)
            throw InputError("not a cograph: vertices " + vertex_list(rec.failure_witness) +
                             " induce a path on four vertices");
        out = solve_as_cograph(inst, *rec.cotree);
    } else if (opt.cls == "join") {
        require_ts(inst, opt.cls);
        out = solve_as_join(inst);
    } else if (opt.cls == "dually-chordal") {
        require_ts(inst, opt.cls);
        std::vector<std::string> notes;
        auto m = resolve_mno(inst.graph, opt, pi.intervals, notes);
        if (!m) {
            if (inst.graph.vertex_count() > 12)
                throw InputError(
                    "the graph is too large for the maximum neighborhood ordering search; "
                    "provide --mno or --intervals");
            throw InputError("not dually chordal: no maximum neighborhood ordering exists");
        }
        out = solve_as_dually_chordal(inst, *m);
        out.notes.insert(out.notes.end(), notes.begin(), notes.end());
    } else if (opt.cls == "auto") {
        if (inst.rule != Rule::TS) {
            out = solve_with_oracle(inst, opt);
        } else {
            CographRecognition rec = recognize_cograph(inst.graph);
            if (rec.cotree) {
                out = solve_as_cograph(inst, *rec.cotree);
            } else {
                std::vector<std::string> notes;
                auto m = resolve_mno(inst.graph, opt, pi.intervals, notes);
                if (m) {
                    out = solve_as_dually_chordal(inst, *m);
                    out.notes.insert(out.notes.end(), notes.begin(), notes.end());
                } else {
                    out = solve_with_oracle(inst, opt);
                }
            }
        }
    } else {
        throw InputError("unknown --class value: " + opt.cls);
    }

    if (out.yes && !opt.emit_path.empty()) {
        if (!out.sequence) throw Error("solver produced no sequence for a yes verdict");
        SequenceVerdict check = verify_sequence(inst, *out.sequence);
        if (!check.valid)
            throw Error("emitted sequence failed verification: " + check.reason);
        write_file(opt.emit_path, write_sequence_text(out.sequence->moves));
        out.notes.push_back("sequence: " + std::to_string(out.sequence->moves.size()) +
                            " moves written to " + opt.emit_path);
    } else if (out.yes && out.sequence) {
        out.notes.push_back("sequence: " + std::to_string(out.sequence->moves.size()) + " moves");
    }

    if (opt.explain)
        for (const std::string& n : out.notes) std::cerr << n << "\n";
    std::cout << (out.yes ? "YES" : "NO") << "\n";
    return out.yes ? 0 : 1;
}

// ---- verify ----------------------------------------------------------

int cmd_verify(const std::string& instance_path, const std::string& sequence_path) {
    ParsedInstance pi = parse_instance_text(read_file(instance_path));
    ParsedSequence ps = parse_sequence_text(read_file(sequence_path));
    ReconfSequence seq;
    seq.rule = pi.instance.rule;
    seq.tar_cap = pi.instance.rule == Rule::TAR ? effective_tar_cap(pi.instance) : 0;
    seq.start = pi.instance.source;
    seq.moves = ps.moves;
    SequenceVerdict v = verify_sequence(pi.instance, seq);
    if (v.valid) {
        std::cout << "valid\n";
        return 0;
    }
    if (v.reason == "final configuration mismatch" || v.failing_index == 0) {
        std::cout << (v.reason == "final configuration mismatch" ? "invalid: "
                                                                 : "invalid at start: ")
                  << v.reason << "\n";
    } else {
        std::cout << "invalid at move " << v.failing_index << " (line "
                  << ps.lines[v.failing_index - 1] << "): " << v.reason << "\n";
    }
    return 1;
}

// ---- oracle ----------------------------------------------------------

int cmd_oracle(const std::string& instance_path, bool shortest, int stats_k,
               std::size_t max_states) {
    ParsedInstance pi = parse_instance_text(read_file(instance_path));
    const Instance& inst = pi.instance;
    SearchLimits limits;
    limits.max_states = max_states;

    if (stats_k > 0) {
        int cap = 0;
        if (inst.rule == Rule::TAR) cap = inst.tar_cap > 0 ? inst.tar_cap : stats_k + 1;
        ReconfGraphStats st = reconf_graph_stats(inst.graph, stats_k, inst.rule, cap, limits);
        std::cout << "configs " << st.num_configs << "\n";
        std::cout << "components " << st.num_components << "\n";
        if (st.diameter)
            std::cout << "diameter " << *st.diameter << "\n";
        else
            std::cout << "diameter inf\n";
        std::cout << "frozen " << st.frozen.size() << "\n";
        for (const Configuration& c : st.frozen)
            std::cout << "f " << vertex_list(c.to_vertex_list()) << "\n";
        return 0;
    }
    if (shortest) {
        auto d = shortest_distance(inst, limits);
        if (d) {
            std::cout << *d << "\n";
            return 0;
        }
        std::cout << "unreachable\n";
        return 1;
    }
    ReachResult r = reachable(inst, limits);
    std::cout << (r.reachable ? "YES" : "NO") << "\n";
    return r.reachable ? 0 : 1;
}

// ---- reduce ----------------------------------------------------------

int cmd_reduce(const std::string& kind, const std::string& graph_path,
               const std::string& labels_path, int bandwidth) {
    ParsedGraph pg = parse_graph_text(read_file(graph_path));
    const Graph& g = pg.graph;

    ReductionOutput r = [&] {
        if (kind == "split") return split_reduction(g);
        if (kind == "bipartite") return bipartite_reduction(g);
        if (kind == "incidence") return incidence_subdivision(g);
        throw InputError("unknown reduction kind: " + kind +
                         " (expected split, bipartite, or incidence)");
    }();

    std::vector<std::string> comments;
    comments.push_back(kind + " reduction of a graph with " + std::to_string(g.vertex_count()) +
                       " vertices and " + std::to_string(g.edge_count()) + " edges");
    for (int v = 0; v < g.vertex_count(); ++v)
        comments.push_back("map " + v1(v) + " -> " + v1(r.vmap[v]));
    for (int v = 0; v < r.graph.vertex_count(); ++v) {
        std::string line = "role " + v1(v) + " " + role_name(r.tags[v]);
        if (r.tags[v] == VertexRole::ZGadget)
            line += " (edge " + v1(r.gadget_edge[v].first) + " " + v1(r.gadget_edge[v].second) + ")";
        comments.push_back(line);
    }

    std::optional<Labeling> relabel;
    if (bandwidth > 0 || !labels_path.empty()) {
        if (kind != "incidence")
            throw InputError("--labels/--bandwidth apply to the incidence reduction only");
        if (bandwidth <= 0) throw InputError("--labels requires --bandwidth");
        std::optional<std::vector<int>> labels;
        if (!labels_path.empty())
            labels = parse_labels_text(read_file(labels_path));
        else
            labels = pg.labels;
        if (!labels)
            throw InputError("--bandwidth requires a labeling (--labels or l lines in the graph)");
        if (static_cast<int>(labels->size()) != g.vertex_count())
            throw InputError("the labeling covers " + std::to_string(labels->size()) +
                             " vertices but the graph has " + std::to_string(g.vertex_count()));
        int bw = bandwidth_of(g, *labels);
        if (bw > bandwidth)
            throw InputError("the labeling has bandwidth " + std::to_string(bw) +
                             ", above the stated bound " + std::to_string(bandwidth));
        relabel = bandwidth_relabel(*labels, bandwidth, r);
        comments.push_back("bandwidth bound " + std::to_string(relabel->bandwidth_bound));
    }

    std::cout << write_graph_text(r.graph, comments, nullptr,
                                  relabel ? &relabel->label : nullptr);
    return 0;
}

// ---- gen -------------------------------------------------------------

long long gen_param(const std::vector<long long>& params, std::size_t i, const std::string& what) {
    if (i >= params.size()) throw InputError("gen: missing parameter <" + what + ">");
    return params[i];
}

int cmd_gen(const std::string& kind, const std::vector<long long>& params) {
    auto want = [&](std::size_t count) {
        if (params.size() != count)
            throw InputError("gen " + kind + " expects " + std::to_string(count) +
                             " parameter(s), got " + std::to_string(params.size()));
    };
    auto named_comments = [](const std::string& head, const NamedGraph& ng) {
        std::vector<std::string> comments{head};
        for (std::size_t v = 0; v < ng.names.size(); ++v)
            comments.push_back("name " + std::to_string(v + 1) + " " + ng.names[v]);
        return comments;
    };

    if (kind == "gell") {
        want(1);
        long long ell = gen_param(params, 0, "ell");
        NamedGraph ng = gen_gell(static_cast<int>(ell));
        std::cout << write_graph_text(ng.graph, named_comments("gell " + std::to_string(ell), ng));
        return 0;
    }
    if (kind == "star") {
        want(1);
        long long n = gen_param(params, 0, "n");
        NamedGraph ng = gen_star(static_cast<int>(n));
        std::cout << write_graph_text(ng.graph, named_comments("star " + std::to_string(n), ng));
        return 0;
    }
    if (kind == "path") {
        want(1);
        long long n = gen_param(params, 0, "n");
        Graph g = gen_path(static_cast<int>(n));
        std::cout << write_graph_text(g, {"path " + std::to_string(n)});
        return 0;
    }
    if (kind == "random-interval" || kind == "random-cograph") {
        want(2);
        long long n = gen_param(params, 0, "n");
        long long seed = gen_param(params, 1, "seed");
        if (seed < 0) throw InputError("seed must be nonnegative");
        Rng rng(static_cast<std::uint64_t>(seed));
        std::string head =
            kind + " n=" + std::to_string(n) + " seed=" + std::to_string(seed);
        if (kind == "random-interval") {
            IntervalFamily fam = random_interval_family(static_cast<int>(n), rng);
            auto [g, m] = mno_from_intervals(fam);
            (void)m;
            std::cout << write_graph_text(g, {head}, &fam);
        } else {
            Cotree ct = random_cotree(static_cast<int>(n), rng);
            Graph g = expand_cotree(ct, static_cast<int>(n));
            std::cout << write_graph_text(g, {head, "cotree " + cotree_to_string(ct)});
        }
        return 0;
    }
    throw InputError("unknown gen kind: " + kind +
                     " (expected gell, star, path, random-interval, or random-cograph)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dominating set reconfiguration toolkit"};
    app.require_subcommand(1);

    SolveOptions sopt;
    CLI::App* solve = app.add_subcommand("solve", "decide an instance");
    solve->add_option("instance", sopt.instance_path, "instance file")->required();
    solve->add_option("--class", sopt.cls, "solver class")
        ->check(CLI::IsMember({"auto", "dually-chordal", "cograph", "join", "oracle"}))
        ->default_str("auto");
    solve->add_option("--mno", sopt.mno_path, "maximum neighborhood ordering file");
    solve->add_option("--intervals", sopt.intervals_path, "interval family file");
    solve->add_option("--emit-sequence", sopt.emit_path, "write a verified sequence here on YES");
    solve->add_flag("--explain", sopt.explain, "print solver notes to stderr");
    solve->add_option("--max-states", sopt.max_states, "oracle state guard");

    std::string verify_instance, verify_sequence_path;
    CLI::App* verify = app.add_subcommand("verify", "check a sequence against an instance");
    verify->add_option("instance", verify_instance, "instance file")->required();
    verify->add_option("sequence", verify_sequence_path, "sequence file")->required();

    std::string oracle_instance;
    bool oracle_shortest = false;
    int oracle_stats_k = 0;
    std::size_t oracle_max_states = dsr::SearchLimits{}.max_states;
    CLI::App* oracle = app.add_subcommand("oracle", "exact reachability via state-space search");
    oracle->add_option("instance", oracle_instance, "instance file")->required();
    auto* shortest_flag = oracle->add_flag("--shortest", oracle_shortest, "print the distance");
    oracle->add_option("--stats", oracle_stats_k, "reconfiguration graph stats at this token count")
        ->excludes(shortest_flag)
        ->check(CLI::PositiveNumber);
    oracle->add_option("--max-states", oracle_max_states, "state guard");

    std::string reduce_kind, reduce_graph, reduce_labels;
    int reduce_bandwidth = 0;
    CLI::App* reduce = app.add_subcommand("reduce", "emit a reduction of a graph");
    reduce->add_option("kind", reduce_kind, "split | bipartite | incidence")->required();
    reduce->add_option("graph", reduce_graph, "graph file")->required();
    reduce->add_option("--labels", reduce_labels, "labels file for relabeling");
    reduce->add_option("--bandwidth", reduce_bandwidth, "bandwidth of the given labeling");

    std::string gen_kind;
    std::vector<long long> gen_params;
    CLI::App* gen = app.add_subcommand("gen", "emit a generated graph");
    gen->add_option("kind", gen_kind,
                    "gell | star | path | random-interval | random-cograph")
        ->required();
    gen->add_option("params", gen_params, "numeric parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*solve) return cmd_solve(sopt);
        if (*verify) return cmd_verify(verify_instance, verify_sequence_path);
        if (*oracle) return cmd_oracle(oracle_instance, oracle_shortest, oracle_stats_k,
                                       oracle_max_states);
        if (*reduce) return cmd_reduce(reduce_kind, reduce_graph, reduce_labels, reduce_bandwidth);
        if (*gen) return cmd_gen(gen_kind, gen_params);
    } catch (const dsr::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const dsr::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dsr::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
