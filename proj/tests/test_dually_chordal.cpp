#include <algorithm>

#include "doctest.h"
#include "dsr/dually_chordal.hpp"
#include "dsr/errors.hpp"
#include "dsr/generators.hpp"
#include "dsr/oracle.hpp"
#include "dsr/transforms.hpp"
#include "support.hpp"

using namespace dsr;
using testsupport::cfg;
using testsupport::graph_from;

namespace {

Graph p4() { return graph_from(4, {{0, 1}, {1, 2}, {2, 3}}); }

Mno p4_mno() {
    Mno m;
    m.order = {0, 1, 2, 3};
    m.mn = {1, 2, 3, 3};
    return m;
}

} // namespace

TEST_CASE("maximum neighborhood ordering validation") {
    CHECK(is_mno(p4(), p4_mno()).valid);

    Mno bad = p4_mno();
    bad.mn[3] = 2; // mn must lie in the closed suffix neighborhood
    MnoVerdict v = is_mno(p4(), bad);
    CHECK(!v.valid);
    CHECK(v.violating_position == 3);
    CHECK(v.reason.find("outside") != std::string::npos);

    Graph p3 = graph_from(3, {{0, 1}, {1, 2}});
    Mno weak;
    weak.order = {1, 0, 2};
    weak.mn = {0, 0, 2};
    MnoVerdict w = is_mno(p3, weak);
    CHECK(!w.valid);
    CHECK(w.violating_position == 0);
    CHECK(w.reason.find("does not") != std::string::npos);

    Mno dup;
    dup.order = {0, 0, 1};
    dup.mn = {1, 1, 1};
    CHECK_THROWS_AS(is_mno(p3, dup), InputError);
    Mno short_mn;
    short_mn.order = {0, 1, 2};
    short_mn.mn = {1, 2};
    CHECK_THROWS_AS(is_mno(p3, short_mn), InputError);
}

TEST_CASE("tree orderings") {
    Mno m = mno_from_tree(p4());
    CHECK(m.order == std::vector<int>{3, 2, 1, 0});
    CHECK(m.mn == std::vector<int>{0, 0, 1, 2}); // indexed by vertex: the parent
    CHECK(is_mno(p4(), m).valid);

    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Graph t = random_tree(2 + rng.below(9), rng);
        CHECK(is_mno(t, mno_from_tree(t)).valid);
    }

    CHECK_THROWS_AS(mno_from_tree(graph_from(3, {{0, 1}, {1, 2}, {0, 2}})), InputError);
    CHECK_THROWS_AS(mno_from_tree(graph_from(2, {})), InputError);
}

TEST_CASE("interval orderings") {
    IntervalFamily fam{{1, 2}, {2, 3}, {3, 4}, {4, 5}};
    auto [g, m] = mno_from_intervals(fam);
    CHECK(g.edges() == p4().edges());
    CHECK(m.order == std::vector<int>{0, 1, 2, 3});
    CHECK(m.mn == std::vector<int>{1, 2, 3, 3});
    CHECK(is_mno(g, m).valid);

    IntervalFamily tri{{1, 3}, {2, 4}, {3, 5}};
    auto [g2, m2] = mno_from_intervals(tri);
    CHECK(g2.edge_count() == 3); // closed intervals: touching endpoints meet
    CHECK(is_mno(g2, m2).valid);

    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        IntervalFamily f = random_interval_family(1 + rng.below(8), rng);
        auto [gg, mm] = mno_from_intervals(f);
        CHECK(is_mno(gg, mm).valid);
    }
}

TEST_CASE("ordering search") {
    Graph c4 = graph_from(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(!find_mno(c4).has_value());

    Graph diamond = graph_from(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
    auto dm = find_mno(diamond);
    REQUIRE(dm.has_value());
    CHECK(is_mno(diamond, *dm).valid);

    for (const Graph& g : testsupport::nonisomorphic_graphs(4)) {
        auto m = find_mno(g);
        if (m) CHECK(is_mno(g, *m).valid);
    }

    Graph c13 = [] {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < 13; ++i) e.emplace_back(i, (i + 1) % 13);
        return Graph::from_edges(13, e);
    }();
    CHECK_THROWS_AS(find_mno(c13), ResourceError);
    CHECK(acquire_mno(c13) == std::nullopt); // too large: no throw, no answer
}

TEST_CASE("ordering acquisition") {
    CHECK(is_mno(p4(), *acquire_mno(p4())).valid);

    Graph forest = graph_from(5, {{0, 1}, {2, 3}, {3, 4}});
    auto fm = acquire_mno(forest);
    REQUIRE(fm.has_value());
    CHECK(is_mno(forest, *fm).valid);

    Graph c4 = graph_from(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(acquire_mno(c4) == std::nullopt);

    Graph diamond = graph_from(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
    CHECK(acquire_mno(diamond).has_value());
}

TEST_CASE("triggered dominating set") {
    TriggeredDS ds = mds(p4(), p4_mno());
    REQUIRE(ds.pairs.size() == 2);
    CHECK(ds.pairs[0] == std::pair<int, int>{0, 1});
    CHECK(ds.pairs[1] == std::pair<int, int>{3, 3});
    CHECK(ds.C == std::vector<int>{1, 3});
    CHECK(ds.T == std::vector<int>{0, 3});
    CHECK(ds.pairs_sorted_by_mno);
    CHECK(static_cast<int>(ds.C.size()) == min_dominating_set_bruteforce(p4()).gamma);

    Graph star = gen_star(3).graph;
    TriggeredDS sds = mds(star, mno_from_tree(star));
    CHECK(sds.C == std::vector<int>{0});

    Mno bad = p4_mno();
    bad.mn[3] = 2;
    CHECK_THROWS_AS(mds(p4(), bad), InputError);

    // Optimality across random trees and interval graphs.
    Rng rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        Graph t = random_tree(2 + rng.below(8), rng);
        CHECK(static_cast<int>(mds(t, mno_from_tree(t)).C.size()) ==
              min_dominating_set_bruteforce(t).gamma);
        auto [ig, im] = mno_from_intervals(random_interval_family(1 + rng.below(8), rng));
        CHECK(static_cast<int>(mds(ig, im).C.size()) ==
              min_dominating_set_bruteforce(ig).gamma);
    }
}

TEST_CASE("canonicalization slides tokens onto the canonical set") {
    Graph g = p4();
    Mno m = p4_mno();
    TriggeredDS ds = mds(g, m);

    auto [seq, end] = canonicalize(g, m, ds, cfg({0, 2}));
    CHECK(seq.moves == std::vector<Move>{Move::slide(0, 1), Move::slide(2, 3)});
    CHECK(end == cfg({1, 3}));

    auto [seq2, end2] = canonicalize(g, m, ds, cfg({1, 3}));
    CHECK(seq2.moves.empty());
    CHECK(end2 == cfg({1, 3}));

    auto [seq3, end3] = canonicalize(g, m, ds, cfg({0, 3}));
    CHECK(seq3.moves == std::vector<Move>{Move::slide(0, 1)});
    CHECK(end3 == cfg({1, 3}));

    auto [seq4, end4] = canonicalize(g, m, ds, cfg({0, 1, 3}));
    CHECK(seq4.moves.empty());
    CHECK(end4 == cfg({0, 1, 3}));

    CHECK_THROWS_AS(canonicalize(g, m, ds, cfg({0, 1})), InputError);
}

TEST_CASE("dually chordal solver on the path") {
    DcVerdict v = solve_dually_chordal(p4(), p4_mno(), cfg({0, 2}), cfg({1, 2}));
    REQUIRE(v.reachable);
    REQUIRE(v.sequence);
    CHECK(v.sequence->moves ==
          std::vector<Move>{Move::slide(0, 1), Move::slide(2, 3), Move::slide(3, 2)});
    Instance inst;
    inst.graph = p4();
    inst.source = cfg({0, 2});
    inst.target = cfg({1, 2});
    CHECK(verify_sequence(inst, *v.sequence).valid);

    REQUIRE(v.components.size() == 1);
    CHECK(v.components[0].gamma == 2);
    CHECK(v.components[0].meeting_vertex == 1);
    CHECK(v.components[0].eccentricity == 2);
    CHECK(v.components[0].forward_moves == 2);
    CHECK(v.components[0].backward_moves == 1);
}

TEST_CASE("dually chordal solver routes extras through the meeting vertex") {
    Graph star = gen_star(3).graph;
    Mno m = mno_from_tree(star);
    DcVerdict v = solve_dually_chordal(star, m, cfg({0, 1}), cfg({0, 2}));
    REQUIRE(v.reachable);
    CHECK(v.sequence->moves == std::vector<Move>{Move::slide(1, 0), Move::slide(0, 2)});
    CHECK(v.components[0].meeting_vertex == 0);
}

TEST_CASE("dually chordal solver across components") {
    Graph forest = graph_from(4, {{0, 1}, {2, 3}});
    Mno m = *acquire_mno(forest);

    DcVerdict yes = solve_dually_chordal(forest, m, cfg({0, 2}), cfg({1, 3}));
    CHECK(yes.reachable);
    Instance inst;
    inst.graph = forest;
    inst.source = cfg({0, 2});
    inst.target = cfg({1, 3});
    CHECK(verify_sequence(inst, *yes.sequence).valid);
    CHECK(yes.components.size() == 2);

    DcVerdict no = solve_dually_chordal(forest, m, cfg({0, 1, 2}), cfg({0, 2, 3}));
    CHECK(!no.reachable);
    CHECK(no.reason.find("component") != std::string::npos);
    CHECK(!no.sequence);

    CHECK_THROWS_AS(solve_dually_chordal(forest, m, cfg({0, 2}), cfg({1, 1, 3})), InputError);
    CHECK_THROWS_AS(solve_dually_chordal(forest, m, cfg({0, 0}), cfg({1, 3})), InputError);
}

TEST_CASE("dually chordal solver agrees with the oracle on trees") {
    Rng rng(31);
    int pairs_checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + rng.below(7);
        Graph t = random_tree(n, rng);
        Mno m = mno_from_tree(t);
        int gamma = static_cast<int>(mds(t, m).C.size());
        for (int k = gamma; k <= gamma + 2; ++k) {
            auto configs = testsupport::dominating_configs(t, k);
            if (configs.empty()) continue;
            ReconfGraphStats st = reconf_graph_stats(t, k, Rule::TS, 0);
            auto comp_of = [&](const Configuration& c) {
                auto it = std::find(st.configs.begin(), st.configs.end(), c);
                REQUIRE(it != st.configs.end());
                return st.component_id[it - st.configs.begin()];
            };
            for (int rep = 0; rep < 20; ++rep) {
                const Configuration& a = configs[rng.below(static_cast<int>(configs.size()))];
                const Configuration& b = configs[rng.below(static_cast<int>(configs.size()))];
                bool oracle_yes = comp_of(a) == comp_of(b);
                DcVerdict v = solve_dually_chordal(t, m, a, b);
                CHECK(v.reachable == oracle_yes);
                if (v.reachable) {
                    Instance inst;
                    inst.graph = t;
                    inst.source = a;
                    inst.target = b;
                    CHECK(verify_sequence(inst, *v.sequence).valid);
                    for (const DcComponentStats& cs : v.components) {
                        int kc = 0;
                        for (int vx : cs.vertices) kc += a.count(vx);
                        int bound = 2 * cs.gamma + (kc - cs.gamma) * cs.eccentricity;
                        CHECK(cs.forward_moves <= bound);
                        CHECK(cs.backward_moves <= bound);
                    }
                }
                ++pairs_checked;
            }
        }
    }
    CHECK(pairs_checked > 500);
}
