#include <cstdio>
#include <string>

#include "doctest.h"
#include "dsr/errors.hpp"
#include "dsr/io.hpp"
#include "support.hpp"

using namespace dsr;
using testsupport::cfg;
using testsupport::graph_from;

namespace {

// Expects an InputError whose message contains every given fragment.
template <typename Fn>
void expect_input_error(Fn&& fn, const std::vector<std::string>& fragments) {
    try {
        fn();
        FAIL("expected an input error");
    } catch (const InputError& e) {
        std::string msg = e.what();
        for (const std::string& f : fragments) {
            INFO("message: ", msg);
            CHECK(msg.find(f) != std::string::npos);
        }
    }
}

} // namespace

TEST_CASE("graph files parse") {
    std::string text =
        "c a four vertex path\n"
        "p ds 4 3\n"
        "e 1 2\n"
        "e 2 3\n"
        "e 3 4\n";
    ParsedGraph pg = parse_graph_text(text);
    CHECK(pg.graph.vertex_count() == 4);
    CHECK(pg.graph.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(!pg.intervals);
    CHECK(!pg.labels);

    std::string rich =
        "p ds 2 1\n"
        "e 1 2\n"
        "i 1 1 2.5\n"
        "i 2 2 3\n"
        "l 2 1\n"
        "l 1 2\n";
    ParsedGraph pr = parse_graph_text(rich);
    REQUIRE(pr.intervals);
    CHECK((*pr.intervals)[0].right == 2.5);
    REQUIRE(pr.labels);
    CHECK(*pr.labels == std::vector<int>{2, 1});
}

TEST_CASE("graph files reject malformed input with line numbers") {
    expect_input_error([] { parse_graph_text("e 1 2\np ds 2 1\n"); },
                       {"line 1", "before the 'p ds <n> <m>' header"});
    expect_input_error([] { parse_graph_text("c empty\n"); }, {"missing 'p ds <n> <m>'"});
    expect_input_error([] { parse_graph_text("p ds 2 0\np ds 2 0\n"); },
                       {"line 2", "duplicate 'p' header"});
    expect_input_error([] { parse_graph_text("p ds 0 0\n"); }, {"vertex count"});
    expect_input_error([] { parse_graph_text("p ds 2 x\n"); }, {"edge count", "integer"});
    expect_input_error([] { parse_graph_text("p ds 2 1\ne 2 2\n"); },
                       {"line 2", "self-loop at vertex 2"});
    expect_input_error([] { parse_graph_text("p ds 2 2\ne 1 2\ne 2 1\n"); },
                       {"line 3", "duplicate edge"});
    expect_input_error([] { parse_graph_text("p ds 2 1\ne 1 3\n"); }, {"outside 1..2"});
    expect_input_error([] { parse_graph_text("p ds 2 2\ne 1 2\n"); }, {"header promises 2"});
    expect_input_error([] { parse_graph_text("p ds 2 0\nq 1\n"); },
                       {"line 2", "unknown line type 'q'"});
    expect_input_error([] { parse_graph_text("p ds 2 1\ne 1 2\nr ts\n"); },
                       {"'r' is an instance line"});
    expect_input_error([] { parse_graph_text("p ds 2 0\ni 1 1 2\n"); },
                       {"interval lines must cover every vertex"});
    expect_input_error([] { parse_graph_text("p ds 2 0\ni 1 5 2\ni 2 1 2\n"); },
                       {"left endpoint beyond its right"});
    expect_input_error([] { parse_graph_text("p ds 2 0\nl 1 1\nl 1 2\n"); },
                       {"line 3", "duplicate label"});
    expect_input_error([] { parse_graph_text("p ds 2 0\nl 1 0\nl 2 1\n"); },
                       {"labels must be positive"});
}

TEST_CASE("instance files parse") {
    std::string text =
        "p ds 3 2\n"
        "e 1 2\n"
        "e 2 3\n"
        "r ts\n"
        "s 1 2\n"
        "t 2 3\n";
    ParsedInstance pi = parse_instance_text(text);
    CHECK(pi.instance.rule == Rule::TS);
    CHECK(pi.instance.source == cfg({0, 1}));
    CHECK(pi.instance.target == cfg({1, 2}));
    CHECK(pi.instance.tar_cap == 0);

    ParsedInstance tar = parse_instance_text(
        "p ds 3 2\ne 1 2\ne 2 3\nr tar 4\ns 2\nt 1 2 3\n");
    CHECK(tar.instance.rule == Rule::TAR);
    CHECK(tar.instance.tar_cap == 4);
    CHECK(tar.instance.source.size() == 1);
    CHECK(tar.instance.target.size() == 3);

    ParsedInstance tard = parse_instance_text(
        "p ds 3 2\ne 1 2\ne 2 3\nr tar\ns 2\nt 1 2\n");
    CHECK(tard.instance.tar_cap == 0); // default cap resolved later

    // A doubled token is one vertex listed twice.
    ParsedInstance dd = parse_instance_text(
        "p ds 3 2\ne 1 2\ne 2 3\nr tj\ns 2 2\nt 1 3\n");
    CHECK(dd.instance.source.count(1) == 2);
}

TEST_CASE("instance files reject malformed input") {
    expect_input_error(
        [] { parse_instance_text("p ds 2 1\ne 1 2\ns 1\nt 2\n"); },
        {"missing 'r' rule line"});
    expect_input_error(
        [] { parse_instance_text("p ds 2 1\ne 1 2\nr ts\nt 2\n"); },
        {"missing 's' source line"});
    expect_input_error(
        [] { parse_instance_text("p ds 2 1\ne 1 2\nr ts\ns 1\n"); },
        {"missing 't' target line"});
    expect_input_error(
        [] { parse_instance_text("p ds 2 1\ne 1 2\nr ts\nr tj\ns 1\nt 2\n"); },
        {"duplicate 'r' line"});
    expect_input_error(
        [] { parse_instance_text("p ds 2 1\ne 1 2\nr walk\ns 1\nt 2\n"); },
        {"unknown rule 'walk'"});
    expect_input_error(
        [] { parse_instance_text("p ds 2 1\ne 1 2\nr ts 3\ns 1\nt 2\n"); },
        {"cap applies to the tar rule only"});
    expect_input_error(
        [] { parse_instance_text("p ds 2 1\ne 1 2\nr tar 0\ns 1\nt 2\n"); },
        {"cap must be positive"});
    expect_input_error(
        [] { parse_instance_text("p ds 2 1\ne 1 2\nr ts\ns 1\nt 1 2\n"); },
        {"same number of tokens under ts"});
    expect_input_error(
        [] { parse_instance_text("p ds 2 1\ne 1 2\nr ts\ns\nt 1\n"); },
        {"at least one token vertex"});
}

TEST_CASE("sequence files parse with line tracking") {
    std::string text =
        "c a sample\n"
        "slide 1 2\n"
        "\n"
        "jump 2 3\n"
        "add 4\n"
        "rm 1\n";
    ParsedSequence ps = parse_sequence_text(text);
    REQUIRE(ps.moves.size() == 4);
    CHECK(ps.moves[0] == Move::slide(0, 1));
    CHECK(ps.moves[1] == Move::jump(1, 2));
    CHECK(ps.moves[2] == Move::add(3));
    CHECK(ps.moves[3] == Move::remove(0));
    CHECK(ps.lines == std::vector<int>{2, 4, 5, 6});

    CHECK(parse_sequence_text("").moves.empty());
    expect_input_error([] { parse_sequence_text("hop 1 2\n"); }, {"unknown move 'hop'"});
    expect_input_error([] { parse_sequence_text("slide 0 1\n"); }, {"1-based"});
    expect_input_error([] { parse_sequence_text("slide 1\n"); }, {"expected 'slide <u> <v>'"});
}

TEST_CASE("mno files round trip") {
    Mno m;
    m.order = {3, 2, 1, 0};
    m.mn = {0, 0, 1, 2};
    std::string text = write_mno_text(m);
    CHECK(text == "o 4 3 2 1\nn 1 1\nn 2 1\nn 3 2\nn 4 3\n");
    Mno back = parse_mno_text(text);
    CHECK(back.order == m.order);
    CHECK(back.mn == m.mn);

    expect_input_error([] { parse_mno_text("n 1 1\n"); }, {"missing 'o' order line"});
    expect_input_error([] { parse_mno_text("o 1 2\nn 1 1\n"); },
                       {"missing 'n' line for vertex 2"});
    expect_input_error([] { parse_mno_text("o 1 2\nn 1 1\nn 1 2\nn 2 2\n"); },
                       {"duplicate 'n' line"});
    expect_input_error([] { parse_mno_text("o 1 3\nn 1 1\nn 2 2\n"); }, {"outside 1..2"});
}

TEST_CASE("interval and label files parse") {
    IntervalFamily f = parse_intervals_text("i 2 2 3\ni 1 1 2\n");
    REQUIRE(f.size() == 2);
    CHECK(f[0].left == 1);
    CHECK(f[1].right == 3);
    expect_input_error([] { parse_intervals_text(""); }, {"no 'i' lines"});
    expect_input_error([] { parse_intervals_text("i 2 1 2\n"); },
                       {"cover every vertex of 1..2", "vertex 1"});
    expect_input_error([] { parse_intervals_text("i 1 1 2\ni 1 2 3\n"); },
                       {"duplicate interval"});
    expect_input_error([] { parse_intervals_text("e 1 2\n"); }, {"want i"});

    std::vector<int> labels = parse_labels_text("l 2 7\nl 1 9\n");
    CHECK(labels == std::vector<int>{9, 7});
    expect_input_error([] { parse_labels_text("l 2 1\n"); }, {"cover every vertex"});
}

TEST_CASE("writers emit normalized byte-stable files") {
    Graph g = graph_from(3, {{1, 2}, {0, 1}});
    IntervalFamily iv{{1, 2}, {1.5, 3}, {2, 4}};
    std::vector<int> labels{2, 1, 3};
    std::string text = write_graph_text(g, {"demo", ""}, &iv, &labels);
    CHECK(text ==
          "c demo\n"
          "c\n"
          "p ds 3 2\n"
          "e 1 2\n"
          "e 2 3\n"
          "i 1 1 2\n"
          "i 2 1.5 3\n"
          "i 3 2 4\n"
          "l 1 2\n"
          "l 2 1\n"
          "l 3 3\n");

    ParsedGraph back = parse_graph_text(text);
    CHECK(write_graph_text(back.graph, {"demo", ""}, &*back.intervals, &*back.labels) == text);

    Instance inst;
    inst.graph = g;
    inst.source = cfg({0, 1});
    inst.target = cfg({1, 2});
    inst.rule = Rule::TAR;
    std::string itext = write_instance_text(inst);
    CHECK(itext ==
          "p ds 3 2\n"
          "e 1 2\n"
          "e 2 3\n"
          "r tar\n"
          "s 1 2\n"
          "t 2 3\n");
    inst.tar_cap = 4;
    CHECK(write_instance_text(inst).find("r tar 4\n") != std::string::npos);

    ParsedInstance iback = parse_instance_text(itext);
    CHECK(write_instance_text(iback.instance) == itext);

    std::string stext = write_sequence_text(
        {Move::slide(0, 1), Move::jump(1, 2), Move::add(0), Move::remove(2)}, {"seq"});
    CHECK(stext == "c seq\nslide 1 2\njump 2 3\nadd 1\nrm 3\n");
}

TEST_CASE("file io helpers") {
    const std::string path = "io_helper_roundtrip.tmp";
    write_file(path, "p ds 1 0\n");
    CHECK(read_file(path) == "p ds 1 0\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_file(path), InputError);
    CHECK_THROWS_AS(write_file("no_such_dir/x.tmp", "y"), InputError);
}
