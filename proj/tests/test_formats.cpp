#include "sizefn/filtered_graph.hpp"

#include "generators.hpp"
#include "sizefn/mayer_vietoris.hpp"
#include "sizefn/size_function.hpp"
#include "sizefn/topology.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace sizefn;

TEST_CASE("real formatting") {
    CHECK(format_real(0.0) == "0");
    CHECK(format_real(-0.0) == "0");
    CHECK(format_real(1.5) == "1.5");
    CHECK(format_real(2.0) == "2");
    CHECK(format_real(1.0 / 3.0) == "0.333333333333");
}

TEST_CASE("graph text parsing") {
    FilteredGraph g = parse_graph_text("v 0 0\nv 1 2\nv 2 1\ne 0 1\ne 1 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.value(1) == 2.0);

    CHECK_THROWS_AS(parse_graph_text(""), ParseError);
    CHECK_THROWS_AS(parse_graph_text("v 0 ?\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("w 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("v 0 0\ne 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("v 0 0\nv 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_text("v 0 0\nv 1 1\ne 0 1 junk\n"), ParseError);

    SUBCASE("comments and blank lines are fine") {
        FilteredGraph h = parse_graph_text("# header\n\nv 5 1.25\n");
        CHECK(h.vertex_count() == 1);
    }
}

TEST_CASE("graph serialization round-trips") {
    std::mt19937 rng(7401);
    for (int trial = 0; trial < 40; ++trial) {
        FilteredGraph g = gen::random_graph(rng, 1, 20);
        std::string text = graph_to_text(g);
        FilteredGraph back = parse_graph_text(text);
        CHECK(graph_to_text(back) == text);
        CHECK(back.ids() == g.ids());
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("decomposition text round-trips") {
    std::mt19937 rng(7402);
    for (int trial = 0; trial < 25; ++trial) {
        Decomposition d = gen::random_decomposition(rng, gen::random_graph(rng, 1, 15));
        std::string text = decomposition_to_text(d);
        Decomposition back = parse_decomposition_text(text);
        CHECK(decomposition_to_text(back) == text);
        CHECK(back.a_ids() == d.a_ids());
        CHECK(back.b_ids() == d.b_ids());
    }
    CHECK_THROWS_AS(parse_decomposition_text("v 0 0\nA 3\n"), ParseError);
}

TEST_CASE("grid CSV shape") {
    FilteredGraph p({{0, 0.0}, {1, 2.0}, {2, 1.0}}, {{0, 1}, {1, 2}});
    SizeFunctionGrid grid(p);
    std::string csv = grid.to_csv();
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "u\\v,0,1,2");
    std::getline(in, line);
    CHECK(line == "0,1,1,1");
    std::getline(in, line);
    CHECK(line == "1,,2,1");
    std::getline(in, line);
    CHECK(line == "2,,,1");
}

TEST_CASE("mv report rows satisfy the identity") {
    std::mt19937 rng(7403);
    Decomposition d = gen::random_decomposition(rng, gen::random_graph(rng, 4, 12));
    REQUIRE(validate(d).ok);
    std::string csv = mv_report_csv(d);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "u,v,l_x,l_a,l_b,l_ab,ker_v,ker_vu,holds_basic,identity");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(line.substr(line.rfind(',') + 1) == "0");
    }
    std::size_t m = critical_values(d.x()).size();
    CHECK(rows == m * (m - 1) / 2);
}
