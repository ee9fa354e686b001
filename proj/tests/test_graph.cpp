#include "doctest.h"

#include <random>

#include "graph.hpp"
#include "verify.hpp"

using namespace vel;

namespace {

std::vector<Edge> E(std::initializer_list<Edge> edges) { return edges; }

Matrix dense(std::initializer_list<std::initializer_list<double>> rows) {
    Matrix m(rows.size(), rows.size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (double x : row) m(r, c++) = x;
        ++r;
    }
    return m;
}

}  // namespace

TEST_CASE("graph_from_edge_list builds canonical graphs") {
    const Graph k2 = graph_from_edge_list(2, E({{0, 1}}));
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);

    const Graph p3 = graph_from_edge_list(3, E({{0, 1}, {1, 2}}));
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(2, 1));
    CHECK_FALSE(p3.has_edge(0, 2));

    const Graph collapsed = graph_from_edge_list(4, E({{0, 1}, {1, 0}, {2, 3}}));
    CHECK(collapsed.edges() == E({{0, 1}, {2, 3}}));
}

TEST_CASE("graph_from_edge_list rejects self-loops and out-of-range endpoints") {
    CHECK_THROWS_AS(graph_from_edge_list(3, E({{1, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_edge_list(3, E({{0, 3}})), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_edge_list(0, E({{0, 0}})), std::invalid_argument);
}

TEST_CASE("graph_from_edge_list is idempotent") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng() % 10;
        std::vector<Edge> raw;
        for (int k = 0; k < 30; ++k) {
            const std::size_t i = rng() % n;
            const std::size_t j = rng() % n;
            if (i != j) raw.emplace_back(i, j);
        }
        const Graph once = graph_from_edge_list(n, raw);
        CHECK(graph_from_edge_list(n, once.edges()) == once);
    }
}

TEST_CASE("adjacency_matrix") {
    CHECK(adjacency_matrix(named_graph(Family::complete, 2)).dense() == dense({{0, 1}, {1, 0}}));
    CHECK(adjacency_matrix(graph_from_edge_list(3, {})).dense() == Matrix(3, 3));
    CHECK(adjacency_matrix(named_graph(Family::path, 3)).dense() == dense({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}));
}

TEST_CASE("adjacency matrices of the corpus are symmetric with zero diagonal") {
    for (const auto& entry : default_corpus()) {
        const SymmetricMatrix adj = adjacency_matrix(entry.graph);
        const Matrix& a = adj.dense();
        for (std::size_t i = 0; i < a.rows(); ++i) {
            CHECK(a(i, i) == 0.0);
            for (std::size_t j = 0; j < a.cols(); ++j) CHECK(a(i, j) == a(j, i));
        }
    }
}

TEST_CASE("SymmetricMatrix::from_dense rejects asymmetric input") {
    CHECK_THROWS_AS(SymmetricMatrix::from_dense(dense({{0, 1}, {0, 0}})), std::invalid_argument);
    CHECK_THROWS_AS(SymmetricMatrix::from_dense(Matrix(2, 3)), std::invalid_argument);
    CHECK(SymmetricMatrix::from_dense(dense({{1, 2}, {2, 3}}))(1, 0) == 2.0);
}

TEST_CASE("parse_graph6 decodes the reference strings") {
    CHECK(parse_graph6("A_") == named_graph(Family::complete, 2));
    CHECK(parse_graph6("Bw") == named_graph(Family::complete, 3));
    const Graph empty = parse_graph6("?");
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.edge_count() == 0);
    // Trailing newline and the optional marker are accepted.
    CHECK(parse_graph6("Bw\n") == named_graph(Family::complete, 3));
    CHECK(parse_graph6(">>graph6<<A_") == named_graph(Family::complete, 2));
}

TEST_CASE("parse_graph6 error paths") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);     // K3 needs one data byte
    CHECK_THROWS_AS(parse_graph6("A_?"), ParseError);   // trailing data
    CHECK_THROWS_AS(parse_graph6("~?"), ParseError);    // truncated long header
    CHECK_THROWS_AS(parse_graph6("~???"), ParseError);  // long header encoding n < 63

    try {
        parse_graph6("A a");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.byte() == 2);  // the space
    }
}

TEST_CASE("graph6 round trip over random graphs, including the 18-bit header") {
    std::mt19937_64 rng(11);
    for (std::size_t n : {0, 1, 2, 5, 12, 62, 63, 70, 130}) {
        const Graph g = random_graph_half(n, rng);
        const std::string encoded = to_graph6(g);
        CHECK(parse_graph6(encoded) == g);
        if (n >= 63) CHECK(encoded.front() == '~');
    }
    CHECK(to_graph6(named_graph(Family::complete, 2)) == "A_");
    CHECK(to_graph6(named_graph(Family::complete, 3)) == "Bw");
}

TEST_CASE("named_graph families") {
    const Graph c4 = named_graph(Family::cycle, 4);
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edge_count() == 4);
    CHECK(c4.has_edge(3, 0));

    const Graph star = named_graph(Family::star, 3);
    CHECK(star.vertex_count() == 4);
    CHECK(star.degree(0) == 3);
    CHECK(star == named_graph(Family::complete_bipartite, 1, 3));

    CHECK(named_graph(Family::complete, 3).edge_count() == 3);
    CHECK(named_graph(Family::path, 1).edge_count() == 0);

    const Graph k23 = named_graph(Family::complete_bipartite, 2, 3);
    CHECK(k23.edge_count() == 6);
    CHECK_FALSE(k23.has_edge(0, 1));
    CHECK(k23.has_edge(1, 4));
}

TEST_CASE("named_graph size violations") {
    CHECK_THROWS_AS(named_graph(Family::cycle, 2), std::invalid_argument);
    CHECK_THROWS_AS(named_graph(Family::path, 0), std::invalid_argument);
    CHECK_THROWS_AS(named_graph(Family::complete, 0), std::invalid_argument);
    CHECK_THROWS_AS(named_graph(Family::star, 0), std::invalid_argument);
    CHECK_THROWS_AS(named_graph(Family::complete_bipartite, 2, 0), std::invalid_argument);
}

TEST_CASE("parse_edge_list") {
    const Graph p3 = parse_edge_list("# a path\n3 2\n0 1\n1 2  # middle\n");
    CHECK(p3 == named_graph(Family::path, 3));

    const Graph empty = parse_edge_list("3 0\n");
    CHECK(empty.vertex_count() == 3);
    CHECK(empty.edge_count() == 0);

    const Graph g = named_graph(Family::complete_bipartite, 2, 3);
    CHECK(parse_edge_list(to_edge_list(g)) == g);
}

TEST_CASE("parse_edge_list reports the failing line") {
    auto line_of = [](std::string_view text) -> std::size_t {
        try {
            parse_edge_list(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("3 2\n0 1\n1 x\n") == 3);
    CHECK(line_of("3 1\n0 3\n") == 2);
    CHECK(line_of("3 1\n1 1\n") == 2);
    CHECK(line_of("3 1\n0 1\n1 2\n") == 3);
    CHECK(line_of("3 1 5\n") == 1);
    CHECK(line_of("3 -1\n") == 1);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("# nothing\n"), ParseError);
}

TEST_CASE("disjoint_union shifts the right operand") {
    const Graph g = disjoint_union(named_graph(Family::path, 2), named_graph(Family::path, 2));
    CHECK(g.edges() == E({{0, 1}, {2, 3}}));
}
