#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "misrec/generators.hpp"
#include "misrec/graph_io.hpp"
#include "misrec/oracle.hpp"

using namespace misrec;

namespace {

std::vector<std::pair<int, int>> pairs(const std::vector<EdgePair>& es) {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : es) out.emplace_back(e.u, e.v);
    return out;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng, p)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("vertex set basics") {
    VertexSet s(130);
    CHECK(s.empty());
    s.insert(0);
    s.insert(64);
    s.insert(129);
    CHECK(s.size() == 3);
    CHECK(s.contains(64));
    CHECK_FALSE(s.contains(63));
    CHECK(s.to_vector() == std::vector<int>{0, 64, 129});
    s.erase(64);
    CHECK(s.size() == 2);

    VertexSet t = VertexSet::full(130);
    CHECK(t.size() == 130);
    CHECK(s.is_subset_of(t));
    CHECK((t - s).size() == 128);
    CHECK(t.complement().empty());
}

TEST_CASE("max_degree") {
    CHECK(max_degree(Graph(4)) == 0);
    CHECK(max_degree(gen_cycle(5)) == 2);
    CHECK(max_degree(gen_clique_pair(3, {})) == 2);
}

TEST_CASE("non_edges") {
    Graph k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    CHECK(non_edges(k4).empty());

    CHECK(pairs(non_edges(Graph(3))) ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});

    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK(pairs(non_edges(path)) == std::vector<std::pair<int, int>>{{0, 2}});

    // |non_edges| = C(n,2) - |E| on random graphs
    std::mt19937_64 rng(7);
    for (int round = 0; round < 20; ++round) {
        Graph g = random_graph(12, 0.3, rng);
        CHECK(int(non_edges(g).size()) == 66 - g.edge_count());
    }
}

TEST_CASE("complement") {
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    Graph c = complement(path);
    CHECK(c.edge_count() == 1);
    CHECK(c.has_edge(0, 2));
}

TEST_CASE("gen_random_bounded hard degree cap") {
    std::mt19937_64 rng(42);
    int with_edge = 0;
    for (int round = 0; round < 400; ++round) {
        Graph g = gen_random_bounded(2, 1, rng);
        CHECK(max_degree(g) <= 1);
        with_edge += g.edge_count();
    }
    // single potential edge at probability 1/2
    CHECK(with_edge > 150);
    CHECK(with_edge < 250);

    for (int round = 0; round < 50; ++round)
        CHECK(max_degree(gen_random_bounded(30, 4, rng)) <= 4);
}

TEST_CASE("gen_random_bounded empirical mean degree") {
    // expected degree is delta/2 = 3
    std::mt19937_64 rng(11);
    double total = 0.0;
    const int samples = 200, n = 100;
    for (int s = 0; s < samples; ++s) {
        Graph g = gen_random_bounded(n, 6, rng);
        total += 2.0 * g.edge_count() / n;
    }
    double mean = total / samples;
    CHECK(mean > 2.5);
    CHECK(mean < 3.5);
}

TEST_CASE("gen_random_bounded diagnostics") {
    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(gen_random_bounded(1, 1, rng), std::invalid_argument);
    CHECK_THROWS_AS(gen_random_bounded(10, 0, rng), std::invalid_argument);
    CHECK_THROWS_AS(gen_random_bounded(10, 10, rng), std::invalid_argument);
    // impossible conditioning within a tiny budget: n=100 vertices at
    // delta=1 keeps only near-perfect matchings
    CHECK_THROWS_WITH_AS(gen_random_bounded(100, 1, rng, 3),
                         doctest::Contains("retry budget"), std::runtime_error);
}

TEST_CASE("gen_cycle") {
    Graph tri = gen_cycle(3);
    CHECK(tri.edge_count() == 3);
    CHECK(max_degree(tri) == 2);

    CHECK(pairs(non_edges(gen_cycle(4))) ==
          std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});

    Graph c5 = gen_cycle(5);
    CHECK(c5.edge_count() == 5);
    CHECK(max_degree(c5) == 2);

    CHECK_THROWS_AS(gen_cycle(2), std::invalid_argument);
}

TEST_CASE("gen_clique_pair") {
    Graph g = gen_clique_pair(2, {});
    CHECK(pairs(g.edges()) == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});

    Graph k4 = gen_clique_pair(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(k4.edge_count() == 6);

    Graph h = gen_clique_pair(3, {{0, 0}});
    CHECK(h.degree(0) == 3);
    CHECK(h.degree(1) == 2);
    CHECK(h.degree(2) == 2);
    CHECK(max_degree(h) <= 5);  // 2N-1

    CHECK_THROWS_AS(gen_clique_pair(2, {{2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(gen_clique_pair(0, {}), std::invalid_argument);
}

TEST_CASE("clique-pair graphs have no independent set larger than two") {
    std::mt19937_64 rng(3);
    for (int N = 1; N <= 5; ++N) {
        for (int round = 0; round < 4; ++round) {
            Graph g = gen_clique_pair_random(N, 0.5, rng);
            auto all = enumerate_maximal_independent_sets(g, VertexSet::full(2 * N));
            for (const auto& mis : all) CHECK(mis.size() <= 2);
        }
    }
}

TEST_CASE("induced_subgraph") {
    Graph tri = gen_cycle(3);
    auto empty = induced_subgraph(tri, VertexSet(3));
    CHECK(empty.graph.vertex_count() == 0);
    CHECK(empty.original_ids.empty());

    VertexSet s01(3);
    s01.insert(0);
    s01.insert(1);
    auto sub = induced_subgraph(tri, s01);
    CHECK(sub.graph.vertex_count() == 2);
    CHECK(sub.graph.edge_count() == 1);
    CHECK(sub.graph.has_edge(0, 1));

    Graph c5 = gen_cycle(5);
    VertexSet s(5);
    s.insert(0);
    s.insert(2);
    s.insert(4);
    auto odd = induced_subgraph(c5, s);
    CHECK(odd.original_ids == std::vector<int>{0, 2, 4});
    CHECK(odd.graph.edge_count() == 1);
    CHECK(odd.graph.has_edge(0, 2));  // original {4, 0}
    CHECK(odd.graph.degree(1) == 0);  // original vertex 2 isolated
}

TEST_CASE("edge-list parse and serialize") {
    Graph g = parse_graph("3 1\n0 1\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(0, 1));

    CHECK(serialize_graph(gen_cycle(3)) == "3 3\n0 1\n0 2\n1 2\n");

    // comments and either endpoint order are accepted
    Graph h = parse_graph("# a comment\n4 2\n1 0\n# between edges\n2 3\n");
    CHECK(h.has_edge(0, 1));
    CHECK(h.has_edge(2, 3));
}

TEST_CASE("parse diagnostics are distinct") {
    using Kind = FormatError::Kind;
    auto kind_of = [](const std::string& text) {
        try {
            parse_graph(text);
        } catch (const FormatError& e) {
            return e.kind();
        }
        return Kind::Structure;
    };
    CHECK(kind_of("nonsense\n") == Kind::Header);
    CHECK(kind_of("2 1\n0 0\n") == Kind::SelfLoop);
    CHECK(kind_of("3 2\n0 1\n1 0\n") == Kind::DuplicateEdge);
    CHECK(kind_of("2 1\n0 5\n") == Kind::VertexRange);
    CHECK_THROWS_AS(parse_graph("3 1\n0 1"), FormatError);  // missing trailing newline
    CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), FormatError);  // fewer edges than header
}

TEST_CASE("parse/serialize round trip on random graphs") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 50; ++round) {
        int n = 1 + int(uniform_index(rng, 14));
        Graph g = random_graph(n, 0.4, rng);
        CHECK(parse_graph(serialize_graph(g)) == g);
        CHECK(graph_from_json(graph_to_json(g)) == g);
    }
}

TEST_CASE("graph json diagnostics") {
    CHECK_THROWS_AS(graph_from_json("{\"edges\": []}"), FormatError);
    CHECK_THROWS_AS(graph_from_json("{\"n\": 2, \"edges\": [[0, 0]]}"), FormatError);
    CHECK_THROWS_AS(graph_from_json("not json"), FormatError);
}

TEST_CASE("generated graphs satisfy symmetry and no-self-loop") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 30; ++round) {
        Graph g = gen_random_bounded(40, 5, rng);
        for (int u = 0; u < 40; ++u) {
            CHECK_FALSE(g.neighbors(u).contains(u));
            for (int v : g.neighbors(u)) CHECK(g.neighbors(v).contains(u));
        }
    }
}
