#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "misrec/generators.hpp"
#include "misrec/oracle.hpp"

using namespace misrec;

namespace {

VertexSet make_set(int n, std::initializer_list<int> ids) {
    VertexSet s(n);
    for (int v : ids) s.insert(v);
    return s;
}

Graph path3() {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    return g;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng, p)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("answer on an edgeless graph returns the whole query") {
    Graph g(4);
    for (auto kind : {StrategyKind::LexGreedy, StrategyKind::RandomGreedy,
                      StrategyKind::MinReveal, StrategyKind::Hider,
                      StrategyKind::ExactAdversary}) {
        OracleStrategy strategy(kind, 99);
        CHECK(strategy.answer(g, make_set(4, {0, 1, 2})) == make_set(4, {0, 1, 2}));
    }
}

TEST_CASE("lex-greedy picks the smallest vertex of a clique") {
    Graph tri = gen_cycle(3);
    OracleStrategy lex(StrategyKind::LexGreedy);
    CHECK(lex.answer(tri, VertexSet::full(3)) == make_set(3, {0}));
}

TEST_CASE("lex-greedy on the path picks both endpoints") {
    OracleStrategy lex(StrategyKind::LexGreedy);
    CHECK(lex.answer(path3(), VertexSet::full(3)) == make_set(3, {0, 2}));
}

TEST_CASE("empty query yields empty answer") {
    OracleStrategy lex(StrategyKind::LexGreedy);
    CHECK(lex.answer(path3(), VertexSet(3)).empty());
}

TEST_CASE("is_maximal_independent") {
    Graph g = path3();
    VertexSet all = VertexSet::full(3);
    CHECK(is_maximal_independent(g, all, make_set(3, {1})));
    CHECK_FALSE(is_maximal_independent(g, all, make_set(3, {0})));  // 2 uncovered
    CHECK(is_maximal_independent(g, VertexSet(3), VertexSet(3)));   // vacuous
    CHECK_FALSE(is_maximal_independent(g, all, make_set(3, {0, 1})));  // not independent
    CHECK_FALSE(is_maximal_independent(g, make_set(3, {0}), make_set(3, {0, 2})));  // i not in q
}

TEST_CASE("verify_transcript") {
    std::mt19937_64 rng(17);
    Graph g = random_graph(10, 0.3, rng);
    OracleStrategy strategy(StrategyKind::RandomGreedy, 5);
    Transcript t;
    for (int i = 0; i < 20; ++i) {
        VertexSet q = sample_vertices(10, 0.5, rng);
        VertexSet a = strategy.answer(g, q);
        t.entries.push_back({q, a});
    }
    CHECK(verify_transcript(g, t));
    CHECK(verify_transcript(g, Transcript{}));

    // adding an edge inside some answer breaks independence
    for (const auto& e : t.entries) {
        auto ids = e.answer.to_vector();
        if (ids.size() >= 2) {
            Graph g2 = g;
            g2.add_edge(ids[0], ids[1]);
            CHECK_FALSE(verify_transcript(g2, t));
            break;
        }
    }
}

TEST_CASE("strategy soundness: every answer is a maximal independent set") {
    std::mt19937_64 rng(23);
    for (auto kind : {StrategyKind::LexGreedy, StrategyKind::RandomGreedy,
                      StrategyKind::MinReveal, StrategyKind::Hider,
                      StrategyKind::ExactAdversary}) {
        OracleStrategy strategy(kind, 7);
        for (int round = 0; round < 60; ++round) {
            int n = 2 + int(uniform_index(rng, 11));
            Graph g = random_graph(n, 0.35, rng);
            for (int q = 0; q < 5; ++q) {
                VertexSet query = sample_vertices(n, 0.6, rng);
                VertexSet ans = strategy.answer(g, query);
                CHECK(is_maximal_independent(g, query, ans));
            }
            strategy.reset(rng());
        }
    }
}

TEST_CASE("lex-greedy is a pure function of graph and query") {
    std::mt19937_64 rng(31);
    Graph g = random_graph(12, 0.3, rng);
    VertexSet q = sample_vertices(12, 0.5, rng);
    OracleStrategy a(StrategyKind::LexGreedy, 1), b(StrategyKind::LexGreedy, 999);
    CHECK(a.answer(g, q) == b.answer(g, q));
}

TEST_CASE("seeded strategies replay identically") {
    std::mt19937_64 rng(37);
    Graph g = random_graph(14, 0.3, rng);
    std::vector<VertexSet> queries;
    for (int i = 0; i < 15; ++i) queries.push_back(sample_vertices(14, 0.5, rng));

    for (auto kind : {StrategyKind::RandomGreedy, StrategyKind::MinReveal}) {
        OracleStrategy a(kind, 1234), b(kind, 1234);
        for (const auto& q : queries) CHECK(a.answer(g, q) == b.answer(g, q));
    }
}

TEST_CASE("hider answers a dominating singleton when one exists") {
    Graph star(4);  // K_{1,3} with center 0
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    OracleStrategy hider(StrategyKind::Hider);
    CHECK(hider.answer(star, VertexSet::full(4)) == make_set(4, {0}));
}

TEST_CASE("hider reuses a previously revealed pair") {
    // cliques {0,1} and {2,3}, cross edges 0-3 and 1-2; non-edges 02 and 13
    Graph g = gen_clique_pair(2, {{0, 1}, {1, 0}});
    OracleStrategy hider(StrategyKind::Hider);
    VertexSet first = hider.answer(g, VertexSet::full(4));
    CHECK(first == make_set(4, {0, 2}));
    CHECK(hider.answer(g, VertexSet::full(4)) == first);  // reuse, no new reveal
    CHECK(hider.revealed_pairs().edge_count() == 1);
}

TEST_CASE("hider on clique-pair graphs never answers more than two vertices") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 25; ++round) {
        int N = 2 + int(uniform_index(rng, 5));
        Graph g = gen_clique_pair_random(N, 0.5, rng);
        OracleStrategy hider(StrategyKind::Hider, rng());
        for (int q = 0; q < 30; ++q) {
            VertexSet query = sample_vertices(2 * N, 0.5, rng);
            CHECK(hider.answer(g, query).size() <= 2);
        }
    }
}

TEST_CASE("min-reveal avoids an avoidable reveal at a decision point") {
    // After picking 0, candidates are {2, 3}; either keeps the answer at
    // size two. With (0,2) already revealed the cheap pick is 2; a fresh
    // strategy prefers 3 on the degree tie-break.
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 4);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    VertexSet q = VertexSet::full(5);

    OracleStrategy fresh(StrategyKind::MinReveal);
    CHECK(fresh.answer(g, q) == make_set(5, {0, 3}));

    OracleStrategy primed(StrategyKind::MinReveal);
    CHECK(primed.answer(g, make_set(5, {0, 2})) == make_set(5, {0, 2}));  // forced, reveals 02
    CHECK(primed.answer(g, q) == make_set(5, {0, 2}));
}

TEST_CASE("exact adversary minimizes new reveals, lexicographic ties") {
    OracleStrategy exact(StrategyKind::ExactAdversary);
    // path: answers {1} (0 reveals) beats {0,2} (1 reveal)
    CHECK(exact.answer(path3(), VertexSet::full(3)) == make_set(3, {1}));
    // triangle: all singleton answers reveal nothing; lexicographic -> {0}
    OracleStrategy exact2(StrategyKind::ExactAdversary);
    CHECK(exact2.answer(gen_cycle(3), VertexSet::full(3)) == make_set(3, {0}));
}

TEST_CASE("exact adversary is per-query optimal against the heuristic") {
    // From identical (clean) state, the enumerating adversary can never
    // reveal more pairs on a single query than the greedy heuristic.
    std::mt19937_64 rng(47);
    for (int round = 0; round < 40; ++round) {
        int n = 4 + int(uniform_index(rng, 6));
        Graph g = random_graph(n, 0.35, rng);
        VertexSet q = sample_vertices(n, 0.6, rng);
        OracleStrategy heuristic(StrategyKind::MinReveal);
        OracleStrategy exact(StrategyKind::ExactAdversary);
        heuristic.answer(g, q);
        exact.answer(g, q);
        CHECK(exact.revealed_pairs().edge_count() <= heuristic.revealed_pairs().edge_count());
    }
}

TEST_CASE("maximal independent set enumeration on known graphs") {
    // path 0-1-2: exactly {0,2} and {1}
    auto all = enumerate_maximal_independent_sets(path3(), VertexSet::full(3));
    CHECK(all.size() == 2);
    // 5-cycle has exactly five maximal independent sets
    CHECK(enumerate_maximal_independent_sets(gen_cycle(5), VertexSet::full(5)).size() == 5);
    // empty query: the empty set is the unique maximal independent set
    auto none = enumerate_maximal_independent_sets(path3(), VertexSet(3));
    REQUIRE(none.size() == 1);
    CHECK(none[0].empty());
}

TEST_CASE("transcript json round trip") {
    std::mt19937_64 rng(53);
    Graph g = random_graph(8, 0.3, rng);
    OracleStrategy strategy(StrategyKind::LexGreedy);
    Transcript t;
    for (int i = 0; i < 5; ++i) {
        VertexSet q = sample_vertices(8, 0.5, rng);
        VertexSet a = strategy.answer(g, q);
        t.entries.push_back({q, a});
    }
    Transcript back = transcript_from_json(transcript_to_json(t), 8);
    REQUIRE(back.size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        CHECK(back.entries[i].query == t.entries[i].query);
        CHECK(back.entries[i].answer == t.entries[i].answer);
    }
}
