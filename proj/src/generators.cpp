#include "misrec/generators.hpp"

#include <string>

namespace misrec {

VertexSet sample_vertices(int n, double p, std::mt19937_64& rng) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (coin(rng, p)) s.insert(v);
    return s;
}

Graph gen_random_bounded(int n, int delta, std::mt19937_64& rng, int retry_budget) {
    if (n < 2) throw std::invalid_argument("gen_random_bounded: n must be >= 2");
    if (delta < 1 || delta > n - 1)
        throw std::invalid_argument("gen_random_bounded: need 1 <= delta <= n-1");
    const double p = double(delta) / (2.0 * (n - 1));

    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        Graph g(n);
        std::vector<int> deg(n, 0);
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (!coin(rng, p)) continue;
                g.add_edge(u, v);
                if (++deg[u] > delta || ++deg[v] > delta) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) return g;
    }
    throw std::runtime_error(
        "gen_random_bounded: exceeded retry budget of " + std::to_string(retry_budget) +
        " resamples for n=" + std::to_string(n) + ", delta=" + std::to_string(delta) +
        "; the max-degree conditioning event is rare at these parameters");
}

Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("gen_cycle: n must be >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph gen_clique_pair(int N, const std::vector<std::pair<int, int>>& cross_edges) {
    if (N < 1) throw std::invalid_argument("gen_clique_pair: N must be >= 1");
    Graph g(2 * N);
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
            g.add_edge(a, b);
            g.add_edge(N + a, N + b);
        }
    for (auto [i, j] : cross_edges) {
        if (i < 0 || i >= N || j < 0 || j >= N)
            throw std::invalid_argument("gen_clique_pair: cross index out of range");
        g.add_edge(i, N + j);
    }
    return g;
}

Graph gen_clique_pair_random(int N, double cross_density, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> cross;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (coin(rng, cross_density)) cross.emplace_back(i, j);
    return gen_clique_pair(N, cross);
}

}  // namespace misrec
