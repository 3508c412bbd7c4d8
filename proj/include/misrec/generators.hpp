#pragma once

#include <random>
#include <utility>
#include <vector>

#include "misrec/graph.hpp"
#include "misrec/rng.hpp"

namespace misrec {

// Random subset of [0, n): each vertex included independently with
// probability p. The draw consumes exactly n engine values.
VertexSet sample_vertices(int n, double p, std::mt19937_64& rng);

// Random graph where each potential edge is present independently with
// probability delta / (2(n-1)); whole-graph rejection until max degree <=
// delta, so the bound is a hard guarantee. Throws after retry_budget
// resamples (the conditioning event is rare for some parameters).
Graph gen_random_bounded(int n, int delta, std::mt19937_64& rng,
                         int retry_budget = 1000);

// n-cycle with edges {i, (i+1) mod n}; n >= 3.
Graph gen_cycle(int n);

// Two disjoint cliques A = [0,N), B = [N,2N) plus the given A-to-B cross
// edges. Cross pair (i, j) becomes the edge {i, N+j}.
Graph gen_clique_pair(int N, const std::vector<std::pair<int, int>>& cross_edges);

// Randomized variant: every cross pair present independently with the given
// probability.
Graph gen_clique_pair_random(int N, double cross_density, std::mt19937_64& rng);

}  // namespace misrec
