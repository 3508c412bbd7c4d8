#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "misrec/vertex_set.hpp"

namespace misrec {

// A family Q_1..Q_l of query sets. Valid when for every pair (u, v) and
// every set W of 2*delta further vertices, some Q_i contains u and v and
// misses all of W; querying a valid scheme pins down every graph of max
// degree <= delta regardless of how the oracle answers.
struct QueryScheme {
    int n = 0;
    int delta = 0;
    std::vector<VertexSet> sets;

    int size() const { return int(sets.size()); }
};

// Witness that a scheme is invalid: every set containing both u and v also
// meets w (|w| = 2*delta, disjoint from {u, v}).
struct CoverageCounterexample {
    int u;
    int v;
    VertexSet w;
};

// ceil(safety * 2e^2 (delta+1)^3 ln n) + 1, the size at which a random
// scheme is valid with positive probability (safety 1) or near-certainty
// (safety 2).
int default_scheme_size(int n, int delta, double safety = 1.0);

// size sets, each drawn by independent vertex inclusion with probability
// 1/(delta+1).
QueryScheme gen_random_scheme(int n, int delta, int size, std::mt19937_64& rng);

// Full coverage check. Returns the lexicographically smallest violating
// (u, v) with a witness W, or nullopt when the scheme is valid.
//
// Per pair, coverage reduces to a bounded hitting-set query: with
// F = {Q_i \ {u,v} : u,v in Q_i}, a violating W is exactly a hitting set of
// F of size <= 2*delta (padded with unused vertices), so the pair is covered
// iff no such hitting set exists. Decided by branch and bound on the
// smallest unhit set, depth-limited to 2*delta.
std::optional<CoverageCounterexample> verify_scheme(const QueryScheme& s);

struct VerifiedScheme {
    QueryScheme scheme;
    int attempts;  // random draws consumed, including the successful one
};

// Draws random schemes of the safety-2 default size until one verifies.
// Throws (with the last counterexample) after max_attempts failures.
VerifiedScheme gen_verified_scheme(int n, int delta, std::mt19937_64& rng,
                                   int max_attempts = 20);

// Scheme JSON: {"n":..., "delta":..., "sets": [[ids], ...]}.
std::string scheme_to_json(const QueryScheme& s);
QueryScheme scheme_from_json(const std::string& text);

}  // namespace misrec
