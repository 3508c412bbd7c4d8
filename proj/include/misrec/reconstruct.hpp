#pragma once

#include <optional>
#include <random>

#include "misrec/graph.hpp"
#include "misrec/oracle.hpp"
#include "misrec/scheme.hpp"

namespace misrec {

// Parameters of the randomized reconstruction. delta is a trusted upper
// bound on the max degree of the hidden graph; if it is wrong the output may
// contain extra edges but never misses a true edge.
struct ReconstructionParams {
    int n = 0;
    int delta = 0;
    double c_const = 3.0;

    // Query budget override for truncated runs; the formula count otherwise.
    std::optional<int> query_budget;

    double inclusion_probability() const { return 1.0 / (double(delta) + 1.0); }

    // ceil(C (delta+1)^2 ln n). The log base is a choice the analysis leaves
    // open; natural log matches the e^2 constants used throughout.
    int query_count() const;
};

struct ReconstructionResult {
    Graph graph;  // inferred: complement of everything witnessed
    int queries_used = 0;
    std::vector<EdgePair> witnessed_non_edges;
    Transcript transcript;
};

// Pairs co-reported by some answer are certified non-edges; everything else
// is presumed an edge. Deterministic in t.
ReconstructionResult infer_edges(int n, const Transcript& t);

// Algorithm: fix all query sets up front (each vertex enters a query with
// probability 1/(delta+1)), ask the oracle, output the complement of the
// witnessed pairs. The hidden graph is touched only through strategy.answer.
ReconstructionResult randomized_reconstruct(const Graph& hidden, const ReconstructionParams& params,
                                            OracleStrategy& strategy, std::mt19937_64& rng);

// Deterministic path: queries exactly the scheme's sets in order. For a
// valid scheme this reconstructs every graph of max degree <= scheme.delta
// under every oracle strategy.
ReconstructionResult scheme_reconstruct(const Graph& hidden, const QueryScheme& scheme,
                                        OracleStrategy& strategy);

// Fraction of `samples` fresh query draws whose answer contains both u and
// v. uv must be a non-edge; the isolation argument lower-bounds the true
// rate by 1/((delta+1)^2 e^2) for every strategy.
double empirical_pair_report_rate(const Graph& g, int u, int v,
                                  const ReconstructionParams& params, OracleStrategy& strategy,
                                  int samples, std::mt19937_64& rng);

}  // namespace misrec
