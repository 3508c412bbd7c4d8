#include "misrec/reconstruct.hpp"

#include <cmath>
#include <stdexcept>

#include "misrec/generators.hpp"

namespace misrec {

namespace {

void validate(const ReconstructionParams& p) {
    if (p.n < 2) throw std::invalid_argument("reconstruct: n must be >= 2");
    if (p.delta < 1 || p.delta > p.n - 1)
        throw std::invalid_argument("reconstruct: need 1 <= delta <= n-1");
    if (p.c_const <= 0.0) throw std::invalid_argument("reconstruct: c_const must be positive");
    if (p.query_budget && *p.query_budget < 0)
        throw std::invalid_argument("reconstruct: query budget must be >= 0");
}

void witness_answer(Graph& witnessed, const VertexSet& answer) {
    std::vector<int> ids = answer.to_vector();
    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b)
            if (!witnessed.has_edge(ids[a], ids[b])) witnessed.add_edge(ids[a], ids[b]);
}

ReconstructionResult result_from(Graph witnessed, Transcript t) {
    ReconstructionResult r{complement(witnessed), int(t.size()), witnessed.edges(),
                           std::move(t)};
    return r;
}

}  // namespace

int ReconstructionParams::query_count() const {
    if (query_budget) return *query_budget;
    const double d1 = double(delta) + 1.0;
    return int(std::ceil(c_const * d1 * d1 * std::log(double(n))));
}

ReconstructionResult infer_edges(int n, const Transcript& t) {
    if (n < 1) throw std::invalid_argument("infer_edges: n must be >= 1");
    Graph witnessed(n);
    for (const auto& entry : t.entries) witness_answer(witnessed, entry.answer);
    return result_from(std::move(witnessed), t);
}

ReconstructionResult randomized_reconstruct(const Graph& hidden,
                                            const ReconstructionParams& params,
                                            OracleStrategy& strategy, std::mt19937_64& rng) {
    validate(params);
    if (hidden.vertex_count() != params.n)
        throw std::invalid_argument("reconstruct: params.n does not match the graph");

    // Non-adaptive: all query sets are fixed before the first answer, so the
    // sequence depends only on (n, delta, C, seed).
    const int count = params.query_count();
    const double p = params.inclusion_probability();
    std::vector<VertexSet> queries;
    queries.reserve(count);
    for (int i = 0; i < count; ++i) queries.push_back(sample_vertices(params.n, p, rng));

    Graph witnessed(params.n);
    Transcript t;
    t.entries.reserve(count);
    for (auto& q : queries) {
        VertexSet answer = strategy.answer(hidden, q);
        witness_answer(witnessed, answer);
        t.entries.push_back({std::move(q), std::move(answer)});
    }
    return result_from(std::move(witnessed), std::move(t));
}

ReconstructionResult scheme_reconstruct(const Graph& hidden, const QueryScheme& scheme,
                                        OracleStrategy& strategy) {
    if (scheme.n != hidden.vertex_count())
        throw std::invalid_argument("scheme_reconstruct: scheme.n does not match the graph");

    Graph witnessed(scheme.n);
    Transcript t;
    t.entries.reserve(scheme.sets.size());
    for (const auto& q : scheme.sets) {
        VertexSet answer = strategy.answer(hidden, q);
        witness_answer(witnessed, answer);
        t.entries.push_back({q, std::move(answer)});
    }
    return result_from(std::move(witnessed), std::move(t));
}

double empirical_pair_report_rate(const Graph& g, int u, int v,
                                  const ReconstructionParams& params, OracleStrategy& strategy,
                                  int samples, std::mt19937_64& rng) {
    validate(params);
    if (params.n != g.vertex_count())
        throw std::invalid_argument("pair report rate: params.n does not match the graph");
    if (samples < 1) throw std::invalid_argument("pair report rate: samples must be >= 1");
    if (g.has_edge(u, v))
        throw std::invalid_argument("pair report rate: uv is an edge; the bound concerns non-edges");

    const double p = params.inclusion_probability();
    long hits = 0;
    for (int s = 0; s < samples; ++s) {
        VertexSet q = sample_vertices(g.vertex_count(), p, rng);
        VertexSet answer = strategy.answer(g, q);
        if (answer.contains(u) && answer.contains(v)) ++hits;
    }
    return double(hits) / double(samples);
}

}  // namespace misrec
