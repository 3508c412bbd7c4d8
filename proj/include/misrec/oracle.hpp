#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "misrec/graph.hpp"

namespace misrec {

// One oracle interaction: the queried set and the maximal independent set
// the oracle chose to return. answer is always a subset of query.
struct TranscriptEntry {
    VertexSet query;
    VertexSet answer;
};

struct Transcript {
    std::vector<TranscriptEntry> entries;

    std::size_t size() const { return entries.size(); }
};

enum class StrategyKind {
    LexGreedy,     // greedy scan in ascending vertex id
    RandomGreedy,  // greedy scan in a seeded random order
    MinReveal,     // greedy that minimizes newly revealed non-edge pairs
    Hider,         // clique-pair specialist; falls back to MinReveal
    ExactAdversary // enumerates all answers, takes the one revealing least
};

const char* strategy_name(StrategyKind k);
StrategyKind strategy_from_name(const std::string& name);

// The MIS oracle with a pluggable answer strategy. Every answer is a maximal
// independent set of the subgraph induced by the query. MinReveal, Hider and
// ExactAdversary carry memory of pairs already co-reported in this run;
// reset() clears it between runs.
class OracleStrategy {
public:
    explicit OracleStrategy(StrategyKind kind, std::uint64_t seed = 0);

    StrategyKind kind() const { return kind_; }

    // Answers the query and updates the revealed-pair memory.
    // q must be a subset of g's vertices (matching universe).
    VertexSet answer(const Graph& g, const VertexSet& q);

    void reset(std::uint64_t seed);

    // Non-adjacent pairs co-reported so far in this run, as a graph.
    const Graph& revealed_pairs() const { return revealed_; }

private:
    VertexSet answer_lex(const Graph& g, const VertexSet& q) const;
    VertexSet answer_random(const Graph& g, const VertexSet& q);
    VertexSet answer_min_reveal(const Graph& g, const VertexSet& q) const;
    VertexSet answer_hider(const Graph& g, const VertexSet& q) const;
    VertexSet answer_exact(const Graph& g, const VertexSet& q) const;
    void record_answer(const VertexSet& answer);

    StrategyKind kind_;
    std::mt19937_64 rng_;
    Graph revealed_;  // sized lazily to the queried graph
};

// Conditions (a) i subset of q, (b) i independent in g, (c) every vertex of
// q \ i has a neighbor in i.
bool is_maximal_independent(const Graph& g, const VertexSet& q, const VertexSet& i);

// True iff every entry of t is a valid oracle answer against g.
bool verify_transcript(const Graph& g, const Transcript& t);

// All maximal independent sets of the subgraph induced by q, as subsets of
// g's vertex set. Exponential; intended for small queries.
std::vector<VertexSet> enumerate_maximal_independent_sets(const Graph& g, const VertexSet& q);

// Transcript JSON: {"entries": [{"query": [ids], "answer": [ids]}, ...]}.
std::string transcript_to_json(const Transcript& t);
Transcript transcript_from_json(const std::string& text, int n);

}  // namespace misrec
