#pragma once

#include <optional>

#include "misrec/graph.hpp"
#include "misrec/oracle.hpp"

namespace misrec {

// Frontier of the ternary distinguishing tree: the classes of vertices that
// behaved identically in every query so far.
struct PartitionState {
    std::vector<VertexSet> classes;

    int class_count() const { return int(classes.size()); }
    int largest_class() const;
};

PartitionState initial_partition(int n);

// Splits every class into (queried and reported, queried and not reported,
// not queried); empty parts are dropped, so the class count at most triples.
PartitionState refine(const PartitionState& p, const VertexSet& q, const VertexSet& i);

// Folds refine over the transcript starting from one class [0, n).
PartitionState run_partition(int n, const Transcript& t);

// Two vertices the transcript cannot tell apart: the two smallest ids of the
// non-singleton class with the smallest minimum, or nullopt when all classes
// are singletons.
std::optional<EdgePair> indistinguishable_pair(int n, const Transcript& t);

// The cycle with u's and v's positions exchanged, plus whether the
// transcript is still valid against it. For genuinely indistinguishable
// pairs it always is: that is the content of the cycle lower bound.
struct SwapWitness {
    Graph swapped;
    bool consistent;
};

SwapWitness swap_cycle_witness(const Graph& cycle, const Transcript& t, int u, int v);

// ceil(log3 n) - 1, computed in integers.
int cycle_query_lower_bound(int n);

// Number of distinct pairs co-appearing in the transcript's answers. Each
// answer of size <= 2 contributes at most one, which is what caps the
// learning rate on clique-pair graphs.
int reveal_count(const Graph& g, const Transcript& t);

// (1/4) n delta log2(n/delta) - 2: the log of the count of graphs with max
// degree delta, hence a lower bound on binary-answer queries. Meaningful
// when delta is at least on the order of log n.
double is_query_lower_bound(int n, int delta);

}  // namespace misrec
