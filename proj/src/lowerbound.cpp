#include "misrec/lowerbound.hpp"

#include <cmath>
#include <stdexcept>

namespace misrec {

int PartitionState::largest_class() const {
    int best = 0;
    for (const auto& c : classes) best = std::max(best, c.size());
    return best;
}

PartitionState initial_partition(int n) {
    if (n < 1) throw std::invalid_argument("partition: n must be >= 1");
    return {{VertexSet::full(n)}};
}

PartitionState refine(const PartitionState& p, const VertexSet& q, const VertexSet& i) {
    if (!i.is_subset_of(q)) throw std::invalid_argument("refine: answer not within query");

    PartitionState out;
    out.classes.reserve(p.classes.size() * 3);
    for (const auto& cls : p.classes) {
        VertexSet reported = cls & i;
        VertexSet silent = (cls & q) - i;
        VertexSet unqueried = cls - q;
        if (!reported.empty()) out.classes.push_back(std::move(reported));
        if (!silent.empty()) out.classes.push_back(std::move(silent));
        if (!unqueried.empty()) out.classes.push_back(std::move(unqueried));
    }
    return out;
}

PartitionState run_partition(int n, const Transcript& t) {
    PartitionState p = initial_partition(n);
    for (const auto& e : t.entries) p = refine(p, e.query, e.answer);
    return p;
}

std::optional<EdgePair> indistinguishable_pair(int n, const Transcript& t) {
    PartitionState p = run_partition(n, t);
    const VertexSet* best = nullptr;
    for (const auto& cls : p.classes)
        if (cls.size() >= 2 && (best == nullptr || cls.min() < best->min())) best = &cls;
    if (best == nullptr) return std::nullopt;

    auto it = best->begin();
    int first = *it;
    ++it;
    return EdgePair(first, *it);
}

namespace {

bool is_cycle(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    // connected + 2-regular = single cycle
    VertexSet seen(n);
    int cur = 0, prev = -1, steps = 0;
    while (!seen.contains(cur)) {
        seen.insert(cur);
        ++steps;
        int next = -1;
        for (int w : g.neighbors(cur))
            if (w != prev) next = w;
        prev = cur;
        cur = next;
    }
    return steps == n;
}

}  // namespace

SwapWitness swap_cycle_witness(const Graph& cycle, const Transcript& t, int u, int v) {
    const int n = cycle.vertex_count();
    if (!is_cycle(cycle)) throw std::invalid_argument("swap_cycle_witness: input is not a cycle");
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
        throw std::invalid_argument("swap_cycle_witness: bad vertex pair");

    // Relabel by the transposition (u v): u takes v's place in the cyclic
    // order and vice versa. When u, v are cycle-adjacent the pair edge maps
    // to itself and only the two outer edges change.
    auto swap_id = [&](int x) { return x == u ? v : (x == v ? u : x); };
    Graph swapped(n);
    for (const auto& e : cycle.edges()) {
        int a = swap_id(e.u), b = swap_id(e.v);
        if (!swapped.has_edge(a, b)) swapped.add_edge(a, b);
    }
    bool consistent = verify_transcript(swapped, t);
    return {std::move(swapped), consistent};
}

int cycle_query_lower_bound(int n) {
    if (n < 3) throw std::invalid_argument("cycle_query_lower_bound: n must be >= 3");
    // smallest k with 3^k >= n, minus one
    int k = 0;
    long long pow3 = 1;
    while (pow3 < n) {
        pow3 *= 3;
        ++k;
    }
    return k - 1;
}

int reveal_count(const Graph& g, const Transcript& t) {
    if (!verify_transcript(g, t))
        throw std::invalid_argument("reveal_count: transcript is not valid for this graph");
    Graph seen(g.vertex_count());
    for (const auto& e : t.entries) {
        std::vector<int> ids = e.answer.to_vector();
        for (std::size_t a = 0; a < ids.size(); ++a)
            for (std::size_t b = a + 1; b < ids.size(); ++b)
                if (!seen.has_edge(ids[a], ids[b])) seen.add_edge(ids[a], ids[b]);
    }
    return seen.edge_count();
}

double is_query_lower_bound(int n, int delta) {
    if (delta < 1 || delta >= n)
        throw std::invalid_argument("is_query_lower_bound: need 1 <= delta < n");
    return 0.25 * double(n) * double(delta) * std::log2(double(n) / double(delta)) - 2.0;
}

}  // namespace misrec
