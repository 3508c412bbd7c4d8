#include "misrec/graph.hpp"

#include <algorithm>

namespace misrec {

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

std::vector<EdgePair> non_edges(const Graph& g) {
    std::vector<EdgePair> out;
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        VertexSet missing = g.neighbors(u).complement();
        for (int v : missing)
            if (v > u) out.emplace_back(u, v);
    }
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph out(n);
    for (int u = 0; u < n; ++u) {
        VertexSet missing = g.neighbors(u).complement();
        for (int v : missing)
            if (v > u) out.add_edge(u, v);
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw std::invalid_argument("induced_subgraph: vertex set universe mismatch");
    std::vector<int> ids = s.to_vector();
    std::vector<int> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = int(i);

    Graph h(int(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i) {
        VertexSet hit = g.neighbors(ids[i]) & s;
        for (int w : hit)
            if (local[w] > int(i)) h.add_edge(int(i), local[w]);
    }
    return {std::move(h), std::move(ids)};
}

}  // namespace misrec
