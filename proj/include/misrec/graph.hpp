#pragma once

#include <stdexcept>
#include <vector>

#include "misrec/vertex_set.hpp"

namespace misrec {

// Unordered pair of distinct vertices, stored with u < v.
struct EdgePair {
    int u;
    int v;

    EdgePair(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("EdgePair: endpoints must differ");
    }

    auto operator<=>(const EdgePair&) const = default;
};

// Undirected simple graph on vertices 0..n-1, adjacency stored as per-vertex
// bitsets. Symmetry and absence of self-loops hold by construction.
class Graph {
public:
    // n = 0 is allowed so the subgraph induced by an empty set is
    // representable; parsers and generators require n >= 1.
    explicit Graph(int n = 0) : n_(n), adj_(n, VertexSet(n)) {
        if (n < 0) throw std::invalid_argument("Graph: vertex count must be >= 0");
    }

    int vertex_count() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
        adj_[u].insert(v);
        adj_[v].insert(u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].contains(v);
    }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return neighbors(v).size(); }

    int edge_count() const {
        int twice = 0;
        for (const auto& a : adj_) twice += a.size();
        return twice / 2;
    }

    // Canonically ordered (u < v, sorted) edge list.
    std::vector<EdgePair> edges() const {
        std::vector<EdgePair> out;
        out.reserve(edge_count());
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex id out of range");
    }

    int n_;
    std::vector<VertexSet> adj_;
};

int max_degree(const Graph& g);

// All unordered pairs of distinct vertices that are not edges, in canonical
// order.
std::vector<EdgePair> non_edges(const Graph& g);

// Graph on the same vertex set whose edges are exactly the non-edges of g.
Graph complement(const Graph& g);

// Subgraph induced by s, relabeled to 0..|s|-1. original_ids maps local ids
// back to the ids in the source graph (ascending).
struct InducedSubgraph {
    Graph graph;
    std::vector<int> original_ids;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

}  // namespace misrec
