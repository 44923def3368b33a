#pragma once

#include <vector>

namespace lcg {

/// Ordinary undirected loopless graph over vertices 0..n-1.
class PlainGraph {
public:
    explicit PlainGraph(int n);

    int size() const { return n_; }
    bool adjacent(int u, int v) const { return adj_[u * n_ + v] != 0; }
    void add_edge(int u, int v);

    int degree(int v) const;
    int edge_count() const;
    bool regular(int degree) const;
    bool is_complete() const;
    bool is_edgeless() const { return edge_count() == 0; }

    std::vector<std::vector<int>> components() const;
    bool connected() const { return components().size() == 1; }

    PlainGraph complement() const;
    /// Vertices of the line graph are the edges of this graph in (u, v)
    /// lexicographic order; two are adjacent when the edges share an endpoint.
    PlainGraph line_graph() const;

    bool operator==(const PlainGraph& other) const = default;

    static PlainGraph edgeless(int n);
    static PlainGraph complete(int n);
    static PlainGraph path(int n);
    static PlainGraph cycle(int n);
    static PlainGraph disjoint_cliques(int k, int n);
    static PlainGraph complete_multipartite(int parts, int part_size);

private:
    int n_;
    std::vector<char> adj_;  // symmetric n*n, zero diagonal
};

}  // namespace lcg
