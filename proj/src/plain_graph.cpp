#include "lcgraph/plain_graph.hpp"

#include <algorithm>
#include <utility>

#include "lcgraph/errors.hpp"

namespace lcg {

PlainGraph::PlainGraph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {
    if (n < 0) throw Error("negative vertex count");
}

void PlainGraph::add_edge(int u, int v) {
    if (u == v) throw LoopError("plain graph cannot carry a loop");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw Error("edge endpoint out of range");
    adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
}

int PlainGraph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u) d += adj_[v * n_ + u];
    return d;
}

int PlainGraph::edge_count() const {
    int m = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) m += adj_[u * n_ + v];
    return m;
}

bool PlainGraph::regular(int degree) const {
    for (int v = 0; v < n_; ++v)
        if (this->degree(v) != degree) return false;
    return true;
}

bool PlainGraph::is_complete() const {
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) return false;
    return true;
}

std::vector<std::vector<int>> PlainGraph::components() const {
    std::vector<int> label(n_, -1);
    std::vector<std::vector<int>> classes;
    for (int start = 0; start < n_; ++start) {
        if (label[start] >= 0) continue;
        const int id = static_cast<int>(classes.size());
        classes.emplace_back();
        std::vector<int> stack = {start};
        label[start] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            classes[id].push_back(v);
            for (int u = 0; u < n_; ++u)
                if (adjacent(v, u) && label[u] < 0) {
                    label[u] = id;
                    stack.push_back(u);
                }
        }
    }
    for (auto& cls : classes) std::sort(cls.begin(), cls.end());
    return classes;
}

PlainGraph PlainGraph::complement() const {
    PlainGraph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) g.add_edge(u, v);
    return g;
}

PlainGraph PlainGraph::line_graph() const {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) edges.emplace_back(u, v);
    PlainGraph g(static_cast<int>(edges.size()));
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            const auto& [a, b] = edges[i];
            const auto& [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d)
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return g;
}

PlainGraph PlainGraph::edgeless(int n) { return PlainGraph(n); }

PlainGraph PlainGraph::complete(int n) {
    PlainGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

PlainGraph PlainGraph::path(int n) {
    PlainGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

PlainGraph PlainGraph::cycle(int n) {
    if (n < 3) throw BadSpecError("cycle needs at least three vertices");
    PlainGraph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

PlainGraph PlainGraph::disjoint_cliques(int k, int n) {
    if (k < 1 || n < 1) throw BadSpecError("disjoint_cliques needs k >= 1 and n >= 1");
    PlainGraph g(k * n);
    for (int c = 0; c < k; ++c)
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(c * n + u, c * n + v);
    return g;
}

PlainGraph PlainGraph::complete_multipartite(int parts, int part_size) {
    if (parts < 1 || part_size < 1)
        throw BadSpecError("complete_multipartite needs parts >= 1 and part_size >= 1");
    return disjoint_cliques(parts, part_size).complement();
}

}  // namespace lcg
