#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace klab {

using VertexSet = boost::dynamic_bitset<>;

inline std::vector<int> set_members(const VertexSet& s) {
    std::vector<int> out;
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
        out.push_back(static_cast<int>(v));
    return out;
}

inline VertexSet make_set(int n, const std::vector<int>& members) {
    VertexSet s(n);
    for (int v : members) s.set(v);
    return s;
}

using Edge = std::pair<int, int>;
using EdgeLabels = std::map<Edge, int>;

/// Finite undirected simple graph over vertices 0..n-1 with dense bit-row
/// adjacency and optional small-integer edge labels. Immutable after
/// construction; algorithms return fresh values.
class Graph {
public:
    Graph() : n_(0) {}

    Graph(int n, const std::vector<Edge>& edges, EdgeLabels labels = {}) : n_(n) {
        if (n < 0) throw BadParams("negative vertex count");
        adj_.assign(n, VertexSet(n));
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n) throw BadParams("edge endpoint out of range");
            if (u == v) throw BadParams("self-loop rejected");
            adj_[u].set(v);
            adj_[v].set(u);
        }
        for (auto& [e, lab] : labels) {
            auto [u, v] = e;
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n || !adj_[u].test(v)) throw BadParams("label on a non-edge");
            labels_[{u, v}] = lab;
        }
    }

    int num_vertices() const { return n_; }

    long num_edges() const {
        long m = 0;
        for (const auto& row : adj_) m += static_cast<long>(row.count());
        return m / 2;
    }

    bool has_edge(int u, int v) const { return u != v && adj_[u].test(v); }

    const VertexSet& neighbors(int v) const { return adj_[v]; }

    int degree(int v) const { return static_cast<int>(adj_[v].count()); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    /// Edges as (u,v) pairs with u < v, lexicographically sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (auto v = adj_[u].find_next(u); v != VertexSet::npos; v = adj_[u].find_next(v))
                out.emplace_back(u, static_cast<int>(v));
        return out;
    }

    const EdgeLabels& edge_labels() const { return labels_; }

    bool has_label(int u, int v) const {
        if (u > v) std::swap(u, v);
        return labels_.count({u, v}) > 0;
    }

    int label(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = labels_.find({u, v});
        if (it == labels_.end()) throw BadParams("edge has no label");
        return it->second;
    }

    VertexSet full_vertex_set() const {
        VertexSet s(n_);
        s.set();
        return s;
    }

    Graph complement() const {
        std::vector<Edge> es;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!adj_[u].test(v)) es.emplace_back(u, v);
        return Graph(n_, es);
    }

    /// Induced subgraph on `keep`; out maps new index -> old vertex.
    Graph induced(const VertexSet& keep, std::vector<int>* old_of_new = nullptr) const {
        std::vector<int> members = set_members(keep);
        std::vector<int> new_of_old(n_, -1);
        for (size_t i = 0; i < members.size(); ++i) new_of_old[members[i]] = static_cast<int>(i);
        std::vector<Edge> es;
        for (auto [u, v] : edges())
            if (new_of_old[u] >= 0 && new_of_old[v] >= 0)
                es.emplace_back(new_of_old[u], new_of_old[v]);
        if (old_of_new) *old_of_new = members;
        return Graph(static_cast<int>(members.size()), es);
    }

private:
    int n_;
    std::vector<VertexSet> adj_;
    EdgeLabels labels_;
};

inline Graph make_complete(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, es);
}

inline Graph make_cycle(int n) {
    if (n < 3) throw BadParams("cycle needs >= 3 vertices");
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
    return Graph(n, es);
}

inline Graph make_path(int n) {
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    return Graph(n, es);
}

/// Star K_{1,n}: center is vertex 0.
inline Graph make_star(int leaves) {
    std::vector<Edge> es;
    for (int v = 1; v <= leaves; ++v) es.emplace_back(0, v);
    return Graph(leaves + 1, es);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> es = a.edges();
    for (auto [u, v] : b.edges()) es.emplace_back(u + a.num_vertices(), v + a.num_vertices());
    return Graph(a.num_vertices() + b.num_vertices(), es);
}

} // namespace klab
