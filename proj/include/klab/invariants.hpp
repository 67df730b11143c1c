#pragma once

#include <deque>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace klab {

/// BFS distances from `root`; -1 for unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, int root) {
    std::vector<int> dist(g.num_vertices(), -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        const auto& nb = g.neighbors(u);
        for (auto v = nb.find_first(); v != VertexSet::npos; v = nb.find_next(v)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(static_cast<int>(v));
            }
        }
    }
    return dist;
}

/// Length of a shortest odd cycle; nullopt iff the graph is bipartite.
///
/// Per-root BFS: an edge joining two vertices on levels of equal parity
/// closes an odd walk of length dist(u)+dist(v)+1 through the root, and the
/// minimum of these over all roots is the odd girth.
inline std::optional<int> odd_girth(const Graph& g) {
    int best = -1;
    auto edges = g.edges();
    for (int root = 0; root < g.num_vertices(); ++root) {
        auto dist = bfs_distances(g, root);
        for (auto [u, v] : edges) {
            if (dist[u] < 0 || dist[v] < 0) continue;
            if ((dist[u] + dist[v]) % 2 != 0) continue;
            int len = dist[u] + dist[v] + 1;
            if (best < 0 || len < best) best = len;
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

/// Length of a shortest cycle of any parity; nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
    int best = -1;
    auto edges = g.edges();
    std::vector<int> dist(g.num_vertices());
    std::vector<int> parent(g.num_vertices());
    for (int root = 0; root < g.num_vertices(); ++root) {
        dist.assign(g.num_vertices(), -1);
        parent.assign(g.num_vertices(), -1);
        std::deque<int> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            const auto& nb = g.neighbors(u);
            for (auto v = nb.find_first(); v != VertexSet::npos; v = nb.find_next(v)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(static_cast<int>(v));
                }
            }
        }
        // Every non-tree edge closes a walk containing a cycle of at most its
        // length; roots on a shortest cycle realize the girth exactly.
        for (auto [u, v] : edges) {
            if (dist[u] < 0 || dist[v] < 0) continue;
            if (parent[u] == v || parent[v] == u) continue;
            int len = dist[u] + dist[v] + 1;
            if (best < 0 || len < best) best = len;
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

inline bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.num_vertices(), -1);
    for (int root = 0; root < g.num_vertices(); ++root) {
        if (side[root] >= 0) continue;
        side[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            const auto& nb = g.neighbors(u);
            for (auto v = nb.find_first(); v != VertexSet::npos; v = nb.find_next(v)) {
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    queue.push_back(static_cast<int>(v));
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Same vertex set; u ~ v iff 1 <= dist_G(u,v) <= r.
inline Graph power_graph(const Graph& g, int r) {
    if (r < 1) throw BadParams("power radius must be >= 1");
    std::vector<Edge> es;
    for (int u = 0; u < g.num_vertices(); ++u) {
        auto dist = bfs_distances(g, u);
        for (int v = u + 1; v < g.num_vertices(); ++v)
            if (dist[v] >= 1 && dist[v] <= r) es.emplace_back(u, v);
    }
    return Graph(g.num_vertices(), es);
}

struct ComponentPartition {
    std::vector<int> label;      // vertex -> component id
    int count = 0;
    std::vector<std::vector<int>> members; // component id -> vertices
};

inline ComponentPartition connected_components(const Graph& g) {
    ComponentPartition part;
    part.label.assign(g.num_vertices(), -1);
    for (int root = 0; root < g.num_vertices(); ++root) {
        if (part.label[root] >= 0) continue;
        int id = part.count++;
        part.members.emplace_back();
        std::deque<int> queue{root};
        part.label[root] = id;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            part.members[id].push_back(u);
            const auto& nb = g.neighbors(u);
            for (auto v = nb.find_first(); v != VertexSet::npos; v = nb.find_next(v)) {
                if (part.label[v] < 0) {
                    part.label[v] = id;
                    queue.push_back(static_cast<int>(v));
                }
            }
        }
    }
    return part;
}

} // namespace klab
