#pragma once

#include <vector>

#include "graph.hpp"

namespace klab {

/// Assignment of exactly k colors from {0..n-1} per vertex with disjoint
/// color sets across every edge: a homomorphism into K(n,k).
struct FoldColoring {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> assignment; // sorted color sets per vertex
};

inline bool validate_fold_coloring(const Graph& g, const FoldColoring& fc) {
    if (static_cast<int>(fc.assignment.size()) != g.num_vertices()) return false;
    if (fc.k < 1 || fc.n < fc.k) return false;
    std::vector<VertexSet> mask(g.num_vertices(), VertexSet(fc.n));
    for (int v = 0; v < g.num_vertices(); ++v) {
        const auto& colors = fc.assignment[v];
        if (static_cast<int>(colors.size()) != fc.k) return false;
        for (int c : colors) {
            if (c < 0 || c >= fc.n) return false;
            if (mask[v].test(c)) return false; // repeated color
            mask[v].set(c);
        }
    }
    for (auto [u, v] : g.edges())
        if ((mask[u] & mask[v]).any()) return false;
    return true;
}

} // namespace klab
