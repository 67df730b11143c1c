#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "graph.hpp"

namespace klab {

struct Coloring {
    std::vector<int> color; // total map vertex -> {0..palette-1}
    int palette = 0;
};

inline bool is_proper(const Graph& g, const std::vector<int>& color) {
    for (auto [u, v] : g.edges())
        if (color[u] == color[v]) return false;
    return true;
}

inline std::vector<int> identity_order(int n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

/// Each vertex gets the least color unused among earlier-ordered neighbors.
/// Throws PaletteTooSmall only when the palette actually runs out.
inline Coloring greedy_coloring(const Graph& g, const std::vector<int>& order, int palette) {
    if (static_cast<int>(order.size()) != g.num_vertices())
        throw BadParams("order must be a permutation of the vertices");
    Coloring out;
    out.palette = palette;
    out.color.assign(g.num_vertices(), -1);
    std::vector<char> used;
    for (int v : order) {
        used.assign(palette, 0);
        const auto& nb = g.neighbors(v);
        for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u))
            if (out.color[u] >= 0 && out.color[u] < palette) used[out.color[u]] = 1;
        int c = 0;
        while (c < palette && used[c]) ++c;
        if (c == palette)
            throw PaletteTooSmall("greedy coloring needs more than " + std::to_string(palette) +
                                  " colors at vertex " + std::to_string(v));
        out.color[v] = c;
    }
    return out;
}

/// Greedy inclusion-maximal independent subset of `active`, maximal relative
/// to the graph induced on `active`.
inline VertexSet maximal_independent_set(const Graph& g, const VertexSet& active,
                                         const std::vector<int>& order) {
    VertexSet chosen(g.num_vertices());
    for (int v : order) {
        if (!active.test(v)) continue;
        if ((g.neighbors(v) & chosen).any()) continue;
        chosen.set(v);
    }
    return chosen;
}

inline VertexSet maximal_independent_set(const Graph& g, const VertexSet& active) {
    return maximal_independent_set(g, active, identity_order(g.num_vertices()));
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
        if ((g.neighbors(static_cast<int>(v)) & s).any()) return false;
    return true;
}

} // namespace klab
