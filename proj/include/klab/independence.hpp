#pragma once

#include <string>
#include <vector>

#include "coloring.hpp"
#include "graph.hpp"

namespace klab {

namespace detail {

/// Tomita-style max-clique: branch on candidates in reverse greedy-color
/// order, pruning with size + color-bound.
class MaxCliqueSearch {
public:
    explicit MaxCliqueSearch(const Graph& g) : g_(g) {}

    VertexSet run() {
        best_ = VertexSet(g_.num_vertices());
        VertexSet cand = g_.full_vertex_set();
        VertexSet current(g_.num_vertices());
        expand(cand, current);
        return best_;
    }

private:
    void expand(const VertexSet& cand, VertexSet& current) {
        if (cand.none()) {
            if (current.count() > best_.count()) best_ = current;
            return;
        }
        // Greedy color classes over the candidates; the class index + 1 bounds
        // the clique extension achievable with that vertex and its successors.
        std::vector<int> verts;
        std::vector<int> bound;
        {
            VertexSet uncolored = cand;
            int color = 0;
            while (uncolored.any()) {
                ++color;
                VertexSet avail = uncolored;
                while (avail.any()) {
                    int v = static_cast<int>(avail.find_first());
                    verts.push_back(v);
                    bound.push_back(color);
                    avail.reset(v);
                    uncolored.reset(v);
                    avail -= g_.neighbors(v);
                }
            }
        }
        for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
            if (current.count() + bound[i] <= best_.count()) return;
            int v = verts[i];
            current.set(v);
            VertexSet next = cand & g_.neighbors(v);
            for (int j = i; j < static_cast<int>(verts.size()); ++j) next.reset(verts[j]);
            expand(next, current);
            current.reset(v);
        }
    }

    const Graph& g_;
    VertexSet best_;
};

} // namespace detail

/// Exact maximum-clique witness (branch and bound).
inline VertexSet max_clique(const Graph& g) {
    if (g.num_vertices() == 0) return VertexSet(0);
    return detail::MaxCliqueSearch(g).run();
}

struct IndependenceResult {
    int size = 0;
    VertexSet witness;
};

/// Exact maximum independent set via branch and bound on the complement.
/// Throws SizeLimit beyond the configured bound (default 64).
inline IndependenceResult independence_number(const Graph& g, long bound = exact_search_bound()) {
    if (g.num_vertices() > bound)
        throw SizeLimit("independence_number limited to " + std::to_string(bound) + " vertices");
    IndependenceResult res;
    res.witness = max_clique(g.complement());
    res.size = static_cast<int>(res.witness.count());
    if (!is_independent(g, res.witness)) throw Error("internal: independence witness not independent");
    return res;
}

} // namespace klab
