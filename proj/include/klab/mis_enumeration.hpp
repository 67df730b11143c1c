#pragma once

#include <string>
#include <vector>

#include "coloring.hpp"
#include "graph.hpp"

namespace klab {

namespace detail {

/// Bron-Kerbosch with pivoting over the complement adjacency, so the reported
/// "cliques" are the inclusion-maximal independent sets of the input graph.
class MisEnumerator {
public:
    MisEnumerator(const Graph& g, long cap) : g_(g), cap_(cap) {
        int n = g.num_vertices();
        non_adj_.reserve(n);
        for (int v = 0; v < n; ++v) {
            VertexSet s = ~g.neighbors(v);
            s.reset(v);
            non_adj_.push_back(std::move(s));
        }
    }

    std::vector<VertexSet> run() {
        out_.clear();
        int n = g_.num_vertices();
        if (n == 0) return out_;
        VertexSet r(n), p(n), x(n);
        p.set();
        recurse(r, p, x);
        return out_;
    }

private:
    void recurse(VertexSet& r, VertexSet p, VertexSet x) {
        if (p.none() && x.none()) {
            if (static_cast<long>(out_.size()) >= cap_)
                throw CapExceeded("maximal independent set count exceeds cap " +
                                  std::to_string(cap_));
            out_.push_back(r);
            return;
        }
        // pivot: vertex of P|X with most candidates among its non-neighbors
        int pivot = -1;
        size_t best = 0;
        VertexSet px = p | x;
        for (auto u = px.find_first(); u != VertexSet::npos; u = px.find_next(u)) {
            size_t score = (p & non_adj_[u]).count();
            if (pivot < 0 || score > best) {
                pivot = static_cast<int>(u);
                best = score;
            }
        }
        VertexSet candidates = p - non_adj_[pivot];
        for (auto v = candidates.find_first(); v != VertexSet::npos; v = candidates.find_next(v)) {
            r.set(v);
            recurse(r, p & non_adj_[v], x & non_adj_[v]);
            r.reset(v);
            p.reset(v);
            x.set(v);
        }
    }

    const Graph& g_;
    long cap_;
    std::vector<VertexSet> non_adj_;
    std::vector<VertexSet> out_;
};

} // namespace detail

/// All inclusion-maximal independent sets, in the deterministic order of the
/// pivoting recursion. Throws CapExceeded past `cap`.
inline std::vector<VertexSet> enumerate_maximal_independent_sets(const Graph& g,
                                                                 long cap = mis_cap()) {
    return detail::MisEnumerator(g, cap).run();
}

} // namespace klab
