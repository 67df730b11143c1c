#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "graph.hpp"
#include "independence.hpp"

namespace klab {

namespace detail {

/// Decision search for a proper c-coloring: DSATUR branching with color
/// classes introduced in index order (first vertex effectively fixed to 0).
class ColorabilitySearch {
public:
    ColorabilitySearch(const Graph& g, int c) : g_(g), c_(c) {}

    bool run(std::vector<int>* out) {
        if (c_ > 64) throw SizeLimit("colorability search supports at most 64 colors");
        int n = g_.num_vertices();
        color_.assign(n, -1);
        neighbor_colors_.assign(n, 0);
        if (!place(0, n)) return false;
        if (out) *out = color_;
        return true;
    }

private:
    bool place(int max_used, int remaining) {
        if (remaining == 0) return true;
        int v = pick_vertex();
        std::uint64_t full = (c_ >= 64) ? ~0ULL : ((1ULL << c_) - 1);
        std::uint64_t forbidden = neighbor_colors_[v];
        int limit = std::min(max_used + 1, c_);
        std::uint64_t allowed = ~forbidden & full & ((limit >= 64) ? ~0ULL : ((1ULL << limit) - 1));
        while (allowed != 0) {
            int col = __builtin_ctzll(allowed);
            allowed &= allowed - 1;
            color_[v] = col;
            bool dead = false;
            std::vector<int> touched;
            const auto& nb = g_.neighbors(v);
            for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u)) {
                if (color_[u] >= 0) continue;
                if ((neighbor_colors_[u] & (1ULL << col)) == 0) {
                    neighbor_colors_[u] |= (1ULL << col);
                    touched.push_back(static_cast<int>(u));
                    if ((~neighbor_colors_[u] & full) == 0) dead = true;
                }
            }
            if (!dead && place(std::max(max_used, col + 1), remaining - 1)) return true;
            for (int u : touched) neighbor_colors_[u] &= ~(1ULL << col);
            color_[v] = -1;
        }
        return false;
    }

    // Max saturation, tie broken by degree among uncolored, then lowest index.
    int pick_vertex() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g_.num_vertices(); ++v) {
            if (color_[v] >= 0) continue;
            int sat = __builtin_popcountll(neighbor_colors_[v]);
            if (sat < best_sat) continue;
            int deg = 0;
            const auto& nb = g_.neighbors(v);
            for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u))
                if (color_[u] < 0) ++deg;
            if (sat > best_sat || deg > best_deg) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    const Graph& g_;
    int c_;
    std::vector<int> color_;
    std::vector<std::uint64_t> neighbor_colors_;
};

} // namespace detail

inline bool colorable_with(const Graph& g, int c, std::vector<int>* out = nullptr) {
    if (c < 0) throw BadParams("palette size must be nonnegative");
    if (g.num_vertices() == 0) return true;
    if (c == 0) return false;
    return detail::ColorabilitySearch(g, c).run(out);
}

struct ChromaticResult {
    int value = 0;
    Coloring witness;
};

/// Exact chromatic number: climb c from the exact clique bound until the
/// DSATUR decision search succeeds. Greedy gives the initial upper bound.
inline ChromaticResult chromatic_number_with_witness(const Graph& g, long bound = 512) {
    if (g.num_vertices() > bound)
        throw SizeLimit("chromatic_number limited to " + std::to_string(bound) + " vertices");
    ChromaticResult res;
    if (g.num_vertices() == 0) return res;
    int lower = static_cast<int>(max_clique(g).count());
    Coloring greedy = greedy_coloring(g, identity_order(g.num_vertices()), g.max_degree() + 1);
    int upper = 0;
    for (int c : greedy.color) upper = std::max(upper, c + 1);
    for (int c = lower; c <= upper; ++c) {
        std::vector<int> colors;
        if (c == upper || colorable_with(g, c, &colors)) {
            if (c == upper && colors.empty()) colors = greedy.color;
            res.value = c;
            res.witness.color = colors;
            res.witness.palette = c;
            if (!is_proper(g, res.witness.color))
                throw Error("internal: chromatic witness not proper");
            return res;
        }
    }
    throw Error("internal: chromatic search fell through");
}

inline int chromatic_number(const Graph& g, long bound = 512) {
    return chromatic_number_with_witness(g, bound).value;
}

} // namespace klab
