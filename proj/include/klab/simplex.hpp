#pragma once

#include <vector>

#include "rational.hpp"

namespace klab {

/// Exact optimum of  min 1.w  s.t.  sum_{S ni v} w_S >= 1 for every row v,
/// w >= 0, where each column S is a 0/1 incidence set of rows.
struct CoveringLpResult {
    Rational value;
    std::vector<Rational> weights; // one per column
    std::vector<Rational> duals;   // one per row
};

namespace detail {

/// Primal tableau simplex over exact rationals, specialized to the unit
/// covering LP.
///
/// No phase 1: a greedy set cover, pruned so that every chosen column keeps a
/// privately covered row, forms a triangular feasible starting basis.
///
/// Pivoting: Dantzig entering with a lexicographic ratio test taken relative
/// to the starting basis columns J0. At the start the candidate rows read
/// [rhs | identity], so they are lexicographically positive, and the pivot
/// choice keeps them so; each pivot strictly decreases the lex objective, so
/// no basis repeats and termination is guaranteed (Charnes perturbation).
class CoveringSimplex {
public:
    CoveringSimplex(int rows, const std::vector<std::vector<int>>& columns)
        : m_(rows), n_(static_cast<int>(columns.size())), columns_(columns) {
        cols_ = n_ + m_; // structural | surplus; rhs held last
        tab_.assign(m_, std::vector<Rational>(cols_ + 1, 0));
        basis_.assign(m_, 0);
        // Row i, scaled so the basic surplus column reads +1:
        //   -A_i w + s_i = -1.
        for (int i = 0; i < m_; ++i) {
            tab_[i][n_ + i] = 1;
            tab_[i][cols_] = -1;
            basis_[i] = n_ + i;
        }
        for (int j = 0; j < n_; ++j)
            for (int v : columns[j]) tab_[v][j] = -1;
    }

    CoveringLpResult solve() {
        crash_greedy_cover_basis();
        ref_cols_ = basis_; // lex reference: tableau is the identity here
        load_objective();
        run();

        CoveringLpResult out;
        out.weights.assign(n_, 0);
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_) out.weights[basis_[i]] = tab_[i][cols_];
        out.value = 0;
        for (int j = 0; j < n_; ++j) out.value += out.weights[j];
        // Reduced cost of the i-th surplus column equals the dual value y_i.
        out.duals.assign(m_, 0);
        for (int i = 0; i < m_; ++i) out.duals[i] = z_[n_ + i];
        return out;
    }

private:
    // Greedy cover: repeatedly take the column covering the most uncovered
    // rows; prune columns whose rows are all covered elsewhere, then pivot
    // each survivor in at one of its private rows.
    void crash_greedy_cover_basis() {
        std::vector<int> cover_count(m_, 0);
        std::vector<int> chosen;
        int uncovered = m_;
        std::vector<char> covered(m_, 0);
        while (uncovered > 0) {
            int best = -1, best_gain = 0;
            for (int j = 0; j < n_; ++j) {
                int gain = 0;
                for (int v : columns_[j])
                    if (!covered[v]) ++gain;
                if (gain > best_gain) {
                    best = j;
                    best_gain = gain;
                }
            }
            if (best < 0) throw Error("internal: covering LP has an uncoverable row");
            chosen.push_back(best);
            for (int v : columns_[best]) {
                if (!covered[v]) {
                    covered[v] = 1;
                    --uncovered;
                }
                ++cover_count[v];
            }
        }
        std::vector<char> keep(chosen.size(), 1);
        for (int i = static_cast<int>(chosen.size()) - 1; i >= 0; --i) {
            bool has_private = false;
            for (int v : columns_[chosen[i]])
                if (cover_count[v] == 1) {
                    has_private = true;
                    break;
                }
            if (!has_private) {
                keep[i] = 0;
                for (int v : columns_[chosen[i]]) --cover_count[v];
            }
        }
        for (size_t i = 0; i < chosen.size(); ++i) {
            if (!keep[i]) continue;
            int j = chosen[i];
            int rep = -1;
            for (int v : columns_[j])
                if (cover_count[v] == 1) {
                    rep = v;
                    break;
                }
            pivot(rep, j);
        }
        for (int i = 0; i < m_; ++i)
            if (tab_[i][cols_] < 0) throw Error("internal: crash basis not feasible");
    }

    void load_objective() {
        z_.assign(cols_, 0);
        z_rhs_ = 0;
        for (int j = 0; j < n_; ++j) z_[j] = 1;
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] >= n_) continue; // surplus columns cost nothing
            for (int j = 0; j < cols_; ++j) z_[j] -= tab_[i][j];
            z_rhs_ -= tab_[i][cols_];
        }
    }

    void run() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < cols_; ++j)
                if (z_[j] < 0 && (enter < 0 || z_[j] < z_[enter])) enter = j;
            if (enter < 0) return;

            int leave = -1;
            for (int i = 0; i < m_; ++i) {
                if (tab_[i][enter] <= 0) continue;
                if (leave < 0 || lex_less(i, leave, enter)) leave = i;
            }
            if (leave < 0) throw Error("internal: covering LP unbounded");
            pivot(leave, enter);
        }
    }

    // Compares rows a and b by (rhs, ref column entries) / pivot entry.
    bool lex_less(int a, int b, int enter) const {
        const Rational& pa = tab_[a][enter];
        const Rational& pb = tab_[b][enter];
        Rational lhs = tab_[a][cols_] * pb;
        Rational rhs = tab_[b][cols_] * pa;
        if (lhs != rhs) return lhs < rhs;
        for (int r : ref_cols_) {
            lhs = tab_[a][r] * pb;
            rhs = tab_[b][r] * pa;
            if (lhs != rhs) return lhs < rhs;
        }
        return false; // identical ratios cannot happen for independent rows
    }

    void pivot(int row, int col) {
        Rational inv = 1 / tab_[row][col];
        if (inv != 1)
            for (int j = 0; j <= cols_; ++j) tab_[row][j] *= inv;
        for (int i = 0; i < m_; ++i) {
            if (i == row || tab_[i][col] == 0) continue;
            Rational f = tab_[i][col];
            for (int j = 0; j <= cols_; ++j)
                if (tab_[row][j] != 0) tab_[i][j] -= f * tab_[row][j];
        }
        if (!z_.empty() && z_[col] != 0) {
            Rational f = z_[col];
            for (int j = 0; j < cols_; ++j)
                if (tab_[row][j] != 0) z_[j] -= f * tab_[row][j];
            z_rhs_ -= f * tab_[row][cols_];
        }
        basis_[row] = col;
    }

    int m_, n_, cols_;
    const std::vector<std::vector<int>>& columns_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<Rational> z_;
    Rational z_rhs_;
    std::vector<int> basis_;
    std::vector<int> ref_cols_;
};

} // namespace detail

inline CoveringLpResult solve_unit_covering_lp(int rows,
                                               const std::vector<std::vector<int>>& columns) {
    if (rows == 0) {
        CoveringLpResult out;
        out.weights.assign(columns.size(), 0);
        out.value = 0;
        return out;
    }
    return detail::CoveringSimplex(rows, columns).solve();
}

} // namespace klab
