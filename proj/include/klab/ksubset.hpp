#pragma once

#include <limits>
#include <vector>

#include "errors.hpp"

namespace klab {

/// Combinadic codec for k-element subsets of {0..n-1} in colexicographic
/// order: rank(S) = sum_j C(s_j, j+1) over sorted members s_0 < ... < s_{k-1}.
/// Fixes vertex identity across runs and machines.
class KSubsetCodec {
public:
    KSubsetCodec(int n, int k) : n_(n), k_(k) {
        if (k < 0 || n < 0 || k > n) throw BadParams("KSubsetCodec needs 0 <= k <= n");
        // Saturated Pascal table: C(i, j) for i <= n, j <= k.
        table_.assign(static_cast<size_t>(n + 1) * (k + 1), 0);
        for (int i = 0; i <= n; ++i) {
            at(i, 0) = 1;
            for (int j = 1; j <= std::min(i, k); ++j)
                at(i, j) = sat_add(at(i - 1, j - 1), i - 1 >= j ? at(i - 1, j) : 0);
        }
    }

    int n() const { return n_; }
    int k() const { return k_; }

    long count() const { return at(n_, k_); }

    long rank(const std::vector<int>& members) const {
        if (static_cast<int>(members.size()) != k_) throw BadParams("wrong subset size");
        long r = 0;
        for (int j = 0; j < k_; ++j) r = sat_add(r, at(members[j], j + 1));
        return r;
    }

    std::vector<int> unrank(long r) const {
        std::vector<int> members(k_);
        for (int j = k_ - 1; j >= 0; --j) {
            int c = j; // smallest value with C(c, j+1) defined
            for (int hi = n_ - 1; hi > c;) {
                // binary search for largest c with C(c, j+1) <= r
                int mid = (c + hi + 1) / 2;
                if (at(mid, j + 1) <= r)
                    c = mid;
                else
                    hi = mid - 1;
            }
            members[j] = c;
            r -= at(c, j + 1);
        }
        if (r != 0) throw BadParams("rank out of range");
        return members;
    }

    /// First subset in colex order: {0,...,k-1}.
    std::vector<int> first() const {
        std::vector<int> m(k_);
        for (int j = 0; j < k_; ++j) m[j] = j;
        return m;
    }

    /// Advances to the colex successor; false when exhausted.
    bool next(std::vector<int>& m) const {
        for (int j = 0; j < k_; ++j) {
            int limit = (j + 1 < k_) ? m[j + 1] : n_;
            if (m[j] + 1 < limit) {
                ++m[j];
                for (int i = 0; i < j; ++i) m[i] = i;
                return true;
            }
        }
        return false;
    }

private:
    static constexpr long kSat = std::numeric_limits<long>::max() / 4;

    static long sat_add(long a, long b) { return (a >= kSat || b >= kSat || a + b >= kSat) ? kSat : a + b; }

    long& at(int i, int j) { return table_[static_cast<size_t>(i) * (k_ + 1) + j]; }
    long at(int i, int j) const { return table_[static_cast<size_t>(i) * (k_ + 1) + j]; }

    int n_, k_;
    std::vector<long> table_;
};

} // namespace klab
