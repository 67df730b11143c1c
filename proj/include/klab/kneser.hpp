#pragma once

#include <string>
#include <vector>

#include "coloring.hpp"
#include "graph.hpp"
#include "ksubset.hpp"
#include "rational.hpp"

namespace klab {

inline bool sets_disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return true;
}

/// No two members differ by 1 mod n (cyclically stable).
inline bool is_cyclically_stable(const std::vector<int>& members, int n) {
    int k = static_cast<int>(members.size());
    for (int j = 0; j + 1 < k; ++j)
        if (members[j + 1] - members[j] == 1) return false;
    if (k >= 2 && members[0] == 0 && members[k - 1] == n - 1) return false;
    return true;
}

namespace detail {

inline void check_kneser_params(int n, int k, bool allow_edgeless) {
    if (k < 1) throw BadParams("k must be >= 1");
    if (n < 2 * k && !allow_edgeless)
        throw BadParams("n < 2k gives an edgeless Kneser graph; pass the explicit override");
}

inline std::vector<int> complement_members(const std::vector<int>& a, int n) {
    std::vector<int> out;
    out.reserve(n - a.size());
    size_t j = 0;
    for (int x = 0; x < n; ++x) {
        if (j < a.size() && a[j] == x)
            ++j;
        else
            out.push_back(x);
    }
    return out;
}

} // namespace detail

/// K(n,k): vertex i is the rank-i k-subset; edges join disjoint subsets.
/// Edges are produced per vertex from the k-subsets of its complement, so the
/// cost is proportional to the edge count.
inline Graph kneser_graph(int n, int k, bool allow_edgeless = false, long cap = vertex_cap(),
                          long edge_cap = 4000000) {
    detail::check_kneser_params(n, k, allow_edgeless);
    KSubsetCodec codec(n, k);
    long vcount = codec.count();
    if (vcount > cap)
        throw CapExceeded("K(" + std::to_string(n) + "," + std::to_string(k) + ") has " +
                          std::to_string(vcount) + " vertices, cap " + std::to_string(cap));
    std::vector<Edge> edges;
    if (n >= 2 * k) {
        auto members = codec.first();
        long r = 0;
        do {
            auto rest = detail::complement_members(members, n);
            KSubsetCodec sub(static_cast<int>(rest.size()), k);
            auto pick = sub.first();
            std::vector<int> other(k);
            do {
                for (int j = 0; j < k; ++j) other[j] = rest[pick[j]];
                long s = codec.rank(other);
                if (s > r) {
                    edges.emplace_back(static_cast<int>(r), static_cast<int>(s));
                    if (static_cast<long>(edges.size()) > edge_cap)
                        throw CapExceeded("Kneser edge count exceeds cap");
                }
            } while (sub.next(pick));
            ++r;
        } while (codec.next(members));
    }
    return Graph(static_cast<int>(vcount), edges);
}

struct SchrijverGraph {
    Graph graph;
    std::vector<long> kneser_rank; // vertex -> rank of its subset in K(n,k)
    std::vector<std::vector<int>> members;
};

/// K'(n,k): induced subgraph of K(n,k) on the cyclically stable subsets.
inline SchrijverGraph schrijver_graph(int n, int k, bool allow_edgeless = false,
                                      long cap = vertex_cap()) {
    detail::check_kneser_params(n, k, allow_edgeless);
    KSubsetCodec codec(n, k);
    if (codec.count() > cap) throw CapExceeded("Schrijver enumeration over K(n,k) exceeds cap");
    SchrijverGraph out;
    std::vector<int> index_of_rank(codec.count(), -1);
    {
        auto members = codec.first();
        long r = 0;
        do {
            if (is_cyclically_stable(members, n)) {
                index_of_rank[r] = static_cast<int>(out.kneser_rank.size());
                out.kneser_rank.push_back(r);
                out.members.push_back(members);
            }
            ++r;
        } while (codec.next(members));
    }
    std::vector<Edge> edges;
    if (n >= 2 * k) {
        for (size_t i = 0; i < out.members.size(); ++i) {
            auto rest = detail::complement_members(out.members[i], n);
            KSubsetCodec sub(static_cast<int>(rest.size()), k);
            auto pick = sub.first();
            std::vector<int> other(k);
            do {
                for (int j = 0; j < k; ++j) other[j] = rest[pick[j]];
                if (!is_cyclically_stable(other, n)) continue;
                int s = index_of_rank[codec.rank(other)];
                if (s > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), s);
            } while (sub.next(pick));
        }
    }
    out.graph = Graph(static_cast<int>(out.members.size()), edges);
    return out;
}

/// |V(K'(n,k))| by the closed formula (n/k)*C(n-k-1,k-1), exact integers.
/// The formula applies to n > 2k; n = 2k returns 2 by enumeration convention.
inline BigInt schrijver_vertex_count(int n, int k) {
    if (k < 1 || n < 2 * k) throw BadParams("schrijver_vertex_count needs n >= 2k >= 2");
    if (n == 2 * k) return 2;
    BigInt num = BigInt(n) * big_binomial(n - k - 1, k - 1);
    if (num % k != 0) throw Error("internal: Schrijver count not divisible by k");
    return num / k;
}

/// Enumeration oracle for the same count (independent of the formula).
inline long count_stable_ksubsets(int n, int k) {
    if (k < 1 || k > n) return 0;
    KSubsetCodec codec(n, k);
    long count = 0;
    auto members = codec.first();
    do {
        if (is_cyclically_stable(members, n)) ++count;
    } while (codec.next(members));
    return count;
}

/// Odd girth of K(n,k) per the closed formula 1 + 2*ceil(k/(n-2k)).
inline int kneser_odd_girth_formula(int n, int k) {
    if (k < 1 || n <= 2 * k) throw BadParams("odd-girth formula needs n > 2k");
    int gap = n - 2 * k;
    int ceil_term = (k + gap - 1) / gap;
    return 1 + 2 * ceil_term;
}

inline int kneser_chromatic_formula(int n, int k) {
    if (k < 1 || n < 2 * k) throw BadParams("chromatic formula needs n >= 2k");
    return n - 2 * k + 2;
}

inline Rational fractional_chromatic_formula_kneser(int n, int k) {
    if (k < 1 || n < 2 * k) throw BadParams("fractional formula needs n >= 2k");
    return Rational(n, k);
}

/// Proper (n-2k+2)-coloring of K(n,k): color(A) = min(min(A), n-2k+1).
/// Classes i <= n-2k hold the sets with minimum i; the last class holds the
/// sets inside the final 2k-1 points, which pairwise intersect.
inline Coloring canonical_kneser_coloring(int n, int k) {
    if (k < 1 || n < 2 * k) throw BadParams("canonical coloring needs n >= 2k");
    KSubsetCodec codec(n, k);
    long vcount = codec.count();
    if (vcount > vertex_cap()) throw CapExceeded("canonical coloring enumeration exceeds cap");
    Coloring col;
    col.palette = n - 2 * k + 2;
    col.color.assign(vcount, -1);
    auto members = codec.first();
    long r = 0;
    do {
        col.color[r] = std::min(members[0], n - 2 * k + 1);
        ++r;
    } while (codec.next(members));
    return col;
}

/// Vertex permutation of K(n,k) induced by a ground-set permutation.
inline std::vector<int> induced_subset_permutation(int n, int k, const std::vector<int>& ground_perm) {
    KSubsetCodec codec(n, k);
    std::vector<int> out(codec.count());
    auto members = codec.first();
    long r = 0;
    do {
        std::vector<int> image(k);
        for (int j = 0; j < k; ++j) image[j] = ground_perm[members[j]];
        std::sort(image.begin(), image.end());
        out[r] = static_cast<int>(codec.rank(image));
        ++r;
    } while (codec.next(members));
    return out;
}

/// Generators of the S_n action on K(n,k) vertices: a transposition and the
/// full cycle, whose induced maps are automorphisms by construction.
inline std::vector<std::vector<int>> kneser_transitivity_generators(int n, int k) {
    std::vector<int> swap01(n), rotate(n);
    for (int i = 0; i < n; ++i) {
        swap01[i] = i;
        rotate[i] = (i + 1) % n;
    }
    if (n >= 2) std::swap(swap01[0], swap01[1]);
    return {induced_subset_permutation(n, k, swap01), induced_subset_permutation(n, k, rotate)};
}

inline bool is_graph_automorphism(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.num_vertices()) return false;
    std::vector<char> hit(g.num_vertices(), 0);
    for (int v : perm) {
        if (v < 0 || v >= g.num_vertices() || hit[v]) return false;
        hit[v] = 1;
    }
    for (auto [u, v] : g.edges())
        if (!g.has_edge(perm[u], perm[v])) return false;
    return true;
}

/// Certifies vertex transitivity: every map must be an automorphism and the
/// orbit of vertex 0 under the maps must cover the whole vertex set.
inline bool is_vertex_transitive_under(const Graph& g, const std::vector<std::vector<int>>& perms) {
    if (g.num_vertices() == 0) return true;
    for (const auto& p : perms)
        if (!is_graph_automorphism(g, p)) return false;
    VertexSet orbit(g.num_vertices());
    orbit.set(0);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& p : perms) {
            if (!orbit.test(p[v])) {
                orbit.set(p[v]);
                stack.push_back(p[v]);
            }
        }
    }
    return orbit.all();
}

} // namespace klab
