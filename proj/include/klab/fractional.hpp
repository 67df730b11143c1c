#pragma once

#include <vector>

#include "fold_coloring.hpp"
#include "graph.hpp"
#include "independence.hpp"
#include "mis_enumeration.hpp"
#include "rational.hpp"
#include "simplex.hpp"

namespace klab {

/// Exact optimum of the independent-set covering LP together with both the
/// primal weights and the dual values that certify it.
struct FractionalCertificate {
    Rational value;
    std::vector<VertexSet> sets;
    std::vector<Rational> weights;
    std::vector<Rational> duals; // one per vertex
};

/// chi*(G) as the covering LP over the maximal independent sets: minimize the
/// total weight subject to covering every vertex with weight >= 1. Optimal
/// covering solutions supported on maximal sets always exist (enlarging a set
/// keeps feasibility without cost), so maximal sets suffice as columns.
/// The returned certificate is verified end to end: primal feasibility, dual
/// feasibility, and equal objectives, all in exact arithmetic.
inline FractionalCertificate fractional_chromatic_lp(const Graph& g, long cap = mis_cap()) {
    FractionalCertificate cert;
    int n = g.num_vertices();
    if (n == 0) {
        cert.value = 0;
        return cert;
    }
    cert.sets = enumerate_maximal_independent_sets(g, cap);
    int cols = static_cast<int>(cert.sets.size());
    std::vector<std::vector<int>> columns(cols);
    for (int j = 0; j < cols; ++j) columns[j] = set_members(cert.sets[j]);
    CoveringLpResult sol = solve_unit_covering_lp(n, columns);
    cert.value = sol.value;
    cert.weights = sol.weights;
    cert.duals = sol.duals;

    // Primal: weights >= 0, every vertex covered, objective matches.
    Rational total = 0;
    for (const auto& w : cert.weights) {
        if (w < 0) throw Error("internal: negative LP weight");
        total += w;
    }
    if (total != cert.value) throw Error("internal: LP objective mismatch");
    for (int v = 0; v < n; ++v) {
        Rational covered = 0;
        for (int j = 0; j < cols; ++j)
            if (cert.sets[j].test(v)) covered += cert.weights[j];
        if (covered < 1) throw Error("internal: LP cover constraint violated");
    }
    // Dual: y >= 0, sum_{v in S} y_v <= 1 per set, and equal objectives
    // (strong duality) make the optimum certified exact.
    Rational dual_total = 0;
    for (int v = 0; v < n; ++v) {
        if (cert.duals[v] < 0) throw Error("internal: negative LP dual");
        dual_total += cert.duals[v];
    }
    for (int j = 0; j < cols; ++j) {
        Rational packed = 0;
        for (auto v = cert.sets[j].find_first(); v != VertexSet::npos; v = cert.sets[j].find_next(v))
            packed += cert.duals[v];
        if (packed > 1) throw Error("internal: LP dual constraint violated");
    }
    if (dual_total != cert.value) throw Error("internal: LP duality gap");
    return cert;
}

inline Rational independence_ratio(const Graph& g, long bound = exact_search_bound()) {
    if (g.num_vertices() == 0) throw BadParams("independence ratio of the empty graph");
    return Rational(independence_number(g, bound).size, g.num_vertices());
}

struct FractionalBoundReport {
    Rational chi_frac;
    Rational alpha;
    Rational inv_alpha;
    bool lower_bound_holds = false; // chi* >= 1/alpha
    bool equality = false;
    bool transitivity_checked = false;
};

/// Verifies chi*(G) >= 1/alpha(G) as an exact rational comparison; with a
/// verified transitivity certificate the comparison must be an equality.
inline FractionalBoundReport check_fractional_bound(const Graph& g, bool transitivity_certified = false) {
    FractionalBoundReport rep;
    rep.chi_frac = fractional_chromatic_lp(g).value;
    rep.alpha = independence_ratio(g);
    rep.inv_alpha = 1 / rep.alpha;
    rep.lower_bound_holds = rep.chi_frac >= rep.inv_alpha;
    rep.equality = rep.chi_frac == rep.inv_alpha;
    rep.transitivity_checked = transitivity_certified;
    return rep;
}

/// Scales the rational weights by their common denominator D and emits the
/// multiset of independent sets as color classes; each vertex keeps its first
/// D covering classes, giving a D-fold (D*value)-coloring of G.
inline FoldColoring kfold_from_lp(const Graph& g, const FractionalCertificate& cert) {
    if (cert.sets.size() != cert.weights.size())
        throw CertificateInvalid("weight/set size mismatch");
    for (const auto& s : cert.sets)
        if (static_cast<int>(s.size()) != g.num_vertices())
            throw CertificateInvalid("certificate sets sized for a different graph");
    BigInt denom = 1;
    for (const auto& w : cert.weights) {
        if (w < 0) throw CertificateInvalid("negative weight");
        denom = boost::multiprecision::lcm(denom, rational_den(w));
    }
    BigInt total_big = 0;
    std::vector<BigInt> copies(cert.weights.size());
    for (size_t j = 0; j < cert.weights.size(); ++j) {
        copies[j] = rational_num(cert.weights[j]) * (denom / rational_den(cert.weights[j]));
        total_big += copies[j];
    }
    if (Rational(total_big, denom) != cert.value)
        throw CertificateInvalid("weights do not sum to the certified value");
    if (total_big > 1000000) throw CapExceeded("k-fold expansion too large");
    int total = static_cast<int>(total_big);
    int fold = static_cast<int>(denom);

    FoldColoring fc;
    fc.n = total;
    fc.k = fold;
    fc.assignment.assign(g.num_vertices(), {});
    int class_index = 0;
    for (size_t j = 0; j < cert.sets.size(); ++j) {
        long reps = static_cast<long>(copies[j]);
        for (long rep = 0; rep < reps; ++rep, ++class_index) {
            for (auto v = cert.sets[j].find_first(); v != VertexSet::npos;
                 v = cert.sets[j].find_next(v)) {
                if (static_cast<int>(fc.assignment[v].size()) < fold)
                    fc.assignment[v].push_back(class_index);
            }
        }
    }
    for (int v = 0; v < g.num_vertices(); ++v)
        if (static_cast<int>(fc.assignment[v].size()) != fold)
            throw CertificateInvalid("certificate does not cover every vertex k times");
    if (!validate_fold_coloring(g, fc)) throw Error("internal: extracted fold coloring invalid");
    return fc;
}

} // namespace klab
