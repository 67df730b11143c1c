#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "klab/chromatic.hpp"
#include "klab/fractional.hpp"
#include "klab/homomorphism.hpp"
#include "klab/kneser.hpp"
#include "oracles.hpp"

using namespace klab;

TEST_CASE("find_homomorphism basics") {
    Graph edgeless(4, {});
    auto res = find_homomorphism(edgeless, make_complete(1));
    REQUIRE(res.status == HomStatus::Found);

    auto c3 = make_cycle(3);
    auto k73 = kneser_graph(7, 3);
    CHECK(find_homomorphism(c3, k73).status == HomStatus::NoHom); // odd girth 7 > 3

    auto c5 = make_cycle(5);
    auto petersen = kneser_graph(5, 2);
    auto found = find_homomorphism(c5, petersen);
    REQUIRE(found.status == HomStatus::Found);
    CHECK(validate_homomorphism(c5, petersen, found.mapping));
}

TEST_CASE("find_homomorphism respects partial assignments and budget") {
    auto c4 = make_cycle(4);
    auto k2 = make_complete(2);
    HomInstance inst;
    inst.source = &c4;
    inst.target = &k2;
    inst.partial = {{0, 1}};
    auto res = find_homomorphism(inst);
    REQUIRE(res.status == HomStatus::Found);
    CHECK(res.mapping[0] == 1);

    inst.partial = {{0, 0}, {1, 0}};
    CHECK_THROWS_AS(find_homomorphism(inst), BadParams);

    // Tiny budget on an unsatisfiable instance must report exhaustion, never NoHom.
    HomInstance hard;
    auto c9 = make_cycle(9);
    auto c11 = make_cycle(11);
    hard.source = &c11;
    hard.target = &c9;
    hard.budget = 1;
    CHECK(find_homomorphism(hard).status == HomStatus::BudgetExhausted);
}

TEST_CASE("odd cycle to shorter odd cycle has no homomorphism") {
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b) {
            auto src = make_cycle(2 * a + 1);
            auto dst = make_cycle(2 * b + 1);
            CAPTURE(a, b);
            CHECK(find_homomorphism(src, dst).status == HomStatus::NoHom);
            CHECK_FALSE(oracle::cycle_hom_exists(dst, 2 * a + 1));
        }
    // and the reverse direction exists
    auto res = find_homomorphism(make_cycle(9), make_cycle(7));
    CHECK(res.status == HomStatus::Found);
}

TEST_CASE("found mappings always validate on random instances") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = oracle::random_graph(3 + rng() % 6, 0.4, rng);
        auto h = oracle::random_graph(3 + rng() % 5, 0.5, rng);
        auto res = find_homomorphism(g, h);
        if (res.status == HomStatus::Found) CHECK(validate_homomorphism(g, h, res.mapping));
    }
}

TEST_CASE("chromatic number basics") {
    CHECK(chromatic_number(make_cycle(6)) == 2);
    CHECK(chromatic_number(make_cycle(7)) == 3);
    CHECK(chromatic_number(make_complete(6)) == 6); // K(6,1)
    CHECK(chromatic_number(kneser_graph(5, 2)) == 3);
    CHECK(chromatic_number(kneser_graph(6, 2)) == 4);
    CHECK(chromatic_number(kneser_graph(7, 3)) == 3);
    CHECK_THROWS_AS(chromatic_number(make_cycle(5), 3), SizeLimit);
}

TEST_CASE("chromatic number of schrijver graphs matches kneser at desk scale") {
    CHECK(chromatic_number(schrijver_graph(5, 2).graph) == 3);
    CHECK(chromatic_number(schrijver_graph(6, 2).graph) == 4);
    CHECK(chromatic_number(schrijver_graph(8, 3).graph) == 4);
}

TEST_CASE("chromatic witness is proper") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = oracle::random_graph(2 + rng() % 9, 0.45, rng);
        auto res = chromatic_number_with_witness(g);
        CHECK(is_proper(g, res.witness.color));
        for (int c : res.witness.color) CHECK(c < res.value);
    }
}

TEST_CASE("maximal independent set enumeration matches brute force") {
    auto k3 = make_complete(3);
    auto sets = enumerate_maximal_independent_sets(k3);
    CHECK(sets.size() == 3);
    for (const auto& s : sets) CHECK(s.count() == 1);

    auto c5sets = enumerate_maximal_independent_sets(make_cycle(5));
    CHECK(c5sets.size() == 5);
    for (const auto& s : c5sets) CHECK(s.count() == 2);

    auto petersen = kneser_graph(5, 2);
    auto psets = enumerate_maximal_independent_sets(petersen);
    CHECK(psets.size() == 15);
    int size4 = 0, size3 = 0;
    for (const auto& s : psets) {
        if (s.count() == 4) ++size4;
        if (s.count() == 3) ++size3;
    }
    CHECK(size4 == 5);
    CHECK(size3 == 10);

    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        auto g = oracle::random_graph(n, 0.35, rng);
        auto brute = oracle::brute_maximal_independent_sets(g);
        auto lib = enumerate_maximal_independent_sets(g);
        std::set<std::uint32_t> expect(brute.begin(), brute.end());
        std::set<std::uint32_t> got;
        for (const auto& s : lib) {
            std::uint32_t mask = 0;
            for (int v : set_members(s)) mask |= 1u << v;
            got.insert(mask);
        }
        CAPTURE(trial, n);
        CHECK(expect == got);
    }

    CHECK_THROWS_AS(enumerate_maximal_independent_sets(kneser_graph(6, 3), 100), CapExceeded);
}

TEST_CASE("fractional chromatic LP frozen values") {
    for (int m = 1; m <= 6; ++m) CHECK(fractional_chromatic_lp(make_complete(m)).value == m);
    CHECK(fractional_chromatic_lp(kneser_graph(5, 2)).value == Rational(5, 2));
    CHECK(fractional_chromatic_lp(make_cycle(5)).value == Rational(5, 2));
    CHECK(fractional_chromatic_lp(make_star(3)).value == 2);
}

TEST_CASE("fractional chromatic of K(n,k) equals n/k on small cases") {
    // K(7,3) is exercised by the acceptance suite; its LP has ~6k columns.
    for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 2}, {7, 2}, {6, 3}, {6, 1}}) {
        CAPTURE(n, k);
        CHECK(fractional_chromatic_lp(kneser_graph(n, k)).value == Rational(n, k));
    }
}

TEST_CASE("independence ratio values") {
    CHECK(independence_ratio(make_complete(2)) == Rational(1, 2));
    CHECK(independence_ratio(kneser_graph(5, 2)) == Rational(2, 5));
    CHECK(independence_ratio(kneser_graph(7, 3)) == Rational(15, 35));
    CHECK(independence_ratio(kneser_graph(7, 3)) == Rational(3, 7));
}

TEST_CASE("fractional bound chi* >= 1/alpha, equality on transitive instances") {
    // star: chi* = 2, alpha = 3/4, strict inequality
    auto star_rep = check_fractional_bound(make_star(3));
    CHECK(star_rep.chi_frac == 2);
    CHECK(star_rep.inv_alpha == Rational(4, 3));
    CHECK(star_rep.lower_bound_holds);
    CHECK_FALSE(star_rep.equality);

    // Petersen with a transitivity certificate: 5/2 = 1/(2/5)
    auto petersen = kneser_graph(5, 2);
    REQUIRE(is_vertex_transitive_under(petersen, kneser_transitivity_generators(5, 2)));
    auto prep = check_fractional_bound(petersen, true);
    CHECK(prep.equality);
    CHECK(prep.chi_frac == Rational(5, 2));

    // disjoint K_3 + K_1: chi* = 3 while 1/alpha = 2
    auto mixed = disjoint_union(make_complete(3), Graph(1, {}));
    auto mrep = check_fractional_bound(mixed);
    CHECK(mrep.chi_frac == 3);
    CHECK(mrep.inv_alpha == 2);
    CHECK(mrep.lower_bound_holds);
    CHECK_FALSE(mrep.equality);

    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 15; ++trial) {
        auto g = oracle::random_graph(1 + rng() % 10, 0.4, rng);
        auto rep = check_fractional_bound(g);
        CAPTURE(trial);
        CHECK(rep.lower_bound_holds);
    }
}

TEST_CASE("kfold_from_lp extracts valid fold colorings") {
    auto k2 = make_complete(2);
    auto cert2 = fractional_chromatic_lp(k2);
    auto fold2 = kfold_from_lp(k2, cert2);
    CHECK(fold2.k == 1);
    CHECK(fold2.n == 2);
    CHECK(validate_fold_coloring(k2, fold2));

    auto c5 = make_cycle(5);
    auto cert5 = fractional_chromatic_lp(c5);
    auto fold5 = kfold_from_lp(c5, cert5);
    CHECK(fold5.n == 5);
    CHECK(fold5.k == 2);
    CHECK(validate_fold_coloring(c5, fold5));

    // Petersen: a 2-fold 5-coloring is a homomorphism to K(5,2)
    auto petersen = kneser_graph(5, 2);
    auto certp = fractional_chromatic_lp(petersen);
    auto foldp = kfold_from_lp(petersen, certp);
    CHECK(foldp.n == 5);
    CHECK(foldp.k == 2);
    CHECK(validate_fold_coloring(petersen, foldp));
    // explicit check of the K(n,k) identification
    KSubsetCodec codec(foldp.n, foldp.k);
    auto kn = kneser_graph(foldp.n, foldp.k);
    std::vector<int> hom(petersen.num_vertices());
    for (int v = 0; v < petersen.num_vertices(); ++v)
        hom[v] = static_cast<int>(codec.rank(foldp.assignment[v]));
    CHECK(validate_homomorphism(petersen, kn, hom));

    std::mt19937_64 rng(113);
    for (int trial = 0; trial < 15; ++trial) {
        auto g = oracle::random_graph(1 + rng() % 9, 0.4, rng);
        auto cert = fractional_chromatic_lp(g);
        auto fold = kfold_from_lp(g, cert);
        CAPTURE(trial);
        CHECK(validate_fold_coloring(g, fold));
        CHECK(Rational(fold.n, fold.k) == cert.value);
    }
}

TEST_CASE("kfold_from_lp rejects broken certificates") {
    auto c5 = make_cycle(5);
    auto cert = fractional_chromatic_lp(c5);
    cert.weights[0] = 0; // vertex no longer covered twice
    CHECK_THROWS_AS(kfold_from_lp(c5, cert), CertificateInvalid);
}
