#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "agcd/agcd.hpp"
#include "agcd/errors.hpp"
#include "agcd/harness.hpp"
#include "agcd/testkit.hpp"
#include "test_util.hpp"

using namespace agcd;
using test::poly_r;
using test::random_poly;

TEST_CASE("functional examples") {
    const Polynomial f = poly_r({2, -3, 1});        // (x-1)(x-2)
    const Polynomial g = poly_r({-3, 2, 1});        // (x-1)(x+3)
    CHECK(functional(f, g, poly_r({-2, 1})) <= 1e-24);
    CHECK(functional(f, g, poly_r({1})) > 0.1);     // 5x-5 has norm well above zero
    CHECK(functional(poly_r({-1, 0, 1}), poly_r({0, 1}), poly_r({0, 1})) == doctest::Approx(1.0));
    CHECK_THROWS_AS(functional(f, g, poly_r({0, 0, 1})), InvalidInputError);
}

TEST_CASE("functional consistency between the column path and direct division") {
    Rng rng(307);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = 2 + static_cast<std::size_t>(rng.uniform(0.0, 28.0));
        const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform(0.0, double(d)));
        const std::size_t k = 1 + static_cast<std::size_t>(rng.uniform(0.0, double(d - 1)));
        const Polynomial f = random_poly(rng, d, true);
        const Polynomial g = random_poly(rng, m);
        const Polynomial v = random_poly(rng, k, true);
        const double a = functional(f, g, v);
        const double b = functional_direct(f, g, v);
        CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, b));
    }
}

TEST_CASE("dense jacobian matches central finite differences") {
    Rng rng(311);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t d = 3 + static_cast<std::size_t>(rng.uniform(0.0, 12.0));
        const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform(0.0, double(d)));
        const std::size_t k = 1 + static_cast<std::size_t>(rng.uniform(0.0, double(d - 1)));
        const Polynomial f = random_poly(rng, d, true);
        const Polynomial g = random_poly(rng, m);
        const Polynomial v = random_poly(rng, k, true);
        const DenseMatrix a = testkit::dense_jacobian(f, g.coeffs(), v.coeffs());
        const DenseMatrix b = testkit::finite_difference_jacobian(f, g, v, 1e-6);
        CHECK(test::mat_dist(a, b) <= 1e-5 * std::max(1.0, a.frobenius_norm()));
    }
}

TEST_CASE("gauss_newton_refine on an unperturbed instance") {
    const auto inst = testkit::plant_instance(8, 7, 3, 0.0, 99);
    const AgcdResult res = gauss_newton_refine(inst.f, inst.g_exact, inst.cofactor_exact, {});
    CHECK(res.converged);
    CHECK(res.iterations <= 2);
    CHECK(res.residual <= 1e-20);
}

TEST_CASE("gauss_newton_refine recovers the table-scale behavior at eta = 1e-5") {
    int good = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto inst = testkit::plant_instance(8, 7, 3, 1e-5, seed);
        const AgcdResult res = gauss_newton_refine(inst.f, inst.g_observed, inst.cofactor_exact, {});
        if (res.converged && res.residual <= 1e-12 && res.distance >= 1.40e-6 &&
            res.distance <= 1.40e-4)
            ++good;
    }
    CHECK(good >= 4);
}

TEST_CASE("gauss_newton_refine at eta = 1e-8") {
    int good = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto inst = testkit::plant_instance(8, 7, 3, 1e-8, seed);
        const AgcdResult res = gauss_newton_refine(inst.f, inst.g_observed, inst.cofactor_exact, {});
        if (res.converged && res.residual <= 1e-12 && res.distance >= 1e-9 && res.distance <= 1e-6)
            ++good;
    }
    CHECK(good >= 4);
}

TEST_CASE("refine on both solver paths") {
    const auto inst = testkit::plant_instance(10, 9, 4, 1e-6, 777);
    AgcdConfig dense_cfg;
    dense_cfg.use_structured_solver = false;
    const AgcdResult fast = gauss_newton_refine(inst.f, inst.g_observed, inst.cofactor_exact, {});
    const AgcdResult dense = gauss_newton_refine(inst.f, inst.g_observed, inst.cofactor_exact, dense_cfg);
    CHECK(fast.converged);
    CHECK(dense.converged);
    CHECK(fast.gcd.degree() == 4);
    CHECK(dense.gcd.degree() == 4);
    CHECK(distance(fast.gcd, dense.gcd) <= 1e-6);
}

TEST_CASE("monotonicity at convergence") {
    for (std::uint64_t seed = 11; seed <= 16; ++seed) {
        const auto inst = testkit::plant_instance(12, 12, 5, 1e-5, seed);
        const double before =
            functional(monic(inst.f), inst.g_observed, inst.cofactor_exact);
        try {
            const AgcdResult res =
                gauss_newton_refine(inst.f, inst.g_observed, inst.cofactor_exact, {});
            CHECK(res.residual <= before * (1.0 + 1e-12));
        } catch (const DivergenceError& e) {
            // The carried best iterate must never be worse than the start.
            CHECK(e.best_iterate.residual <= before * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("refine input validation") {
    const Polynomial f = poly_r({2, -3, 1});
    CHECK_THROWS_AS(gauss_newton_refine(f, Polynomial(), poly_r({-2, 1}), {}), InvalidInputError);
    CHECK_THROWS_AS(gauss_newton_refine(f, poly_r({1, 1}), poly_r({5}), {}), InvalidInputError);
    CHECK_THROWS_AS(gauss_newton_refine(f, poly_r({1, 1}), poly_r({0, 0, 1}), {}), InvalidInputError);
}

TEST_CASE("approximate_gcd on the hand instance") {
    const AgcdResult res = approximate_gcd(poly_r({2, -3, 1}), poly_r({-3, 2, 1}), {});
    CHECK(res.converged);
    CHECK(res.gcd.degree() == 1);
    CHECK(distance(res.gcd, poly_r({-1, 1})) <= 1e-10);
    CHECK(res.residual <= 1e-12);
    CHECK(res.rank_report.corank == 1);
    CHECK(distance(res.v_tilde, poly_r({-2, 1})) <= 1e-10);
}

TEST_CASE("approximate_gcd when g is a multiple of f") {
    const Polynomial f = poly_r({2, -3, 1});
    const AgcdResult res = approximate_gcd(f, f, {});
    CHECK(res.gcd.degree() == 2);
    CHECK(distance(res.gcd, f) <= 1e-12);
    CHECK(res.v_tilde.degree() == 0);
    CHECK(res.rank_report.numerical_rank == 0);
    CHECK(res.residual <= 1e-20);
}

TEST_CASE("approximate_gcd on coprime inputs reports a trivial gcd") {
    const AgcdResult res = approximate_gcd(poly_r({1, 0, 1}), poly_r({-1, 1}), {});
    CHECK(res.gcd.degree() == 0);
    CHECK(res.rank_report.corank == 0);
    CHECK(res.v_tilde.degree() == 2);
}

TEST_CASE("approximate_gcd paper-scale instance (22, 22, 7) at eta = 1e-5") {
    AgcdConfig cfg;
    cfg.rank_tol_absolute = auto_rank_tol(1e-5);
    int good = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto inst = testkit::plant_instance(22, 22, 7, 1e-5, seed);
        const AgcdResult res = approximate_gcd(inst.f, inst.g_observed, cfg);
        if (res.converged && res.residual <= 1e-10 && res.distance >= 1e-6 &&
            res.distance <= 1e-2)
            ++good;
    }
    CHECK(good >= 4);
}

TEST_CASE("degree bookkeeping and factor identity") {
    AgcdConfig cfg;
    cfg.rank_tol_absolute = auto_rank_tol(1e-7);
    for (std::uint64_t seed = 21; seed <= 28; ++seed) {
        const auto inst = testkit::plant_instance(14, 13, 4, 1e-7, seed);
        const AgcdResult res = approximate_gcd(inst.f, inst.g_observed, cfg);
        if (!res.converged) continue;
        const Polynomial fm = monic(inst.f);
        CHECK(res.gcd.degree() + res.v_tilde.degree() == fm.degree());
        CHECK(distance(mul(res.gcd, res.v_tilde), fm) <= 1e-8 * fm.norm());
    }
}

TEST_CASE("scaling invariance of the monic gcd") {
    for (std::uint64_t seed = 31; seed <= 36; ++seed) {
        const auto inst = testkit::plant_instance(11, 10, 4, 0.0, seed);
        const AgcdResult base = approximate_gcd(inst.f, inst.g_exact, {});
        for (cx c : {cx(3.7), cx(-0.02), cx(1.5, -2.0)}) {
            const AgcdResult scaled = approximate_gcd(inst.f, scale(inst.g_exact, c), {});
            CHECK(scaled.rank_report.corank == base.rank_report.corank);
            CHECK(scaled.gcd.degree() == base.gcd.degree());
            CHECK(distance(scaled.gcd, base.gcd) <= 1e-10 * std::max(1.0, base.gcd.norm()));
        }
    }
}

TEST_CASE("degree-one modulus") {
    // f = x - 1; g vanishing (or not) at the root.
    const AgcdResult common = approximate_gcd(poly_r({-1, 1}), poly_r({-1, 0, 1}), {});
    CHECK(common.gcd.degree() == 1);
    const AgcdResult coprime = approximate_gcd(poly_r({-1, 1}), poly_r({1, 0, 1}), {});
    CHECK(coprime.gcd.degree() == 0);
}

TEST_CASE("real inputs come back with real perturbed polynomials") {
    const auto inst = testkit::plant_instance(9, 8, 3, 1e-6, 4242);
    AgcdConfig cfg;
    cfg.rank_tol_absolute = auto_rank_tol(1e-6);
    const AgcdResult res = approximate_gcd(inst.f, inst.g_observed, cfg);
    CHECK(res.g_tilde.is_real());
    CHECK(res.diagnostics.imag_drop <= 1e-10);
}

TEST_CASE("exact_gcd hand instances") {
    CHECK(distance(exact_gcd(poly_r({2, -3, 1}), poly_r({-3, 2, 1})), poly_r({-1, 1})) <= 1e-10);

    // Coprime pair.
    CHECK(exact_gcd(poly_r({1, 0, 1}), poly_r({-1, 1})).degree() == 0);

    // (x-1)(x-2)(x-3) and (x-1)(x-2)(x+5) share x^2 - 3x + 2.
    const Polynomial f = Polynomial::from_roots({cx(1.0), cx(2.0), cx(3.0)});
    const Polynomial g = Polynomial::from_roots({cx(1.0), cx(2.0), cx(-5.0)});
    CHECK(distance(exact_gcd(f, g), poly_r({2, -3, 1})) <= 1e-9);
}

TEST_CASE("exact_gcd against the Euclidean oracle") {
    Rng rng(317);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t k = static_cast<std::size_t>(rng.uniform(0.0, 5.0));
        const std::size_t n = k + 2 + static_cast<std::size_t>(rng.uniform(0.0, double(13 - k)));
        const std::size_t m = k + 1 + static_cast<std::size_t>(rng.uniform(0.0, double(14 - k)));
        const auto inst = testkit::plant_instance(std::min<std::size_t>(n, 15),
                                                  std::min<std::size_t>(m, 15), k, 0.0,
                                                  9000 + trial);
        const Polynomial ours = exact_gcd(inst.f, inst.g_exact);
        const Polynomial oracle = testkit::euclid_gcd(inst.f, inst.g_exact, 1e-9);
        CHECK(ours.degree() == oracle.degree());
        CHECK(distance(ours, oracle) <= 1e-8 * std::max(1.0, oracle.norm()));
    }
}

TEST_CASE("exact_gcd with a zero polynomial") {
    const Polynomial f = poly_r({2, -3, 1});
    CHECK(distance(exact_gcd(f, Polynomial()), f) <= 1e-12);
}

TEST_CASE("minimal_degree_kernel_vector picks the lowest degree combination") {
    // Kernel spanned by mixtures of s = (1, -2, 1) and x*s.
    DenseMatrix kernel(5, 2);
    const std::vector<cx> s{cx(1.0), cx(-2.0), cx(1.0)};
    for (std::size_t i = 0; i < 3; ++i) {
        kernel.at(i, 0) = 0.3 * s[i];
        kernel.at(i + 1, 1) = 0.9 * s[i];
    }
    // column 0 also gets a chunk of x*s to hide the pure vector
    for (std::size_t i = 0; i < 3; ++i) kernel.at(i + 1, 0) += 0.7 * s[i];
    const std::vector<cx> v = minimal_degree_kernel_vector(kernel);
    REQUIRE(v.size() == 3);
    const cx lead = v[2];
    CHECK(std::abs(v[0] / lead - cx(1.0)) <= 1e-10);
    CHECK(std::abs(v[1] / lead - cx(-2.0)) <= 1e-10);
}

TEST_CASE("approximate_gcd_multi") {
    const Polynomial f = poly_r({2, -3, 1});  // (x-1)(x-2)
    const Polynomial g1 = poly_r({-3, 2, 1});  // (x-1)(x+3)
    const Polynomial g2 = mul(poly_r({-1, 1}), poly_r({-7, 1}));  // (x-1)(x-7)

    // Singleton list behaves like plain approximate_gcd up to scaling.
    const AgcdResult single = approximate_gcd_multi(f, {g1}, {}, 5);
    CHECK(single.gcd.degree() == 1);
    CHECK(distance(single.gcd, poly_r({-1, 1})) <= 1e-9);
    CHECK(single.diagnostics.combination.size() == 1);

    // Generic combinations keep the shared root x = 1.
    int hits = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const AgcdResult res = approximate_gcd_multi(f, {g1, g2}, {}, seed);
        if (res.gcd.degree() == 1 && distance(res.gcd, poly_r({-1, 1})) <= 1e-8) ++hits;
    }
    CHECK(hits >= 9);

    // No shared root with f at all.
    const AgcdResult none = approximate_gcd_multi(f, {poly_r({1, 0, 1}), poly_r({5, 1})}, {}, 3);
    CHECK(none.gcd.degree() == 0);

    CHECK_THROWS_AS(approximate_gcd_multi(f, {}, {}, 1), InvalidInputError);
}

TEST_CASE("input validation of the pipeline") {
    CHECK_THROWS_AS(approximate_gcd(Polynomial(), poly_r({1, 1}), {}), InvalidInputError);
    CHECK_THROWS_AS(approximate_gcd(poly_r({3}), poly_r({1, 1}), {}), InvalidInputError);
    CHECK_THROWS_AS(approximate_gcd(poly_r({1, 1}), Polynomial(), {}), InvalidInputError);
}
