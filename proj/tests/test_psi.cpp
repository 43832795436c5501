#include <gammadiff/psi.hpp>

#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace gammadiff;

TEST_CASE("psi_plus_value: direct substitutions") {
    const PsiCoeffs b(4.0, 3.0, -4.0);
    CHECK(psi_plus_value(2.0, 2.0, b) == doctest::Approx(-4.0).epsilon(1e-14));
    CHECK(psi_plus_value(0.0, 2.0, b) == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(psi_plus_value(0.0, 0.0, b) == 0.0);
    CHECK(psi_minus_value(2.0, 2.0, b) == doctest::Approx(4.0).epsilon(1e-14));

    CHECK_THROWS_AS(PsiCoeffs(0.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(PsiCoeffs(-2.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("psi_plus_bound: both cases") {
    // |2B2+B3| = 2 < |B3|+B1 = 8 -> 2|B3|
    CHECK(psi_plus_bound(PsiCoeffs(4.0, 3.0, -4.0)) == 8.0);
    // |2B2+B3| = 2 < 40 -> 2|B3|
    CHECK(psi_plus_bound(PsiCoeffs(24.0, 9.0, -16.0)) == 32.0);
    // |2B2+B3| = 20 >= 1 -> |4B2+2B3| - 2B1 = 38
    CHECK(psi_plus_bound(PsiCoeffs(1.0, 10.0, 0.0)) == 38.0);
}

TEST_CASE("psi_minus_bound: all three cases and the degenerate corner") {
    // B4 = 12, case 1 fails, B1^2 = 64 <= 160 -> 16 sqrt(2/5)
    CHECK(psi_minus_bound(PsiCoeffs(8.0, 5.0, -4.0)) ==
          doctest::Approx(16.0 * std::sqrt(0.4)).epsilon(1e-15));
    // B4 = 12, case 1 fails (24 < 28), case 2 fails (576 > 448) -> 16 + 576/28 = 256/7
    CHECK(psi_minus_bound(PsiCoeffs(24.0, 7.0, -8.0)) ==
          doctest::Approx(256.0 / 7.0).epsilon(1e-15));
    // B4 = 2, B1 = 100 >= 4 -> 198
    CHECK(psi_minus_bound(PsiCoeffs(100.0, 1.0, -1.0)) == 198.0);
    // B3 = 0 and B4 = 0: first guard holds trivially, no division by zero
    CHECK(psi_minus_bound(PsiCoeffs(1.0, 0.0, 0.0)) == 2.0);
}

TEST_CASE("rotation invariance of the functional") {
    std::mt19937_64 rng(34);
    const PsiCoeffs b(8.0, Complex(5.0, 2.0), -4.0);
    for (const double theta : {0.3, 1.7, M_PI}) {
        const Complex r1 = std::polar(1.0, theta);
        const Complex r2 = std::polar(1.0, 2.0 * theta);
        for (int it = 0; it < 200; ++it) {
            const auto [c1, c2] =
                to_coeffs({testutil::random_disk_point(rng), testutil::random_disk_point(rng)});
            CHECK(std::abs(psi_plus_value(r1 * c1, r2 * c2, b) - psi_plus_value(c1, c2, b)) <
                  1e-12);
        }
    }
}

TEST_CASE("oracle_max: flat maximum at c1 = 0") {
    const auto res = oracle_max(PsiCoeffs(4.0, 3.0, -4.0), PsiSign::plus, 48, 40);
    CHECK(res.value == doctest::Approx(8.0).epsilon(1e-6));
    CHECK(res.x == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(std::abs(res.c1) < 1e-9);
    CHECK(std::abs(res.c2) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("oracle_max: kink maximum matches the sqrt case") {
    const auto res = oracle_max(PsiCoeffs(8.0, 5.0, -4.0), PsiSign::minus, 48, 40);
    CHECK(std::abs(res.value - 16.0 * std::sqrt(0.4)) < 1e-5);  // 10.1192885...
}

TEST_CASE("oracle_max: interior maximum and its attaining point") {
    const auto res = oracle_max(PsiCoeffs(24.0, 7.0, -8.0), PsiSign::minus, 48, 40);
    CHECK(std::abs(res.value - 256.0 / 7.0) < 1e-4);
    CHECK(std::abs(res.x - 6.0 / 7.0) < 1e-6);
    CHECK(std::abs(res.c1 - 12.0 / 7.0) < 1e-6);
    CHECK(std::abs(res.c2 - 2.0) < 1e-6);

    CHECK_THROWS_AS(oracle_max(PsiCoeffs(1.0, 1.0, 1.0), PsiSign::plus, 16, 4),
                    std::invalid_argument);
}

TEST_CASE("oracle value is non-decreasing across refinement rounds") {
    const auto res = oracle_max(PsiCoeffs(24.0, 7.0, -8.0), PsiSign::minus, 32, 40);
    REQUIRE(res.round_values.size() == 40);
    for (size_t r = 1; r < res.round_values.size(); ++r)
        CHECK(res.round_values[r] >= res.round_values[r - 1]);
    CHECK(res.round_values.back() == res.value);
}

TEST_CASE("soundness: sampled functional values never exceed the bounds") {
    std::mt19937_64 rng(1311);
    const auto family = testutil::stratified_psi_family(rng, 20, 2);
    for (const auto& b : family) {
        const double plus_bound = psi_plus_bound(b);
        const double minus_bound = psi_minus_bound(b);
        // full-body sampling: both parameters complex
        for (int it = 0; it < 4000; ++it) {
            const auto [c1, c2] =
                to_coeffs({testutil::random_disk_point(rng), testutil::random_disk_point(rng)});
            const double v = psi_plus_value(c1, c2, b);
            CHECK(v <= plus_bound + 1e-9);
            CHECK(-v <= minus_bound + 1e-9);
        }
        // and the rotation-reduced grid the oracle sweeps
        for (int i = 0; i <= 16; ++i)
            for (int j = 0; j <= 8; ++j)
                for (int k = 0; k < 16; ++k) {
                    const double x = i / 16.0, rho = j / 8.0, phi = 2.0 * M_PI * k / 16.0;
                    const auto [c1, c2] = to_coeffs({x, rho * std::polar(1.0, phi)});
                    const double v = psi_plus_value(c1, c2, b);
                    CHECK(v <= plus_bound + 1e-9);
                    CHECK(-v <= minus_bound + 1e-9);
                }
    }
}

TEST_CASE("sharpness: oracle reaches the closed form on theorem sets and random family") {
    const PsiCoeffs theorem_sets[] = {
        {4.0, 3.0, -4.0}, {24.0, 9.0, -16.0}, {8.0, 5.0, -4.0}, {24.0, 7.0, -8.0}};
    for (const auto& b : theorem_sets) {
        const double plus = psi_plus_bound(b);
        const double minus = psi_minus_bound(b);
        CHECK(std::abs(oracle_max(b, PsiSign::plus, 48, 40).value - plus) <=
              1e-4 * (1.0 + std::abs(plus)));
        CHECK(std::abs(oracle_max(b, PsiSign::minus, 48, 40).value - minus) <=
              1e-4 * (1.0 + std::abs(minus)));
    }

    std::mt19937_64 rng(2718);
    const auto family = testutil::stratified_psi_family(rng, 20, 4);
    for (const auto& b : family) {
        const double plus = psi_plus_bound(b);
        const double minus = psi_minus_bound(b);
        const double got_plus = oracle_max(b, PsiSign::plus, 48, 40).value;
        const double got_minus = oracle_max(b, PsiSign::minus, 48, 40).value;
        CHECK(got_plus <= plus + 1e-9);
        CHECK(got_minus <= minus + 1e-9);
        CHECK(got_plus >= plus - 1e-4 * (1.0 + std::abs(plus)));
        CHECK(got_minus >= minus - 1e-4 * (1.0 + std::abs(minus)));
    }
}
