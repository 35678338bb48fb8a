#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "smirnov/lab.hpp"
#include "smirnov/poly.hpp"
#include "smirnov/roots.hpp"

using smirnov::Complex;
using smirnov::Polynomial;

namespace {

Polynomial from_zeros(const std::vector<Complex>& zeros, Complex lead = Complex{1.0, 0.0}) {
    std::vector<Complex> c{lead};
    for (const Complex& z0 : zeros) {
        std::vector<Complex> next(c.size() + 1, Complex{0.0, 0.0});
        for (size_t j = 0; j < c.size(); ++j) {
            next[j] -= z0 * c[j];
            next[j + 1] += c[j];
        }
        c = std::move(next);
    }
    return Polynomial(std::move(c));
}

// Symmetric Hausdorff distance between two finite point sets.
double hausdorff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double worst = 0.0;
    for (const auto& [from, to] : {std::pair{&a, &b}, std::pair{&b, &a}}) {
        for (const Complex& x : *from) {
            double best = std::numeric_limits<double>::infinity();
            for (const Complex& y : *to) best = std::min(best, std::abs(x - y));
            worst = std::max(worst, best);
        }
    }
    return worst;
}

}  // namespace

TEST_CASE("root finding: fixed oracles") {
    const auto r1 = smirnov::find_roots(Polynomial({{1, 0}, {0, 0}, {1, 0}}));  // z^2 + 1
    CHECK(hausdorff(r1, {Complex{0, 1}, Complex{0, -1}}) <= 1e-12);

    const auto r2 = smirnov::find_roots(Polynomial({{-4, 0}, {0, 0}, {1, 0}}));  // z^2 - 4
    CHECK(hausdorff(r2, {Complex{2, 0}, Complex{-2, 0}}) <= 1e-12);

    const std::vector<Complex> zeros{{0.5, 0}, {2, 0}, {0, -3}};
    const auto r3 = smirnov::find_roots(from_zeros(zeros));
    CHECK(hausdorff(r3, zeros) <= 1e-10);
}

TEST_CASE("root finding: random factored polynomials") {
    smirnov::Rng rng(1001);
    for (int t = 0; t < 25; ++t) {
        const int deg = 3 + static_cast<int>(rng.next_u64() % 10);  // 3..12
        std::vector<Complex> zeros;
        while (static_cast<int>(zeros.size()) < deg) {
            const Complex cand{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
            const bool separated = std::all_of(zeros.begin(), zeros.end(), [&](Complex z0) {
                return std::abs(z0 - cand) > 0.15;
            });
            if (separated) zeros.push_back(cand);
        }
        const auto found = smirnov::find_roots(from_zeros(zeros, Complex{1.5, -0.5}));
        CHECK(found.size() == zeros.size());
        CHECK(hausdorff(found, zeros) <= 1e-8);
    }
}

TEST_CASE("root finding: degenerate inputs") {
    CHECK_THROWS_AS(smirnov::find_roots(Polynomial{}), std::domain_error);
    CHECK_THROWS_AS(smirnov::find_roots(Polynomial(std::vector<Complex>{{3, 1}})), std::domain_error);
    // exact origin roots are split off
    const auto r = smirnov::find_roots(Polynomial({{0, 0}, {0, 0}, {1, 0}}));  // z^2
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r[0]) == 0.0);
    CHECK(std::abs(r[1]) == 0.0);
}

TEST_CASE("zero location classification") {
    // z^n + 1: all n roots exactly on the unit circle
    for (int n : {2, 5, 8}) {
        std::vector<Complex> c(static_cast<size_t>(n) + 1, Complex{0, 0});
        c[0] = c[static_cast<size_t>(n)] = Complex{1, 0};
        const auto rep = smirnov::classify_zero_location(Polynomial(c), 1.0);
        CHECK(rep.count_on == n);
        CHECK(rep.count_inside == 0);
        CHECK(rep.count_outside == 0);
        CHECK(rep.residual <= 1e-10);
    }

    const auto outside = smirnov::classify_zero_location(
        from_zeros({Complex{2, 0}, Complex{3, 0}}), 1.0);
    CHECK(outside.count_outside == 2);
    CHECK(outside.min_modulus == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(outside.max_modulus == doctest::Approx(3.0).epsilon(1e-12));

    // A repeated root exactly on the circle |z| = k must land in the band
    // both times; this requires the closed-form quadratic path.
    const auto dbl = smirnov::classify_zero_location(
        from_zeros({Complex{0.5, 0}, Complex{0.5, 0}}), 0.5);
    CHECK(dbl.count_on == 2);
    CHECK(dbl.count_inside == 0);
    CHECK(dbl.count_outside == 0);

    CHECK_THROWS_AS(smirnov::classify_zero_location(from_zeros({Complex{1, 0}}), 0.0),
                    std::invalid_argument);
}

TEST_CASE("argument principle zero counts") {
    CHECK(smirnov::count_zeros_argument_principle(Polynomial::monomial(2), 1.0, 64) == 2);
    CHECK(smirnov::count_zeros_argument_principle(from_zeros({Complex{2, 0}, Complex{3, 0}}), 1.0,
                                                  64) == 0);
    CHECK(smirnov::count_zeros_argument_principle(from_zeros({Complex{0.5, 0}, Complex{2, 0}}), 1.0,
                                                  64) == 1);

    // agreement with the direct root count on random instances
    smirnov::Rng rng(77);
    for (int t = 0; t < 10; ++t) {
        std::vector<Complex> zeros;
        int expected = 0;
        for (int j = 0; j < 5; ++j) {
            // keep zeros away from the test circle |z| = 1.3
            const double m = (rng.next_u64() % 2 == 0) ? rng.uniform(0.1, 1.1)
                                                       : rng.uniform(1.5, 3.0);
            zeros.push_back(std::polar(m, rng.uniform(0.0, 2.0 * std::numbers::pi)));
            if (m < 1.3) ++expected;
        }
        CHECK(smirnov::count_zeros_argument_principle(from_zeros(zeros), 1.3, 64) == expected);
    }

    CHECK_THROWS_AS(smirnov::count_zeros_argument_principle(Polynomial{}, 1.0, 64),
                    std::domain_error);
    CHECK_THROWS_AS(smirnov::count_zeros_argument_principle(Polynomial::monomial(1), 0.0, 64),
                    std::invalid_argument);
}
