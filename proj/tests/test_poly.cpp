#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "smirnov/circle_max.hpp"
#include "smirnov/lab.hpp"
#include "smirnov/poly.hpp"

using smirnov::Complex;
using smirnov::Polynomial;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Polynomial make(std::vector<Complex> c) { return Polynomial(std::move(c)); }

Polynomial random_coeff_poly(smirnov::Rng& rng, int degree) {
    std::vector<Complex> c(static_cast<size_t>(degree) + 1);
    for (auto& v : c) v = Complex{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    c.back() += Complex{1.5, 0.0};  // keep the nominal degree
    return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("evaluation") {
    CHECK(Polynomial::monomial(7)(Complex{1.0, 0.0}) == Complex{1.0, 0.0});
    const Polynomial p = make({{1, 0}, {0, 0}, {1, 0}});  // z^2 + 1
    CHECK(std::abs(p(Complex{0.0, 1.0})) <= 1e-15);
    const Polynomial q = make({{0, 1}, {2, 0}});  // 2z + i
    CHECK(std::abs(q(Complex{1.0, 1.0}) - Complex{2.0, 3.0}) <= 1e-15);
    CHECK_THROWS_AS(p(Complex{std::nan(""), 0.0}), std::domain_error);
}

TEST_CASE("construction validates and trims") {
    CHECK_THROWS_AS(make({{1, 0}, {std::nan(""), 0}}), std::domain_error);
    CHECK_THROWS_AS(make({{1, 0}, {0, std::numeric_limits<double>::infinity()}}),
                    std::domain_error);
    CHECK(make({{1, 0}, {1e-20, 0}}).degree() == 0);  // trimmed leading coefficient
    const Polynomial zero = make({{0, 0}, {0, 0}, {0, 0}});
    CHECK(zero.is_zero());
    CHECK(zero.degree() == 0);
    CHECK(zero.coeffs().size() == 1);
    CHECK(Polynomial{}.is_zero());
}

TEST_CASE("derivative") {
    CHECK(smirnov::coeff_distance(smirnov::derivative(Polynomial::monomial(6)),
                                  Polynomial::monomial(5, Complex{6, 0})) == 0.0);
    CHECK(smirnov::derivative(make({{5, 0}})).is_zero());
    CHECK(smirnov::coeff_distance(smirnov::derivative(make({{1, 0}, {0, 0}, {1, 0}})),
                                  make({{0, 0}, {2, 0}})) == 0.0);
}

TEST_CASE("conjugate-reciprocal transform") {
    CHECK(smirnov::coeff_distance(smirnov::conjugate_reciprocal(Polynomial::monomial(4), 4),
                                  make({{1, 0}})) == 0.0);
    const Polynomial self = make({{1, 0}, {0, 0}, {1, 0}});
    CHECK(smirnov::coeff_distance(smirnov::conjugate_reciprocal(self, 2), self) == 0.0);
    // 2z + i at degree 1 -> 2 - i z
    CHECK(smirnov::coeff_distance(smirnov::conjugate_reciprocal(make({{0, 1}, {2, 0}}), 1),
                                  make({{2, 0}, {0, -1}})) == 0.0);
    CHECK_THROWS_AS(smirnov::conjugate_reciprocal(make({{1, 0}, {1, 0}}), 0), std::domain_error);

    smirnov::Rng rng(42);
    for (int t = 0; t < 20; ++t) {
        const int n = 1 + t % 8;
        const Polynomial p = random_coeff_poly(rng, n);
        const Polynomial q = smirnov::conjugate_reciprocal(p, n);
        // modulus invariance on the unit circle
        for (int j = 0; j < 256; ++j) {
            const Complex z = std::polar(1.0, kTwoPi * j / 256.0);
            CHECK(std::abs(std::abs(p(z)) - std::abs(q(z))) <=
                  1e-12 * std::max(1.0, std::abs(p(z))));
        }
        // involution when the constant coefficient keeps the degree
        if (std::abs(p.coeff(0)) > 1e-3 && q.degree() == n) {
            const Polynomial back = smirnov::conjugate_reciprocal(q, n);
            CHECK(smirnov::coeff_distance(back, p) <= 1e-14 * smirnov::coeff_norm_bounds(p).sum_abs);
        }
    }
}

TEST_CASE("dilation") {
    CHECK(smirnov::coeff_distance(smirnov::dilate(make({{1, 0}, {0, 0}, {1, 0}}), 2.0),
                                  make({{1, 0}, {0, 0}, {4, 0}})) == 0.0);
    smirnov::Rng rng(7);
    const Polynomial p = random_coeff_poly(rng, 6);
    CHECK(smirnov::coeff_distance(smirnov::dilate(p, 1.0), p) == 0.0);
    for (int t = 0; t < 10; ++t) {
        const double R = rng.uniform(1.0, 4.0);
        const Complex z = std::polar(1.0, rng.uniform(0.0, kTwoPi));
        const Complex lhs = smirnov::dilate(p, R)(z);
        const Complex rhs = p(R * z);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("linear combinations") {
    const Polynomial z2 = Polynomial::monomial(2);
    CHECK(smirnov::linear_combine({{Complex{1, 0}, z2}, {Complex{-1, 0}, z2}}).is_zero());
    CHECK(smirnov::coeff_distance(
              smirnov::linear_combine({{Complex{2, 0}, Polynomial::monomial(1)},
                                       {Complex{3, 0}, Polynomial::monomial(0)}}),
              make({{3, 0}, {2, 0}})) == 0.0);
    // i (z^2 + 1) + (-i z^2) = i
    CHECK(smirnov::coeff_distance(
              smirnov::linear_combine({{Complex{0, 1}, make({{1, 0}, {0, 0}, {1, 0}})},
                                       {Complex{1, 0}, make({{0, 0}, {0, 0}, {0, -1}})}}),
              make({{0, 1}})) == 0.0);

    // derivative commutes with linear combinations up to one rounding of the
    // complex products
    smirnov::Rng rng(11);
    const Polynomial p = random_coeff_poly(rng, 5);
    const Polynomial q = random_coeff_poly(rng, 3);
    const Complex c1{0.25, -1.5}, c2{2.0, 0.5};
    CHECK(smirnov::coeff_distance(
              smirnov::derivative(smirnov::linear_combine({{c1, p}, {c2, q}})),
              smirnov::linear_combine({{c1, smirnov::derivative(p)}, {c2, smirnov::derivative(q)}})) <=
          1e-13);
}

TEST_CASE("coefficient norm bounds") {
    const auto b1 = smirnov::coeff_norm_bounds(make({{1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}}));
    CHECK(b1.sum_abs == 2.0);
    CHECK(b1.weighted_sum == 4.0);
    const auto b2 = smirnov::coeff_norm_bounds(make({{3, -4}}));
    CHECK(b2.sum_abs == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(b2.weighted_sum == 0.0);
    const auto b3 = smirnov::coeff_norm_bounds(make({{0, 0}, {0, -4}, {3, 0}}));
    CHECK(b3.sum_abs == doctest::Approx(7.0).epsilon(1e-15));
    CHECK(b3.weighted_sum == doctest::Approx(10.0).epsilon(1e-15));

    // sum_abs really bounds the circle maximum
    smirnov::Rng rng(19);
    for (int t = 0; t < 5; ++t) {
        const Polynomial p = random_coeff_poly(rng, 2 + t);
        const auto bracket = smirnov::max_modulus_on_circle(p, 1.0);
        CHECK(bracket.hi <= smirnov::coeff_norm_bounds(p).sum_abs * (1.0 + 1e-12));
    }
}
