#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "smirnov/inequalities.hpp"
#include "smirnov/lab.hpp"
#include "smirnov/poly.hpp"
#include "smirnov/roots.hpp"

using smirnov::CheckOptions;
using smirnov::Complex;
using smirnov::GeneratorSpec;
using smirnov::InequalityId;
using smirnov::ParameterSet;
using smirnov::Polynomial;
using smirnov::SharpnessFamily;
using smirnov::SweepGrid;
using smirnov::ZeroRegion;

TEST_CASE("seeded streams are deterministic") {
    smirnov::Rng a(12345), b(12345);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    CHECK(smirnov::split_seed(1, 2) == smirnov::split_seed(1, 2));
    CHECK(smirnov::split_seed(1, 2) != smirnov::split_seed(1, 3));
    CHECK(smirnov::split_seed(1, 2) != smirnov::split_seed(2, 2));

    smirnov::Rng c(7);
    for (int i = 0; i < 1000; ++i) {
        const double u = c.uniform(2.0, 5.0);
        CHECK(u >= 2.0);
        CHECK(u < 5.0);
    }
}

TEST_CASE("instance generator") {
    GeneratorSpec spec;
    spec.degree = 5;
    spec.seed = 31337;

    const Polynomial p1 = smirnov::generate(spec);
    const Polynomial p2 = smirnov::generate(spec);
    CHECK(smirnov::coeff_distance(p1, p2) == 0.0);
    CHECK(p1.degree() == 5);

    spec.seed = 31338;
    CHECK(smirnov::coeff_distance(p1, smirnov::generate(spec)) > 0.0);

    spec.region = ZeroRegion::outside_closed_disk;
    for (const Complex& root : smirnov::find_roots(smirnov::generate(spec))) {
        CHECK(std::abs(root) >= 1.0 - 1e-9);
    }
    spec.boundary_hug = true;
    for (const Complex& root : smirnov::find_roots(smirnov::generate(spec))) {
        CHECK(std::abs(root) >= 1.0 - 1e-9);
        CHECK(std::abs(root) <= 1.01 + 1e-9);
    }
    spec.boundary_hug = false;

    spec.region = ZeroRegion::annulus;
    spec.k_lo = 0.3;
    spec.k_hi = 0.6;
    for (const Complex& root : smirnov::find_roots(smirnov::generate(spec))) {
        CHECK(std::abs(root) >= 0.3 - 1e-9);
        CHECK(std::abs(root) <= 0.6 + 1e-9);
    }

    GeneratorSpec bad = spec;
    bad.degree = 0;
    CHECK_THROWS_AS(smirnov::generate(bad), std::invalid_argument);
    bad = spec;
    bad.zero_separation_min = 1e-6;
    CHECK_THROWS_AS(smirnov::generate(bad), std::invalid_argument);
    // a separation no sampler can attain fails loudly instead of spinning
    bad = spec;
    bad.degree = 10;
    bad.k_lo = bad.k_hi = 0.1;
    bad.zero_separation_min = 0.5;
    CHECK_THROWS_AS(smirnov::generate(bad), std::runtime_error);
}

TEST_CASE("random parameter sets are admissible") {
    smirnov::Rng rng(2024);
    for (int t = 0; t < 200; ++t) {
        const ParameterSet ps = smirnov::sample_parameters(rng);
        CHECK(ps.R >= 1.0);
        CHECK(ps.R <= 8.0 + 1e-12);
        CHECK(std::abs(ps.alpha) <= 1.0 + 1e-12);
        CHECK(std::abs(ps.beta) <= 1.0 + 1e-12);
        CHECK(std::abs(ps.a) <= 1.0 + 1e-12);
    }
}

TEST_CASE("sharpness probes find the extremal families") {
    // the monomial family attains the composite max bound for every
    // admissible parameter choice
    SweepGrid grid;
    grid.R = {1.0, 1.5, 3.0};
    grid.alpha = {Complex{0, 0}, Complex{0.3, 0.2}};
    grid.beta = {Complex{0, 0}, Complex{-0.4, 0.1}};
    grid.a = {Complex{0, 0}, Complex{0.6, 0}};
    grid.n = {2, 4};
    const auto m1 = smirnov::sharpness_probe(InequalityId::M1, SharpnessFamily::lambda_zn, grid);
    CHECK(m1.best_ratio == doctest::Approx(1.0).epsilon(1e-9));

    const auto m2 = smirnov::sharpness_probe(InequalityId::M2, SharpnessFamily::lambda_zn, grid);
    CHECK(m2.best_ratio == doctest::Approx(1.0).epsilon(1e-9));

    // z^n + 1 attains the self-inversive average bound at the classical point
    SweepGrid classical;
    classical.n = {2, 3, 4};
    const auto m5 = smirnov::sharpness_probe(InequalityId::M5, SharpnessFamily::zn_plus_1, classical);
    CHECK(m5.best_ratio == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(m5.argmax_n >= 2);
}

TEST_CASE("violation search bookkeeping") {
    const auto one = smirnov::violation_search(InequalityId::M1, 1, 99);
    CHECK(one.evaluations == 1);
    CHECK(one.ineq == InequalityId::M1);
    CHECK(one.seed == 99);

    const auto r1 = smirnov::violation_search(InequalityId::C1, 60, 5);
    const auto r2 = smirnov::violation_search(InequalityId::C1, 60, 5);
    CHECK(r1.best_margin == r2.best_margin);
    CHECK(r1.evaluations == r2.evaluations);
    CHECK(smirnov::coeff_distance(r1.best_poly, r2.best_poly) == 0.0);

    CHECK_THROWS_AS(smirnov::violation_search(InequalityId::M1, 0, 1), std::invalid_argument);
}

TEST_CASE("search margin survives re-evaluation") {
    // the reported best instance must reproduce its margin exactly when
    // pushed back through the same evaluation path
    const auto single = smirnov::violation_search(InequalityId::M1, 250, 7);
    CHECK(std::abs(smirnov::reevaluate_search_margin(single) - single.best_margin) <= 1e-12);
    CHECK_FALSE(single.is_pair);

    const auto pair = smirnov::violation_search(InequalityId::L5, 150, 11);
    CHECK(pair.is_pair);
    CHECK(std::abs(smirnov::reevaluate_search_margin(pair) - pair.best_margin) <= 1e-12);
}

TEST_CASE("search detects an artificially weakened bound") {
    smirnov::SearchOptions weakened;
    weakened.rhs_scale = 0.9;
    const auto res = smirnov::violation_search(InequalityId::M1, 400, 2026, weakened);
    CHECK(res.best_margin < -1e-6);
    smirnov::SearchOptions opts;
    opts.rhs_scale = 0.9;
    CHECK(smirnov::reevaluate_search_margin(res, opts) == doctest::Approx(res.best_margin));
}

TEST_CASE("parameter sweeps") {
    // a singleton sweep is exactly one certified report
    SweepGrid single;
    single.R = {2.0};
    single.alpha = {Complex{0.3, 0}};
    single.beta = {Complex{0.7, 0}};
    single.a = {Complex{0.4, 0}};
    single.n = {2};
    const auto reports = smirnov::sweep(InequalityId::M1, single, SharpnessFamily::lambda_zn);
    REQUIRE(reports.size() == 1);
    const ParameterSet params(2.0, Complex{0.3, 0}, Complex{0.7, 0}, Complex{0.4, 0}, 1.0, {1.0});
    const auto direct =
        smirnov::certify_on_circle(InequalityId::M1, Polynomial::monomial(2), params, 1.0);
    CHECK(reports[0].lhs == doctest::Approx(direct.lhs).epsilon(1e-12));
    CHECK(reports[0].rhs == doctest::Approx(direct.rhs).epsilon(1e-12));

    // the monomial family stays sharp across the R axis
    SweepGrid raxis = single;
    raxis.R = {1.0, 2.0};
    raxis.radius = {1.0, 2.0};
    const auto sharp = smirnov::sweep(InequalityId::M1, raxis, SharpnessFamily::lambda_zn);
    REQUIRE(sharp.size() == 4);
    CHECK(sharp[0].params.R == 1.0);
    CHECK(sharp[0].radius == 1.0);
    CHECK(sharp[1].radius == 2.0);
    CHECK(sharp[2].params.R == 2.0);
    for (const auto& rep : sharp) CHECK(std::abs(rep.relative_margin) <= 1e-9);

    // n axis of a derivative-type bound: rhs is n * max|p| = n for monomials
    SweepGrid naxis;
    naxis.n = {1, 2, 3, 4, 5, 6};
    const auto growth = smirnov::sweep(InequalityId::L4, naxis, SharpnessFamily::lambda_zn);
    REQUIRE(growth.size() == 6);
    for (size_t i = 0; i < growth.size(); ++i) {
        CHECK(growth[i].rhs == doctest::Approx(static_cast<double>(i + 1)).epsilon(1e-9));
        CHECK(growth[i].relative_margin >= -1e-9);
    }

    // generator-backed sweeps are deterministic in the spec seed
    GeneratorSpec gen;
    gen.seed = 404;
    SweepGrid g2 = single;
    g2.n = {3};
    const auto s1 = smirnov::sweep(InequalityId::C2, g2, gen);
    const auto s2 = smirnov::sweep(InequalityId::C2, g2, gen);
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].lhs == s2[0].lhs);
    CHECK(s1[0].relative_margin >= -1e-9);

    SweepGrid empty;
    empty.n = {};
    CHECK_THROWS_AS(smirnov::sweep(InequalityId::M1, empty, SharpnessFamily::lambda_zn),
                    std::invalid_argument);
}
