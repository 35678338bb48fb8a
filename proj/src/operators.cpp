#include "smirnov/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace smirnov {

namespace {

void require_modulus(Complex v, const char* name) {
    if (std::abs(v) > 1.0 + 1e-12) {
        throw std::invalid_argument(std::string(name) + " must lie in the closed unit disk");
    }
}

void require_degree(const Polynomial& p, int n, const char* op) {
    if (n < p.degree()) {
        throw std::domain_error(std::string(op) + ": operator degree below deg(p)");
    }
}

}  // namespace

ParameterSet::ParameterSet(double R_, Complex alpha_, Complex beta_, Complex a_, double k_,
                           std::vector<double> grid)
    : R(R_), alpha(alpha_), beta(beta_), a(a_), k(k_), radius_grid(std::move(grid)) {
    if (!std::isfinite(R) || R < 1.0 - 1e-12) throw std::invalid_argument("R must be >= 1");
    require_modulus(alpha, "alpha");
    require_modulus(beta, "beta");
    require_modulus(a, "a");
    if (!(k > 0.0) || k > 1.0 + 1e-12) throw std::invalid_argument("k must lie in (0, 1]");
    if (radius_grid.empty()) radius_grid = default_radius_grid();
    for (double r : radius_grid) {
        if (!(r >= 1.0 - 1e-12)) throw std::invalid_argument("radius grid entries must be >= 1");
    }
}

double half_power(double R, int n) {
    if (n > 64) return std::exp(static_cast<double>(n) * std::log((R + 1.0) / 2.0));
    return std::pow((R + 1.0) / 2.0, n);
}

Polynomial smirnov_op(const Polynomial& p, Complex alpha, int n) {
    require_degree(p, n, "smirnov_op");
    return linear_combine({{Complex{1.0, 0.0}, shift_up(derivative(p))},
                           {-static_cast<double>(n) * alpha, p}});
}

Polynomial smirnov_modified(const Polynomial& p, Complex a, int n) {
    require_degree(p, n, "smirnov_modified");
    require_modulus(a, "a");
    // Coefficient j of (1 + a z) p' - n a p is (j+1) c_{j+1} + a (j - n) c_j;
    // at j = n the term vanishes identically.
    std::vector<Complex> c(static_cast<size_t>(n) + 1, Complex{0.0, 0.0});
    for (int j = 0; j <= n; ++j) {
        c[static_cast<size_t>(j)] =
            static_cast<double>(j + 1) * p.coeff(j + 1) + a * static_cast<double>(j - n) * p.coeff(j);
    }
    return Polynomial(std::move(c));
}

Polynomial composite_transform(const Polynomial& p, const ParameterSet& params, int n) {
    require_degree(p, n, "composite_transform");
    const Polynomial outer = smirnov_modified(dilate(p, params.R), params.a, n);
    const Polynomial inner = smirnov_modified(p, params.a, n);
    const Complex factor =
        -params.alpha + params.beta * (half_power(params.R, n) - std::abs(params.alpha));
    return linear_combine({{Complex{1.0, 0.0}, outer}, {factor, inner}});
}

Polynomial limit_expression(const Polynomial& p, Complex beta, Complex a, int n) {
    if (p.degree() < 1) throw std::domain_error("limit_expression: constant polynomial");
    require_degree(p, n, "limit_expression");
    require_modulus(beta, "beta");
    const Polynomial dp = derivative(p);
    const Polynomial inner = shift_up(smirnov_modified(dp, a, n - 1));
    return linear_combine({{Complex{1.0, 0.0}, inner},
                           {0.5 * static_cast<double>(n) * beta, smirnov_modified(p, a, n)},
                           {Complex{1.0, 0.0}, dp}});
}

bool omega_membership(Complex alpha, double z_modulus) {
    if (!(z_modulus >= 1.0)) throw std::invalid_argument("omega_membership: |z| must be >= 1");
    if (alpha == Complex{1.0, 0.0}) return false;
    return std::abs(alpha) <= z_modulus * std::abs(Complex{1.0, 0.0} - alpha);
}

bool is_exceptional_value(const Polynomial& p, Complex a) {
    const int n = p.degree();
    if (n < 1) throw std::domain_error("exceptional value test needs deg >= 1");
    const Complex lead = static_cast<double>(n) * p.coeff(n) - a * p.coeff(n - 1);
    return std::abs(lead) <= kDegreeTrimTol * coeff_norm_bounds(p).sum_abs;
}

}  // namespace smirnov
