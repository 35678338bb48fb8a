#ifndef SMIRNOV_OPERATORS_HPP
#define SMIRNOV_OPERATORS_HPP

#include <vector>

#include "smirnov/poly.hpp"

namespace smirnov {

/// Parameters shared by every inequality instance. Modulus constraints are
/// enforced at construction (tolerance 1e-12).
struct ParameterSet {
    double R = 1.0;            // >= 1
    Complex alpha{0.0, 0.0};   // |alpha| <= 1
    Complex beta{0.0, 0.0};    // |beta| <= 1
    Complex a{0.0, 0.0};       // |a| <= 1
    double k = 1.0;            // growth-lemma radius, in (0, 1]
    std::vector<double> radius_grid;  // entries >= 1; empty selects default

    ParameterSet() { radius_grid = default_radius_grid(); }
    ParameterSet(double R_, Complex alpha_, Complex beta_, Complex a_, double k_ = 1.0,
                 std::vector<double> grid = {});

    static std::vector<double> default_radius_grid() { return {1.0, 1.05, 1.25, 2.0, 4.0, 10.0}; }
};

/// ((R+1)/2)^n, evaluated in log space for large n.
double half_power(double R, int n);

/// Smirnov operator at degree n: z p'(z) - n alpha p(z).
Polynomial smirnov_op(const Polynomial& p, Complex alpha, int n);

/// Modified Smirnov operator at degree n: (1 + a z) p'(z) - n a p(z).
/// The z^n terms cancel identically, so the result has degree <= n-1.
Polynomial smirnov_modified(const Polynomial& p, Complex a, int n);

/// The composite transform of a polynomial p at degree n:
///   S_a[p(R .)] - alpha S_a[p] + beta (((R+1)/2)^n - |alpha|) S_a[p],
/// with S_a the modified Smirnov operator taken at degree n. The first term
/// is the operator applied to the dilated polynomial.
Polynomial composite_transform(const Polynomial& p, const ParameterSet& params, int n);

/// The R -> 1 limit of composite_transform at alpha = 1, divided by R - 1:
///   z S_a[p'] + (n/2) beta S_a[p] + p',
/// where the inner operator acts on p' at degree n-1. Requires deg(p) >= 1.
Polynomial limit_expression(const Polynomial& p, Complex beta, Complex a, int n);

/// Membership of alpha in the closure of Omega_{|z|}, the image of
/// {|t| < |z|} under t / (t + 1): |alpha| <= |z| |1 - alpha|, alpha != 1.
bool omega_membership(Complex alpha, double z_modulus);

/// True when the degree of S_a[p] drops below n-1, i.e. when
/// n c_n - a c_{n-1} vanishes to within the trim tolerance.
bool is_exceptional_value(const Polynomial& p, Complex a);

}  // namespace smirnov

#endif
