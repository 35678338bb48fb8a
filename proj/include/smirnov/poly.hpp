#ifndef SMIRNOV_POLY_HPP
#define SMIRNOV_POLY_HPP

#include <complex>
#include <utility>
#include <vector>

namespace smirnov {

using Complex = std::complex<double>;

// Relative threshold below which a leading coefficient is treated as zero.
inline constexpr double kDegreeTrimTol = 1e-12;

/// Complex polynomial with coefficients stored in ascending powers:
/// coeffs()[j] multiplies z^j. The representation is always trimmed, so
/// degree() is the nominal degree and the zero polynomial is [0].
class Polynomial {
public:
    Polynomial() : coeffs_{Complex{0.0, 0.0}} {}
    explicit Polynomial(std::vector<Complex> coeffs);

    /// scale * z^degree
    static Polynomial monomial(int degree, Complex scale = Complex{1.0, 0.0});

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const;

    const std::vector<Complex>& coeffs() const { return coeffs_; }

    /// Coefficient of z^j, zero beyond the nominal degree.
    Complex coeff(int j) const;

    /// Horner evaluation, highest power first. Rejects non-finite z.
    Complex operator()(Complex z) const;

private:
    std::vector<Complex> coeffs_;
};

Polynomial derivative(const Polynomial& p);

/// Q(z) = z^n * conj(P(1/conj(z))): coefficients conjugated, zero-padded to
/// length n+1, then reversed. Requires n >= deg(p).
Polynomial conjugate_reciprocal(const Polynomial& p, int n);

/// p(R z): coefficient j scaled by R^j. Requires finite R >= 0.
Polynomial dilate(const Polynomial& p, double R);

/// z * p(z)
Polynomial shift_up(const Polynomial& p);

/// Coefficient-wise sum of c_i * p_i, trimmed.
Polynomial linear_combine(const std::vector<std::pair<Complex, Polynomial>>& terms);

struct NormBounds {
    double sum_abs;       // sum |c_j|; bounds max |p| on the unit circle
    double weighted_sum;  // sum j |c_j|; bounds max |p'| and d/dtheta |p(e^{i theta})|
};

NormBounds coeff_norm_bounds(const Polynomial& p);

/// max_j |a_j - b_j| over the common coefficient range.
double coeff_distance(const Polynomial& a, const Polynomial& b);

}  // namespace smirnov

#endif
