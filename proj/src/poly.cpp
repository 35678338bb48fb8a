#include "smirnov/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace smirnov {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::vector<Complex> trimmed(std::vector<Complex> c) {
    double max_abs = 0.0;
    for (const auto& v : c) max_abs = std::max(max_abs, std::abs(v));
    if (max_abs == 0.0) return {Complex{0.0, 0.0}};
    const double cut = kDegreeTrimTol * max_abs;
    while (c.size() > 1 && std::abs(c.back()) <= cut) c.pop_back();
    return c;
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
    for (const auto& c : coeffs) {
        if (!finite(c)) throw std::domain_error("non-finite polynomial coefficient");
    }
    coeffs_ = trimmed(std::move(coeffs));
}

Polynomial Polynomial::monomial(int degree, Complex scale) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
    std::vector<Complex> c(static_cast<size_t>(degree) + 1, Complex{0.0, 0.0});
    c.back() = scale;
    return Polynomial(std::move(c));
}

bool Polynomial::is_zero() const {
    return coeffs_.size() == 1 && coeffs_[0] == Complex{0.0, 0.0};
}

Complex Polynomial::coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(coeffs_.size())) return Complex{0.0, 0.0};
    return coeffs_[static_cast<size_t>(j)];
}

Complex Polynomial::operator()(Complex z) const {
    if (!finite(z)) throw std::domain_error("polynomial evaluation at non-finite point");
    Complex acc{0.0, 0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Polynomial derivative(const Polynomial& p) {
    if (p.degree() == 0) return Polynomial{};
    std::vector<Complex> c(static_cast<size_t>(p.degree()));
    for (int j = 1; j <= p.degree(); ++j) {
        c[static_cast<size_t>(j - 1)] = static_cast<double>(j) * p.coeff(j);
    }
    return Polynomial(std::move(c));
}

Polynomial conjugate_reciprocal(const Polynomial& p, int n) {
    if (n < p.degree()) {
        throw std::domain_error("conjugate_reciprocal: n below the degree of p");
    }
    std::vector<Complex> c(static_cast<size_t>(n) + 1, Complex{0.0, 0.0});
    for (int j = 0; j <= p.degree(); ++j) c[static_cast<size_t>(j)] = std::conj(p.coeff(j));
    std::reverse(c.begin(), c.end());
    return Polynomial(std::move(c));
}

Polynomial dilate(const Polynomial& p, double R) {
    if (!std::isfinite(R) || R < 0.0) throw std::invalid_argument("dilate: R must be finite and >= 0");
    if (R == 1.0) return p;
    std::vector<Complex> c(p.coeffs());
    double scale = 1.0;
    for (size_t j = 1; j < c.size(); ++j) {
        scale *= R;
        c[j] *= scale;
    }
    return Polynomial(std::move(c));
}

Polynomial shift_up(const Polynomial& p) {
    if (p.is_zero()) return p;
    std::vector<Complex> c(p.coeffs().size() + 1, Complex{0.0, 0.0});
    std::copy(p.coeffs().begin(), p.coeffs().end(), c.begin() + 1);
    return Polynomial(std::move(c));
}

Polynomial linear_combine(const std::vector<std::pair<Complex, Polynomial>>& terms) {
    size_t len = 1;
    for (const auto& [c, p] : terms) len = std::max(len, p.coeffs().size());
    std::vector<Complex> acc(len, Complex{0.0, 0.0});
    for (const auto& [c, p] : terms) {
        for (size_t j = 0; j < p.coeffs().size(); ++j) acc[j] += c * p.coeffs()[j];
    }
    return Polynomial(std::move(acc));
}

NormBounds coeff_norm_bounds(const Polynomial& p) {
    NormBounds b{0.0, 0.0};
    for (int j = 0; j <= p.degree(); ++j) {
        const double a = std::abs(p.coeff(j));
        b.sum_abs += a;
        b.weighted_sum += static_cast<double>(j) * a;
    }
    return b;
}

double coeff_distance(const Polynomial& a, const Polynomial& b) {
    double d = 0.0;
    const int top = std::max(a.degree(), b.degree());
    for (int j = 0; j <= top; ++j) d = std::max(d, std::abs(a.coeff(j) - b.coeff(j)));
    return d;
}

}  // namespace smirnov
