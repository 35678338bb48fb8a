#include "smirnov/circle_max.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace smirnov {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr long kMaxSamples = 1L << 24;

double norm_at(const Polynomial& p, double theta) {
    return std::norm(p(std::polar(1.0, theta)));
}

// Curvature bound for g(theta) = |p(e^{i theta})|^2, a trigonometric
// polynomial of degree n: |g''| <= sum_m m^2 |c_m| with
// c_m = sum_j a_{j+m} conj(a_j).
double second_derivative_bound(const Polynomial& p) {
    const int n = p.degree();
    double bound = 0.0;
    for (int m = 1; m <= n; ++m) {
        Complex cm{0.0, 0.0};
        for (int j = 0; j + m <= n; ++j) cm += p.coeff(j + m) * std::conj(p.coeff(j));
        bound += 2.0 * static_cast<double>(m) * static_cast<double>(m) * std::abs(cm);
    }
    return bound;
}

// Golden-section maximization of g over [a, b]; returns (theta, g(theta)).
std::pair<double, double> golden_max(const Polynomial& p, double a, double b) {
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = norm_at(p, x1);
    double f2 = norm_at(p, x2);
    for (int it = 0; it < 80 && (b - a) > 1e-15; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = norm_at(p, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = norm_at(p, x1);
        }
    }
    return (f1 > f2) ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

}  // namespace

CertifiedBracket max_modulus_on_circle(const Polynomial& p, double r, double tol) {
    if (!(r > 0.0)) throw std::invalid_argument("max_modulus_on_circle: r must be > 0");
    const NormBounds nb = coeff_norm_bounds(p);
    if (tol <= 0.0) tol = 1e-10 * std::max(1.0, nb.sum_abs);

    const Polynomial pr = dilate(p, r);
    if (pr.degree() == 0) {
        const double v = std::abs(pr.coeff(0));
        return {v, v, 0.0};
    }

    const double lip = coeff_norm_bounds(pr).weighted_sum;
    const double curv = second_derivative_bound(pr);

    CertifiedBracket best{0.0, std::numeric_limits<double>::infinity(), 0.0};
    long n_samples = std::max<long>(4096, 64L * pr.degree());
    std::vector<double> g;
    while (n_samples <= kMaxSamples) {
        const size_t n = static_cast<size_t>(n_samples);
        const double h = kTwoPi / static_cast<double>(n_samples);
        g.resize(n);
        double gmax = 0.0;
        size_t imax = 0;
        for (size_t j = 0; j < n; ++j) {
            g[j] = norm_at(pr, static_cast<double>(j) * h);
            if (g[j] > gmax) {
                gmax = g[j];
                imax = j;
            }
        }

        const double hi = std::min(std::sqrt(gmax) + lip * h / 2.0,
                                   std::sqrt(gmax + curv * h * h / 8.0));

        // Refine around the best samples; secondary local maxima are kept in
        // play so the reported argmax tracks the global one.
        double glo = gmax;
        double theta_best = static_cast<double>(imax) * h;
        std::vector<size_t> seeds{imax};
        for (size_t j = 0; j < n; ++j) {
            if (seeds.size() >= 3) break;
            if (j == imax) continue;
            if (g[j] > 0.999 * gmax &&
                std::min((j > imax ? j - imax : imax - j), n - (j > imax ? j - imax : imax - j)) > 2) {
                seeds.push_back(j);
            }
        }
        for (size_t s : seeds) {
            const double center = static_cast<double>(s) * h;
            const auto [theta, val] = golden_max(pr, center - h, center + h);
            if (val > glo) {
                glo = val;
                theta_best = theta;
            }
        }
        const double lo = std::sqrt(glo);
        double theta = std::fmod(theta_best, kTwoPi);
        if (theta < 0.0) theta += kTwoPi;

        if (hi - lo < best.hi - best.lo) best = {lo, hi, theta};
        if (best.hi - best.lo <= tol) return best;
        n_samples *= 2;
    }
    throw BracketError("max_modulus_on_circle: tolerance unreachable within sample budget", best);
}

std::pair<double, Complex> sup_ratio_on_circle(const Polynomial& numerator,
                                               const RadialProfile& rhs_profile, double r,
                                               double tol) {
    const double rhs = rhs_profile(r);
    if (!(rhs > 0.0)) throw std::invalid_argument("sup_ratio_on_circle: profile must be positive");
    if (numerator.is_zero()) return {rhs, std::polar(r, 0.0)};
    const CertifiedBracket b = max_modulus_on_circle(numerator, r, tol);
    return {rhs - b.lo, std::polar(r, b.argmax_theta)};
}

}  // namespace smirnov
