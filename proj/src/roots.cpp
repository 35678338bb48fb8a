#include "smirnov/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace smirnov {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct EvalPair {
    Complex value;
    Complex deriv;
};

EvalPair eval_with_derivative(const std::vector<Complex>& c, Complex z) {
    Complex v{0.0, 0.0};
    Complex d{0.0, 0.0};
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        d = d * z + v;
        v = v * z + *it;
    }
    return {v, d};
}

double residual_of(const Polynomial& p, const std::vector<Complex>& roots) {
    double sum = coeff_norm_bounds(p).sum_abs;
    double worst = 0.0;
    for (const auto& r : roots) worst = std::max(worst, std::abs(p(r)));
    return worst / sum;
}

// One full Aberth-Ehrlich run from a perturbed circular initial guess.
// Returns the iterate set; quality is judged by the caller via residuals.
std::vector<Complex> aberth_pass(const std::vector<Complex>& c, int deg, double r0, double offset) {
    constexpr double kGolden = 0.38196601125010515;  // 2 - phi
    std::vector<Complex> z(static_cast<size_t>(deg));
    for (int i = 0; i < deg; ++i) {
        const double theta = kTwoPi * std::fmod(kGolden * static_cast<double>(i + 1), 1.0) + offset;
        z[static_cast<size_t>(i)] = std::polar(r0, theta);
    }

    for (int sweep = 0; sweep < 100; ++sweep) {
        double max_update = 0.0;
        for (int i = 0; i < deg; ++i) {
            auto& zi = z[static_cast<size_t>(i)];
            const auto [pv, pd] = eval_with_derivative(c, zi);
            if (pv == Complex{0.0, 0.0}) continue;
            if (pd == Complex{0.0, 0.0}) {
                zi += Complex{1e-8, 1e-8} * (1.0 + std::abs(zi));
                max_update = 1.0;
                continue;
            }
            const Complex newton = pv / pd;
            Complex sum{0.0, 0.0};
            for (int j = 0; j < deg; ++j) {
                if (j == i) continue;
                sum += 1.0 / (zi - z[static_cast<size_t>(j)]);
            }
            const Complex denom = 1.0 - newton * sum;
            const Complex w = (denom == Complex{0.0, 0.0}) ? newton : newton / denom;
            zi -= w;
            max_update = std::max(max_update, std::abs(w) / (1.0 + std::abs(zi)));
        }
        if (max_update < 1e-13) break;
    }

    // Newton polish
    for (auto& zi : z) {
        for (int it = 0; it < 3; ++it) {
            const auto [pv, pd] = eval_with_derivative(c, zi);
            if (pd == Complex{0.0, 0.0}) break;
            zi -= pv / pd;
        }
    }
    return z;
}

}  // namespace

std::vector<Complex> find_roots(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("find_roots: zero polynomial");
    if (p.degree() == 0) throw std::domain_error("find_roots: constant polynomial");

    // Exact zeros at the origin are split off first.
    std::vector<Complex> c = p.coeffs();
    size_t origin_roots = 0;
    while (origin_roots + 1 < c.size() && c[origin_roots] == Complex{0.0, 0.0}) ++origin_roots;
    if (origin_roots > 0) c.erase(c.begin(), c.begin() + static_cast<long>(origin_roots));

    std::vector<Complex> roots(origin_roots, Complex{0.0, 0.0});
    const int deg = static_cast<int>(c.size()) - 1;
    if (deg == 0) return roots;
    if (deg == 1) {
        roots.push_back(-c[0] / c[1]);
        return roots;
    }
    if (deg == 2) {
        // Stable quadratic formula; exact repeated roots (zero discriminant)
        // stay exact, which iterative solvers cannot guarantee.
        const Complex disc = c[1] * c[1] - 4.0 * c[2] * c[0];
        Complex s = std::sqrt(disc);
        if ((std::conj(c[1]) * s).real() < 0.0) s = -s;
        const Complex q = -0.5 * (c[1] + s);
        if (q == Complex{0.0, 0.0}) {
            roots.push_back(Complex{0.0, 0.0});
            roots.push_back(Complex{0.0, 0.0});
        } else {
            roots.push_back(q / c[2]);
            roots.push_back(c[0] / q);
        }
        return roots;
    }

    double r0 = std::pow(std::abs(c.front()) / std::abs(c.back()), 1.0 / static_cast<double>(deg));
    if (!std::isfinite(r0) || r0 == 0.0) r0 = 0.5;

    double best_residual = std::numeric_limits<double>::infinity();
    std::vector<Complex> best;
    for (int restart = 0; restart < 5; ++restart) {
        auto z = aberth_pass(c, deg, r0 * (1.0 + 0.1 * restart), 0.25 + 0.77 * restart);
        std::vector<Complex> candidate = roots;
        candidate.insert(candidate.end(), z.begin(), z.end());
        const double res = residual_of(p, candidate);
        if (res < best_residual) {
            best_residual = res;
            best = std::move(candidate);
        }
        if (best_residual <= 1e-8) break;
    }
    if (best_residual > 1e-8) {
        throw UnresolvedRootsError("find_roots: unresolved roots", best_residual);
    }
    return best;
}

ZeroLocationReport classify_zero_location(const Polynomial& p, double k) {
    if (!(k > 0.0)) throw std::invalid_argument("classify_zero_location: k must be > 0");
    ZeroLocationReport rep;
    rep.roots = find_roots(p);
    rep.residual = residual_of(p, rep.roots);
    rep.min_modulus = std::numeric_limits<double>::infinity();
    for (const auto& root : rep.roots) {
        const double m = std::abs(root);
        rep.max_modulus = std::max(rep.max_modulus, m);
        rep.min_modulus = std::min(rep.min_modulus, m);
        if (m < k - kCircleBandTol) {
            ++rep.count_inside;
        } else if (m <= k + kCircleBandTol) {
            ++rep.count_on;
        } else {
            ++rep.count_outside;
        }
    }
    if (rep.roots.empty()) rep.min_modulus = 0.0;
    return rep;
}

int count_zeros_argument_principle(const Polynomial& p, double r, int samples) {
    if (p.is_zero()) throw std::domain_error("argument principle: zero polynomial");
    if (!(r > 0.0)) throw std::invalid_argument("argument principle: r must be > 0");
    if (samples < 8) samples = 8;

    bool have_prev = false;
    int prev_winding = 0;
    for (int doubling = 0; doubling <= 4; ++doubling) {
        double total = 0.0;
        double max_step = 0.0;
        Complex first = p(std::polar(r, 0.0));
        Complex prev = first;
        for (int j = 1; j <= samples; ++j) {
            const Complex cur = (j == samples) ? first : p(std::polar(r, kTwoPi * j / samples));
            const double step = std::arg(cur / prev);
            max_step = std::max(max_step, std::abs(step));
            total += step;
            prev = cur;
        }
        const int winding = static_cast<int>(std::lround(total / kTwoPi));
        if (max_step < std::numbers::pi / 2.0 && have_prev && winding == prev_winding) {
            return winding;
        }
        have_prev = true;
        prev_winding = winding;
        samples *= 2;
    }
    throw std::runtime_error("argument principle: near-circle zero");
}

}  // namespace smirnov
