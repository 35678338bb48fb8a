#include "smirnov/lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace smirnov {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct ModulusRange {
    double lo;
    double hi;
};

ModulusRange modulus_range(const GeneratorSpec& spec) {
    switch (spec.region) {
        case ZeroRegion::anywhere:
            return {0.0, 3.0};
        case ZeroRegion::outside_closed_disk:
            return spec.boundary_hug ? ModulusRange{1.0, 1.01} : ModulusRange{1.0, 3.0};
        case ZeroRegion::inside_closed_disk:
            return {0.0, 1.0};
        case ZeroRegion::annulus:
            return {spec.k_lo, spec.k_hi};
    }
    return {0.0, 3.0};
}

Polynomial from_zeros(const std::vector<Complex>& zeros, Complex lead) {
    std::vector<Complex> c{Complex{1.0, 0.0}};
    for (const auto& z0 : zeros) {
        std::vector<Complex> next(c.size() + 1, Complex{0.0, 0.0});
        for (size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j];
            next[j] -= z0 * c[j];
        }
        c = std::move(next);
    }
    for (auto& v : c) v *= lead;
    return Polynomial(std::move(c));
}

}  // namespace

std::uint64_t Rng::next_u64() { return splitmix64(state_); }

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t s = master ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    return splitmix64(s);
}

Complex sample_unit_disk(Rng& rng) {
    for (;;) {
        const double x = rng.uniform(-1.0, 1.0);
        const double y = rng.uniform(-1.0, 1.0);
        if (x * x + y * y <= 1.0) return {x, y};
    }
}

ParameterSet sample_parameters(Rng& rng, double k) {
    const double R = std::exp(rng.uniform(0.0, std::log(8.0)));
    return ParameterSet(R, sample_unit_disk(rng), sample_unit_disk(rng), sample_unit_disk(rng), k);
}

Polynomial generate(const GeneratorSpec& spec) {
    if (spec.degree < 1) throw std::invalid_argument("generate: degree must be >= 1");
    if (spec.zero_separation_min < 1e-3) {
        throw std::invalid_argument("generate: zero separation must be >= 1e-3");
    }
    const ModulusRange range = modulus_range(spec);
    if (!(range.lo >= 0.0) || !(range.hi > 0.0) || range.hi < range.lo) {
        throw std::invalid_argument("generate: bad region radii");
    }
    Rng rng(split_seed(spec.seed, 0x67656e ));
    std::vector<Complex> zeros;
    zeros.reserve(static_cast<size_t>(spec.degree));
    int attempts = 0;
    while (static_cast<int>(zeros.size()) < spec.degree) {
        if (++attempts > 10000) {
            throw std::runtime_error("generate: zero separation unattainable");
        }
        const Complex z0 = std::polar(rng.uniform(range.lo, range.hi), rng.uniform(0.0, kTwoPi));
        bool ok = true;
        for (const auto& other : zeros) {
            if (std::abs(z0 - other) < spec.zero_separation_min) {
                ok = false;
                break;
            }
        }
        if (ok) zeros.push_back(z0);
    }
    const Complex lead = std::polar(spec.coeff_scale, rng.uniform(0.0, kTwoPi));
    return from_zeros(zeros, lead);
}

ProbeResult sharpness_probe(InequalityId id, SharpnessFamily family, const SweepGrid& grid) {
    ProbeResult result;
    result.best_ratio = -std::numeric_limits<double>::infinity();
    CheckOptions opts;
    opts.max_midpoint = true;
    const Complex lambda = std::polar(0.8, 0.9);
    for (double R : grid.R)
        for (const Complex& alpha : grid.alpha)
            for (const Complex& beta : grid.beta)
                for (const Complex& a : grid.a)
                    for (int n : grid.n) {
                        const Polynomial p =
                            (family == SharpnessFamily::lambda_zn)
                                ? Polynomial::monomial(n, lambda)
                                : linear_combine({{Complex{1.0, 0.0}, Polynomial::monomial(n)},
                                                  {Complex{1.0, 0.0}, Polynomial::monomial(0)}});
                        const ParameterSet params(R, alpha, beta, a);
                        const CheckReport rep = certify_on_circle(id, p, params, 1.0, opts);
                        const double ratio = rep.lhs / std::max(rep.rhs, 1e-300);
                        if (ratio > result.best_ratio) {
                            result.best_ratio = ratio;
                            result.argmax_params = params;
                            result.argmax_n = n;
                        }
                    }
    return result;
}

namespace {

struct SearchInstance {
    Polynomial p;
    Polynomial f;  // pair ids only; p dominates nothing, f dominates p
    ParameterSet params;
    bool pair = false;
};

ModulusRange search_modulus_range(InequalityId id) {
    switch (hypothesis_of(id)) {
        case HypothesisKind::no_zeros_in_open_disk:
            return {1.0, 3.0};
        case HypothesisKind::all_zeros_in_closed_disk:
        case HypothesisKind::dominated_pair:
            return {0.0, 1.0};
        case HypothesisKind::zeros_in_radius_k:
            return {0.0, 1.0};  // scaled by k at decode time
        default:
            return {0.0, 3.0};
    }
}

Complex clamp_disk(double re, double im) {
    Complex v{re, im};
    const double m = std::abs(v);
    if (m > 1.0) v /= m;
    return v;
}

double clamp(double v, double lo, double hi) { return std::min(hi, std::max(lo, v)); }

// Layout: [ (modulus, arg) x degree, R, al_re, al_im, be_re, be_im, a_re, a_im,
//           (c_re, c_im for pair ids) ]
SearchInstance decode(InequalityId id, const std::vector<double>& x, int degree, double k) {
    const ModulusRange range = search_modulus_range(id);
    const double hi = (hypothesis_of(id) == HypothesisKind::zeros_in_radius_k) ? k : range.hi;
    std::vector<Complex> zeros(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i) {
        zeros[static_cast<size_t>(i)] =
            std::polar(clamp(x[static_cast<size_t>(2 * i)], range.lo, hi),
                       x[static_cast<size_t>(2 * i + 1)]);
    }
    const size_t base = static_cast<size_t>(2 * degree);
    Complex a = clamp_disk(x[base + 5], x[base + 6]);
    if (id == InequalityId::L2) {
        // The zero-preservation lemma takes a on the unit circle; search
        // within its hypothesis class.
        const double m = std::abs(a);
        a = (m > 1e-9) ? a / m : Complex{1.0, 0.0};
    }
    SearchInstance inst;
    inst.params = ParameterSet(clamp(x[base], 1.0, 8.0), clamp_disk(x[base + 1], x[base + 2]),
                               clamp_disk(x[base + 3], x[base + 4]), a, k);
    const Polynomial generated = from_zeros(zeros, Complex{1.0, 0.0});
    if (is_pair_inequality(id)) {
        inst.pair = true;
        inst.f = generated;
        const Complex c = clamp_disk(x[base + 7], x[base + 8]);
        inst.p = linear_combine({{c, generated}});
    } else {
        inst.p = generated;
    }
    return inst;
}

std::pair<double, Complex> instance_margin(InequalityId id, const SearchInstance& inst,
                                           const CheckOptions& opts) {
    double worst = std::numeric_limits<double>::infinity();
    Complex witness{1.0, 0.0};
    // Normalize by the coefficient-level magnitude of the evaluated
    // expressions, not the pointwise right-hand side: at a shared zero of
    // both sides the pointwise ratio degenerates to -O(1) from roundoff
    // alone, which would flood the search with false positives.
    if (inst.pair) {
        for (double r : inst.params.radius_grid) {
            const CheckReport rep = certify_pair_on_circle(id, inst.p, inst.f, inst.params, r, opts);
            const double m = rep.margin / rep.norm_scale;
            if (m < worst) {
                worst = m;
                witness = rep.witness_z;
            }
        }
    } else {
        for (const CheckReport& rep : certify_on_grid(id, inst.p, inst.params, opts)) {
            const double m = rep.margin / rep.norm_scale;
            if (m < worst) {
                worst = m;
                witness = rep.witness_z;
            }
        }
    }
    return {worst, witness};
}

}  // namespace

SearchResult violation_search(InequalityId id, long budget, std::uint64_t seed,
                              const SearchOptions& sopts) {
    if (budget < 1) throw std::invalid_argument("violation_search: budget must be >= 1");
    CheckOptions copts;
    copts.fast = true;
    copts.rhs_scale = sopts.rhs_scale;

    SearchResult best;
    best.ineq = id;
    best.seed = seed;
    best.best_margin = std::numeric_limits<double>::infinity();

    long evals = 0;
    std::uint64_t restart = 0;
    const double k = 0.5;  // radius for the growth-lemma hypothesis class

    auto objective = [&](InequalityId iid, const std::vector<double>& x, int degree) {
        const SearchInstance inst = decode(iid, x, degree, k);
        const auto [margin, witness] = instance_margin(iid, inst, copts);
        ++evals;
        if (margin < best.best_margin) {
            best.best_margin = margin;
            best.best_poly = inst.p;
            best.best_pair_f = inst.f;
            best.is_pair = inst.pair;
            best.best_params = inst.params;
            best.witness_z = witness;
        }
        return margin;
    };

    while (evals < budget) {
        const int degree =
            sopts.min_degree +
            static_cast<int>(restart % static_cast<std::uint64_t>(sopts.max_degree - sopts.min_degree + 1));
        Rng rng(split_seed(seed, restart++));
        const size_t dim = static_cast<size_t>(2 * degree) + 7 + (is_pair_inequality(id) ? 2 : 0);
        const ModulusRange range = search_modulus_range(id);

        auto random_point = [&]() {
            std::vector<double> x(dim);
            for (int i = 0; i < degree; ++i) {
                x[static_cast<size_t>(2 * i)] = rng.uniform(range.lo, range.hi);
                x[static_cast<size_t>(2 * i + 1)] = rng.uniform(0.0, kTwoPi);
            }
            size_t base = static_cast<size_t>(2 * degree);
            x[base] = std::exp(rng.uniform(0.0, std::log(8.0)));
            for (size_t j = base + 1; j < dim; ++j) {
                const Complex v = sample_unit_disk(rng);
                x[j] = v.real();
                if (j + 1 < dim) x[++j] = v.imag();
            }
            return x;
        };

        // Nelder-Mead with a random initial simplex.
        std::vector<std::vector<double>> simplex(dim + 1);
        std::vector<double> fvals(dim + 1);
        simplex[0] = random_point();
        for (size_t i = 1; i <= dim; ++i) {
            simplex[i] = simplex[0];
            simplex[i][i - 1] += 0.15 * (rng.uniform() - 0.5);
        }
        for (size_t i = 0; i <= dim && evals < budget; ++i) {
            fvals[i] = objective(id, simplex[i], degree);
        }
        if (evals >= budget) break;

        const long slice = std::min<long>(budget - evals, 80L * static_cast<long>(dim));
        long used = 0;
        while (used < slice && evals < budget) {
            // order
            std::vector<size_t> order(dim + 1);
            for (size_t i = 0; i <= dim; ++i) order[i] = i;
            std::sort(order.begin(), order.end(),
                      [&](size_t a, size_t b) { return fvals[a] < fvals[b]; });
            const size_t ibest = order[0], iworst = order[dim], isecond = order[dim - 1];
            if (fvals[iworst] - fvals[ibest] < 1e-12) break;

            std::vector<double> centroid(dim, 0.0);
            for (size_t i = 0; i <= dim; ++i) {
                if (i == iworst) continue;
                for (size_t j = 0; j < dim; ++j) centroid[j] += simplex[i][j];
            }
            for (size_t j = 0; j < dim; ++j) centroid[j] /= static_cast<double>(dim);

            auto blend = [&](double t) {
                std::vector<double> x(dim);
                for (size_t j = 0; j < dim; ++j) {
                    x[j] = centroid[j] + t * (simplex[iworst][j] - centroid[j]);
                }
                return x;
            };

            auto xr = blend(-1.0);
            const double fr = objective(id, xr, degree);
            ++used;
            if (fr < fvals[ibest]) {
                auto xe = blend(-2.0);
                const double fe = objective(id, xe, degree);
                ++used;
                if (fe < fr) {
                    simplex[iworst] = std::move(xe);
                    fvals[iworst] = fe;
                } else {
                    simplex[iworst] = std::move(xr);
                    fvals[iworst] = fr;
                }
            } else if (fr < fvals[isecond]) {
                simplex[iworst] = std::move(xr);
                fvals[iworst] = fr;
            } else {
                auto xc = blend(0.5);
                const double fc = objective(id, xc, degree);
                ++used;
                if (fc < fvals[iworst]) {
                    simplex[iworst] = std::move(xc);
                    fvals[iworst] = fc;
                } else {
                    for (size_t i = 0; i <= dim; ++i) {
                        if (i == ibest) continue;
                        for (size_t j = 0; j < dim; ++j) {
                            simplex[i][j] = simplex[ibest][j] + 0.5 * (simplex[i][j] - simplex[ibest][j]);
                        }
                        if (evals < budget) {
                            fvals[i] = objective(id, simplex[i], degree);
                            ++used;
                        }
                    }
                }
            }
        }
    }
    best.evaluations = evals;
    if (!std::isfinite(best.best_margin)) best.best_margin = 0.0;
    return best;
}

double reevaluate_search_margin(const SearchResult& result, const SearchOptions& sopts) {
    CheckOptions copts;
    copts.fast = true;
    copts.rhs_scale = sopts.rhs_scale;
    SearchInstance inst;
    inst.params = result.best_params;
    inst.pair = result.is_pair;
    inst.p = result.best_poly;
    inst.f = result.best_pair_f;
    return instance_margin(result.ineq, inst, copts).first;
}

namespace {

std::vector<CheckReport> sweep_impl(InequalityId id, const SweepGrid& grid,
                                    const std::function<Polynomial(int, std::uint64_t)>& make_poly,
                                    const CheckOptions& opts) {
    if (grid.R.empty() || grid.alpha.empty() || grid.beta.empty() || grid.a.empty() ||
        grid.n.empty() || grid.radius.empty()) {
        throw std::invalid_argument("sweep: empty grid axis");
    }
    std::vector<CheckReport> out;
    std::uint64_t flat = 0;
    for (double R : grid.R)
        for (const Complex& alpha : grid.alpha)
            for (const Complex& beta : grid.beta)
                for (const Complex& a : grid.a)
                    for (int n : grid.n) {
                        const Polynomial p = make_poly(n, flat++);
                        for (double radius : grid.radius) {
                            const ParameterSet params(R, alpha, beta, a, 1.0, {radius});
                            out.push_back(certify_on_circle(id, p, params, radius, opts));
                        }
                    }
    return out;
}

}  // namespace

std::vector<CheckReport> sweep(InequalityId id, const SweepGrid& grid, SharpnessFamily family,
                               const CheckOptions& opts) {
    return sweep_impl(
        id, grid,
        [&](int n, std::uint64_t) {
            if (family == SharpnessFamily::lambda_zn) return Polynomial::monomial(n);
            return linear_combine({{Complex{1.0, 0.0}, Polynomial::monomial(n)},
                                   {Complex{1.0, 0.0}, Polynomial::monomial(0)}});
        },
        opts);
}

std::vector<CheckReport> sweep(InequalityId id, const SweepGrid& grid, const GeneratorSpec& gen,
                               const CheckOptions& opts) {
    return sweep_impl(
        id, grid,
        [&](int n, std::uint64_t flat) {
            GeneratorSpec g = gen;
            g.degree = n;
            g.seed = split_seed(gen.seed, flat);
            return generate(g);
        },
        opts);
}

}  // namespace smirnov
