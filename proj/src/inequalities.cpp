#include "smirnov/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace smirnov {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const std::pair<InequalityId, const char*> kIdNames[] = {
    {InequalityId::C1, "C1"},   {InequalityId::C2, "C2"},   {InequalityId::C3, "C3"},
    {InequalityId::C4, "C4"},   {InequalityId::C5, "C5"},   {InequalityId::C6, "C6"},
    {InequalityId::S8, "S8"},   {InequalityId::S9, "S9"},   {InequalityId::S10, "S10"},
    {InequalityId::S11, "S11"}, {InequalityId::S12, "S12"}, {InequalityId::S13, "S13"},
    {InequalityId::C14, "C14"}, {InequalityId::C15, "C15"}, {InequalityId::M1, "M1"},
    {InequalityId::M2, "M2"},   {InequalityId::M3, "M3"},   {InequalityId::M4, "M4"},
    {InequalityId::M5, "M5"},   {InequalityId::M6, "M6"},   {InequalityId::L1, "L1"},
    {InequalityId::L2, "L2"},   {InequalityId::L3, "L3"},   {InequalityId::L4, "L4"},
    {InequalityId::L5, "L5"},   {InequalityId::L6, "L6"},   {InequalityId::DOM_A, "DOM-A"},
    {InequalityId::DOM_B, "DOM-B"},
};

// margin(z) = constant(r) + sum_i weights[i] * |polys[i](z)| on |z| = r.
// Negative weights are left-hand terms, positive weights and the constant
// make up the right-hand side.
struct CircleForm {
    std::vector<double> weights;
    std::vector<Polynomial> polys;
    std::function<double(double)> constant;  // of the radius r
};

struct Context {
    CircleForm form;
    bool hypothesis_ok = true;
    bool special_l2 = false;
    std::string notes;
    double coeff_sum = 0.0;
};

Polynomial limit_form(const Polynomial& q, Complex beta, Complex a, int n) {
    const Polynomial dq = derivative(q);
    return linear_combine({{Complex{1.0, 0.0}, shift_up(smirnov_modified(dq, a, n - 1))},
                           {0.5 * static_cast<double>(n) * beta, smirnov_modified(q, a, n)},
                           {Complex{1.0, 0.0}, dq}});
}

double max_on_unit_circle(const Polynomial& p, const CheckOptions& opts) {
    // Fast mode keeps the certified upper end but with a loose width target:
    // an underestimated max would shrink the right-hand side and make the
    // falsification search report spurious "violations" on near-sharp
    // instances, where the left side genuinely touches the bound.
    const double scale = std::max(1.0, coeff_norm_bounds(p).sum_abs);
    const double rel = opts.fast ? 1e-3 : (opts.max_tol > 0.0 ? opts.max_tol : 1e-11);
    try {
        const CertifiedBracket b = max_modulus_on_circle(p, 1.0, rel * scale);
        return (opts.max_midpoint && !opts.fast) ? 0.5 * (b.lo + b.hi) : b.hi;
    } catch (const BracketError& e) {
        return e.best().hi;
    }
}

bool needs_max_term(InequalityId id) {
    switch (id) {
        case InequalityId::L1:
        case InequalityId::L2:
        case InequalityId::L3:
        case InequalityId::L6:
            return false;
        default:
            return true;
    }
}

void check_hypothesis(Context& ctx, InequalityId id, const Polynomial& p,
                      const ParameterSet& params) {
    const HypothesisKind kind = hypothesis_of(id);
    if (kind == HypothesisKind::any_polynomial || p.degree() == 0) return;
    try {
        switch (kind) {
            case HypothesisKind::no_zeros_in_open_disk: {
                const auto rep = classify_zero_location(p, 1.0);
                if (rep.count_inside != 0) {
                    ctx.hypothesis_ok = false;
                    ctx.notes += "hypothesis: " + std::to_string(rep.count_inside) +
                                 " zero(s) in the open unit disk; ";
                }
                break;
            }
            case HypothesisKind::all_zeros_in_closed_disk: {
                const auto rep = classify_zero_location(p, 1.0);
                if (rep.count_outside != 0) {
                    ctx.hypothesis_ok = false;
                    ctx.notes += "hypothesis: " + std::to_string(rep.count_outside) +
                                 " zero(s) outside the closed unit disk; ";
                }
                break;
            }
            case HypothesisKind::zeros_in_radius_k: {
                const auto rep = classify_zero_location(p, params.k);
                if (rep.count_outside != 0) {
                    ctx.hypothesis_ok = false;
                    ctx.notes += "hypothesis: " + std::to_string(rep.count_outside) +
                                 " zero(s) outside |z| <= k; ";
                }
                break;
            }
            default:
                break;
        }
    } catch (const UnresolvedRootsError& e) {
        ctx.hypothesis_ok = false;
        ctx.notes += std::string("hypothesis: root solve failed (") + e.what() + "); ";
    }
}

Context build_context(InequalityId id, const Polynomial& p, const ParameterSet& params,
                      const CheckOptions& opts) {
    if (is_pair_inequality(id)) {
        throw std::invalid_argument(to_string(id) + " requires a polynomial pair");
    }
    Context ctx;
    ctx.coeff_sum = coeff_norm_bounds(p).sum_abs;
    check_hypothesis(ctx, id, p, params);
    if (id == InequalityId::L2) {
        ctx.special_l2 = true;
        return ctx;
    }

    const int n = p.degree();
    const double nd = static_cast<double>(n);
    const double R = params.R;
    const Complex alpha = params.alpha;
    const Complex beta = params.beta;
    const Complex a = params.a;
    const double Rn = std::pow(R, n);
    const double t = half_power(R, n);
    const Complex comp = -alpha + beta * (t - std::abs(alpha));  // -alpha + beta{((R+1)/2)^n - |alpha|}
    const double phi_abs = std::abs(Rn + comp);
    const double psi_abs = std::abs(1.0 + comp);
    const double abs_a = std::abs(a);
    const double lim_factor = std::abs(1.0 + beta / 2.0);
    const double M = needs_max_term(id) ? max_on_unit_circle(p, opts) : 0.0;
    const double scale = opts.rhs_scale;

    auto pow_r = [](double r, int e) { return std::pow(r, e); };
    auto& form = ctx.form;

    switch (id) {
        case InequalityId::C1:
            form.weights = {-1.0};
            form.polys = {derivative(p)};
            form.constant = [=](double r) { return scale * nd * pow_r(r, n - 1) * M; };
            break;
        case InequalityId::C2:
            form.weights = {-1.0};
            form.polys = {dilate(p, R)};
            form.constant = [=](double r) { return scale * Rn * pow_r(r, n) * M; };
            break;
        case InequalityId::C3:
            form.weights = {-1.0};
            form.polys = {derivative(p)};
            form.constant = [=](double r) { return scale * 0.5 * nd * pow_r(r, n - 1) * M; };
            break;
        case InequalityId::C4:
            form.weights = {-1.0};
            form.polys = {dilate(p, R)};
            form.constant = [=](double r) { return scale * 0.5 * (Rn * pow_r(r, n) + 1.0) * M; };
            break;
        case InequalityId::C5:
        case InequalityId::C6: {
            form.weights = {-1.0};
            form.polys = {linear_combine({{Complex{1.0, 0.0}, dilate(p, R)}, {-alpha, p}})};
            const double c5 = std::abs(Rn - alpha);
            const double c6 = std::abs(Complex{1.0, 0.0} - alpha);
            if (id == InequalityId::C5) {
                form.constant = [=](double r) { return scale * c5 * pow_r(r, n) * M; };
            } else {
                form.constant = [=](double r) { return scale * 0.5 * (c5 * pow_r(r, n) + c6) * M; };
            }
            break;
        }
        case InequalityId::S8:
        case InequalityId::S9:
            form.weights = {-1.0};
            form.polys = {smirnov_modified(p, a, n)};
            form.constant = [=](double r) { return scale * M * nd * pow_r(r, n - 1); };
            break;
        case InequalityId::S10:
        case InequalityId::S11:
            form.weights = {-1.0};
            form.polys = {smirnov_modified(p, a, n)};
            form.constant = [=](double r) {
                return scale * 0.5 * (nd * pow_r(r, n - 1) + nd * abs_a) * M;
            };
            break;
        case InequalityId::S12:
        case InequalityId::S13: {
            form.weights = {-1.0};
            form.polys = {linear_combine({{Complex{1.0, 0.0}, smirnov_modified(dilate(p, R), a, n)},
                                          {-alpha, smirnov_modified(p, a, n)}})};
            const double c5 = std::abs(Rn - alpha);
            const double c6 = std::abs(Complex{1.0, 0.0} - alpha);
            if (id == InequalityId::S12) {
                form.constant = [=](double r) { return scale * c5 * nd * pow_r(r, n - 1) * M; };
            } else {
                form.constant = [=](double r) {
                    return scale * 0.5 * (c5 * nd * pow_r(r, n - 1) + nd * c6 * abs_a) * M;
                };
            }
            break;
        }
        case InequalityId::C14:
        case InequalityId::C15:
            form.weights = {-1.0};
            form.polys = {linear_combine({{Complex{1.0, 0.0}, dilate(p, R)}, {comp, p}})};
            if (id == InequalityId::C14) {
                form.constant = [=](double r) { return scale * phi_abs * pow_r(r, n) * M; };
            } else {
                form.constant = [=](double r) {
                    return scale * 0.5 * (phi_abs * pow_r(r, n) + psi_abs) * M;
                };
            }
            break;
        case InequalityId::M1:
            form.weights = {-1.0};
            form.polys = {composite_transform(p, params, n)};
            form.constant = [=](double r) { return scale * phi_abs * nd * pow_r(r, n - 1) * M; };
            break;
        case InequalityId::M2:
            form.weights = {-1.0};
            form.polys = {limit_expression(p, beta, a, n)};
            form.constant = [=](double r) {
                return scale * nd * lim_factor * nd * pow_r(r, n - 1) * M;
            };
            break;
        case InequalityId::M3:
            form.weights = {-1.0, -1.0};
            form.polys = {composite_transform(p, params, n),
                          composite_transform(conjugate_reciprocal(p, n), params, n)};
            form.constant = [=](double r) {
                return scale * (phi_abs * nd * pow_r(r, n - 1) + psi_abs * nd * abs_a) * M;
            };
            break;
        case InequalityId::M4: {
            if (n < 1) throw std::domain_error("M4: constant polynomial");
            form.weights = {-1.0, -1.0};
            form.polys = {limit_form(p, beta, a, n),
                          limit_form(conjugate_reciprocal(p, n), beta, a, n)};
            const double beta_abs = std::abs(beta);
            form.constant = [=](double r) {
                return scale * nd *
                       (lim_factor * nd * pow_r(r, n - 1) + 0.5 * nd * beta_abs * abs_a) * M;
            };
            break;
        }
        case InequalityId::M5:
            form.weights = {-1.0};
            form.polys = {composite_transform(p, params, n)};
            form.constant = [=](double r) {
                return scale * 0.5 * (phi_abs * nd * pow_r(r, n - 1) + psi_abs * nd * abs_a) * M;
            };
            break;
        case InequalityId::M6: {
            if (n < 1) throw std::domain_error("M6: constant polynomial");
            form.weights = {-1.0};
            form.polys = {limit_expression(p, beta, a, n)};
            const double beta_abs = std::abs(beta);
            form.constant = [=](double r) {
                return scale * 0.5 * nd *
                       (lim_factor * nd * pow_r(r, n - 1) + 0.5 * nd * beta_abs * abs_a) * M;
            };
            break;
        }
        case InequalityId::L1: {
            const double growth = std::pow((R + params.k) / (1.0 + params.k), n);
            form.weights = {scale, -growth};
            form.polys = {dilate(p, R), p};
            form.constant = [](double) { return 0.0; };
            break;
        }
        case InequalityId::L3:
            form.weights = {scale, -1.0};
            form.polys = {smirnov_modified(conjugate_reciprocal(p, n), a, n),
                          smirnov_modified(p, a, n)};
            form.constant = [](double) { return 0.0; };
            break;
        case InequalityId::L4:
            form.weights = {-1.0, -1.0};
            form.polys = {smirnov_modified(p, a, n),
                          smirnov_modified(conjugate_reciprocal(p, n), a, n)};
            form.constant = [=](double r) {
                return scale * (nd * pow_r(r, n - 1) + nd * abs_a) * M;
            };
            break;
        case InequalityId::L6:
            form.weights = {scale, -1.0};
            form.polys = {composite_transform(conjugate_reciprocal(p, n), params, n),
                          composite_transform(p, params, n)};
            form.constant = [](double) { return 0.0; };
            break;
        default:
            throw std::invalid_argument("unhandled inequality id");
    }
    return ctx;
}

double form_margin(const CircleForm& form, double r, double theta) {
    double m = form.constant(r);
    const Complex z = std::polar(r, theta);
    for (size_t i = 0; i < form.polys.size(); ++i) m += form.weights[i] * std::abs(form.polys[i](z));
    return m;
}

CheckReport report_at(InequalityId id, const ParameterSet& params, const Context& ctx, double r,
                      double theta) {
    CheckReport rep;
    rep.ineq = id;
    rep.params = params;
    rep.radius = r;
    rep.witness_z = std::polar(r, theta);
    rep.hypothesis_ok = ctx.hypothesis_ok;
    rep.notes = ctx.notes;
    double lhs = 0.0;
    double rhs = ctx.form.constant(r);
    for (size_t i = 0; i < ctx.form.polys.size(); ++i) {
        const double v = std::abs(ctx.form.polys[i](rep.witness_z));
        if (ctx.form.weights[i] < 0.0) {
            lhs += -ctx.form.weights[i] * v;
        } else {
            rhs += ctx.form.weights[i] * v;
        }
    }
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.margin = rhs - lhs;
    rep.relative_margin = rep.margin / std::max(rhs, 1e-300);
    double scale = std::abs(ctx.form.constant(r));
    for (size_t i = 0; i < ctx.form.polys.size(); ++i) {
        double bound = 0.0;
        double rp = 1.0;
        for (const Complex& c : ctx.form.polys[i].coeffs()) {
            bound += std::abs(c) * rp;
            rp *= r;
        }
        scale += std::abs(ctx.form.weights[i]) * bound;
    }
    rep.norm_scale = std::max(scale, 1e-300);
    return rep;
}

CheckReport l2_report(InequalityId id, const Polynomial& p, const ParameterSet& params,
                      const Context& ctx, double r, const CheckOptions& opts) {
    CheckReport rep;
    rep.ineq = id;
    rep.params = params;
    rep.radius = r;
    rep.hypothesis_ok = ctx.hypothesis_ok;
    rep.notes = ctx.notes;
    const int n = p.degree();
    bool exceptional = false;
    if (n >= 1) {
        exceptional = is_exceptional_value(p, params.a);
        if (std::abs(std::abs(params.a) - 1.0) > 1e-12) {
            rep.hypothesis_ok = false;
            rep.notes += "hypothesis: |a| != 1 (lemma takes a on the unit circle); ";
        }
        if (exceptional) {
            rep.hypothesis_ok = false;
            rep.notes += "hypothesis: a is exceptional (operator degree collapse); ";
        }
    }
    rep.notes += "zero preservation: lhs = max root modulus of the operator image; "
                 "exceptional value defined as operator degree collapse; ";
    const Polynomial image = (n >= 1) ? smirnov_modified(p, params.a, n) : Polynomial{};
    rep.rhs = opts.rhs_scale * 1.0;
    if (image.degree() == 0) {
        rep.lhs = 0.0;  // constant image: nothing to preserve
        rep.witness_z = Complex{0.0, 0.0};
    } else {
        const auto roots = find_roots(image);
        double worst = 0.0;
        Complex witness{0.0, 0.0};
        for (const auto& root : roots) {
            if (std::abs(root) > worst) {
                worst = std::abs(root);
                witness = root;
            }
        }
        rep.lhs = worst;
        rep.witness_z = witness;
    }
    rep.margin = rep.rhs - rep.lhs;
    rep.relative_margin = rep.margin / std::max(rep.rhs, 1e-300);
    rep.norm_scale = 1.0 + rep.lhs;
    return rep;
}

CheckReport certify_context(InequalityId id, const Polynomial& p, const ParameterSet& params,
                            const Context& ctx, double r, const CheckOptions& opts) {
    if (!(r >= 1.0 - 1e-12)) throw std::domain_error("certify: radius must be >= 1");
    if (ctx.special_l2) return l2_report(id, p, params, ctx, r, opts);

    int maxdeg = 1;
    for (const auto& poly : ctx.form.polys) maxdeg = std::max(maxdeg, poly.degree());
    const int n_samples =
        opts.fast ? std::max(64, 16 * maxdeg) : std::max(1024, 32 * maxdeg);
    double worst = std::numeric_limits<double>::infinity();
    int worst_idx = 0;
    for (int j = 0; j < n_samples; ++j) {
        const double m = form_margin(ctx.form, r, kTwoPi * j / n_samples);
        if (m < worst) {
            worst = m;
            worst_idx = j;
        }
    }
    // Golden-section refinement of the minimum around the worst sample.
    const double h = kTwoPi / n_samples;
    double a = kTwoPi * worst_idx / n_samples - h;
    double b = kTwoPi * worst_idx / n_samples + h;
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = b - kInvPhi * (b - a), x2 = a + kInvPhi * (b - a);
    double f1 = form_margin(ctx.form, r, x1), f2 = form_margin(ctx.form, r, x2);
    const int refine_iters = opts.fast ? 30 : 70;
    for (int it = 0; it < refine_iters; ++it) {
        if (f1 > f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = form_margin(ctx.form, r, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = form_margin(ctx.form, r, x1);
        }
    }
    double theta = kTwoPi * worst_idx / n_samples;
    double best = worst;
    if (f1 < best) {
        best = f1;
        theta = x1;
    }
    if (f2 < best) {
        theta = x2;
    }
    theta = std::fmod(theta, kTwoPi);
    if (theta < 0.0) theta += kTwoPi;
    return report_at(id, params, ctx, r, theta);
}

}  // namespace

std::string to_string(InequalityId id) {
    for (const auto& [k, v] : kIdNames) {
        if (k == id) return v;
    }
    return "?";
}

std::optional<InequalityId> parse_inequality_id(const std::string& s) {
    for (const auto& [k, v] : kIdNames) {
        if (s == v) return k;
    }
    return std::nullopt;
}

std::vector<InequalityId> all_inequality_ids() {
    std::vector<InequalityId> ids;
    for (const auto& [k, v] : kIdNames) ids.push_back(k);
    return ids;
}

HypothesisKind hypothesis_of(InequalityId id) {
    switch (id) {
        case InequalityId::C3:
        case InequalityId::C4:
        case InequalityId::C6:
        case InequalityId::S10:
        case InequalityId::S11:
        case InequalityId::S13:
        case InequalityId::C15:
        case InequalityId::M5:
        case InequalityId::M6:
        case InequalityId::L3:
        case InequalityId::L6:
            return HypothesisKind::no_zeros_in_open_disk;
        case InequalityId::L2:
            return HypothesisKind::all_zeros_in_closed_disk;
        case InequalityId::L1:
            return HypothesisKind::zeros_in_radius_k;
        case InequalityId::L5:
        case InequalityId::DOM_A:
        case InequalityId::DOM_B:
            return HypothesisKind::dominated_pair;
        default:
            return HypothesisKind::any_polynomial;
    }
}

bool is_pair_inequality(InequalityId id) {
    return id == InequalityId::L5 || id == InequalityId::DOM_A || id == InequalityId::DOM_B;
}

CheckReport check_pointwise(InequalityId id, const Polynomial& p, const ParameterSet& params,
                            Complex z, const CheckOptions& opts) {
    const double r = std::abs(z);
    if (!(r >= 1.0 - 1e-12)) throw std::domain_error("check_pointwise: |z| must be >= 1");
    const Context ctx = build_context(id, p, params, opts);
    if (ctx.special_l2) return l2_report(id, p, params, ctx, r, opts);
    return report_at(id, params, ctx, r, std::arg(z) < 0.0 ? std::arg(z) + kTwoPi : std::arg(z));
}

CheckReport certify_on_circle(InequalityId id, const Polynomial& p, const ParameterSet& params,
                              double r, const CheckOptions& opts) {
    const Context ctx = build_context(id, p, params, opts);
    return certify_context(id, p, params, ctx, r, opts);
}

std::vector<CheckReport> certify_on_grid(InequalityId id, const Polynomial& p,
                                         const ParameterSet& params, const CheckOptions& opts) {
    if (params.radius_grid.empty()) throw std::invalid_argument("certify_on_grid: empty radius grid");
    const Context ctx = build_context(id, p, params, opts);
    std::vector<CheckReport> out;
    out.reserve(params.radius_grid.size());
    for (double r : params.radius_grid) out.push_back(certify_context(id, p, params, ctx, r, opts));
    return out;
}

CheckReport certify_pair_on_circle(InequalityId id, const Polynomial& P, const Polynomial& F,
                                   const ParameterSet& params, double r, const CheckOptions& opts) {
    if (!is_pair_inequality(id)) throw std::invalid_argument(to_string(id) + " is not a pair check");
    Context ctx;
    ctx.coeff_sum = coeff_norm_bounds(P).sum_abs + coeff_norm_bounds(F).sum_abs;
    const int n = F.degree();
    if (P.degree() > n) {
        ctx.hypothesis_ok = false;
        ctx.notes += "hypothesis: deg(P) exceeds deg(F); ";
    }
    if (n >= 1) {
        try {
            const auto repF = classify_zero_location(F, 1.0);
            if (repF.count_outside != 0) {
                ctx.hypothesis_ok = false;
                ctx.notes += "hypothesis: F has zero(s) outside the closed unit disk; ";
            }
        } catch (const UnresolvedRootsError& e) {
            ctx.hypothesis_ok = false;
            ctx.notes += std::string("hypothesis: root solve failed (") + e.what() + "); ";
        }
    }
    {
        // |P| <= |F| on the unit circle, sampled with a Lipschitz slack.
        const int grid = opts.fast ? 256 : 4096;
        const double h = kTwoPi / grid;
        const double slack =
            (coeff_norm_bounds(P).weighted_sum + coeff_norm_bounds(F).weighted_sum) * h / 2.0;
        double worst = std::numeric_limits<double>::infinity();
        for (int j = 0; j < grid; ++j) {
            const Complex z = std::polar(1.0, kTwoPi * j / grid);
            worst = std::min(worst, std::abs(F(z)) - std::abs(P(z)));
        }
        if (worst < -1e-9 * std::max(1.0, ctx.coeff_sum)) {
            ctx.hypothesis_ok = false;
            ctx.notes += "hypothesis: |P| > |F| on the unit circle (sampled); ";
        } else if (worst < slack) {
            ctx.notes += "domination holds at samples but within the Lipschitz slack; ";
        }
    }

    switch (id) {
        case InequalityId::L5:
            ctx.form.weights = {opts.rhs_scale, -1.0};
            ctx.form.polys = {composite_transform(F, params, n), composite_transform(P, params, n)};
            break;
        case InequalityId::DOM_A:
            ctx.form.weights = {opts.rhs_scale, -1.0};
            ctx.form.polys = {derivative(F), derivative(P)};
            break;
        case InequalityId::DOM_B:
            if (!omega_membership(params.alpha, r)) {
                ctx.hypothesis_ok = false;
                ctx.notes += "hypothesis: alpha outside the closed Omega region for this radius; ";
            }
            ctx.form.weights = {opts.rhs_scale, -1.0};
            ctx.form.polys = {smirnov_op(F, params.alpha, n), smirnov_op(P, params.alpha, n)};
            break;
        default:
            break;
    }
    ctx.form.constant = [](double) { return 0.0; };
    return certify_context(id, P, params, ctx, r, opts);
}

CheckReport check_domination_pair(const Polynomial& P, const Polynomial& F,
                                  const ParameterSet& params, double r, const CheckOptions& opts) {
    return certify_pair_on_circle(InequalityId::L5, P, F, params, r, opts);
}

bool is_violation(const CheckReport& rep, double coeff_sum, double tol) {
    return rep.margin < -std::max(1e-10 * coeff_sum, tol * std::abs(rep.rhs));
}

}  // namespace smirnov
