#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "smirnov/circle_max.hpp"
#include "smirnov/inequalities.hpp"
#include "smirnov/lab.hpp"
#include "smirnov/operators.hpp"
#include "smirnov/poly.hpp"
#include "smirnov/roots.hpp"

namespace py = pybind11;

namespace {

using smirnov::CheckReport;
using smirnov::Complex;
using smirnov::ParameterSet;
using smirnov::Polynomial;
using Coeffs = std::vector<Complex>;

smirnov::InequalityId parse_id(const std::string& name) {
    const auto id = smirnov::parse_inequality_id(name);
    if (!id) throw std::invalid_argument("unknown inequality id: " + name);
    return *id;
}

ParameterSet make_params(double R, Complex alpha, Complex beta, Complex a, double k,
                         const std::vector<double>& radius_grid) {
    return ParameterSet(R, alpha, beta, a, k, radius_grid);
}

py::dict report_dict(const CheckReport& rep) {
    py::dict d;
    d["ineq"] = smirnov::to_string(rep.ineq);
    d["radius"] = rep.radius;
    d["lhs"] = rep.lhs;
    d["rhs"] = rep.rhs;
    d["margin"] = rep.margin;
    d["relative_margin"] = rep.relative_margin;
    d["witness_z"] = rep.witness_z;
    d["hypothesis_ok"] = rep.hypothesis_ok;
    d["notes"] = rep.notes;
    return d;
}

}  // namespace

PYBIND11_MODULE(_smirnovlab, m) {
    m.doc() =
        "Modified Smirnov operator, composite polynomial transforms, and "
        "numerically certified Bernstein-type inequalities. Polynomials are "
        "lists of complex coefficients in ascending powers.";

    m.def(
        "evaluate", [](const Coeffs& c, Complex z) { return Polynomial(c)(z); }, py::arg("coeffs"),
        py::arg("z"), "Evaluate a polynomial at z (Horner).");
    m.def(
        "derivative", [](const Coeffs& c) { return smirnov::derivative(Polynomial(c)).coeffs(); },
        py::arg("coeffs"));
    m.def(
        "conjugate_reciprocal",
        [](const Coeffs& c, int n) { return smirnov::conjugate_reciprocal(Polynomial(c), n).coeffs(); },
        py::arg("coeffs"), py::arg("n"), "z^n * conj(P(1/conj(z))) at nominal degree n.");
    m.def(
        "dilate", [](const Coeffs& c, double R) { return smirnov::dilate(Polynomial(c), R).coeffs(); },
        py::arg("coeffs"), py::arg("R"));
    m.def(
        "smirnov_modified",
        [](const Coeffs& c, Complex a, int n) {
            return smirnov::smirnov_modified(Polynomial(c), a, n).coeffs();
        },
        py::arg("coeffs"), py::arg("a"), py::arg("n"),
        "(1 + a z) P' - n a P at operator degree n.");
    m.def(
        "smirnov_op",
        [](const Coeffs& c, Complex alpha, int n) {
            return smirnov::smirnov_op(Polynomial(c), alpha, n).coeffs();
        },
        py::arg("coeffs"), py::arg("alpha"), py::arg("n"), "z P' - n alpha P at degree n.");
    m.def(
        "composite_transform",
        [](const Coeffs& c, int n, double R, Complex alpha, Complex beta, Complex a) {
            return smirnov::composite_transform(Polynomial(c), make_params(R, alpha, beta, a, 1.0, {}), n)
                .coeffs();
        },
        py::arg("coeffs"), py::arg("n"), py::arg("R"), py::arg("alpha"), py::arg("beta"),
        py::arg("a"));
    m.def(
        "limit_expression",
        [](const Coeffs& c, Complex beta, Complex a, int n) {
            return smirnov::limit_expression(Polynomial(c), beta, a, n).coeffs();
        },
        py::arg("coeffs"), py::arg("beta"), py::arg("a"), py::arg("n"));
    m.def(
        "is_exceptional_value",
        [](const Coeffs& c, Complex a) { return smirnov::is_exceptional_value(Polynomial(c), a); },
        py::arg("coeffs"), py::arg("a"));

    m.def(
        "find_roots", [](const Coeffs& c) { return smirnov::find_roots(Polynomial(c)); },
        py::arg("coeffs"));
    m.def(
        "max_modulus_on_circle",
        [](const Coeffs& c, double r, double tol) {
            const auto b = smirnov::max_modulus_on_circle(Polynomial(c), r, tol);
            return py::make_tuple(b.lo, b.hi, b.argmax_theta);
        },
        py::arg("coeffs"), py::arg("r") = 1.0, py::arg("tol") = 0.0,
        "Certified (lo, hi, argmax_theta) bracket for max |p| on |z| = r.");

    m.def(
        "check_pointwise",
        [](const std::string& ineq, const Coeffs& c, Complex z, double R, Complex alpha,
           Complex beta, Complex a, double k) {
            return report_dict(smirnov::check_pointwise(parse_id(ineq), Polynomial(c),
                                                        make_params(R, alpha, beta, a, k, {}), z));
        },
        py::arg("ineq"), py::arg("coeffs"), py::arg("z") = Complex{1.0, 0.0}, py::arg("R") = 1.0,
        py::arg("alpha") = Complex{0.0, 0.0}, py::arg("beta") = Complex{0.0, 0.0},
        py::arg("a") = Complex{0.0, 0.0}, py::arg("k") = 1.0);
    m.def(
        "certify_on_circle",
        [](const std::string& ineq, const Coeffs& c, double r, double R, Complex alpha, Complex beta,
           Complex a, double k) {
            return report_dict(smirnov::certify_on_circle(parse_id(ineq), Polynomial(c),
                                                          make_params(R, alpha, beta, a, k, {}), r));
        },
        py::arg("ineq"), py::arg("coeffs"), py::arg("r") = 1.0, py::arg("R") = 1.0,
        py::arg("alpha") = Complex{0.0, 0.0}, py::arg("beta") = Complex{0.0, 0.0},
        py::arg("a") = Complex{0.0, 0.0}, py::arg("k") = 1.0);
    m.def(
        "certify_on_grid",
        [](const std::string& ineq, const Coeffs& c, double R, Complex alpha, Complex beta, Complex a,
           double k, const std::vector<double>& radius_grid) {
            py::list out;
            for (const CheckReport& rep : smirnov::certify_on_grid(
                     parse_id(ineq), Polynomial(c), make_params(R, alpha, beta, a, k, radius_grid))) {
                out.append(report_dict(rep));
            }
            return out;
        },
        py::arg("ineq"), py::arg("coeffs"), py::arg("R") = 1.0,
        py::arg("alpha") = Complex{0.0, 0.0}, py::arg("beta") = Complex{0.0, 0.0},
        py::arg("a") = Complex{0.0, 0.0}, py::arg("k") = 1.0,
        py::arg("radius_grid") = std::vector<double>{});

    m.def(
        "generate",
        [](int degree, const std::string& region, std::uint64_t seed, double k_lo, double k_hi) {
            smirnov::GeneratorSpec spec;
            spec.degree = degree;
            spec.seed = seed;
            spec.k_lo = k_lo;
            spec.k_hi = k_hi;
            if (region == "anywhere") {
                spec.region = smirnov::ZeroRegion::anywhere;
            } else if (region == "outside") {
                spec.region = smirnov::ZeroRegion::outside_closed_disk;
            } else if (region == "inside") {
                spec.region = smirnov::ZeroRegion::inside_closed_disk;
            } else if (region == "annulus") {
                spec.region = smirnov::ZeroRegion::annulus;
            } else {
                throw std::invalid_argument("unknown zero region: " + region);
            }
            return smirnov::generate(spec).coeffs();
        },
        py::arg("degree"), py::arg("region") = "anywhere", py::arg("seed") = 0,
        py::arg("k_lo") = 0.0, py::arg("k_hi") = 1.0,
        "Seeded random polynomial with zeros in the named region.");

    m.def(
        "violation_search",
        [](const std::string& ineq, long budget, std::uint64_t seed, double rhs_scale) {
            smirnov::SearchOptions opts;
            opts.rhs_scale = rhs_scale;
            const auto res = smirnov::violation_search(parse_id(ineq), budget, seed, opts);
            py::dict d;
            d["ineq"] = smirnov::to_string(res.ineq);
            d["best_margin"] = res.best_margin;
            d["evaluations"] = res.evaluations;
            d["seed"] = res.seed;
            d["poly"] = res.best_poly.coeffs();
            d["witness_z"] = res.witness_z;
            return d;
        },
        py::arg("ineq"), py::arg("budget") = 1000, py::arg("seed") = 0, py::arg("rhs_scale") = 1.0);

    m.def("inequality_ids", []() {
        std::vector<std::string> names;
        for (const auto id : smirnov::all_inequality_ids()) names.push_back(smirnov::to_string(id));
        return names;
    });
}
