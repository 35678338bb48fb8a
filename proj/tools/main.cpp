// Command-line front end: check single instances, certify over radius grids,
// probe sharpness families, run the falsification search, sweep parameter
// grids, and run the acceptance suite.

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "smirnov/inequalities.hpp"
#include "smirnov/io.hpp"
#include "smirnov/lab.hpp"
#include "smirnov/operators.hpp"
#include "smirnov/poly.hpp"
#include "smirnov/selftest.hpp"

namespace {

using smirnov::CheckOptions;
using smirnov::CheckReport;
using smirnov::Complex;
using smirnov::InequalityId;
using smirnov::ParameterSet;
using smirnov::Polynomial;

Complex parse_complex(const std::string& s) {
    try {
        const auto comma = s.find(',');
        if (comma == std::string::npos) return Complex{std::stod(s), 0.0};
        return Complex{std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad complex value '" + s + "' (expected re or re,im)");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("complex value out of range: " + s);
    }
}

std::vector<Complex> parse_complex_list(const std::vector<std::string>& items) {
    std::vector<Complex> out;
    out.reserve(items.size());
    for (const auto& s : items) out.push_back(parse_complex(s));
    return out;
}

InequalityId parse_id(const std::string& s) {
    const auto id = smirnov::parse_inequality_id(s);
    if (!id) throw std::invalid_argument("unknown inequality id: " + s);
    return *id;
}

Polynomial load_poly(const std::string& arg) {
    if (arg.empty()) throw std::invalid_argument("missing polynomial (--poly)");
    std::string text = arg;
    if (arg[0] != '[') {
        std::ifstream in(arg);
        if (!in) throw std::invalid_argument("cannot open polynomial file: " + arg);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return smirnov::parse_polynomial_json(text);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
    if (text.empty() || text.back() != '\n') f << '\n';
}

nlohmann::ordered_json params_json(const ParameterSet& ps) {
    return {{"R", ps.R},
            {"alpha", {ps.alpha.real(), ps.alpha.imag()}},
            {"beta", {ps.beta.real(), ps.beta.imag()}},
            {"a", {ps.a.real(), ps.a.imag()}},
            {"k", ps.k},
            {"radius_grid", ps.radius_grid}};
}

nlohmann::json poly_json(const Polynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Complex& c : p.coeffs()) arr.push_back({c.real(), c.imag()});
    return arr;
}

struct CommonArgs {
    std::string ineq;
    std::string poly;
    std::string poly_f;  // dominating polynomial for pair ids
    double R = 1.0;
    std::string alpha = "0";
    std::string beta = "0";
    std::string a = "0";
    double k = 1.0;
    std::vector<double> radius_grid;
    double tol = 1e-9;
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_grid) {
    cmd->add_option("--ineq", args.ineq, "inequality id (C1..C6, S8..S13, C14, C15, M1..M6, L1..L6, DOM-A, DOM-B)")
        ->required();
    cmd->add_option("--poly", args.poly, "polynomial as JSON [[re,im],...] or a file path")->required();
    cmd->add_option("--poly-f", args.poly_f, "dominating polynomial F for pair ids");
    cmd->add_option("--R", args.R, "dilation factor R >= 1");
    cmd->add_option("--alpha", args.alpha, "alpha (re or re,im), |alpha| <= 1");
    cmd->add_option("--beta", args.beta, "beta (re or re,im), |beta| <= 1");
    cmd->add_option("--a", args.a, "operator parameter a (re or re,im), |a| <= 1");
    cmd->add_option("--k", args.k, "zero-radius k in (0,1] for the growth bound");
    if (with_grid) {
        cmd->add_option("--radius-grid", args.radius_grid, "circle radii (default 1,1.05,1.25,2,4,10)")
            ->delimiter(',');
    }
    cmd->add_option("--tol", args.tol, "violation tolerance (relative to rhs)");
    cmd->add_option("--format", args.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", args.out, "output file (default stdout)");
}

int emit_reports(const std::vector<CheckReport>& reports, const CommonArgs& args, double coeff_sum) {
    emit(args.format == "csv" ? smirnov::reports_to_csv(reports) : smirnov::reports_to_json(reports),
         args.out);
    for (const CheckReport& rep : reports) {
        if (smirnov::is_violation(rep, coeff_sum, args.tol)) return 2;
    }
    return 0;
}

int run_check(const CommonArgs& args, const std::string& z_str, bool grid_mode) {
    const InequalityId id = parse_id(args.ineq);
    const Polynomial p = load_poly(args.poly);
    const ParameterSet params(args.R, parse_complex(args.alpha), parse_complex(args.beta),
                              parse_complex(args.a), args.k, args.radius_grid);
    CheckOptions opts;
    opts.tol = args.tol;

    double coeff_sum = smirnov::coeff_norm_bounds(p).sum_abs;
    std::vector<CheckReport> reports;
    if (smirnov::is_pair_inequality(id)) {
        if (args.poly_f.empty()) {
            throw std::invalid_argument(smirnov::to_string(id) + " needs --poly-f (dominating polynomial)");
        }
        const Polynomial f = load_poly(args.poly_f);
        coeff_sum += smirnov::coeff_norm_bounds(f).sum_abs;
        if (grid_mode) {
            for (double r : params.radius_grid) {
                reports.push_back(smirnov::certify_pair_on_circle(id, p, f, params, r, opts));
            }
        } else {
            reports.push_back(
                smirnov::certify_pair_on_circle(id, p, f, params, std::abs(parse_complex(z_str)), opts));
        }
    } else if (grid_mode) {
        reports = smirnov::certify_on_grid(id, p, params, opts);
    } else {
        reports.push_back(smirnov::check_pointwise(id, p, params, parse_complex(z_str), opts));
    }
    return emit_reports(reports, args, coeff_sum);
}

struct GridArgs {
    std::vector<double> R{1.0};
    std::vector<std::string> alpha{"0"};
    std::vector<std::string> beta{"0"};
    std::vector<std::string> a{"0"};
    std::vector<int> n{4};
    std::vector<double> radius{1.0};
};

void add_grid(CLI::App* cmd, GridArgs& grid, bool with_radius) {
    cmd->add_option("--R-grid", grid.R, "R values")->delimiter(',');
    cmd->add_option("--alpha-grid", grid.alpha, "alpha values (re or re,im; repeatable)");
    cmd->add_option("--beta-grid", grid.beta, "beta values (repeatable)");
    cmd->add_option("--a-grid", grid.a, "a values (repeatable)");
    cmd->add_option("--n-grid", grid.n, "degrees")->delimiter(',');
    if (with_radius) cmd->add_option("--radius-grid", grid.radius, "circle radii")->delimiter(',');
}

smirnov::SweepGrid to_sweep_grid(const GridArgs& g) {
    smirnov::SweepGrid grid;
    grid.R = g.R;
    grid.alpha = parse_complex_list(g.alpha);
    grid.beta = parse_complex_list(g.beta);
    grid.a = parse_complex_list(g.a);
    grid.n = g.n;
    grid.radius = g.radius;
    return grid;
}

smirnov::SharpnessFamily parse_family(const std::string& s) {
    if (s == "lambda_zn") return smirnov::SharpnessFamily::lambda_zn;
    if (s == "zn_plus_1") return smirnov::SharpnessFamily::zn_plus_1;
    throw std::invalid_argument("unknown family: " + s + " (expected lambda_zn or zn_plus_1)");
}

smirnov::ZeroRegion parse_region(const std::string& s) {
    if (s == "anywhere") return smirnov::ZeroRegion::anywhere;
    if (s == "outside") return smirnov::ZeroRegion::outside_closed_disk;
    if (s == "inside") return smirnov::ZeroRegion::inside_closed_disk;
    if (s == "annulus") return smirnov::ZeroRegion::annulus;
    throw std::invalid_argument("unknown zero region: " + s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bernstein-type inequality laboratory for the modified Smirnov operator"};
    app.require_subcommand(1);

    CommonArgs check_args;
    std::string check_z = "1";
    CLI::App* check = app.add_subcommand("check", "evaluate one inequality at a single point");
    add_common(check, check_args, false);
    check->add_option("--z", check_z, "evaluation point (re or re,im), |z| >= 1");

    CommonArgs certify_args;
    CLI::App* certify = app.add_subcommand("certify", "worst-case margins over a radius grid");
    add_common(certify, certify_args, true);

    std::string probe_ineq, probe_family = "lambda_zn", probe_out;
    GridArgs probe_grid;
    CLI::App* probe = app.add_subcommand("probe", "sharpness probe for an extremal family");
    probe->add_option("--ineq", probe_ineq, "inequality id")->required();
    probe->add_option("--family", probe_family, "lambda_zn or zn_plus_1");
    add_grid(probe, probe_grid, false);
    probe->add_option("--out", probe_out, "output file (default stdout)");

    std::string search_ineq, search_out;
    long search_budget = 10000;
    std::uint64_t search_seed = 0;
    double search_rhs_scale = 1.0, search_tol = 1e-6;
    int search_min_deg = 2, search_max_deg = 6;
    CLI::App* search = app.add_subcommand("search", "randomized counterexample search");
    search->add_option("--ineq", search_ineq, "inequality id")->required();
    search->add_option("--budget,--samples", search_budget, "objective evaluation budget");
    search->add_option("--seed", search_seed, "master seed");
    search->add_option("--min-degree", search_min_deg, "smallest searched degree");
    search->add_option("--max-degree", search_max_deg, "largest searched degree");
    search->add_option("--rhs-scale", search_rhs_scale,
                       "test hook: scale the right-hand side (0.9 plants a violation)");
    search->add_option("--tol", search_tol, "violation threshold on the normalized margin");
    search->add_option("--out", search_out, "output file (default stdout)");

    std::string sweep_ineq, sweep_family = "lambda_zn", sweep_region, sweep_format = "json", sweep_out;
    GridArgs sweep_grid;
    std::uint64_t sweep_seed = 0;
    double sweep_tol = 1e-9;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Cartesian parameter sweep");
    sweep_cmd->add_option("--ineq", sweep_ineq, "inequality id")->required();
    sweep_cmd->add_option("--family", sweep_family, "extremal family (lambda_zn or zn_plus_1)");
    sweep_cmd->add_option("--gen-region", sweep_region,
                          "use generated instances instead of a family: anywhere|outside|inside|annulus");
    add_grid(sweep_cmd, sweep_grid, true);
    sweep_cmd->add_option("--seed", sweep_seed, "generator master seed");
    sweep_cmd->add_option("--tol", sweep_tol, "violation tolerance");
    sweep_cmd->add_option("--format", sweep_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sweep_cmd->add_option("--out", sweep_out, "output file (default stdout)");

    CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance suite");

    try {
        app.parse(argc, argv);

        if (app.got_subcommand(check)) return run_check(check_args, check_z, false);
        if (app.got_subcommand(certify)) return run_check(certify_args, "", true);

        if (app.got_subcommand(probe)) {
            const smirnov::ProbeResult res =
                smirnov::sharpness_probe(parse_id(probe_ineq), parse_family(probe_family),
                                         to_sweep_grid(probe_grid));
            nlohmann::ordered_json j{{"ineq", probe_ineq},
                                     {"family", probe_family},
                                     {"best_ratio", res.best_ratio},
                                     {"argmax_n", res.argmax_n},
                                     {"argmax_params", params_json(res.argmax_params)}};
            emit(j.dump(2), probe_out);
            return 0;
        }

        if (app.got_subcommand(search)) {
            smirnov::SearchOptions sopts;
            sopts.rhs_scale = search_rhs_scale;
            sopts.min_degree = search_min_deg;
            sopts.max_degree = search_max_deg;
            const smirnov::SearchResult res =
                smirnov::violation_search(parse_id(search_ineq), search_budget, search_seed, sopts);
            nlohmann::ordered_json j{{"ineq", smirnov::to_string(res.ineq)},
                                     {"best_margin", res.best_margin},
                                     {"evaluations", res.evaluations},
                                     {"seed", res.seed},
                                     {"poly", poly_json(res.best_poly)},
                                     {"params", params_json(res.best_params)},
                                     {"witness_z", {res.witness_z.real(), res.witness_z.imag()}}};
            if (res.is_pair) j["pair_f"] = poly_json(res.best_pair_f);
            emit(j.dump(2), search_out);
            return res.best_margin < -search_tol ? 2 : 0;
        }

        if (app.got_subcommand(sweep_cmd)) {
            const InequalityId id = parse_id(sweep_ineq);
            std::vector<CheckReport> reports;
            if (!sweep_region.empty()) {
                smirnov::GeneratorSpec gen;
                gen.region = parse_region(sweep_region);
                gen.seed = sweep_seed;
                if (gen.region == smirnov::ZeroRegion::annulus) gen.k_hi = 1.0;
                reports = smirnov::sweep(id, to_sweep_grid(sweep_grid), gen);
            } else {
                reports = smirnov::sweep(id, to_sweep_grid(sweep_grid), parse_family(sweep_family));
            }
            emit(sweep_format == "csv" ? smirnov::reports_to_csv(reports)
                                       : smirnov::reports_to_json(reports),
                 sweep_out);
            for (const CheckReport& rep : reports) {
                if (smirnov::is_violation(rep, 1.0, sweep_tol)) return 2;
            }
            return 0;
        }

        if (app.got_subcommand(selftest)) {
            const auto results = smirnov::run_acceptance(&std::cout);
            for (const auto& r : results) {
                if (!r.passed) return 2;
            }
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
