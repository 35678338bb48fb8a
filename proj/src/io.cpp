#include "smirnov/io.hpp"

#include <cstdio>

#include "json.hpp"

namespace smirnov {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json complex_to_json(Complex v) { return ordered_json::array({v.real(), v.imag()}); }

ordered_json params_to_json(const ParameterSet& p) {
    ordered_json j;
    j["R"] = p.R;
    j["alpha"] = complex_to_json(p.alpha);
    j["beta"] = complex_to_json(p.beta);
    j["a"] = complex_to_json(p.a);
    j["k"] = p.k;
    j["radius_grid"] = p.radius_grid;
    return j;
}

ordered_json report_to_json_obj(const CheckReport& rep) {
    ordered_json j;
    j["ineq"] = to_string(rep.ineq);
    j["params"] = params_to_json(rep.params);
    j["radius"] = rep.radius;
    j["lhs"] = rep.lhs;
    j["rhs"] = rep.rhs;
    j["margin"] = rep.margin;
    j["relative_margin"] = rep.relative_margin;
    j["witness_z"] = complex_to_json(rep.witness_z);
    j["hypothesis_ok"] = rep.hypothesis_ok;
    j["notes"] = rep.notes;
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

void append_double(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

}  // namespace

Polynomial parse_polynomial_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("polynomial JSON must be a nonempty array of [re, im] pairs");
    }
    std::vector<Complex> coeffs;
    coeffs.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number()) {
            throw std::invalid_argument("polynomial JSON entries must be [re, im] pairs");
        }
        coeffs.emplace_back(item[0].get<double>(), item[1].get<double>());
    }
    try {
        return Polynomial(std::move(coeffs));
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("bad polynomial: ") + e.what());
    }
}

std::string polynomial_to_json(const Polynomial& p) {
    ordered_json j = ordered_json::array();
    for (const auto& c : p.coeffs()) j.push_back(complex_to_json(c));
    return j.dump();
}

std::string report_to_json(const CheckReport& rep) { return report_to_json_obj(rep).dump(); }

std::string reports_to_json(const std::vector<CheckReport>& reps) {
    ordered_json arr = ordered_json::array();
    for (const auto& rep : reps) arr.push_back(report_to_json_obj(rep));
    return arr.dump();
}

std::string reports_to_csv(const std::vector<CheckReport>& reps) {
    std::string out =
        "ineq,R,alpha_re,alpha_im,beta_re,beta_im,a_re,a_im,k,radius,lhs,rhs,margin,"
        "relative_margin,witness_re,witness_im,hypothesis_ok,notes\n";
    for (const auto& rep : reps) {
        out += to_string(rep.ineq);
        const double fields[] = {rep.params.R,
                                 rep.params.alpha.real(), rep.params.alpha.imag(),
                                 rep.params.beta.real(), rep.params.beta.imag(),
                                 rep.params.a.real(), rep.params.a.imag(),
                                 rep.params.k, rep.radius,
                                 rep.lhs, rep.rhs, rep.margin, rep.relative_margin,
                                 rep.witness_z.real(), rep.witness_z.imag()};
        for (double f : fields) {
            out += ',';
            append_double(out, f);
        }
        out += ',';
        out += rep.hypothesis_ok ? "true" : "false";
        out += ',';
        out += csv_escape(rep.notes);
        out += '\n';
    }
    return out;
}

}  // namespace smirnov
