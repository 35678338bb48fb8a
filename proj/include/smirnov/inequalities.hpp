#ifndef SMIRNOV_INEQUALITIES_HPP
#define SMIRNOV_INEQUALITIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "smirnov/circle_max.hpp"
#include "smirnov/operators.hpp"
#include "smirnov/poly.hpp"
#include "smirnov/roots.hpp"

namespace smirnov {

/// Every numbered inequality and lemma in the catalog.
enum class InequalityId {
    C1, C2, C3, C4, C5, C6,        // classical bounds
    S8, S9, S10, S11, S12, S13,    // operator-preserved bounds
    C14, C15,                      // composite classical bounds
    M1, M2, M3, M4, M5, M6,        // composite operator bounds
    L1, L2, L3, L4, L5, L6,        // lemma catalog
    DOM_A, DOM_B,                  // domination pairs
};

std::string to_string(InequalityId id);
std::optional<InequalityId> parse_inequality_id(const std::string& s);
std::vector<InequalityId> all_inequality_ids();

enum class HypothesisKind {
    any_polynomial,
    no_zeros_in_open_disk,
    all_zeros_in_closed_disk,
    zeros_in_radius_k,
    dominated_pair,
};

HypothesisKind hypothesis_of(InequalityId id);

/// True for L5, DOM-A, DOM-B: the check takes a (P, F) pair.
bool is_pair_inequality(InequalityId id);

struct CheckReport {
    InequalityId ineq = InequalityId::C1;
    ParameterSet params;
    double radius = 1.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;           // rhs - lhs
    double relative_margin = 0.0;  // margin / max(rhs, tiny)
    Complex witness_z{1.0, 0.0};
    bool hypothesis_ok = true;
    std::string notes;
    // Coefficient-level magnitude of the evaluated expressions on the circle;
    // the natural scale for roundoff-aware thresholds. Not serialized.
    double norm_scale = 1.0;
};

struct CheckOptions {
    double tol = 1e-9;
    // Test hook: scales the closed-form right-hand side. The planted-violation
    // sensitivity suite sets this to 0.9.
    double rhs_scale = 1.0;
    // Coarse sampling and an uncertified max-modulus estimate; used by the
    // falsification search where throughput matters more than certification.
    bool fast = false;
    // Use the bracket midpoint for the max term instead of the upper end.
    // Sharpness probes want the unbiased value; violation checks do not.
    bool max_midpoint = false;
    // Relative bracket tolerance for the max term; 0 selects the tight
    // default 1e-11. Large random-instance suites pass something looser,
    // which only inflates the right-hand side and stays sound.
    double max_tol = 0.0;
};

/// Evaluate one catalog inequality at a single point |z| >= 1. The max-term M
/// uses the upper bracket end so a reported violation is genuine. Hypothesis
/// failures are annotated, never thrown.
CheckReport check_pointwise(InequalityId id, const Polynomial& p, const ParameterSet& params,
                            Complex z, const CheckOptions& opts = {});

/// Worst-case report over the circle |z| = r (r >= 1); the witness is the
/// minimizing point after local refinement.
CheckReport certify_on_circle(InequalityId id, const Polynomial& p, const ParameterSet& params,
                              double r, const CheckOptions& opts = {});

/// One certified report per radius-grid entry.
std::vector<CheckReport> certify_on_grid(InequalityId id, const Polynomial& p,
                                         const ParameterSet& params, const CheckOptions& opts = {});

/// Domination-pair check: worst margin over |z| = r of |T[F]| - |T[P]| with T
/// the composite transform at degree deg(F). With a = 0, alpha = beta = 0 and
/// R = 1 this is the classical |F'| >= |P'| comparison.
CheckReport check_domination_pair(const Polynomial& P, const Polynomial& F,
                                  const ParameterSet& params, double r,
                                  const CheckOptions& opts = {});

/// Pair catalog entries (L5, DOM-A, DOM-B) on a circle. DOM-B uses the
/// plain Smirnov operator and flags alpha outside the admissible region.
CheckReport certify_pair_on_circle(InequalityId id, const Polynomial& P, const Polynomial& F,
                                   const ParameterSet& params, double r,
                                   const CheckOptions& opts = {});

/// Violation threshold for a report: margin < -max(1e-10 sum|c|, tol rhs).
bool is_violation(const CheckReport& rep, double coeff_sum, double tol = 1e-9);

}  // namespace smirnov

#endif
