#ifndef SMIRNOV_CIRCLE_MAX_HPP
#define SMIRNOV_CIRCLE_MAX_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "smirnov/poly.hpp"

namespace smirnov {

/// Rigorous enclosure of max_{|z|=r} |p(z)|.
struct CertifiedBracket {
    double lo = 0.0;
    double hi = 0.0;
    double argmax_theta = 0.0;  // radians in [0, 2pi)
};

class BracketError : public std::runtime_error {
public:
    BracketError(const std::string& what, CertifiedBracket best)
        : std::runtime_error(what), best_(best) {}
    const CertifiedBracket& best() const { return best_; }

private:
    CertifiedBracket best_;
};

/// Closed-form scalar right-hand side as a function of the circle radius.
using RadialProfile = std::function<double(double)>;

/// Certified bracket for max_{|z|=r} |p(z)|. Sampling starts at
/// max(4096, 64 deg) points and doubles until the bracket width reaches tol;
/// the upper end combines the Lipschitz bound sum j|c_j| with a curvature
/// bound on the trigonometric polynomial |p|^2, whichever is tighter.
/// tol <= 0 selects the default 1e-10 scaled by sum |c_j|.
/// Throws BracketError (carrying the best bracket) past 2^24 samples.
CertifiedBracket max_modulus_on_circle(const Polynomial& p, double r, double tol = 0.0);

/// min over |z| = r of rhs_profile(r) - |numerator(z)|, with the minimizing
/// point. A value below -tol is a certified violation witness.
std::pair<double, Complex> sup_ratio_on_circle(const Polynomial& numerator,
                                               const RadialProfile& rhs_profile, double r,
                                               double tol = 0.0);

}  // namespace smirnov

#endif
