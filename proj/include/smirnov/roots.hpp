#ifndef SMIRNOV_ROOTS_HPP
#define SMIRNOV_ROOTS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "smirnov/poly.hpp"

namespace smirnov {

// Band half-width around a circle inside which a root counts as "on" it.
inline constexpr double kCircleBandTol = 1e-9;

struct ZeroLocationReport {
    std::vector<Complex> roots;
    double max_modulus = 0.0;
    double min_modulus = 0.0;
    int count_inside = 0;   // |root| < k - band
    int count_on = 0;       // within band of |z| = k
    int count_outside = 0;  // |root| > k + band
    double residual = 0.0;  // max |P(root)| / sum |coeffs|
};

class UnresolvedRootsError : public std::runtime_error {
public:
    UnresolvedRootsError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

/// All deg(p) roots by Aberth-Ehrlich simultaneous iteration with Newton
/// polishing. Throws std::domain_error for (near-)constant input and
/// UnresolvedRootsError when the residual stays above 1e-8 after restarts.
std::vector<Complex> find_roots(const Polynomial& p);

/// Root counts relative to the circle |z| = k (k = 1 for the unit-disk
/// hypotheses), with the band applied symmetrically.
ZeroLocationReport classify_zero_location(const Polynomial& p, double k);

/// Winding number of p around 0 along |z| = r via summed phase increments,
/// doubling the sample count until the result is stable and every phase
/// step is below pi/2. Throws std::runtime_error("near-circle zero") when a
/// large step persists after 4 doublings.
int count_zeros_argument_principle(const Polynomial& p, double r, int samples);

}  // namespace smirnov

#endif
