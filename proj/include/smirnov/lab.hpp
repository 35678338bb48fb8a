#ifndef SMIRNOV_LAB_HPP
#define SMIRNOV_LAB_HPP

#include <cstdint>
#include <vector>

#include "smirnov/inequalities.hpp"
#include "smirnov/poly.hpp"

namespace smirnov {

/// Deterministic splitmix64 stream; identical seeds give identical draws on
/// every platform, unlike the standard-library distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    double uniform();  // [0, 1)
    double uniform(double lo, double hi);

private:
    std::uint64_t state_;
};

/// Counter-based split of a master seed, so parallel batches reproduce
/// serial results.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t index);

enum class ZeroRegion { anywhere, outside_closed_disk, inside_closed_disk, annulus };

struct GeneratorSpec {
    int degree = 4;
    ZeroRegion region = ZeroRegion::anywhere;
    double k_lo = 0.0;  // annulus radii
    double k_hi = 1.0;
    double zero_separation_min = 1e-3;
    double coeff_scale = 1.0;
    std::uint64_t seed = 0;
    // Boundary-hugging sub-mode for outside_closed_disk: moduli in [1, 1.01].
    bool boundary_hug = false;
};

/// Polynomial built from sampled zeros times a random unit-modulus leading
/// coefficient scaled by coeff_scale. Deterministic per seed.
Polynomial generate(const GeneratorSpec& spec);

/// Uniform point of the closed unit disk (rejection sampling).
Complex sample_unit_disk(Rng& rng);

/// Random admissible ParameterSet: alpha, beta, a uniform on the closed unit
/// disk, R log-uniform on [1, 8].
ParameterSet sample_parameters(Rng& rng, double k = 1.0);

enum class SharpnessFamily { lambda_zn, zn_plus_1 };

struct SweepGrid {
    std::vector<double> R{1.0};
    std::vector<Complex> alpha{Complex{0.0, 0.0}};
    std::vector<Complex> beta{Complex{0.0, 0.0}};
    std::vector<Complex> a{Complex{0.0, 0.0}};
    std::vector<int> n{4};
    std::vector<double> radius{1.0};
};

struct ProbeResult {
    double best_ratio = 0.0;
    ParameterSet argmax_params;
    int argmax_n = 0;
};

/// Max over the swept parameter grid of lhs/rhs for the extremal family
/// (bracket-midpoint right-hand side), with the attaining parameters.
ProbeResult sharpness_probe(InequalityId id, SharpnessFamily family, const SweepGrid& sweep);

struct SearchResult {
    InequalityId ineq = InequalityId::M1;
    double best_margin = 0.0;  // worst relative margin seen over the radius grid
    Polynomial best_poly;
    Polynomial best_pair_f;  // dominating polynomial, pair ids only
    bool is_pair = false;
    ParameterSet best_params;
    Complex witness_z{1.0, 0.0};
    long evaluations = 0;
    std::uint64_t seed = 0;
};

struct SearchOptions {
    double rhs_scale = 1.0;  // planted-violation hook
    int min_degree = 2;
    int max_degree = 6;
};

/// Randomized counterexample search: random restarts followed by Nelder-Mead
/// on the instance parameter vector. Reporting only; never asserts.
SearchResult violation_search(InequalityId id, long budget, std::uint64_t seed,
                              const SearchOptions& opts = {});

/// Re-evaluate a search result's best instance through the same margin path.
double reevaluate_search_margin(const SearchResult& result, const SearchOptions& opts = {});

/// Cartesian parameter sweep; one report per grid point in lexicographic
/// order of (R, alpha, beta, a, n, radius) indices.
std::vector<CheckReport> sweep(InequalityId id, const SweepGrid& grid, SharpnessFamily family,
                               const CheckOptions& opts = {});
std::vector<CheckReport> sweep(InequalityId id, const SweepGrid& grid, const GeneratorSpec& gen,
                               const CheckOptions& opts = {});

}  // namespace smirnov

#endif
