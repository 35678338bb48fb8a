#ifndef SMIRNOV_SELFTEST_HPP
#define SMIRNOV_SELFTEST_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace smirnov {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Run the full acceptance suite (criteria 1-10), printing one PASS/FAIL
/// line per criterion to `out` when non-null. Returns all results.
std::vector<CriterionResult> run_acceptance(std::ostream* out);

}  // namespace smirnov

#endif
