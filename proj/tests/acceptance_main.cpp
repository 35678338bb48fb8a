#include <cstdio>
#include <iostream>

#include "smirnov/selftest.hpp"

int main() {
    const auto results = smirnov::run_acceptance(&std::cout);
    int failed = 0;
    for (const auto& r : results) {
        if (!r.passed) ++failed;
    }
    std::printf("%zu criteria, %d failed\n", results.size(), failed);
    return failed == 0 ? 0 : 1;
}
