#pragma once

#include <random>
#include <string>
#include <vector>

#include "torusweyl/dynamics.hpp"

namespace torusweyl {

inline constexpr double kVerifyTol = 1e-10;

struct CheckResult {
    std::string name;
    double max_error = 0.0;
    bool pass = false;
};

struct SuiteReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

TorusOperator random_operator(const TorusSpace& space, std::mt19937& rng);
TorusOperator random_hermitian(const TorusSpace& space, std::mt19937& rng);
TorusOperator random_unitary(const TorusSpace& space, std::mt19937& rng);

// Identity suites behind the `verify` command; every check passes at 1e-10.
SuiteReport verify_cocycle(const TorusSpace& space);
SuiteReport verify_traces(const TorusSpace& space);
SuiteReport verify_symbols(const TorusSpace& space, unsigned seed, int n_random = 20);
SuiteReport verify_products(const TorusSpace& space, unsigned seed, int n_random = 20);
SuiteReport verify_feline(const TorusSpace& space, const CatMapSpec& spec, unsigned seed,
                          int n_random = 20);

}  // namespace torusweyl
