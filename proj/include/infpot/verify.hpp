#pragma once

#include <string>
#include <vector>

#include "infpot/types.hpp"

namespace infpot {

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;   ///< worst value observed
    double tolerance = 0.0;  ///< bound it was held against
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Identity and sign checks on the series kernel.
SuiteReport verify_series(const SeriesPolicy& series = {});
/// First-order conditions, saddle structure and oracle agreement of the solver.
SuiteReport verify_minimax(const SolverPolicy& solver = {}, const SeriesPolicy& series = {});
/// Bounds, symmetry, gluing, infinity-harmonicity of the glued field.
SuiteReport verify_field(const SolverPolicy& solver = {}, const SeriesPolicy& series = {});
/// Derived results: approximation anchor, integral identity, disproof signs.
SuiteReport verify_analysis(const SolverPolicy& solver = {}, const SeriesPolicy& series = {});

std::vector<SuiteReport> verify_all(const SolverPolicy& solver = {},
                                    const SeriesPolicy& series = {});

}  // namespace infpot
