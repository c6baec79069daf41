#pragma once

#include <string>
#include <vector>

#include "spectable/catalog.hpp"
#include "spectable/parallel.hpp"

namespace spectable {

struct CheckResult {
    std::string name;
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool ok() const;
    /// `PASS <check>` or one `FAIL <check>: <problem>` line per problem.
    std::vector<std::string> lines() const;
};

/// Largest degree for the explicit symmetric-power checks by default.
constexpr int kDefaultOracleDegree = 12;

/// Character table, row sums and parity for every representation and closed
/// forms through max_degree; Molien vs projector traces (and the character
/// formula for spinor frames) and the determinant identity on every class
/// through oracle_degree; the double cover when the group declares one.
VerificationReport verify_group(const Catalog& catalog, const std::string& name, int max_degree, int oracle_degree,
                                Execution ex = Execution::parallel);

}  // namespace spectable
