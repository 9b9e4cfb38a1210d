#pragma once

#include "juliadiff/geometry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace juliadiff {

struct VerifyConfig {
    Point c{5.0, 0.0};
    std::size_t depth = 5;        ///< cover and sandwich checks run for 1 <= n <= depth
    std::size_t samples = 512;    ///< boundary samples per piece
    double cell = 0.01;           ///< raster cell for the oracle checks
    std::optional<double> epsilon;
    std::size_t disk_pairs = 100;
    std::size_t disk_samples = 100000;
    std::uint64_t seed = 20240501;
    unsigned threads = 1;
};

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_passed() const noexcept;
    std::size_t count(CheckStatus status) const noexcept;
    /// One `PASS|FAIL|SKIP name detail` line per check plus a summary line.
    std::string to_text() const;
    /// Schema `juliadiff.verify/1`.
    std::string to_json() const;
};

/// Runs every invariant check at the given configuration. The report
/// holds only values that are identical for any thread count.
VerifyReport run_verify(const VerifyConfig& config);

struct SandwichRow {
    std::size_t n = 0;
    double raster = 0.0;       ///< inner raster of (pieces) - (pieces), i.e. Q^{-(n+1)}(D) - Q^{-(n+1)}(D)
    double union_area = 0.0;   ///< dilated union estimate of the difference cover
    double union_margin = 0.0;
    double sum = 0.0;          ///< sum of the actual difference-disk areas
    double worst = 0.0;        ///< 12 pi 4^n K_n^2
    double raster_literal = 0.0;  ///< inner raster of Q^{-n}(D) - Q^{-n}(D)

    /// raster <= union <= worst, union <= sum + margin, sum <= worst, and
    /// raster_literal < worst; all strict where the values differ.
    bool holds() const noexcept;
};

/// Depth-n pieces are G_{s_0} o ... o G_{s_n}(D): n + 1 inverse steps, so their
/// union is Q^{-(n+1)}(D). The raster side of the sandwich uses that same set.
SandwichRow sandwich_row(const Parameter& p, std::size_t n, std::size_t samples, double cell, unsigned threads);

}  // namespace juliadiff
