#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace qreal::verify {

struct Options {
    std::filesystem::path golden_dir;
    unsigned seed = 20240611;
    bool parallel = true;
    /// Lower bound on the working order for root series (QREAL_WORK_ORDER).
    int work_order = 0;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

constexpr int kCriterionCount = 10;

/// Runs one acceptance criterion (1..10) against the golden directory.
CriterionResult run_criterion(int id, const Options& options);
std::vector<CriterionResult> run_all(const Options& options);

/// "PASS  3  B series ... (1.2 s)".
std::string format_line(const CriterionResult& r);

/// Writes freshly computed versions of every golden file into `dir`.
void regenerate_golden(const std::filesystem::path& dir, const Options& options);
/// Compares the files in `fresh` against the pinned copies, file by file.
/// Series are compared by value, tables entrywise, figure data to 1e-4.
std::vector<std::string> compare_golden(const std::filesystem::path& fresh, const std::filesystem::path& pinned);

/// Bounded evidence about rationality of B(q): zero block search and the
/// size of the largest Hankel determinant. Never a proof.
std::string rationality_evidence(const Options& options, int lmax, int mmax);

}  // namespace qreal::verify
