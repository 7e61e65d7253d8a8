// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance [--golden DIR] [--seed N] [ID ...]
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "qreal/verify.hpp"

int main(int argc, char** argv) {
    qreal::verify::Options options;
    options.golden_dir = QREAL_GOLDEN_DIR;
    if (const char* w = std::getenv("QREAL_WORK_ORDER")) options.work_order = std::atoi(w);
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--golden" && i + 1 < argc) {
            options.golden_dir = argv[++i];
        } else if (arg == "--seed" && i + 1 < argc) {
            options.seed = static_cast<unsigned>(std::stoul(argv[++i]));
        } else {
            ids.push_back(std::stoi(arg));
        }
    }
    if (ids.empty()) {
        for (int id = 1; id <= qreal::verify::kCriterionCount; ++id) ids.push_back(id);
    }
    int failed = 0;
    for (int id : ids) {
        const auto r = qreal::verify::run_criterion(id, options);
        std::printf("%s\n", qreal::verify::format_line(r).c_str());
        std::fflush(stdout);
        failed += !r.passed;
    }
    std::printf("%zu criteria, %d failed\n", ids.size(), failed);
    return failed == 0 ? 0 : 1;
}
