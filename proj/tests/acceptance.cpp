// Copyright 2026 The Spectra Authors.
// SPDX-License-Identifier: Apache-2.0
//
// acceptance [corpus-dir]: one PASS/FAIL line per criterion; exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <exception>

#include "spectra/verify.hpp"

namespace {

constexpr int kCriteria = 12;
constexpr double kRuntimeBudgetSeconds = 60.0;

} // namespace

int main(int argc, char** argv) {
    using namespace spectra;
    const fs::path dir = corpus_dir(argc > 1 ? fs::path(argv[1]) : fs::path("corpus"));
    std::printf("corpus %s\n", dir.string().c_str());
    std::printf("tolerances: expected values %.0e, bound slack %.0e, runtime %.0f s\n", kExpectedTolerance, kBoundSlack,
                kRuntimeBudgetSeconds);
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    try {
        report = corpus_verify(dir);
    } catch (const std::exception& e) {
        std::printf("ERROR %s\n", e.what());
        return 2;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = static_cast<int>(report.criteria.size()) == kCriteria;
    for (const auto& c : report.criteria) {
        std::printf("%s %2d %-22s %s\n", c.pass() ? "PASS" : "FAIL", c.index, c.id.c_str(), c.summary.c_str());
        for (const auto& f : c.failures) std::printf("       %s\n", f.c_str());
        ok = ok && c.pass();
    }
    if (static_cast<int>(report.criteria.size()) != kCriteria)
        std::printf("FAIL    expected %d criteria, got %zu\n", kCriteria, report.criteria.size());
    const bool fast = secs < kRuntimeBudgetSeconds;
    std::printf("%s    runtime %.2f s (budget %.0f s)\n", fast ? "PASS" : "FAIL", secs, kRuntimeBudgetSeconds);
    return ok && fast ? 0 : 1;
}
