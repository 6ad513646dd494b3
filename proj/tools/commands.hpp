#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace geophase::cli {

// Stable process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitUndefinedPhase = 3;

struct ComputeOptions {
    std::string input;
    double t = 0.0;
    std::string output;  // empty: stdout
};

struct SweepOptions {
    std::string input;
    double t_start = 0.0;
    double t_end = 0.0;
    int steps = 0;
    std::string format = "csv";
    std::string output;
};

struct VerifyOptions {
    int dim = 2;
    int trials = 10;
    std::uint64_t seed = 0;
    double tol = 1e-9;
};

struct CompareOptions {
    std::string input;
    double t = 0.0;
    int holonomy_steps = 4096;
    std::string output;
};

struct VerifyFailure {
    std::uint64_t seed = 0;
    std::string invariant;
    double value = 0.0;
};

struct VerifySummary {
    int passed = 0;
    int failed = 0;
    std::optional<VerifyFailure> first_failure;
};

inline constexpr int kMinHolonomySteps = 256;

int cmd_compute(const ComputeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);
int cmd_compare(const CompareOptions& opts, std::ostream& out, std::ostream& err);

VerifySummary run_verification(const VerifyOptions& opts);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

/// Full command-line entry point; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geophase::cli
