#pragma once

#include "hypercount/curvecount.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hypercount::cli {

enum class OutputFormat { Json, Csv, Text };

/// Settings shared by every subcommand.
struct RunConfig {
    Backend backend = Backend::Exact;
    double tolerance = kDefaultTolerance;
    std::uint64_t table_budget = kDefaultTableBudget;
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::Text;
};

struct CountArgs {
    std::uint64_t q = 0;
    Family family = Family::A;
    int d = 0;
    std::int64_t a = 1;
    std::int64_t b = 1;
    bool check = false;
    bool brute = false;
};

struct SweepArgs {
    std::uint64_t q_min = 3;
    std::uint64_t q_max = 200;
    std::vector<int> degrees{3, 4, 5};
    std::vector<Family> families{Family::A, Family::B};
    int samples = 10;
    unsigned jobs = 1;
    bool timing = false;
};

struct VerifyArgs {
    std::uint64_t q_min = 0;
    std::uint64_t q_max = 0;
    int samples = 5;
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

/// Thrown for invalid user input; reported on stderr with exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int run_count(const RunConfig& config, const CountArgs& args, std::ostream& out);
int run_sweep(const RunConfig& config, const SweepArgs& args, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& config, const VerifyArgs& args, std::ostream& out);

/// Table budget from HYPERCOUNT_TABLE_BUDGET, if set.
std::optional<std::uint64_t> table_budget_from_env();

/// Odd prime powers in [lo, hi].
std::vector<std::uint64_t> odd_prime_powers(std::uint64_t lo, std::uint64_t hi);

} // namespace hypercount::cli
