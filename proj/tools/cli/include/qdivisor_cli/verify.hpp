#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qdivisor::cli {

struct SuiteResult {
    std::string name;
    std::uint64_t checked = 0;   ///< cases that passed
    std::uint64_t total = 0;     ///< cases in scope
    std::optional<std::uint64_t> counterexample;  ///< smallest failing n
    std::string note;

    bool ok() const { return !counterexample && checked == total; }
};

struct VerifyOptions {
    std::uint64_t max_n = 1000;
    std::uint64_t oracle_max_n = 50;
    unsigned threads = 1;
};

inline constexpr std::uint64_t kVerifyOracleLimit = 500;
inline constexpr std::uint64_t kVerifyPythagoreanLimit = 1500;
inline constexpr std::uint64_t kVerifyBruteForceLimit = 2000;

/// Runs every cross-check suite. Throws std::invalid_argument for
/// max_n = 0 or oracle_max_n > 500.
std::vector<SuiteResult> run_verify(const VerifyOptions& opts);

/// "name: checked/total ok" or "name: FAILED ... smallest counterexample n = k".
std::string describe(const SuiteResult& r);

} // namespace qdivisor::cli
