#pragma once

#include "qdivisor/arithmetic.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qdivisor {

/// Positive rational num/den.
struct Ratio {
    std::uint64_t num;
    std::uint64_t den = 1;
};

/// q_t(n) = #{ d | n : t/2 < d <= t }, in exact integer arithmetic.
/// Throws std::invalid_argument when t is not positive.
std::uint64_t window_count(std::uint64_t n, Ratio t);
std::uint64_t window_count(const DivisorList& divs, Ratio t);

/// A longest chain of divisors d_1 < ... < d_h of n with d_h < 2 d_1.
/// Its length is F(n), the maximum of q_t(n) over real t > 0.
struct WindowWitness {
    std::uint64_t n = 1;
    std::uint64_t value = 1;
    std::vector<std::uint64_t> chain;
    std::uint64_t t_endpoint = 1;

    /// Chain is nonempty, strictly increasing, made of divisors of n, fits
    /// inside a factor of two and has exactly `value` entries.
    bool well_formed() const;
};

/// F(n) by a two-pointer sweep over the sorted divisors. Among windows of
/// maximal length the one with the smallest d_1 is reported.
WindowWitness erdos_nicolas_F(std::uint64_t n);
WindowWitness erdos_nicolas_F(const DivisorList& divs);

struct MeanRow {
    std::uint64_t x;
    std::uint64_t sum;          ///< sum of F(k) for k <= x
    std::uint64_t numerator;    ///< sum / x in lowest terms
    std::uint64_t denominator;

    /// The mean rounded half-up to six decimal places.
    std::string decimal() const;
    std::string fraction() const;
};

/// Running mean (1/x) sum_{k <= x} F(k) at each checkpoint, in one
/// cumulative pass. Checkpoints must be strictly increasing, positive and
/// at most kMeanTableLimit.
std::vector<MeanRow> mean_F_table(const std::vector<std::uint64_t>& checkpoints);

inline constexpr std::uint64_t kMeanTableLimit = 10'000'000;

/// True when a's mean is strictly less than b's (exact comparison).
bool mean_less(const MeanRow& a, const MeanRow& b);

} // namespace qdivisor
