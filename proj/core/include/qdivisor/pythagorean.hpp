#pragma once

#include "qdivisor/arithmetic.hpp"

#include <cstdint>
#include <optional>

namespace qdivisor {

/// Divisors d < d' < 2d of some n.
struct ClosePair {
    std::uint64_t d;
    std::uint64_t d_prime;

    friend bool operator==(const ClosePair&, const ClosePair&) = default;
};

/// Integer right triangle, legs a <= b, hypotenuse c.
struct TriangleWitness {
    std::uint64_t a;
    std::uint64_t b;
    std::uint64_t c;
    std::uint64_t perimeter;

    bool valid() const;

    friend bool operator==(const TriangleWitness&, const TriangleWitness&) = default;
};

/// Lexicographically smallest close divisor pair of n, if any.
std::optional<ClosePair> has_close_divisor_pair(std::uint64_t n);
std::optional<ClosePair> has_close_divisor_pair(const DivisorList& divs);

inline constexpr std::uint64_t kPerimeterOracleLimit = 10'000;

/// Exhaustive search over a <= b < c with a + b + c = p; the witness with
/// the smallest a. Odd p throws std::invalid_argument (no integer right
/// triangle has odd perimeter); p > 10^4 throws std::out_of_range.
std::optional<TriangleWitness> perimeter_oracle(std::uint64_t p);

/// Triangle k(m^2 - u^2), 2kmu, k(m^2 + u^2) of perimeter 2n built from a
/// close pair (m, m+u) with m(m+u) | n. Empty when the pair does not
/// divide n jointly.
std::optional<TriangleWitness> triangle_from_pair(std::uint64_t n, ClosePair pair);

/// Smallest close pair (d, d') with d d' | n, if any.
std::optional<ClosePair> jointly_dividing_pair(const DivisorList& divs);

enum class WitnessRoute {
    none,          ///< 2n is not a perimeter
    joint_pair,    ///< a close pair with d d' | n
    oracle,        ///< brute-force perimeter search
};

struct PerimeterAnswer {
    bool is_perimeter = false;
    std::optional<ClosePair> pair;
    std::optional<TriangleWitness> witness;
    WitnessRoute route = WitnessRoute::none;
};

inline constexpr std::uint64_t kPerimeterCrossCheckLimit = 5'000;
inline constexpr std::uint64_t kDoublePerimeterLimit = std::uint64_t{1} << 61;

/// Decides whether 2n is the perimeter of an integer right triangle from the
/// close-pair criterion alone, then builds a witness. For n <= 5000 the
/// brute-force oracle is consulted as well and any disagreement throws
/// qdivisor::invariant_error.
PerimeterAnswer is_double_perimeter(std::uint64_t n);

} // namespace qdivisor
