#pragma once

#include "qdivisor/arithmetic.hpp"

#include <cstdint>
#include <vector>

namespace qdivisor {

// Coefficients of the Kassel-Reutenauer polynomial P_n(q),
//
//   P_n(q) / q^(n-1) = sum_i a(n,i) q^i,
//   a(n,i) = #{ d | n : g(d) <= 2i < g(2d) },   g(y) = y - 2n/y.
//
// g is integral at every divisor of 2n, so the interval test never touches
// floating point. Its real inverse x -> (x + sqrt(8n + x^2)) / 2 is only
// evaluated by the test suite.

/// Inputs to the coefficient formula must satisfy n < 2^62 so that 2n and
/// every g value fit a signed 64-bit word.
inline constexpr std::uint64_t kCoefficientLimit = std::uint64_t{1} << 62;
/// Dense coefficient vectors are only built for n < 2^31.
inline constexpr std::uint64_t kPolynomialLimit = std::uint64_t{1} << 31;

struct GValue {
    std::uint64_t n;
    std::uint64_t y;
    std::int64_t value;
};

/// g(y) = y - 2n/y. Throws std::invalid_argument unless y divides 2n.
GValue g_of(std::uint64_t n, std::uint64_t y);

/// Symmetric coefficient vector of P_n(q), stored from the centre outwards:
/// half[i] is the coefficient of both q^(n-1+i) and q^(n-1-i).
struct KRPolynomial {
    std::uint64_t n = 1;
    std::vector<std::uint64_t> half;

    std::uint64_t center() const { return n - 1; }
    std::uint64_t degree() const { return 2 * (n - 1); }

    /// Coefficient of q^exponent (zero outside [0, 2n-2]).
    std::uint64_t coefficient(std::uint64_t exponent) const;

    /// All 2n-1 coefficients, ascending in the power of q.
    std::vector<std::uint64_t> ascending() const;

    /// P_n(1).
    std::uint64_t value_at_one() const;

    friend bool operator==(const KRPolynomial&, const KRPolynomial&) = default;
};

/// a(n,i) by direct count over the divisors of n; defined for every i.
std::uint64_t coefficient_at(std::uint64_t n, std::int64_t i);
std::uint64_t coefficient_at(const DivisorList& divs, std::int64_t i);

/// Dense P_n(q) via a difference array: O(d(n) + n).
KRPolynomial polynomial(std::uint64_t n);
KRPolynomial polynomial(const DivisorList& divs);

/// One maximal run of equal coefficients: a(n,i) = value for first <= i <= last.
struct CoefficientRun {
    std::int64_t first;
    std::int64_t last;
    std::uint64_t value;
};

/// The step function i -> a(n,i) on [-(n-1), n-1] as maximal runs, computed
/// from the 2 d(n) interval endpoints without materializing the dense vector.
std::vector<CoefficientRun> coefficient_runs(const DivisorList& divs);

std::uint64_t largest_coefficient(std::uint64_t n);
std::uint64_t largest_coefficient(const DivisorList& divs);

/// Sorted set {a(n,i) : i in Z}; always contains 0 (attained for |i| >= n).
std::vector<std::uint64_t> coefficient_value_set(std::uint64_t n);
std::vector<std::uint64_t> coefficient_value_set(const DivisorList& divs);

} // namespace qdivisor
