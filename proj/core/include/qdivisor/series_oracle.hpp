#pragma once

#include "qdivisor/kr_poly.hpp"
#include "qdivisor/laurent.hpp"

#include <cstdint>
#include <vector>

namespace qdivisor {

// Independent route to P_n(q) through its generating function
//
//   prod_{m>=1} (1 - t^m)^2 / ((1 - q t^m)(1 - q^-1 t^m))
//       = 1 + (q + q^-1 - 2) sum_{n>=1} P_n(q) q^(1-n) t^n.
//
// Shares no code with kr_poly beyond the KRPolynomial result type.

inline constexpr std::uint32_t kMaxSeriesOrder = 500;

/// The product truncated at t^order; terms[k] is the coefficient of t^k.
struct TruncatedSeries {
    std::uint32_t order = 0;
    std::vector<LaurentPoly> terms;
};

/// q - 2 + q^-1.
LaurentPoly kr_factor();

/// Expands the product for m = 1..order, truncating after every factor.
/// Requires 1 <= order <= 500; 64-bit overflow throws std::overflow_error.
TruncatedSeries expand_product(std::uint32_t order);

/// P_n(q) = q^(n-1) * terms[n] / (q - 2 + q^-1). Throws
/// qdivisor::inexact_division or qdivisor::invariant_error if the quotient
/// is not a palindromic nonnegative polynomial of degree 2n-2.
KRPolynomial extract_polynomial(const TruncatedSeries& series, std::uint64_t n);

} // namespace qdivisor
