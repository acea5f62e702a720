#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qdivisor {

/// Integer Laurent polynomial in q: sum_k coeffs[k] q^(offset + k).
/// Always normalized (no zero at either end); zero has no coefficients.
/// All arithmetic is exact and throws std::overflow_error rather than wrap.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::int64_t offset, std::vector<std::int64_t> coeffs);

    static LaurentPoly constant(std::int64_t c) { return monomial(c, 0); }
    static LaurentPoly monomial(std::int64_t c, std::int64_t exponent);

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t offset() const { return offset_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    /// Lowest / highest exponent carrying a nonzero coefficient.
    std::int64_t min_exponent() const { return offset_; }
    std::int64_t max_exponent() const { return offset_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }

    std::int64_t coefficient(std::int64_t exponent) const;

    /// Value at q = 1.
    std::int64_t sum() const;

    /// Multiplication by q^k.
    LaurentPoly shifted(std::int64_t k) const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// e.g. "q - 2 + q^-1", highest power first.
    std::string to_string() const;

private:
    void add_scaled(const LaurentPoly& rhs, std::int64_t scale);
    void normalize();

    std::int64_t offset_ = 0;
    std::vector<std::int64_t> coeffs_;
};

/// Quotient of an exact division, by long division from the lowest
/// exponent. Throws qdivisor::inexact_division when a remainder is left and
/// std::invalid_argument when the divisor is zero.
LaurentPoly laurent_exact_div(const LaurentPoly& numerator, const LaurentPoly& divisor);

} // namespace qdivisor
