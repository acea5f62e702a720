#include "qdivisor/series_oracle.hpp"

#include "qdivisor/errors.hpp"

#include <stdexcept>
#include <string>

namespace qdivisor {

LaurentPoly kr_factor() { return LaurentPoly(-1, {1, -2, 1}); }

TruncatedSeries expand_product(std::uint32_t order) {
    if (order < 1 || order > kMaxSeriesOrder)
        throw std::out_of_range("series order must lie in [1, 500]; got " + std::to_string(order));

    TruncatedSeries s;
    s.order = order;
    s.terms.assign(order + 1, LaurentPoly{});
    s.terms[0] = LaurentPoly::constant(1);
    auto& terms = s.terms;

    for (std::uint32_t m = 1; m <= order; ++m) {
        // (1 - t^m)^2, applied as two in-place multiplications by (1 - t^m).
        for (int pass = 0; pass < 2; ++pass) {
            for (std::uint32_t k = order; k >= m; --k) terms[k] -= terms[k - m];
        }
        // Multiplying by sum_j q^(+-j) t^(mj) in place: ascending k sees the
        // already-updated terms[k - m], which accumulates every power j up to
        // floor(k / m).
        for (std::int64_t sign : {+1, -1}) {
            for (std::uint32_t k = m; k <= order; ++k) terms[k] += terms[k - m].shifted(sign);
        }
    }
    return s;
}

KRPolynomial extract_polynomial(const TruncatedSeries& series, std::uint64_t n) {
    if (n < 1 || n > series.order)
        throw std::out_of_range("extract_polynomial needs 1 <= n <= " + std::to_string(series.order));

    const LaurentPoly quotient = laurent_exact_div(series.terms[n], kr_factor());
    const LaurentPoly p = quotient.shifted(static_cast<std::int64_t>(n) - 1);
    const auto degree = static_cast<std::int64_t>(2 * (n - 1));
    const std::string where = "series oracle at n = " + std::to_string(n) + ": ";

    if (p.is_zero() || p.min_exponent() != 0 || p.max_exponent() != degree)
        throw invariant_error(where + "quotient " + p.to_string() + " is not a polynomial of degree 2n-2");

    KRPolynomial out;
    out.n = n;
    out.half.resize(n);
    const auto center = static_cast<std::int64_t>(n) - 1;
    for (std::int64_t i = 0; i <= center; ++i) {
        const std::int64_t up = p.coefficient(center + i);
        if (up != p.coefficient(center - i)) throw invariant_error(where + "quotient is not palindromic");
        if (up < 0) throw invariant_error(where + "negative coefficient in quotient");
        out.half[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(up);
    }
    return out;
}

} // namespace qdivisor
