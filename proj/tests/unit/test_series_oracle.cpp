#include <qdivisor/errors.hpp>
#include <qdivisor/kr_poly.hpp>
#include <qdivisor/laurent.hpp>
#include <qdivisor/series_oracle.hpp>

#include <doctest.h>

#include <limits>
#include <stdexcept>

using namespace qdivisor;

namespace {

const LaurentPoly kK = LaurentPoly(-1, {1, -2, 1});  // q - 2 + q^-1

const TruncatedSeries& series200() {
    static const TruncatedSeries s = expand_product(200);
    return s;
}

} // namespace

TEST_CASE("LaurentPoly normalization and printing") {
    LaurentPoly p(-3, {0, 0, 1, 0, -2, 0});
    CHECK(p.offset() == -1);
    CHECK(p.coeffs() == std::vector<std::int64_t>{1, 0, -2});
    CHECK(p.to_string() == "-2q + q^-1");
    CHECK(LaurentPoly(5, {0, 0}).is_zero());
    CHECK(LaurentPoly(5, {0, 0}) == LaurentPoly{});
    CHECK(kK.to_string() == "q - 2 + q^-1");
    CHECK(kK.sum() == 0);
    CHECK(LaurentPoly{}.to_string() == "0");
}

TEST_CASE("LaurentPoly arithmetic") {
    const LaurentPoly a(0, {1, 1});   // 1 + q
    const LaurentPoly b(-1, {1, 1});  // q^-1 + 1
    CHECK(a * b == LaurentPoly(-1, {1, 2, 1}));
    CHECK(a - a == LaurentPoly{});
    CHECK(a + b == LaurentPoly(-1, {1, 2, 1}));
    CHECK(a.shifted(-3) == LaurentPoly(-3, {1, 1}));
    CHECK((a * LaurentPoly{}).is_zero());
    CHECK(kK * kK == LaurentPoly(-2, {1, -4, 6, -4, 1}));
}

TEST_CASE("LaurentPoly detects overflow") {
    const auto big = LaurentPoly::constant(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + LaurentPoly::constant(1), std::overflow_error);
    CHECK_THROWS_AS(big * LaurentPoly::constant(2), std::overflow_error);
}

TEST_CASE("exact division examples") {
    CHECK(laurent_exact_div(kK, kK) == LaurentPoly::constant(1));
    const LaurentPoly num(-2, {1, -1, 0, -1, 1});  // q^2 - q - q^-1 + q^-2
    const auto quotient = laurent_exact_div(num, kK);
    CHECK(quotient == LaurentPoly(-1, {1, 1, 1}));
    CHECK(quotient * kK == num);
    CHECK_THROWS_AS(laurent_exact_div(LaurentPoly::monomial(1, 1), kK), inexact_division);
    CHECK_THROWS_AS(laurent_exact_div(LaurentPoly(0, {1, 2, 3, 4}), kK), inexact_division);
    CHECK_THROWS_AS(laurent_exact_div(LaurentPoly(0, {3, 3}), LaurentPoly::constant(2)), inexact_division);
    CHECK_THROWS_AS(laurent_exact_div(kK, LaurentPoly{}), std::invalid_argument);
    CHECK(laurent_exact_div(LaurentPoly{}, kK).is_zero());
}

TEST_CASE("exact division inverts multiplication") {
    // deterministic family of products
    for (std::int64_t a = -3; a <= 3; ++a) {
        for (std::int64_t b = -3; b <= 3; ++b) {
            const LaurentPoly x(a, {a, 1, b, 0, 2});
            const LaurentPoly y(b, {1, a, -1});
            REQUIRE(laurent_exact_div(x * y, y) == x);
            REQUIRE(laurent_exact_div(x * y, x) == y);
        }
    }
}

TEST_CASE("expand_product low orders") {
    const auto s1 = expand_product(1);
    REQUIRE(s1.terms.size() == 2);
    CHECK(s1.terms[0] == LaurentPoly::constant(1));
    CHECK(s1.terms[1] == kK);
    for (std::uint32_t order : {1u, 2u, 7u, 30u}) CHECK(expand_product(order).terms[0] == LaurentPoly::constant(1));
    CHECK_THROWS_AS(expand_product(0), std::out_of_range);
    CHECK_THROWS_AS(expand_product(501), std::out_of_range);
}

TEST_CASE("truncation is consistent across orders") {
    const auto small = expand_product(40);
    for (std::size_t k = 0; k <= 40; ++k) REQUIRE(small.terms[k] == series200().terms[k]);
}

TEST_CASE("series terms vanish at q = 1 and stay inside [-n, n]") {
    const auto& s = series200();
    for (std::size_t n = 1; n <= 200; ++n) {
        REQUIRE(s.terms[n].sum() == 0);
        REQUIRE(s.terms[n].min_exponent() >= -static_cast<std::int64_t>(n));
        REQUIRE(s.terms[n].max_exponent() <= static_cast<std::int64_t>(n));
    }
}

TEST_CASE("terms[12] is (q + q^-1 - 2) P_12(q) q^-11") {
    const LaurentPoly p12(0, {1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(expand_product(12).terms[12] == (kK * p12).shifted(-11));
}

TEST_CASE("extract_polynomial examples") {
    const auto& s = series200();
    CHECK(extract_polynomial(s, 1).ascending() == std::vector<std::uint64_t>{1});
    CHECK(extract_polynomial(s, 2).ascending() == std::vector<std::uint64_t>{1, 1, 1});
    CHECK(extract_polynomial(s, 2).value_at_one() == 3);
    CHECK(extract_polynomial(s, 12).ascending() ==
          std::vector<std::uint64_t>{1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(extract_polynomial(s, 3).ascending() == std::vector<std::uint64_t>{1, 1, 0, 1, 1});
    CHECK(extract_polynomial(s, 6).ascending() == std::vector<std::uint64_t>{1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1});
    CHECK_THROWS_AS(extract_polynomial(s, 0), std::out_of_range);
    CHECK_THROWS_AS(extract_polynomial(s, 201), std::out_of_range);
}

TEST_CASE("extract_polynomial rejects corrupted series") {
    TruncatedSeries bad = expand_product(5);
    bad.terms[3] = LaurentPoly::monomial(1, 0);
    CHECK_THROWS_AS(extract_polynomial(bad, 3), inexact_division);
    bad.terms[4] = kK * LaurentPoly(0, {1, 2});  // quotient 1 + 2q: wrong degree, not palindromic
    CHECK_THROWS_AS(extract_polynomial(bad, 4), invariant_error);
    bad.terms[5] = kK * LaurentPoly(-4, {1, -1, 1, 0, 1, 0, 1, -1, 1});  // negative coefficient
    CHECK_THROWS_AS(extract_polynomial(bad, 5), invariant_error);
}

TEST_CASE("series extraction agrees with the divisor formula for n <= 200") {
    const auto& s = series200();
    for (std::uint64_t n = 1; n <= 200; ++n) {
        const auto from_series = extract_polynomial(s, n);
        REQUIRE(from_series == polynomial(n));
        // multiply back
        const auto full = from_series.ascending();
        LaurentPoly p(0, std::vector<std::int64_t>(full.begin(), full.end()));
        REQUIRE((kK * p).shifted(1 - static_cast<std::int64_t>(n)) == s.terms[n]);
    }
}

TEST_CASE("expand_product at the maximum order stays within 64 bits") {
    const auto s = expand_product(500);
    CHECK(extract_polynomial(s, 500) == polynomial(500));
    CHECK(extract_polynomial(s, 480) == polynomial(480));
}
