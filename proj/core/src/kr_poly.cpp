#include "qdivisor/kr_poly.hpp"

#include <algorithm>
#include <new>
#include <stdexcept>
#include <string>

namespace qdivisor {

namespace {

void check_coefficient_range(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (n >= kCoefficientLimit)
        throw std::out_of_range("n = " + std::to_string(n) + " exceeds the supported range n < 2^62");
}

// ceil(x / 2) for signed x; integer division truncates toward zero, which is
// already the ceiling for negative x.
constexpr std::int64_t ceil_half(std::int64_t x) { return x >= 0 ? (x + 1) / 2 : x / 2; }

static_assert(ceil_half(-23) == -11 && ceil_half(-10) == -5 && ceil_half(-1) == 0);
static_assert(ceil_half(0) == 0 && ceil_half(5) == 3 && ceil_half(10) == 5);

// g at the divisor d of n and at 2d; both are exact since d | n.
std::int64_t g_at_divisor(std::uint64_t n, std::uint64_t d) {
    return static_cast<std::int64_t>(d) - static_cast<std::int64_t>(2 * (n / d));
}
std::int64_t g_at_double(std::uint64_t n, std::uint64_t d) {
    return static_cast<std::int64_t>(2 * d) - static_cast<std::int64_t>(n / d);
}

// Indices i with g(d) <= 2i < g(2d), as a closed range [first, last].
struct IndexRange {
    std::int64_t first;
    std::int64_t last;
};

IndexRange contribution(std::uint64_t n, std::uint64_t d) {
    return {ceil_half(g_at_divisor(n, d)), ceil_half(g_at_double(n, d)) - 1};
}

} // namespace

GValue g_of(std::uint64_t n, std::uint64_t y) {
    check_coefficient_range(n);
    const std::uint64_t twice = 2 * n;
    if (y == 0 || twice % y != 0)
        throw std::invalid_argument("g(y) needs y | 2n; got y = " + std::to_string(y) + ", n = " + std::to_string(n));
    return {n, y, static_cast<std::int64_t>(y) - static_cast<std::int64_t>(twice / y)};
}

std::uint64_t KRPolynomial::coefficient(std::uint64_t exponent) const {
    if (exponent > degree()) return 0;
    const std::uint64_t offset = exponent >= center() ? exponent - center() : center() - exponent;
    return half[offset];
}

std::vector<std::uint64_t> KRPolynomial::ascending() const {
    std::vector<std::uint64_t> out(half.rbegin(), half.rend());
    out.insert(out.end(), half.begin() + 1, half.end());
    return out;
}

std::uint64_t KRPolynomial::value_at_one() const {
    std::uint64_t total = half.empty() ? 0 : half.front();
    for (std::size_t i = 1; i < half.size(); ++i) total += 2 * half[i];
    return total;
}

std::uint64_t coefficient_at(const DivisorList& divs, std::int64_t i) {
    check_coefficient_range(divs.n);
    const __int128 twice_i = static_cast<__int128>(i) * 2;
    std::uint64_t count = 0;
    for (std::uint64_t d : divs) {
        if (g_at_divisor(divs.n, d) <= twice_i && twice_i < g_at_double(divs.n, d)) ++count;
    }
    return count;
}

std::uint64_t coefficient_at(std::uint64_t n, std::int64_t i) {
    check_coefficient_range(n);
    return coefficient_at(divisors(n), i);
}

KRPolynomial polynomial(const DivisorList& divs) {
    const std::uint64_t n = divs.n;
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (n >= kPolynomialLimit)
        throw std::out_of_range("n = " + std::to_string(n) + " is too large for a dense coefficient vector (n < 2^31)");

    KRPolynomial poly;
    poly.n = n;
    const auto top = static_cast<std::int64_t>(n) - 1;
    std::vector<std::int64_t> diff;
    try {
        diff.assign(n + 1, 0);
        poly.half.resize(n);
    } catch (const std::bad_alloc&) {
        throw std::runtime_error("cannot allocate the coefficient vector for n = " + std::to_string(n));
    }

    // Only i >= 0 is accumulated; the negative side is its mirror image.
    for (std::uint64_t d : divs) {
        const auto [first, last] = contribution(n, d);
        const std::int64_t lo = std::max<std::int64_t>(first, 0);
        const std::int64_t hi = std::min(last, top);
        if (lo > hi) continue;
        ++diff[lo];
        --diff[hi + 1];
    }
    std::int64_t running = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        running += diff[i];
        poly.half[i] = static_cast<std::uint64_t>(running);
    }
    return poly;
}

KRPolynomial polynomial(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (n >= kPolynomialLimit)
        throw std::out_of_range("n = " + std::to_string(n) + " is too large for a dense coefficient vector (n < 2^31)");
    return polynomial(divisors(n));
}

std::vector<CoefficientRun> coefficient_runs(const DivisorList& divs) {
    check_coefficient_range(divs.n);
    const auto top = static_cast<std::int64_t>(divs.n) - 1;

    std::vector<std::pair<std::int64_t, int>> events;
    events.reserve(2 * divs.size());
    for (std::uint64_t d : divs) {
        const auto [first, last] = contribution(divs.n, d);
        if (first > last) continue;
        events.emplace_back(first, +1);
        events.emplace_back(last + 1, -1);
    }
    std::sort(events.begin(), events.end());

    std::vector<CoefficientRun> runs;
    auto emit = [&](std::int64_t first, std::int64_t last, std::uint64_t value) {
        first = std::max(first, -top);
        last = std::min(last, top);
        if (first > last) return;
        if (!runs.empty() && runs.back().value == value && runs.back().last + 1 == first) {
            runs.back().last = last;
        } else {
            runs.push_back({first, last, value});
        }
    };

    std::int64_t level = 0;
    std::int64_t cursor = -top;
    for (std::size_t k = 0; k < events.size();) {
        const std::int64_t position = events[k].first;
        emit(cursor, position - 1, static_cast<std::uint64_t>(level));
        for (; k < events.size() && events[k].first == position; ++k) level += events[k].second;
        cursor = std::max(cursor, position);
    }
    emit(cursor, top, static_cast<std::uint64_t>(level));
    return runs;
}

std::uint64_t largest_coefficient(const DivisorList& divs) {
    std::uint64_t best = 0;
    for (const auto& run : coefficient_runs(divs)) best = std::max(best, run.value);
    return best;
}

std::uint64_t largest_coefficient(std::uint64_t n) {
    check_coefficient_range(n);
    return largest_coefficient(divisors(n));
}

std::vector<std::uint64_t> coefficient_value_set(const DivisorList& divs) {
    std::vector<std::uint64_t> values{0};
    for (const auto& run : coefficient_runs(divs)) values.push_back(run.value);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

std::vector<std::uint64_t> coefficient_value_set(std::uint64_t n) {
    check_coefficient_range(n);
    return coefficient_value_set(divisors(n));
}

} // namespace qdivisor
