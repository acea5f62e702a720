#include "qdivisor/erdos_nicolas.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qdivisor {

namespace {

using u128 = unsigned __int128;

void check_range(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (n >= (std::uint64_t{1} << 62)) throw std::out_of_range("n exceeds the supported range n < 2^62");
}

} // namespace

std::uint64_t window_count(const DivisorList& divs, Ratio t) {
    if (t.num == 0 || t.den == 0) throw std::invalid_argument("window_count needs t > 0");
    // t/2 < d <= t  <=>  num < 2 d den  and  d den <= num
    return static_cast<std::uint64_t>(std::count_if(divs.begin(), divs.end(), [&](std::uint64_t d) {
        const u128 scaled = static_cast<u128>(d) * t.den;
        return static_cast<u128>(t.num) < 2 * scaled && scaled <= t.num;
    }));
}

std::uint64_t window_count(std::uint64_t n, Ratio t) {
    if (t.num == 0 || t.den == 0) throw std::invalid_argument("window_count needs t > 0");
    return window_count(divisors(n), t);
}

bool WindowWitness::well_formed() const {
    if (chain.empty() || chain.size() != value) return false;
    if (chain.back() != t_endpoint) return false;
    for (std::size_t k = 0; k < chain.size(); ++k) {
        if (chain[k] == 0 || n % chain[k] != 0) return false;
        if (k > 0 && chain[k - 1] >= chain[k]) return false;
    }
    return static_cast<u128>(chain.back()) < 2 * static_cast<u128>(chain.front());
}

WindowWitness erdos_nicolas_F(const DivisorList& divs) {
    check_range(divs.n);
    const auto& d = divs.divisors;
    std::size_t best_left = 0, best_len = 0;
    std::size_t right = 0;
    for (std::size_t left = 0; left < d.size(); ++left) {
        right = std::max(right, left);
        while (right + 1 < d.size() && d[right + 1] < 2 * d[left]) ++right;
        const std::size_t len = right - left + 1;
        if (len > best_len) {
            best_len = len;
            best_left = left;
        }
    }

    WindowWitness w;
    w.n = divs.n;
    w.value = best_len;
    w.chain.assign(d.begin() + best_left, d.begin() + best_left + best_len);
    w.t_endpoint = w.chain.back();
    return w;
}

WindowWitness erdos_nicolas_F(std::uint64_t n) {
    check_range(n);
    return erdos_nicolas_F(divisors(n));
}

std::string MeanRow::fraction() const { return std::to_string(numerator) + "/" + std::to_string(denominator); }

std::string MeanRow::decimal() const {
    const u128 scaled = (static_cast<u128>(sum) * 2'000'000 + x) / (2 * static_cast<u128>(x));
    const auto whole = static_cast<std::uint64_t>(scaled / 1'000'000);
    const auto frac = static_cast<std::uint64_t>(scaled % 1'000'000);
    std::string digits = std::to_string(frac);
    return std::to_string(whole) + "." + std::string(6 - digits.size(), '0') + digits;
}

bool mean_less(const MeanRow& a, const MeanRow& b) {
    return static_cast<u128>(a.sum) * b.x < static_cast<u128>(b.sum) * a.x;
}

std::vector<MeanRow> mean_F_table(const std::vector<std::uint64_t>& checkpoints) {
    for (std::size_t k = 0; k < checkpoints.size(); ++k) {
        if (checkpoints[k] == 0) throw std::invalid_argument("checkpoints must be positive");
        if (checkpoints[k] > kMeanTableLimit) throw std::out_of_range("checkpoints are limited to 10^7");
        if (k > 0 && checkpoints[k] <= checkpoints[k - 1])
            throw std::invalid_argument("checkpoints must be strictly increasing");
    }

    std::vector<MeanRow> rows;
    rows.reserve(checkpoints.size());
    std::uint64_t sum = 0;
    std::uint64_t k = 0;
    for (std::uint64_t x : checkpoints) {
        for (; k < x; ++k) sum += erdos_nicolas_F(k + 1).value;
        const std::uint64_t g = std::gcd(sum, x);
        rows.push_back({x, sum, sum / g, x / g});
    }
    return rows;
}

} // namespace qdivisor
