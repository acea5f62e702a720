#include "qdivisor/pythagorean.hpp"

#include "qdivisor/errors.hpp"

#include <stdexcept>
#include <string>

namespace qdivisor {

using u128 = unsigned __int128;

bool TriangleWitness::valid() const {
    if (a == 0 || a > b || b >= c) return false;
    if (static_cast<u128>(a) + b + c != perimeter) return false;
    return static_cast<u128>(a) * a + static_cast<u128>(b) * b == static_cast<u128>(c) * c;
}

std::optional<ClosePair> has_close_divisor_pair(const DivisorList& divs) {
    // The smallest d with any partner has its successor as smallest partner.
    const auto& d = divs.divisors;
    for (std::size_t k = 0; k + 1 < d.size(); ++k) {
        if (d[k + 1] < 2 * d[k]) return ClosePair{d[k], d[k + 1]};
    }
    return std::nullopt;
}

std::optional<ClosePair> has_close_divisor_pair(std::uint64_t n) {
    if (n >= (std::uint64_t{1} << 62)) throw std::out_of_range("n exceeds the supported range n < 2^62");
    return has_close_divisor_pair(divisors(n));
}

std::optional<TriangleWitness> perimeter_oracle(std::uint64_t p) {
    if (p % 2 != 0) throw std::invalid_argument("a right triangle with integer sides has even perimeter");
    if (p > kPerimeterOracleLimit) throw std::out_of_range("perimeter_oracle is limited to p <= 10^4");
    for (std::uint64_t a = 1; 3 * a < p; ++a) {
        for (std::uint64_t b = a; a + 2 * b < p; ++b) {
            const std::uint64_t c = p - a - b;
            if (a * a + b * b == c * c) return TriangleWitness{a, b, c, p};
        }
    }
    return std::nullopt;
}

std::optional<TriangleWitness> triangle_from_pair(std::uint64_t n, ClosePair pair) {
    const std::uint64_t m = pair.d;
    if (m == 0 || pair.d_prime <= m || pair.d_prime >= 2 * m) return std::nullopt;
    const u128 joint = static_cast<u128>(m) * pair.d_prime;
    if (n % joint != 0) return std::nullopt;
    const auto k = static_cast<std::uint64_t>(n / joint);
    const std::uint64_t u = pair.d_prime - m;
    // n = k m (m + u) bounds every side below 2n.
    std::uint64_t x = k * (m * m - u * u);
    std::uint64_t y = 2 * k * m * u;
    const std::uint64_t z = k * (m * m + u * u);
    if (x > y) std::swap(x, y);
    return TriangleWitness{x, y, z, 2 * n};
}

std::optional<ClosePair> jointly_dividing_pair(const DivisorList& divs) {
    const auto& d = divs.divisors;
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size() && d[j] < 2 * d[i]; ++j) {
            if (divs.n % (static_cast<u128>(d[i]) * d[j]) == 0) return ClosePair{d[i], d[j]};
        }
    }
    return std::nullopt;
}

PerimeterAnswer is_double_perimeter(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (n >= kDoublePerimeterLimit) throw std::out_of_range("n exceeds the supported range n < 2^61");

    const DivisorList divs = divisors(n);
    PerimeterAnswer answer;
    answer.pair = has_close_divisor_pair(divs);
    answer.is_perimeter = answer.pair.has_value();

    if (answer.is_perimeter) {
        // A jointly dividing pair always exists: for the close pair (d, d')
        // write d = g a, d' = g b with gcd(a, b) = 1; then lcm(d, d') = g a b
        // divides n, so a b | n and a < b < 2a.
        if (auto joint = jointly_dividing_pair(divs)) {
            answer.witness = triangle_from_pair(n, *joint);
            answer.route = WitnessRoute::joint_pair;
        }
        if (!answer.witness || !answer.witness->valid()) {
            answer.witness.reset();
            if (n <= kPerimeterCrossCheckLimit) {
                answer.witness = perimeter_oracle(2 * n);
                answer.route = WitnessRoute::oracle;
            }
        }
    }

    if (n <= kPerimeterCrossCheckLimit) {
        const bool oracle_found = perimeter_oracle(2 * n).has_value();
        if (oracle_found != answer.is_perimeter || (answer.is_perimeter && !answer.witness))
            throw invariant_error("perimeter criterion and brute force disagree at n = " + std::to_string(n));
    }
    return answer;
}

} // namespace qdivisor
