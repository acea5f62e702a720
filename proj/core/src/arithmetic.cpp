#include "qdivisor/arithmetic.hpp"

#include "qdivisor/checked.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qdivisor {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

void check_input(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
    if (n >= kArithmeticLimit)
        throw std::out_of_range("n = " + std::to_string(n) + " exceeds the supported range n < 2^63");
}

// Cofactors below this bound are cheaper to finish by trial division.
constexpr std::uint64_t kPrimalityShortcut = std::uint64_t{1} << 20;

} // namespace

std::uint64_t Factorization::divisor_count() const {
    std::uint64_t count = 1;
    for (const auto& pp : factors) count = checked::mul<std::uint64_t>(count, pp.exponent + 1, "divisor count");
    return count;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are a proven witness set for n < 3.3 * 10^24.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Factorization factorize(std::uint64_t n) {
    check_input(n);
    Factorization f;
    f.n = n;
    std::uint64_t m = n;

    auto strip = [&](std::uint64_t p) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) f.factors.push_back({p, e});
        return e != 0;
    };
    auto finish_if_prime = [&] {
        if (m >= kPrimalityShortcut && is_prime(m)) {
            f.factors.push_back({m, 1});
            m = 1;
        }
    };

    strip(2);
    strip(3);
    finish_if_prime();
    for (std::uint64_t p = 5; m > 1 && p <= m / p; p += 6) {
        if (strip(p)) finish_if_prime();
        if (m > 1 && p + 2 <= m / (p + 2) && strip(p + 2)) finish_if_prime();
    }
    if (m > 1) f.factors.push_back({m, 1});
    return f;
}

DivisorList divisors(const Factorization& f) {
    DivisorList out;
    out.n = f.n;
    out.divisors.reserve(f.divisor_count());
    out.divisors.push_back(1);
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = out.divisors.size();
        std::uint64_t power = 1;
        for (unsigned k = 1; k <= e; ++k) {
            power *= p;
            for (std::size_t j = 0; j < base; ++j) out.divisors.push_back(out.divisors[j] * power);
        }
    }
    std::sort(out.divisors.begin(), out.divisors.end());
    return out;
}

DivisorList divisors(std::uint64_t n) { return divisors(factorize(n)); }

std::uint64_t sigma(const DivisorList& d) {
    std::uint64_t total = 0;
    for (std::uint64_t x : d) total = checked::add(total, x, "sigma(n)");
    return total;
}

std::uint64_t sigma(std::uint64_t n) { return sigma(divisors(n)); }

} // namespace qdivisor
