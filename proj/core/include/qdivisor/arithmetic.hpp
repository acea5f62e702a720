#pragma once

#include <cstdint>
#include <vector>

namespace qdivisor {

/// Largest supported input for the arithmetic layer (exclusive): 2^63.
inline constexpr std::uint64_t kArithmeticLimit = std::uint64_t{1} << 63;

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-power decomposition of n. Primes are strictly increasing; the
/// empty list stands for n = 1.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors;

    /// Product of (exponent + 1), i.e. the number of divisors.
    std::uint64_t divisor_count() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Sorted, duplicate-free list of every divisor of n.
struct DivisorList {
    std::uint64_t n = 1;
    std::vector<std::uint64_t> divisors;

    std::size_t size() const { return divisors.size(); }
    auto begin() const { return divisors.begin(); }
    auto end() const { return divisors.end(); }

    friend bool operator==(const DivisorList&, const DivisorList&) = default;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Trial division by 2, 3 and 6k +/- 1. Throws std::invalid_argument for
/// n = 0 and std::out_of_range for n >= 2^63.
Factorization factorize(std::uint64_t n);

DivisorList divisors(std::uint64_t n);
DivisorList divisors(const Factorization& f);

/// Sum of divisors. Throws std::overflow_error if the sum leaves 64 bits.
std::uint64_t sigma(std::uint64_t n);
std::uint64_t sigma(const DivisorList& d);

} // namespace qdivisor
