#include "qdivisor_cli/verify.hpp"

#include "qdivisor_cli/parallel.hpp"

#include <qdivisor/arithmetic.hpp>
#include <qdivisor/erdos_nicolas.hpp>
#include <qdivisor/kr_poly.hpp>
#include <qdivisor/pythagorean.hpp>
#include <qdivisor/series_oracle.hpp>

#include <algorithm>
#include <stdexcept>

namespace qdivisor::cli {

namespace {

template <typename Pred>
SuiteResult range_suite(std::string name, std::uint64_t lo, std::uint64_t hi, unsigned threads, Pred&& ok) {
    SuiteResult r;
    r.name = std::move(name);
    r.total = hi >= lo ? hi - lo + 1 : 0;
    r.counterexample = first_failure(lo, hi, threads, ok);
    r.checked = r.counterexample ? *r.counterexample - lo : r.total;
    return r;
}

bool staircase_ok(const DivisorList& divs) {
    const auto values = coefficient_value_set(divs);
    for (std::size_t k = 0; k < values.size(); ++k)
        if (values[k] != k) return false;
    return values.back() == largest_coefficient(divs);
}

bool gap_ok(std::uint64_t n) {
    const auto ys = divisors(2 * n).divisors;
    for (std::size_t k = 1; k < ys.size(); ++k)
        if (g_of(n, ys[k]).value - g_of(n, ys[k - 1]).value < 2) return false;
    return true;
}

bool reflection_ok(std::uint64_t n) {
    for (std::uint64_t y : divisors(2 * n))
        if (g_of(n, y).value != -g_of(n, 2 * n / y).value) return false;
    return true;
}

bool window_brute_force_ok(std::uint64_t n) {
    const auto divs = divisors(n);
    const auto w = erdos_nicolas_F(divs);
    if (!w.well_formed()) return false;
    std::uint64_t best = 0;
    for (std::uint64_t t : divs) best = std::max(best, window_count(divs, {t}));
    return best == w.value;
}

bool pythagorean_ok(std::uint64_t n) {
    const auto answer = is_double_perimeter(n);
    const bool pair = has_close_divisor_pair(n).has_value();
    const bool coefficient = largest_coefficient(n) > 1;
    const bool brute = perimeter_oracle(2 * n).has_value();
    if (answer.is_perimeter != pair || pair != coefficient || coefficient != brute) return false;
    return !answer.is_perimeter || (answer.witness && answer.witness->valid());
}

} // namespace

std::vector<SuiteResult> run_verify(const VerifyOptions& opts) {
    if (opts.max_n == 0) throw std::invalid_argument("--max-n must be at least 1");
    if (opts.max_n >= kPolynomialLimit) throw std::out_of_range("--max-n must be below 2^31");
    if (opts.oracle_max_n > kVerifyOracleLimit) throw std::invalid_argument("--oracle-max must be at most 500");

    const std::uint64_t max_n = opts.max_n;
    const unsigned threads = opts.threads;
    std::vector<SuiteResult> results;

    {
        const std::vector<std::uint64_t> expected = {1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2,
                                                     2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1};
        results.push_back(range_suite("golden P_12", 12, 12, 1,
                                      [&](std::uint64_t n) { return polynomial(n).ascending() == expected; }));
    }

    if (opts.oracle_max_n > 0) {
        const auto series = expand_product(static_cast<std::uint32_t>(opts.oracle_max_n));
        results.push_back(range_suite("oracle equivalence", 1, opts.oracle_max_n, threads, [&](std::uint64_t n) {
            return extract_polynomial(series, n) == polynomial(n);
        }));
    }

    results.push_back(range_suite("theorem 1 (largest coefficient = F)", 1, max_n, threads, [](std::uint64_t n) {
        const auto divs = divisors(n);
        return largest_coefficient(divs) == erdos_nicolas_F(divs).value;
    }));

    results.push_back(range_suite("checksum P_n(1) = sigma(n)", 1, max_n, threads, [](std::uint64_t n) {
        const auto divs = divisors(n);
        return polynomial(divs).value_at_one() == sigma(divs);
    }));

    results.push_back(range_suite("palindrome, degree 2n-2, unit ends", 1, max_n, threads, [](std::uint64_t n) {
        const auto full = polynomial(n).ascending();
        return full.size() == 2 * n - 1 && full.front() == 1 && full.back() == 1 &&
               std::equal(full.begin(), full.end(), full.rbegin());
    }));

    results.push_back(range_suite("staircase {0..F(n)}", 1, max_n, threads,
                                  [](std::uint64_t n) { return staircase_ok(divisors(n)); }));

    results.push_back(range_suite("g gap >= 2 on divisors of 2n", 1, max_n, threads, gap_ok));

    results.push_back(range_suite("reflection g(y) = -g(2n/y)", 1, max_n, threads, reflection_ok));

    results.push_back(range_suite("F brute force and witness", 1, std::min(max_n, kVerifyBruteForceLimit), threads,
                                  window_brute_force_ok));

    results.push_back(range_suite("pythagorean equivalence", 1, std::min(max_n, kVerifyPythagoreanLimit), threads,
                                  pythagorean_ok));

    {
        std::vector<std::uint64_t> checkpoints;
        for (std::uint64_t x = 100; x <= max_n && x <= kMeanTableLimit; x *= 10) checkpoints.push_back(x);
        SuiteResult r;
        r.name = "mean F strictly increasing";
        r.total = checkpoints.size() >= 2 ? checkpoints.size() - 1 : 0;
        if (r.total == 0) r.note = "skipped: needs --max-n >= 1000";
        const auto rows = mean_F_table(checkpoints);
        for (std::size_t k = 1; k < rows.size(); ++k) {
            if (!mean_less(rows[k - 1], rows[k])) {
                r.counterexample = rows[k].x;
                break;
            }
            ++r.checked;
        }
        results.push_back(std::move(r));
    }

    return results;
}

std::string describe(const SuiteResult& r) {
    std::string line = r.name + ": " + std::to_string(r.checked) + "/" + std::to_string(r.total);
    if (r.ok()) {
        line += " ok";
    } else {
        line += " FAILED";
        if (r.counterexample) line += ", smallest counterexample n = " + std::to_string(*r.counterexample);
    }
    if (!r.note.empty()) line += " (" + r.note + ")";
    return line;
}

} // namespace qdivisor::cli
