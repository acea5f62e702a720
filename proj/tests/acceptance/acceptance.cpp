// Acceptance suite: each criterion runs at full scale with its runtime
// limit, and prints exactly one PASS/FAIL line. Exit status is nonzero if
// any criterion fails.

#include <qdivisor/qdivisor.hpp>
#include <qdivisor_cli/app.hpp>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

using namespace qdivisor;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome fail_at(std::uint64_t n, const std::string& what) { return {false, what + " at n = " + std::to_string(n)}; }

int failures = 0;

void criterion(int id, const std::string& title, double limit_ms, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && limit_ms > 0 && ms >= limit_ms) o = {false, "exceeded runtime limit"};
    if (!o.ok) ++failures;
    const std::string limit = limit_ms > 0 ? ", limit " + std::to_string(static_cast<long>(limit_ms)) + " ms" : "";
    std::printf("[%s] AC%-2d %s (%.3f ms%s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), ms, limit.c_str(),
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
}

const std::vector<std::uint64_t> kP12 = {1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1};

} // namespace

int main() {
    constexpr double kUntimed = 0;

    criterion(1, "golden polynomial P_12 bit-exact", 1, [] {
        if (polynomial(12).ascending() != kP12) return Outcome{false, "library coefficients differ"};
        return Outcome{};
    });

    criterion(1, "golden polynomial P_12 via `poly 12 --format json`", kUntimed, [] {
        std::ostringstream out, err;
        if (cli::run({"poly", "12", "--format", "json"}, out, err) != 0) return Outcome{false, err.str()};
        const auto j = nlohmann::json::parse(out.str());
        if (j.at("coefficients").get<std::vector<std::uint64_t>>() != kP12) return Outcome{false, "CLI coefficients differ"};
        return Outcome{};
    });

    criterion(2, "series oracle equals divisor formula for n <= 200", 30'000, [] {
        const auto series = expand_product(200);
        for (std::uint64_t n = 1; n <= 200; ++n)
            if (!(extract_polynomial(series, n) == polynomial(n))) return fail_at(n, "mismatch");
        return Outcome{};
    });

    criterion(3, "largest coefficient = F(n) for n <= 10^5 (single thread)", 120'000, [] {
        for (std::uint64_t n = 1; n <= 100'000; ++n) {
            const auto divs = divisors(n);
            if (largest_coefficient(divs) != erdos_nicolas_F(divs).value) return fail_at(n, "mismatch");
        }
        return Outcome{};
    });

    criterion(4, "P_n(1) = sigma(n) for n <= 10^4", 60'000, [] {
        for (std::uint64_t n = 1; n <= 10'000; ++n) {
            const auto divs = divisors(n);
            const auto full = polynomial(divs).ascending();
            const auto at_one = std::accumulate(full.begin(), full.end(), std::uint64_t{0});
            if (at_one != sigma(divs)) return fail_at(n, "checksum");
        }
        return Outcome{};
    });

    criterion(5, "palindromic, length 2n-1, unit ends for n <= 10^4", kUntimed, [] {
        for (std::uint64_t n = 1; n <= 10'000; ++n) {
            const auto full = polynomial(n).ascending();
            if (full.size() != 2 * n - 1) return fail_at(n, "length");
            if (full.front() != 1 || full.back() != 1) return fail_at(n, "extremes");
            if (!std::equal(full.begin(), full.end(), full.rbegin())) return fail_at(n, "palindrome");
        }
        return Outcome{};
    });

    criterion(6, "max coefficient > 1 <=> close divisor pair <=> perimeter 2n, n <= 1500", 60'000, [] {
        for (std::uint64_t n = 1; n <= 1500; ++n) {
            const bool coefficient = largest_coefficient(n) > 1;
            const bool pair = has_close_divisor_pair(n).has_value();
            const bool triangle = perimeter_oracle(2 * n).has_value();
            if (coefficient != pair || pair != triangle) return fail_at(n, "disagreement");
        }
        return Outcome{};
    });

    criterion(7, "coefficient value set = {0..F(n)} for n <= 10^4", kUntimed, [] {
        for (std::uint64_t n = 1; n <= 10'000; ++n) {
            const auto divs = divisors(n);
            // dense route: every coefficient of P_n plus the zero tail
            const auto half = polynomial(divs).half;
            std::vector<std::uint64_t> values(half.begin(), half.end());
            values.push_back(0);
            std::sort(values.begin(), values.end());
            values.erase(std::unique(values.begin(), values.end()), values.end());
            std::vector<std::uint64_t> staircase(erdos_nicolas_F(divs).value + 1);
            std::iota(staircase.begin(), staircase.end(), 0);
            if (values != staircase) return fail_at(n, "dense value set");
            if (coefficient_value_set(divs) != staircase) return fail_at(n, "coefficient_value_set");
        }
        return Outcome{};
    });

    criterion(8, "g(y2) - g(y1) >= 2 on consecutive divisors of 2n, n <= 10^4", kUntimed, [] {
        for (std::uint64_t n = 1; n <= 10'000; ++n) {
            const auto ys = divisors(2 * n).divisors;
            for (std::size_t k = 1; k < ys.size(); ++k)
                if (g_of(n, ys[k]).value - g_of(n, ys[k - 1]).value < 2) return fail_at(n, "gap");
        }
        return Outcome{};
    });

    criterion(9, "mean of F strictly increasing at 10^2..10^6", 600'000, [] {
        const auto rows = mean_F_table({100, 1'000, 10'000, 100'000, 1'000'000});
        std::string table;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            table += (k ? ", " : "") + rows[k].fraction();
            if (k > 0 && !mean_less(rows[k - 1], rows[k])) return fail_at(rows[k].x, "not increasing");
        }
        return Outcome{true, table};
    });

    criterion(10, "g(y) = -g(2n/y) for every y | 2n, n <= 10^3", kUntimed, [] {
        for (std::uint64_t n = 1; n <= 1'000; ++n)
            for (std::uint64_t y : divisors(2 * n))
                if (g_of(n, y).value != -g_of(n, 2 * n / y).value) return fail_at(n, "reflection");
        return Outcome{};
    });

    std::printf("%s: %d criterion check(s) failed\n", failures ? "FAILED" : "ALL PASSED", failures);
    return failures ? 1 : 0;
}
