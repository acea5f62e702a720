#include "qdivisor_cli/app.hpp"

#include "qdivisor_cli/output.hpp"
#include "qdivisor_cli/parallel.hpp"
#include "qdivisor_cli/scan.hpp"
#include "qdivisor_cli/verify.hpp"

#include <qdivisor/errors.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>

namespace qdivisor::cli {

unsigned default_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Format resolve_format(const std::string& requested, Format fallback) {
    if (requested.empty()) return fallback;
    if (auto f = parse_format(requested)) return *f;
    throw UsageError("unknown --format '" + requested + "' (expected human, json, csv or bfile)");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kassel-Reutenauer polynomials and the Erdos-Nicolas function", "qdivisor-lab"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_opt;
    std::string cache_opt;
    unsigned threads = default_threads();
    app.add_option("--format", format_opt, "Output format: human, json, csv or bfile");
    app.add_option("--cache", cache_opt, std::string("Scan cache directory (default: $") + kCacheEnv + ")");
    app.add_option("--threads", threads, "Worker threads for scan and verify")->check(CLI::PositiveNumber);

    std::uint64_t n = 0;
    auto* poly = app.add_subcommand("poly", "Print P_n(q)");
    poly->add_option("n", n, "Index n >= 1")->required();
    auto* fn = app.add_subcommand("fn", "Print F(n) with a witness divisor chain");
    fn->add_option("n", n, "Index n >= 1")->required();
    auto* perimeter = app.add_subcommand("perimeter", "Decide whether 2n is a Pythagorean perimeter");
    perimeter->add_option("n", n, "Index n >= 1")->required();

    std::uint64_t start = 0, end = 0;
    std::string what;
    auto* scan = app.add_subcommand("scan", "Tabulate F or the largest coefficient over a range");
    scan->add_option("start", start, "First n")->required();
    scan->add_option("end", end, "Last n")->required();
    scan->add_option("what", what, "F or maxcoeff")->required();

    VerifyOptions vopts;
    auto* verify = app.add_subcommand("verify", "Run every cross-check suite");
    verify->add_option("--max-n", vopts.max_n, "Range for the per-n suites")->capture_default_str();
    verify->add_option("--oracle-max", vopts.oracle_max_n, "Range for the series-oracle comparison (<= 500)")
        ->capture_default_str();

    std::vector<std::uint64_t> checkpoints;
    auto* mean = app.add_subcommand("mean", "Running mean of F at increasing checkpoints");
    mean->add_option("checkpoints", checkpoints, "Strictly increasing x values")->required();

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.push_back("qdivisor-lab");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "qdivisor-lab: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (*poly) {
            out << render_poly(polynomial(n), resolve_format(format_opt, Format::human));
        } else if (*fn) {
            out << render_fvalue(erdos_nicolas_F(n), resolve_format(format_opt, Format::human));
        } else if (*perimeter) {
            out << render_perimeter(n, is_double_perimeter(n), resolve_format(format_opt, Format::human));
        } else if (*mean) {
            const Format f = resolve_format(format_opt, Format::human);
            out << render_mean(mean_F_table(checkpoints), f);
        } else if (*scan) {
            ScanOptions sopts;
            sopts.start = start;
            sopts.end = end;
            sopts.threads = threads;
            sopts.format = resolve_format(format_opt, Format::bfile);
            auto q = parse_quantity(what);
            if (!q) throw UsageError("scan quantity must be F or maxcoeff, got '" + what + "'");
            sopts.quantity = *q;
            if (start < 1 || start > end) throw UsageError("scan range is empty: " + std::to_string(start) + " > " + std::to_string(end));

            std::string dir = cache_opt;
            if (dir.empty()) {
                if (const char* env = std::getenv(kCacheEnv)) dir = env;
            }
            std::optional<ScanCache> cache;
            if (!dir.empty()) {
                cache.emplace(dir, *q);
                sopts.cache = &*cache;
            }
            run_scan(sopts, out);
            if (cache && !cache->warning().empty()) err << "qdivisor-lab: warning: " << cache->warning() << "\n";
        } else if (*verify) {
            vopts.threads = threads;
            const Format f = resolve_format(format_opt, Format::human);
            const auto results = run_verify(vopts);
            bool all_ok = true;
            nlohmann::ordered_json j;
            j["suites"] = nlohmann::ordered_json::array();
            for (const auto& r : results) {
                all_ok = all_ok && r.ok();
                if (f == Format::json) {
                    nlohmann::ordered_json s;
                    s["name"] = r.name;
                    s["checked"] = r.checked;
                    s["total"] = r.total;
                    s["ok"] = r.ok();
                    s["counterexample"] = r.counterexample ? nlohmann::ordered_json(*r.counterexample) : nullptr;
                    j["suites"].push_back(std::move(s));
                } else {
                    out << describe(r) << "\n";
                }
            }
            if (f == Format::json) {
                j["ok"] = all_ok;
                out << j.dump() << "\n";
            } else {
                out << (all_ok ? "all suites passed" : "verification FAILED") << "\n";
            }
            return all_ok ? kSuccess : kVerificationFailed;
        }
    } catch (const invariant_error& e) {
        err << "qdivisor-lab: internal invariant breach: " << e.what() << "\n";
        return kInvariantBreach;
    } catch (const inexact_division& e) {
        err << "qdivisor-lab: internal invariant breach: " << e.what() << "\n";
        return kInvariantBreach;
    } catch (const std::exception& e) {
        err << "qdivisor-lab: " << e.what() << "\n";
        return kUsageError;
    }
    return kSuccess;
}

} // namespace qdivisor::cli
