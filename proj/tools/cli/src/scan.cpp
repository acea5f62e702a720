#include "qdivisor_cli/scan.hpp"

#include "qdivisor_cli/parallel.hpp"

#include <qdivisor/erdos_nicolas.hpp>
#include <qdivisor/kr_poly.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <vector>

namespace qdivisor::cli {

std::optional<ScanQuantity> parse_quantity(std::string_view name) {
    if (name == "F") return ScanQuantity::F;
    if (name == "maxcoeff") return ScanQuantity::maxcoeff;
    return std::nullopt;
}

std::string_view quantity_name(ScanQuantity q) { return q == ScanQuantity::F ? "F" : "maxcoeff"; }

std::uint64_t compute(ScanQuantity q, std::uint64_t n) {
    return q == ScanQuantity::F ? erdos_nicolas_F(n).value : largest_coefficient(n);
}

ScanCache::ScanCache(std::filesystem::path dir, ScanQuantity q) {
    path_ = std::move(dir) / (std::string(quantity_name(q)) + ".b");
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::uint64_t n = 0, value = 0;
        std::string rest;
        if (!(fields >> n >> value) || (fields >> rest)) {
            warning_ = "ignoring malformed cache line " + std::to_string(lineno) + " in " + path_.string();
            continue;
        }
        entries_.emplace(n, value);
    }
}

std::optional<std::uint64_t> ScanCache::lookup(std::uint64_t n) const {
    if (auto it = entries_.find(n); it != entries_.end()) return it->second;
    return std::nullopt;
}

void ScanCache::add(std::uint64_t n, std::uint64_t value) {
    if (entries_.emplace(n, value).second) pending_.emplace(n, value);
}

void ScanCache::flush() {
    if (pending_.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(path_.parent_path(), ec);
    std::ofstream out(path_, std::ios::app);
    if (!out) {
        warning_ = "cannot write cache file " + path_.string() + "; results were not cached";
        pending_.clear();
        return;
    }
    for (const auto& [n, value] : pending_) out << n << ' ' << value << '\n';
    out.flush();
    if (!out) warning_ = "error while writing cache file " + path_.string();
    pending_.clear();
}

void run_scan(const ScanOptions& opts, std::ostream& out) {
    if (opts.start < 1 || opts.start > opts.end)
        throw std::invalid_argument("scan needs 1 <= start <= end; got " + std::to_string(opts.start) + " " +
                                    std::to_string(opts.end));
    if (opts.end >= kCoefficientLimit) throw std::out_of_range("scan end must be below 2^62");
    if (opts.format == Format::human) throw std::invalid_argument("scan supports --format bfile, csv or json");

    const std::string_view name = quantity_name(opts.quantity);
    if (opts.format == Format::csv) out << "n," << name << '\n';
    if (opts.format == Format::json) out << '[';

    // Blocks bound the memory held per scan; within a block workers fill
    // disjoint slots, and the block is printed in order afterwards.
    constexpr std::uint64_t kBlock = 1 << 16;
    bool first_record = true;
    for (std::uint64_t lo = opts.start;; lo += kBlock) {
        const std::uint64_t hi = opts.end - lo < kBlock ? opts.end : lo + kBlock - 1;
        std::vector<std::uint64_t> values(hi - lo + 1);
        std::vector<char> cached(values.size(), 0);
        if (opts.cache) {
            for (std::uint64_t n = lo; n <= hi; ++n) {
                if (auto v = opts.cache->lookup(n)) {
                    values[n - lo] = *v;
                    cached[n - lo] = 1;
                }
            }
        }
        parallel_chunks(lo, hi, opts.threads, [&](std::uint64_t first, std::uint64_t last) {
            for (std::uint64_t n = first; n <= last; ++n)
                if (!cached[n - lo]) values[n - lo] = compute(opts.quantity, n);
        }, 256);

        std::string buffer;
        for (std::uint64_t n = lo; n <= hi; ++n) {
            const std::uint64_t v = values[n - lo];
            if (opts.cache && !cached[n - lo]) opts.cache->add(n, v);
            switch (opts.format) {
            case Format::bfile: buffer += std::to_string(n) + ' ' + std::to_string(v) + '\n'; break;
            case Format::csv: buffer += std::to_string(n) + ',' + std::to_string(v) + '\n'; break;
            case Format::json:
                buffer += first_record ? "" : ",";
                buffer += "{\"n\":" + std::to_string(n) + ",\"" + std::string(name) + "\":" + std::to_string(v) + "}";
                first_record = false;
                break;
            case Format::human: break;
            }
        }
        out << buffer;
        if (hi == opts.end) break;
    }
    if (opts.format == Format::json) out << "]\n";
    if (opts.cache) opts.cache->flush();
}

} // namespace qdivisor::cli
