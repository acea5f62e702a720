#pragma once

#include "qdivisor_cli/output.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace qdivisor::cli {

enum class ScanQuantity { F, maxcoeff };

std::optional<ScanQuantity> parse_quantity(std::string_view name);
std::string_view quantity_name(ScanQuantity q);

std::uint64_t compute(ScanQuantity q, std::uint64_t n);

/// Append-only b-file cache, one file per quantity: <dir>/<quantity>.b.
/// I/O failures never throw; they set a warning and disable writes.
class ScanCache {
public:
    ScanCache(std::filesystem::path dir, ScanQuantity q);

    const std::filesystem::path& path() const { return path_; }
    std::optional<std::uint64_t> lookup(std::uint64_t n) const;
    void add(std::uint64_t n, std::uint64_t value);

    /// Appends entries added since the last flush, in ascending n.
    void flush();

    std::size_t size() const { return entries_.size(); }
    const std::string& warning() const { return warning_; }

private:
    std::filesystem::path path_;
    std::map<std::uint64_t, std::uint64_t> entries_;
    std::map<std::uint64_t, std::uint64_t> pending_;
    std::string warning_;
};

struct ScanOptions {
    std::uint64_t start = 1;
    std::uint64_t end = 1;
    ScanQuantity quantity = ScanQuantity::F;
    Format format = Format::bfile;
    unsigned threads = 1;
    ScanCache* cache = nullptr;
};

/// Streams values for start..end in ascending n. Output is independent of
/// the thread count and of the cache contents.
void run_scan(const ScanOptions& opts, std::ostream& out);

} // namespace qdivisor::cli
