#pragma once

#include <qdivisor/erdos_nicolas.hpp>
#include <qdivisor/kr_poly.hpp>
#include <qdivisor/pythagorean.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qdivisor::cli {

enum class Format { human, json, csv, bfile };

std::optional<Format> parse_format(std::string_view name);
std::string_view format_name(Format f);

enum class RecordKind { poly, fvalue, perimeter, mean, verify };

std::string_view kind_name(RecordKind k);

/// One rendered result. JSON renders flat, "n" first, followed by the
/// kind-specific payload fields; the kind itself is implied by the command.
struct OutputRecord {
    RecordKind kind;
    std::uint64_t n;
    nlohmann::ordered_json payload;  ///< object without the "n" key

    std::string to_json() const;
    static OutputRecord from_json(RecordKind kind, std::string_view text);

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord poly_record(const KRPolynomial& p);
OutputRecord fvalue_record(const WindowWitness& w);
OutputRecord perimeter_record(std::uint64_t n, const PerimeterAnswer& a);

/// Descending powers with implicit unit coefficients ("2q^13"), wrapped
/// before `width` columns; continuation lines start with "+ ".
std::string render_poly_human(const KRPolynomial& p, std::size_t width = 72);
std::string render_poly(const KRPolynomial& p, Format f);

std::string render_fvalue(const WindowWitness& w, Format f);
std::string render_perimeter(std::uint64_t n, const PerimeterAnswer& a, Format f);
std::string render_mean(const std::vector<MeanRow>& rows, Format f);

bool strictly_increasing(const std::vector<MeanRow>& rows);

} // namespace qdivisor::cli
