#include "qdivisor_cli/output.hpp"

#include <sstream>
#include <stdexcept>

namespace qdivisor::cli {

using nlohmann::ordered_json;

std::optional<Format> parse_format(std::string_view name) {
    if (name == "human") return Format::human;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "bfile") return Format::bfile;
    return std::nullopt;
}

std::string_view format_name(Format f) {
    switch (f) {
    case Format::human: return "human";
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::bfile: return "bfile";
    }
    return "?";
}

std::string_view kind_name(RecordKind k) {
    switch (k) {
    case RecordKind::poly: return "poly";
    case RecordKind::fvalue: return "fvalue";
    case RecordKind::perimeter: return "perimeter";
    case RecordKind::mean: return "mean";
    case RecordKind::verify: return "verify";
    }
    return "?";
}

std::string OutputRecord::to_json() const {
    ordered_json j;
    j["n"] = n;
    for (const auto& [key, value] : payload.items()) j[key] = value;
    return j.dump();
}

OutputRecord OutputRecord::from_json(RecordKind kind, std::string_view text) {
    auto j = ordered_json::parse(text);
    if (!j.is_object() || !j.contains("n")) throw std::invalid_argument("record JSON must be an object with an \"n\" key");
    OutputRecord r{kind, j.at("n").get<std::uint64_t>(), ordered_json::object()};
    for (const auto& [key, value] : j.items()) {
        if (key != "n") r.payload[key] = value;
    }
    return r;
}

OutputRecord poly_record(const KRPolynomial& p) {
    ordered_json payload;
    payload["degree"] = p.degree();
    payload["coefficients"] = p.ascending();
    return {RecordKind::poly, p.n, std::move(payload)};
}

OutputRecord fvalue_record(const WindowWitness& w) {
    ordered_json payload;
    payload["F"] = w.value;
    payload["chain"] = w.chain;
    payload["t"] = w.t_endpoint;
    return {RecordKind::fvalue, w.n, std::move(payload)};
}

OutputRecord perimeter_record(std::uint64_t n, const PerimeterAnswer& a) {
    ordered_json payload;
    payload["perimeter"] = 2 * n;
    payload["is_perimeter"] = a.is_perimeter;
    payload["pair"] = a.pair ? ordered_json::array({a.pair->d, a.pair->d_prime}) : ordered_json(nullptr);
    payload["triangle"] = a.witness ? ordered_json::array({a.witness->a, a.witness->b, a.witness->c}) : ordered_json(nullptr);
    return {RecordKind::perimeter, n, std::move(payload)};
}

std::string render_poly_human(const KRPolynomial& p, std::size_t width) {
    std::vector<std::string> terms;
    for (std::uint64_t e = p.degree() + 1; e-- > 0;) {
        const std::uint64_t c = p.coefficient(e);
        if (c == 0) continue;
        std::string t;
        if (e == 0) {
            t = std::to_string(c);
        } else {
            if (c != 1) t = std::to_string(c);
            t += "q";
            if (e != 1) t += "^" + std::to_string(e);
        }
        terms.push_back(std::move(t));
    }

    std::string out;
    std::size_t line = 0;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k == 0) {
            out += terms[k];
            line = terms[k].size();
            continue;
        }
        if (line + 3 + terms[k].size() > width) {
            out += "\n+ " + terms[k];
            line = 2 + terms[k].size();
        } else {
            out += " + " + terms[k];
            line += 3 + terms[k].size();
        }
    }
    return out + "\n";
}

std::string render_poly(const KRPolynomial& p, Format f) {
    switch (f) {
    case Format::human: return render_poly_human(p);
    case Format::json: return poly_record(p).to_json() + "\n";
    case Format::csv: {
        std::string out = "exponent,coefficient\n";
        const auto coeffs = p.ascending();
        for (std::size_t e = 0; e < coeffs.size(); ++e) out += std::to_string(e) + "," + std::to_string(coeffs[e]) + "\n";
        return out;
    }
    case Format::bfile: break;
    }
    throw std::invalid_argument("poly supports --format human, json or csv");
}

std::string render_fvalue(const WindowWitness& w, Format f) {
    switch (f) {
    case Format::human: {
        std::string out = "F(" + std::to_string(w.n) + ") = " + std::to_string(w.value);
        if (w.value >= 2) {
            out += ", witness divisors ";
            for (std::uint64_t d : w.chain) out += std::to_string(d) + " < ";
            out += std::to_string(2 * w.chain.front()) + " = 2·" + std::to_string(w.chain.front());
        }
        return out + "\n";
    }
    case Format::json: return fvalue_record(w).to_json() + "\n";
    case Format::csv: {
        std::string chain;
        for (std::uint64_t d : w.chain) chain += (chain.empty() ? "" : " ") + std::to_string(d);
        return "n,F,chain\n" + std::to_string(w.n) + "," + std::to_string(w.value) + "," + chain + "\n";
    }
    case Format::bfile: return std::to_string(w.n) + " " + std::to_string(w.value) + "\n";
    }
    return {};
}

std::string render_perimeter(std::uint64_t n, const PerimeterAnswer& a, Format f) {
    const std::string p = std::to_string(2 * n);
    switch (f) {
    case Format::human: {
        if (!a.is_perimeter) return p + " is not the perimeter of a Pythagorean triangle\n";
        std::string out = p + " is the perimeter of a Pythagorean triangle";
        if (a.witness) {
            const auto& t = *a.witness;
            out += ": " + std::to_string(t.a) + "^2 + " + std::to_string(t.b) + "^2 = " + std::to_string(t.c) + "^2";
        }
        if (a.pair) out += " (divisors " + std::to_string(a.pair->d) + " < " + std::to_string(a.pair->d_prime) + " < " +
                           std::to_string(2 * a.pair->d) + " of " + std::to_string(n) + ")";
        return out + "\n";
    }
    case Format::json: return perimeter_record(n, a).to_json() + "\n";
    case Format::csv: {
        std::string out = "n,perimeter,is_perimeter,a,b,c\n" + std::to_string(n) + "," + p + "," + (a.is_perimeter ? "1" : "0");
        if (a.witness) {
            out += "," + std::to_string(a.witness->a) + "," + std::to_string(a.witness->b) + "," + std::to_string(a.witness->c);
        } else {
            out += ",,,";
        }
        return out + "\n";
    }
    case Format::bfile: return std::to_string(n) + " " + (a.is_perimeter ? "1" : "0") + "\n";
    }
    return {};
}

bool strictly_increasing(const std::vector<MeanRow>& rows) {
    for (std::size_t k = 1; k < rows.size(); ++k)
        if (!mean_less(rows[k - 1], rows[k])) return false;
    return true;
}

std::string render_mean(const std::vector<MeanRow>& rows, Format f) {
    std::string out;
    switch (f) {
    case Format::human:
        for (const auto& r : rows) out += std::to_string(r.x) + " " + r.fraction() + " " + r.decimal() + "\n";
        if (rows.size() >= 2) out += std::string("strictly increasing: ") + (strictly_increasing(rows) ? "true" : "false") + "\n";
        return out;
    case Format::json: {
        ordered_json j;
        j["rows"] = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json row;
            row["x"] = r.x;
            row["sum"] = r.sum;
            row["mean"] = r.fraction();
            row["decimal"] = r.decimal();
            j["rows"].push_back(std::move(row));
        }
        j["strictly_increasing"] = strictly_increasing(rows);
        return j.dump() + "\n";
    }
    case Format::csv:
        out = "x,sum,mean,decimal\n";
        for (const auto& r : rows) out += std::to_string(r.x) + "," + std::to_string(r.sum) + "," + r.fraction() + "," + r.decimal() + "\n";
        return out;
    case Format::bfile:
        break;
    }
    throw std::invalid_argument("mean supports --format human, json or csv");
}

} // namespace qdivisor::cli
