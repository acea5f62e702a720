#include "qdivisor/laurent.hpp"

#include "qdivisor/checked.hpp"
#include "qdivisor/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdivisor {

LaurentPoly::LaurentPoly(std::int64_t offset, std::vector<std::int64_t> coeffs)
    : offset_(offset), coeffs_(std::move(coeffs)) {
    normalize();
}

LaurentPoly LaurentPoly::monomial(std::int64_t c, std::int64_t exponent) {
    return LaurentPoly(exponent, {c});
}

void LaurentPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c != 0; });
    offset_ += first - coeffs_.begin();
    coeffs_.erase(coeffs_.begin(), first);
    if (coeffs_.empty()) offset_ = 0;
}

std::int64_t LaurentPoly::coefficient(std::int64_t exponent) const {
    if (is_zero() || exponent < min_exponent() || exponent > max_exponent()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - offset_)];
}

std::int64_t LaurentPoly::sum() const {
    std::int64_t total = 0;
    for (std::int64_t c : coeffs_) total = checked::add(total, c, "Laurent evaluation");
    return total;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
    LaurentPoly out = *this;
    if (!out.is_zero()) out.offset_ = checked::add(out.offset_, k, "exponent shift");
    return out;
}

void LaurentPoly::add_scaled(const LaurentPoly& rhs, std::int64_t scale) {
    if (rhs.is_zero() || scale == 0) return;
    if (is_zero()) {
        offset_ = rhs.offset_;
        coeffs_.assign(rhs.coeffs_.size(), 0);
    }
    const std::int64_t lo = std::min(offset_, rhs.offset_);
    const std::int64_t hi = std::max(max_exponent(), rhs.max_exponent());
    if (lo < offset_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(offset_ - lo), 0);
    offset_ = lo;
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), 0);
    const auto base = static_cast<std::size_t>(rhs.offset_ - lo);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        const std::int64_t term = checked::mul(rhs.coeffs_[k], scale, "Laurent arithmetic");
        coeffs_[base + k] = checked::add(coeffs_[base + k], term, "Laurent arithmetic");
    }
    normalize();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    add_scaled(rhs, 1);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    add_scaled(rhs, -1);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            const std::int64_t term = checked::mul(a.coeffs_[i], b.coeffs_[j], "Laurent product");
            out[i + j] = checked::add(out[i + j], term, "Laurent product");
        }
    }
    return LaurentPoly(checked::add(a.offset_, b.offset_, "exponent"), std::move(out));
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::int64_t e = max_exponent(); e >= min_exponent(); --e) {
        const std::int64_t c = coefficient(e);
        if (c == 0) continue;
        const std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (e == 0) {
            s += std::to_string(mag);
            continue;
        }
        if (mag != 1) s += std::to_string(mag);
        s += "q";
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

LaurentPoly laurent_exact_div(const LaurentPoly& numerator, const LaurentPoly& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("division by the zero Laurent polynomial");
    if (numerator.is_zero()) return {};

    const auto& den = divisor.coeffs();
    const std::size_t den_len = den.size();
    std::vector<std::int64_t> rem = numerator.coeffs();
    if (rem.size() < den_len)
        throw inexact_division(numerator.to_string() + " is not divisible by " + divisor.to_string());

    const std::size_t quot_len = rem.size() - den_len + 1;
    std::vector<std::int64_t> quot(quot_len, 0);
    for (std::size_t k = 0; k < quot_len; ++k) {
        if (rem[k] == 0) continue;
        if (rem[k] % den.front() != 0)
            throw inexact_division(numerator.to_string() + " is not divisible by " + divisor.to_string());
        const std::int64_t q = rem[k] / den.front();
        quot[k] = q;
        for (std::size_t j = 0; j < den_len; ++j) {
            rem[k + j] = checked::sub(rem[k + j], checked::mul(q, den[j], "Laurent division"), "Laurent division");
        }
    }
    if (std::any_of(rem.begin(), rem.end(), [](std::int64_t c) { return c != 0; }))
        throw inexact_division(numerator.to_string() + " is not divisible by " + divisor.to_string());

    return LaurentPoly(numerator.offset() - divisor.offset(), std::move(quot));
}

} // namespace qdivisor
