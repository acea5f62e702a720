#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qdivisor::checked {

template <typename T>
T add(T a, T b, const char* what = "addition") {
    T r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error(std::string("64-bit overflow in ") + what);
    return r;
}

template <typename T>
T sub(T a, T b, const char* what = "subtraction") {
    T r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error(std::string("64-bit overflow in ") + what);
    return r;
}

template <typename T>
T mul(T a, T b, const char* what = "multiplication") {
    T r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error(std::string("64-bit overflow in ") + what);
    return r;
}

} // namespace qdivisor::checked
