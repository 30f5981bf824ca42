#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace circat {

// Overflow-checked signed 64-bit arithmetic. Every exact integer path in the
// library funnels through these so a silent wraparound cannot masquerade as a
// mathematical identity.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

// Mathematical remainder, result in [0, m). Requires m > 0.
inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    if (m <= 0)
        throw std::invalid_argument("modulus must be positive, got " + std::to_string(m));
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// (a + b) mod m without intermediate overflow, inputs unrestricted.
inline std::int64_t add_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return floor_mod(floor_mod(a, m) + floor_mod(b, m), m);
}

// (a * b) mod m through 128-bit intermediates, inputs unrestricted.
inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    if (m <= 0)
        throw std::invalid_argument("modulus must be positive, got " + std::to_string(m));
    __int128 p = static_cast<__int128>(a) * b;
    std::int64_t r = static_cast<std::int64_t>(p % m);
    return r < 0 ? r + m : r;
}

} // namespace circat
