#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "circat/checked.hpp"

namespace circat {

/// Dense integer matrix with exact (overflow-checked) arithmetic.
///
/// This is deliberately not a performance-oriented type. Dimensions in this
/// library stay small (a few hundred at most) and the point is that every
/// arithmetic result is either exact or an exception.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int64_t> v; // row-major, rows * cols entries

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), v(r * c, 0) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::int64_t& operator()(std::size_t i, std::size_t j) { return v[i * cols + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return v[i * cols + j]; }

    bool square() const { return rows == cols; }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
};

inline void require_same_shape(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("matrix shape mismatch: " + std::to_string(a.rows) + "x" +
                                    std::to_string(a.cols) + " vs " + std::to_string(b.rows) +
                                    "x" + std::to_string(b.cols));
}

inline IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    require_same_shape(a, b);
    IntMatrix r(a.rows, a.cols);
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = checked_add(a.v[i], b.v[i]);
    return r;
}

inline IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    require_same_shape(a, b);
    IntMatrix r(a.rows, a.cols);
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = checked_sub(a.v[i], b.v[i]);
    return r;
}

inline IntMatrix operator-(const IntMatrix& a) {
    IntMatrix r(a.rows, a.cols);
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = checked_sub(0, a.v[i]);
    return r;
}

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows)
        throw std::invalid_argument("matrix product shape mismatch: inner dims " +
                                    std::to_string(a.cols) + " vs " + std::to_string(b.rows));
    IntMatrix r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            std::int64_t aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                r(i, j) = checked_add(r(i, j), checked_mul(aik, b(k, j)));
        }
    return r;
}

inline IntMatrix transpose(const IntMatrix& a) {
    IntMatrix r(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) r(j, i) = a(i, j);
    return r;
}

inline bool is_symmetric(const IntMatrix& a) {
    if (!a.square()) return false;
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = i + 1; j < a.cols; ++j)
            if (a(i, j) != a(j, i)) return false;
    return true;
}

/// Entrywise reduction into [0, N).
inline IntMatrix mod(const IntMatrix& a, std::int64_t N) {
    IntMatrix r(a.rows, a.cols);
    for (std::size_t i = 0; i < a.v.size(); ++i) r.v[i] = floor_mod(a.v[i], N);
    return r;
}

/// Product reduced mod N, accumulating in 128 bits so no input bound is needed.
inline IntMatrix mul_mod(const IntMatrix& a, const IntMatrix& b, std::int64_t N) {
    if (a.cols != b.rows)
        throw std::invalid_argument("matrix product shape mismatch: inner dims " +
                                    std::to_string(a.cols) + " vs " + std::to_string(b.rows));
    if (N <= 0) throw std::invalid_argument("modulus must be positive");
    IntMatrix r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) {
            __int128 acc = 0;
            for (std::size_t k = 0; k < a.cols; ++k)
                acc += static_cast<__int128>(floor_mod(a(i, k), N)) * floor_mod(b(k, j), N);
            r(i, j) = static_cast<std::int64_t>(acc % N);
        }
    return r;
}

/// base^e mod N by binary exponentiation. e = 0 gives the identity.
inline IntMatrix pow_mod(IntMatrix base, std::uint64_t e, std::int64_t N) {
    if (!base.square()) throw std::invalid_argument("pow_mod needs a square matrix");
    IntMatrix acc = mod(IntMatrix::identity(base.rows), N);
    base = mod(base, N);
    while (e > 0) {
        if (e & 1u) acc = mul_mod(acc, base, N);
        e >>= 1u;
        if (e > 0) base = mul_mod(base, base, N);
    }
    return acc;
}

namespace detail {

inline __int128 checked_mul_128(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("128-bit overflow in fraction-free elimination");
    return r;
}

// Fraction-free Gaussian elimination (Bareiss). After step k the pivot equals
// the determinant of the leading (k+1)x(k+1) minor, so one pass yields the
// whole minor sequence. Row swaps flip the sign of every later minor, which is
// fine for the determinant (last entry) but not for the intermediate minors,
// so callers that need the true minor sequence must pass allow_swaps = false
// and accept failure on a zero pivot.
inline bool bareiss(std::vector<__int128>& m, std::size_t n, bool allow_swaps,
                    std::vector<__int128>& minors) {
    minors.assign(n, 0);
    __int128 sign = 1;
    __int128 prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k * n + k] == 0) {
            if (!allow_swaps) return false;
            std::size_t piv = k + 1;
            while (piv < n && m[piv * n + k] == 0) ++piv;
            if (piv == n) {
                // Singular: this and all later leading minors vanish.
                for (std::size_t t = k; t < n; ++t) minors[t] = 0;
                return true;
            }
            for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
            sign = -sign;
        }
        __int128 pivot = m[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                __int128 num = checked_mul_128(pivot, m[i * n + j]) -
                               checked_mul_128(m[i * n + k], m[k * n + j]);
                m[i * n + j] = num / prev; // exact division, Bareiss invariant
            }
        prev = pivot;
        minors[k] = sign * pivot;
    }
    return true;
}

} // namespace detail

/// Exact determinant over 128-bit intermediates (throws on overflow).
/// Intermediates are minors of the input, so entries of magnitude B are safe
/// roughly while (sqrt(n) * B)^n stays below 2^127; the small matrices used
/// here (dimension <= 24, entries near the dimension) are far inside that.
inline __int128 det_exact(const IntMatrix& a) {
    if (!a.square()) throw std::invalid_argument("determinant needs a square matrix");
    std::size_t n = a.rows;
    if (n == 0) return 1;
    std::vector<__int128> m(n * n);
    for (std::size_t i = 0; i < n * n; ++i) m[i] = a.v[i];
    std::vector<__int128> minors;
    detail::bareiss(m, n, true, minors);
    return minors[n - 1];
}

/// Leading principal minors det(A[0..k][0..k]) for k = 0..n-1, exact.
/// Returns false when a zero pivot stops the pivot-free elimination; in that
/// case some leading minor vanishes and the matrix cannot be positive definite.
inline bool leading_minors(const IntMatrix& a, std::vector<__int128>& minors) {
    if (!a.square()) throw std::invalid_argument("leading minors need a square matrix");
    std::size_t n = a.rows;
    std::vector<__int128> m(n * n);
    for (std::size_t i = 0; i < n * n; ++i) m[i] = a.v[i];
    return detail::bareiss(m, n, false, minors);
}

/// Sylvester criterion with exact arithmetic: symmetric and every leading
/// principal minor positive.
inline bool positive_definite(const IntMatrix& a) {
    if (!is_symmetric(a)) return false;
    std::vector<__int128> minors;
    if (!leading_minors(a, minors)) return false;
    for (__int128 d : minors)
        if (d <= 0) return false;
    return true;
}

} // namespace circat
