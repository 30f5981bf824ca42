#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "circat/graph.hpp"
#include "circat/matrix.hpp"
#include "circat/spectral.hpp"

namespace circat {

/// Standard symplectic form J = [[0, -I], [I, 0]] on 2n coordinates
/// (positions first, then momenta).
inline IntMatrix symplectic_form(std::size_t n) {
    IntMatrix j(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, n + i) = -1;
        j(n + i, i) = 1;
    }
    return j;
}

/// One half-step of the coupled map, L = [[0, I], [I, C]]. L reverses the
/// sign of the symplectic form (anti-symplectic), so dynamics advance by
/// M = L^2.
inline IntMatrix fibonacci_matrix(const IntMatrix& c) {
    if (!c.square()) throw std::invalid_argument("coupling block must be square");
    std::size_t n = c.rows;
    IntMatrix l(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        l(i, n + i) = 1;
        l(n + i, i) = 1;
        for (std::size_t j = 0; j < n; ++j) l(n + i, n + j) = c(i, j);
    }
    return l;
}

/// Full step M = L^2 = [[I, C], [C, I + C^2]]. For symmetric C this is
/// symmetric, symplectic and positive definite with determinant one.
inline IntMatrix evolution_matrix(const IntMatrix& c) {
    if (!c.square()) throw std::invalid_argument("coupling block must be square");
    std::size_t n = c.rows;
    IntMatrix csq = c * c;
    IntMatrix m(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
        for (std::size_t j = 0; j < n; ++j) {
            m(i, n + j) = c(i, j);
            m(n + i, j) = c(i, j);
            m(n + i, n + j) = checked_add(i == j ? 1 : 0, csq(i, j));
        }
    }
    return m;
}

inline IntMatrix evolution_matrix(const GeneratingVector& g) {
    return evolution_matrix(to_dense(adjacency_circulant(g)));
}

inline IntMatrix fibonacci_matrix(const GeneratingVector& g) {
    return fibonacci_matrix(to_dense(adjacency_circulant(g)));
}

namespace detail {

inline void require_even_square(const IntMatrix& m, const char* what) {
    if (!m.square() || m.rows % 2 != 0)
        throw std::invalid_argument(std::string(what) + " needs a square matrix of even dimension");
}

} // namespace detail

/// Exact test of M^T J M == J.
inline bool is_symplectic(const IntMatrix& m) {
    detail::require_even_square(m, "symplectic test");
    IntMatrix j = symplectic_form(m.rows / 2);
    return transpose(m) * j * m == j;
}

/// Exact test of L^T J L == -J.
inline bool is_anti_symplectic(const IntMatrix& l) {
    detail::require_even_square(l, "anti-symplectic test");
    IntMatrix j = symplectic_form(l.rows / 2);
    return transpose(l) * j * l == -j;
}

/// Inverse of a symplectic matrix without any division: M^{-1} = -J M^T J.
/// Exact in integers, which is what makes backward iteration mod N possible.
inline IntMatrix symplectic_inverse(const IntMatrix& m) {
    detail::require_even_square(m, "symplectic inverse");
    IntMatrix j = symplectic_form(m.rows / 2);
    return -(j * transpose(m) * j);
}

/// Checks that the 2n eigenvalues of M are exactly the per-mode growth-factor
/// pairs: the characteristic polynomial of M, evaluated exactly at 2n + 3
/// integer points, must match the product of the mode quadratics
/// x^2 - (2 + d_j^2) x + 1 within relative tolerance. Exactness on one side
/// (Bareiss determinants over 128-bit integers) keeps the check independent of
/// any floating-point eigensolver. The exact minors outgrow 128 bits for large
/// couplings (in practice around n = 9 and up); that raises overflow_error
/// rather than returning a silently rounded verdict.
inline bool eigen_relation_check(const GeneratingVector& g, double tol = 1e-9) {
    std::vector<double> d = coupling_spectrum(g);
    IntMatrix m = evolution_matrix(g);
    std::size_t two_n = m.rows;
    long lo = -(static_cast<long>(two_n) / 2 + 1);
    long hi = static_cast<long>(two_n) / 2 + 1;
    for (long x = lo; x <= hi; ++x) {
        IntMatrix xi = IntMatrix::identity(two_n);
        for (std::size_t i = 0; i < two_n; ++i) xi(i, i) = x;
        double exact = static_cast<double>(det_exact(xi - m));
        double modes = 1.0;
        for (double dj : d)
            modes *= (static_cast<double>(x) * x - (2.0 + dj * dj) * x + 1.0);
        double scale = std::max(1.0, std::abs(exact));
        if (std::abs(exact - modes) > tol * scale) return false;
    }
    return true;
}

} // namespace circat
