#pragma once

// Reference implementations for cross-checking the library. Everything here
// favors the most literal possible construction over speed and shares no code
// path with the engines under test: dense matrices built entry by entry,
// periods found by repeated dense multiplication, characteristic polynomials
// by the Faddeev-LeVerrier recursion over 128-bit integers.

#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

#include "circat/graph.hpp"
#include "circat/matrix.hpp"

namespace oracle {

using circat::GeneratingVector;
using circat::IntMatrix;

inline IntMatrix dense_circulant(const std::vector<std::int64_t>& row) {
    std::size_t n = row.size();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = row[(j + n - i) % n];
    return m;
}

inline IntMatrix dense_evolution(const GeneratingVector& g) {
    std::size_t n = g.size();
    IntMatrix c = dense_circulant(g.bits);
    IntMatrix csq(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t acc = 0;
            for (std::size_t k = 0; k < n; ++k) acc += c(i, k) * c(k, j);
            csq(i, j) = acc;
        }
    IntMatrix m(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
        for (std::size_t j = 0; j < n; ++j) {
            m(i, n + j) = c(i, j);
            m(n + i, j) = c(i, j);
            m(n + i, n + j) = (i == j ? 1 : 0) + csq(i, j);
        }
    }
    return m;
}

// Smallest t <= cutoff with M^t = I mod N by stepwise dense multiplication,
// or 0 if none. No fast exponentiation, no structure reuse.
inline std::uint64_t brute_force_period(const GeneratingVector& g, std::int64_t N,
                                        std::uint64_t cutoff) {
    IntMatrix m = circat::mod(dense_evolution(g), N);
    IntMatrix id = circat::mod(IntMatrix::identity(m.rows), N);
    IntMatrix p = m;
    for (std::uint64_t t = 1; t <= cutoff; ++t) {
        if (p == id) return t;
        p = circat::mul_mod(p, m, N);
    }
    return 0;
}

// Characteristic polynomial coefficients of an integer matrix, exact, lowest
// degree first: p(x) = sum_k coef[k] x^k with coef[n] = 1. Faddeev-LeVerrier;
// every division is exact. Intended for small matrices (dimension <= 8), the
// intermediates overflow 128 bits well before the Hadamard bound otherwise.
inline std::vector<__int128> char_poly(const IntMatrix& a) {
    if (!a.square()) throw std::invalid_argument("char_poly needs a square matrix");
    std::size_t n = a.rows;
    std::vector<__int128> am(n * n), work(n * n);
    for (std::size_t i = 0; i < n * n; ++i) am[i] = a.v[i];
    std::vector<__int128> coef(n + 1, 0);
    coef[n] = 1;
    std::vector<__int128> mk(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) mk[i * n + i] = 1; // M_0 = I
    __int128 c = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A (M_{k-1} + c_{k-1} I), where c_{k-1} is the previous coefficient
        if (k > 1)
            for (std::size_t i = 0; i < n; ++i) mk[i * n + i] += c;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                __int128 acc = 0;
                for (std::size_t t = 0; t < n; ++t) acc += am[i * n + t] * mk[t * n + j];
                work[i * n + j] = acc;
            }
        mk = work;
        __int128 tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += mk[i * n + i];
        c = -tr / static_cast<__int128>(k);
        coef[n - k] = c;
    }
    return coef;
}

inline std::size_t connected_components(const IntMatrix& adjacency) {
    if (!adjacency.square()) throw std::invalid_argument("adjacency must be square");
    std::size_t n = adjacency.rows;
    std::vector<bool> seen(n, false);
    std::size_t comps = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++comps;
        std::queue<std::size_t> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            for (std::size_t v = 0; v < n; ++v)
                if (!seen[v] && (adjacency(u, v) != 0 || adjacency(v, u) != 0)) {
                    seen[v] = true;
                    q.push(v);
                }
        }
    }
    return comps;
}

inline std::uint64_t fibonacci(std::uint64_t m) {
    std::uint64_t a = 0, b = 1; // f_0, f_1
    for (std::uint64_t i = 0; i < m; ++i) {
        std::uint64_t next = a + b;
        a = b;
        b = next;
    }
    return a;
}

// Uniform random symmetric binary row (free bits drawn independently), for
// property-test generation. Not degree-exact on purpose.
template <typename RngT>
GeneratingVector random_symmetric_bits(std::size_t n, RngT& rng, bool allow_self_loop = true) {
    std::vector<std::int64_t> bits(n, 0);
    if (allow_self_loop) bits[0] = static_cast<std::int64_t>(rng.below(2));
    for (std::size_t l = 1; l <= n / 2; ++l) {
        std::int64_t b = static_cast<std::int64_t>(rng.below(2));
        bits[l] = b;
        bits[n - l] = b;
    }
    return GeneratingVector{bits};
}

} // namespace oracle
