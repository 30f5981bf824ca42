#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "circat/graph.hpp"
#include "circat/matrix.hpp"
#include "circat/parallel.hpp"

namespace circat {

inline constexpr std::uint64_t default_period_cutoff = 10'000'000;

/// Period measurement for one (coupling, modulus) pair. A censored result
/// (period 0) means no period was found up to the cutoff; the period exists
/// regardless, the search just stopped.
struct PeriodResult {
    std::int64_t modulus = 0;
    GeneratingVector g;
    std::uint64_t period = 0;
    bool censored = false;
    std::uint64_t cutoff = 0;

    friend bool operator==(const PeriodResult& a, const PeriodResult& b) = default;
};

namespace detail {

// Powers of the evolution matrix are built from a single sequence of
// circulant blocks: M^m = [[B_{2m-1}, B_{2m}], [B_{2m}, B_{2m+1}]] where
// B_0 = 0, B_1 = I and B_{m+1} = C B_m + B_{m-1}. The engine therefore walks
// first rows only, two length-n convolutions per step. For a binary coupling
// row the convolution degenerates to index-shifted additions.
struct BlockWalker {
    std::vector<std::size_t> taps; // offsets l with g_l = 1
    std::size_t n;
    std::int64_t N;
    std::vector<std::int64_t> prev; // first row of B_{m-1} mod N
    std::vector<std::int64_t> cur;  // first row of B_m mod N
    std::uint64_t m = 1;            // index of cur

    BlockWalker(const GeneratingVector& g, std::int64_t N_)
        : n(g.size()), N(N_), prev(g.size(), 0), cur(g.size(), 0) {
        for (std::size_t l = 0; l < n; ++l)
            if (g.bits[l]) taps.push_back(l);
        cur[0] = 1 % N;
    }

    // prev, cur <- cur, (C cur + prev) mod N
    void advance() {
        std::vector<std::int64_t> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t acc = prev[i];
            for (std::size_t l : taps) acc += cur[(i + n - l) % n];
            next[i] = acc % N; // taps <= n, entries < N, so acc <= (n + 1) N
        }
        prev = std::move(cur);
        cur = std::move(next);
        ++m;
    }

    bool cur_is_zero() const {
        for (std::int64_t x : cur)
            if (x != 0) return false;
        return true;
    }

    bool prev_is_identity() const {
        if (prev[0] != 1 % N) return false;
        for (std::size_t i = 1; i < n; ++i)
            if (prev[i] != 0) return false;
        return true;
    }
};

} // namespace detail

/// Smallest T >= 1 with M^T = I mod N, which is the pair condition
/// B_{2T} = 0 and B_{2T-1} = I on the block sequence. Censored when T would
/// exceed the cutoff.
inline PeriodResult matrix_period(const GeneratingVector& g, std::int64_t N,
                                  std::uint64_t cutoff = default_period_cutoff) {
    require_symmetric(g);
    if (N < 2) throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(N));
    detail::BlockWalker w(g, N);
    for (std::uint64_t t = 1; t <= cutoff; ++t) {
        w.advance(); // now m = 2t
        if (w.cur_is_zero() && w.prev_is_identity())
            return PeriodResult{N, g, t, false, cutoff};
        w.advance(); // now m = 2t + 1
    }
    return PeriodResult{N, g, 0, true, cutoff};
}

/// B_m mod N by the linear recursion. Exposed for cross-checking the closed
/// form; m = 0 gives the zero block.
inline Circulant block_sequence(const GeneratingVector& g, std::uint64_t m, std::int64_t N) {
    require_symmetric(g);
    if (N < 2) throw std::invalid_argument("modulus must be at least 2");
    detail::BlockWalker w(g, N);
    if (m == 0) return circ_zero(g.size());
    while (w.m < m) w.advance();
    return Circulant{w.cur};
}

/// Closed form for the same block: B_m = sum_j binom(m-1-j, j) C^{m-1-2j},
/// binomials reduced mod N through a Pascal triangle, matrix powers as
/// repeated first-row convolutions.
inline Circulant block_closed_form(const GeneratingVector& g, std::uint64_t m, std::int64_t N) {
    require_symmetric(g);
    if (N < 2) throw std::invalid_argument("modulus must be at least 2");
    std::size_t n = g.size();
    if (m == 0) return circ_zero(n);
    // Pascal triangle mod N up to row m-1.
    std::size_t rows = static_cast<std::size_t>(m);
    std::vector<std::vector<std::int64_t>> binom(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        binom[i].assign(i + 1, 1 % N);
        for (std::size_t j = 1; j < i; ++j)
            binom[i][j] = add_mod(binom[i - 1][j - 1], binom[i - 1][j], N);
    }
    Circulant c = circ_mod(adjacency_circulant(g), N);
    Circulant acc = circ_zero(n);
    // Highest power first: C^{m-1}, then every second power downward.
    std::vector<Circulant> powers;
    powers.push_back(circ_identity(n));
    powers.back() = circ_mod(powers.back(), N);
    for (std::uint64_t k = 1; k <= m - 1; ++k) powers.push_back(circ_mul(powers.back(), c, N));
    for (std::uint64_t j = 0; 2 * j <= m - 1; ++j) {
        std::int64_t coef = binom[static_cast<std::size_t>(m - 1 - j)][static_cast<std::size_t>(j)];
        const Circulant& cp = powers[static_cast<std::size_t>(m - 1 - 2 * j)];
        for (std::size_t i = 0; i < n; ++i)
            acc.row[i] = add_mod(acc.row[i], mul_mod(coef, cp.row[i], N), N);
    }
    return acc;
}

/// Dense M^m mod N assembled from the block sequence,
/// [[B_{2m-1}, B_{2m}], [B_{2m}, B_{2m+1}]]. m = 0 gives the identity.
inline IntMatrix evolution_power(const GeneratingVector& g, std::uint64_t m, std::int64_t N) {
    require_symmetric(g);
    if (N < 2) throw std::invalid_argument("modulus must be at least 2");
    std::size_t n = g.size();
    if (m == 0) return mod(IntMatrix::identity(2 * n), N);
    detail::BlockWalker w(g, N);
    while (w.m < 2 * m) w.advance();
    Circulant lo{w.prev}, mid{w.cur};
    w.advance();
    Circulant hi{w.cur};
    IntMatrix out(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = lo.entry(i, j);
            out(i, n + j) = mid.entry(i, j);
            out(n + i, j) = mid.entry(i, j);
            out(n + i, n + j) = hi.entry(i, j);
        }
    return out;
}

/// Period for every modulus in [N_lo, N_hi], one fixed coupling.
inline std::vector<PeriodResult> period_sweep_moduli(const GeneratingVector& g, std::int64_t N_lo,
                                                     std::int64_t N_hi,
                                                     std::uint64_t cutoff = default_period_cutoff,
                                                     unsigned threads = 1) {
    require_symmetric(g);
    if (N_lo < 2) throw std::invalid_argument("modulus range must start at 2 or above");
    if (N_hi < N_lo) return {};
    std::size_t count = static_cast<std::size_t>(N_hi - N_lo + 1);
    return parallel_map(count, threads, [&](std::size_t i) {
        return matrix_period(g, N_lo + static_cast<std::int64_t>(i), cutoff);
    });
}

/// Period for every system size in [n_lo, n_hi] at one modulus, coupling
/// taken from the alternating family periodic_vector(n).
inline std::vector<PeriodResult> period_sweep_sizes(std::int64_t N, std::size_t n_lo,
                                                    std::size_t n_hi,
                                                    std::uint64_t cutoff = default_period_cutoff,
                                                    unsigned threads = 1) {
    if (n_lo < 2) throw std::invalid_argument("size sweep needs n >= 2 (n = 1 has an empty pattern)");
    if (n_hi < n_lo) return {};
    std::size_t count = n_hi - n_lo + 1;
    return parallel_map(count, threads, [&](std::size_t i) {
        return matrix_period(periodic_vector(n_lo + i), N, cutoff);
    });
}

enum class LawVerdict {
    holds,         // every compared pair satisfied the relation
    violated,      // some non-censored pair failed it
    indeterminate, // a censored measurement blocked the comparison
};

/// Doubling-law check across dyadic moduli: T(2^s) == 2^{s-1} T(2) for
/// s = 2..s_max. Censored measurements make the verdict indeterminate rather
/// than guessing. Measurements for s = 1..s_max come back with the verdict.
struct ScalingCheck {
    LawVerdict verdict = LawVerdict::indeterminate;
    std::vector<PeriodResult> measurements;
};

inline ScalingCheck scaling_law_check(const GeneratingVector& g, unsigned s_max,
                                      std::uint64_t cutoff = default_period_cutoff) {
    if (s_max < 1) throw std::invalid_argument("scaling check needs s_max >= 1");
    ScalingCheck out;
    for (unsigned s = 1; s <= s_max; ++s)
        out.measurements.push_back(matrix_period(g, std::int64_t{1} << s, cutoff));
    const PeriodResult& base = out.measurements.front();
    out.verdict = LawVerdict::holds;
    for (unsigned s = 2; s <= s_max; ++s) {
        const PeriodResult& r = out.measurements[s - 1];
        if (base.censored || r.censored) {
            out.verdict = LawVerdict::indeterminate;
            return out;
        }
        if (r.period != (std::uint64_t{1} << (s - 1)) * base.period) {
            out.verdict = LawVerdict::violated;
            return out;
        }
    }
    return out;
}

} // namespace circat
