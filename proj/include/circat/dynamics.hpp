#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "circat/graph.hpp"
#include "circat/matrix.hpp"
#include "circat/symplectic.hpp"

namespace circat {

/// Phase-space point of the coupled map on the finite torus (Z/N)^{2n}:
/// positions k and momenta l, entries reduced into [0, N).
struct TorusState {
    std::int64_t modulus = 0;
    std::vector<std::int64_t> k;
    std::vector<std::int64_t> l;

    std::size_t nodes() const { return k.size(); }

    friend bool operator==(const TorusState& a, const TorusState& b) = default;
};

inline TorusState make_state(std::int64_t N, std::vector<std::int64_t> k,
                             std::vector<std::int64_t> l) {
    if (N < 1) throw std::invalid_argument("modulus must be at least 1");
    if (k.size() != l.size() || k.empty())
        throw std::invalid_argument("position and momentum vectors must have equal nonzero length");
    for (auto& x : k) x = floor_mod(x, N);
    for (auto& x : l) x = floor_mod(x, N);
    return TorusState{N, std::move(k), std::move(l)};
}

namespace detail {

// y = x A for a row vector x and circulant A: y_j = sum_l x_l A(l, j), a
// circular correlation of x with the first row. Accumulates in 128 bits.
inline std::vector<std::int64_t> row_times_circulant(std::span<const std::int64_t> x,
                                                     const Circulant& a, std::int64_t N) {
    std::size_t n = a.size();
    std::vector<std::int64_t> y(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        __int128 acc = 0;
        for (std::size_t l = 0; l < n; ++l) {
            std::int64_t alj = a.row[(j + n - l) % n];
            if (alj == 0) continue;
            acc += static_cast<__int128>(x[l]) * alj;
        }
        y[j] = floor_mod(static_cast<std::int64_t>(acc % N), N);
    }
    return y;
}

} // namespace detail

/// One forward step (k, l) -> (k + l C, k C + l (I + C^2)) mod N, all three
/// products done as circular convolutions on the first row of C.
inline TorusState step(const TorusState& s, const Circulant& c) {
    if (c.size() != s.nodes())
        throw std::invalid_argument("coupling size " + std::to_string(c.size()) +
                                    " does not match state size " + std::to_string(s.nodes()));
    std::int64_t N = s.modulus;
    Circulant cc = circ_mul(c, c, N);
    std::vector<std::int64_t> lc = detail::row_times_circulant(s.l, c, N);
    std::vector<std::int64_t> kc = detail::row_times_circulant(s.k, c, N);
    std::vector<std::int64_t> lcc = detail::row_times_circulant(s.l, cc, N);
    TorusState out = s;
    for (std::size_t i = 0; i < s.nodes(); ++i) {
        out.k[i] = add_mod(s.k[i], lc[i], N);
        out.l[i] = add_mod(kc[i], add_mod(s.l[i], lcc[i], N), N);
    }
    return out;
}

/// One step under an arbitrary 2n x 2n integer matrix acting on the row
/// vector (k, l) from the right. Used with symplectic_inverse for backward
/// iteration; entries may be negative, the result is reduced into [0, N).
inline TorusState step(const TorusState& s, const IntMatrix& m) {
    std::size_t n = s.nodes();
    if (m.rows != 2 * n || m.cols != 2 * n)
        throw std::invalid_argument("matrix dimension does not match state size");
    std::int64_t N = s.modulus;
    TorusState out = s;
    for (std::size_t j = 0; j < 2 * n; ++j) {
        __int128 acc = 0;
        for (std::size_t i = 0; i < n; ++i) {
            acc += static_cast<__int128>(s.k[i]) * m(i, j);
            acc += static_cast<__int128>(s.l[i]) * m(n + i, j);
        }
        std::int64_t r = static_cast<std::int64_t>(acc % N);
        (j < n ? out.k[j] : out.l[j - n]) = r < 0 ? r + N : r;
    }
    return out;
}

/// Smallest t >= 1 with M^t x = x, or censored if none is found within the
/// cutoff. Every orbit on the finite torus is periodic, so censoring only
/// means the cutoff was too small for this orbit.
struct OrbitResult {
    std::uint64_t period = 0; // 0 when censored
    bool censored = false;
    std::uint64_t cutoff = 0;

    friend bool operator==(const OrbitResult& a, const OrbitResult& b) = default;
};

inline OrbitResult orbit_period(const TorusState& start, const Circulant& c,
                                std::uint64_t cutoff) {
    TorusState cur = step(start, c);
    for (std::uint64_t t = 1; t <= cutoff; ++t) {
        if (cur == start) return OrbitResult{t, false, cutoff};
        cur = step(cur, c);
    }
    return OrbitResult{0, true, cutoff};
}

/// Discrete Newton residual q_next - 2 q_cur + q_prev - q_cur C^2 mod N.
/// Exactly zero along any trajectory of the map.
inline std::vector<std::int64_t> newton_residual(std::span<const std::int64_t> q_prev,
                                                 std::span<const std::int64_t> q_cur,
                                                 std::span<const std::int64_t> q_next,
                                                 const Circulant& c, std::int64_t N) {
    std::size_t n = c.size();
    if (q_prev.size() != n || q_cur.size() != n || q_next.size() != n)
        throw std::invalid_argument("trajectory slices must match the coupling size");
    Circulant cc = circ_mul(c, c, N);
    std::vector<std::int64_t> force = detail::row_times_circulant(q_cur, cc, N);
    std::vector<std::int64_t> r(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t acc = add_mod(q_next[i], N - mul_mod(2, q_cur[i], N), N);
        acc = add_mod(acc, q_prev[i], N);
        r[i] = add_mod(acc, N - force[i], N);
    }
    return r;
}

/// Phase-space point on the continuous unit torus [0,1)^{2n}.
struct RealTorusState {
    std::vector<double> q;
    std::vector<double> p;

    std::size_t nodes() const { return q.size(); }
};

namespace detail {

inline double wrap_unit(double x) {
    double r = x - std::floor(x);
    return r < 1.0 ? r : 0.0; // floor rounding can land exactly on 1.0
}

} // namespace detail

inline RealTorusState make_real_state(std::vector<double> q, std::vector<double> p) {
    if (q.size() != p.size() || q.empty())
        throw std::invalid_argument("position and momentum vectors must have equal nonzero length");
    for (auto& x : q) x = detail::wrap_unit(x);
    for (auto& x : p) x = detail::wrap_unit(x);
    return RealTorusState{std::move(q), std::move(p)};
}

/// Floating-point forward step on the unit torus, same linear map as the
/// exact version with mod 1 wrapping.
inline RealTorusState step_real(const RealTorusState& s, const Circulant& c) {
    std::size_t n = c.size();
    if (n != s.nodes()) throw std::invalid_argument("coupling size does not match state size");
    Circulant cc = circ_mul(c, c);
    RealTorusState out = s;
    for (std::size_t j = 0; j < n; ++j) {
        double kq = 0.0, kp = 0.0, pq = 0.0;
        for (std::size_t l = 0; l < n; ++l) {
            double clj = static_cast<double>(c.row[(j + n - l) % n]);
            double cclj = static_cast<double>(cc.row[(j + n - l) % n]);
            kp += s.p[l] * clj;
            kq += s.q[l] * clj;
            pq += s.p[l] * cclj;
        }
        out.q[j] = detail::wrap_unit(s.q[j] + kp);
        out.p[j] = detail::wrap_unit(kq + s.p[j] + pq);
    }
    return out;
}

/// Distance from the float Newton residual to the nearest integer, maximized
/// over sites. On the unit torus the residual identity holds mod 1, so this
/// measures accumulated rounding only.
inline double newton_residual_real(std::span<const double> q_prev, std::span<const double> q_cur,
                                   std::span<const double> q_next, const Circulant& c) {
    std::size_t n = c.size();
    if (q_prev.size() != n || q_cur.size() != n || q_next.size() != n)
        throw std::invalid_argument("trajectory slices must match the coupling size");
    Circulant cc = circ_mul(c, c);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double force = 0.0;
        for (std::size_t l = 0; l < n; ++l)
            force += q_cur[l] * static_cast<double>(cc.row[(i + n - l) % n]);
        double r = q_next[i] - 2.0 * q_cur[i] + q_prev[i] - force;
        double dist = std::abs(r - std::round(r));
        worst = std::max(worst, dist);
    }
    return worst;
}

/// Normal-mode coordinates r = q F with F_{l,j} = omega^{l j} / sqrt(n),
/// omega = exp(2 pi i / n). Diagonalizes every circulant coupling at once.
inline std::vector<std::complex<double>> to_normal_modes(std::span<const double> q) {
    std::size_t n = q.size();
    if (n == 0) throw std::invalid_argument("mode transform needs a nonempty vector");
    std::vector<std::complex<double>> r(n);
    double root = std::sqrt(static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        std::complex<double> acc = 0.0;
        for (std::size_t l = 0; l < n; ++l) {
            double phase = 2.0 * std::numbers::pi * static_cast<double>(l) *
                           static_cast<double>(j) / static_cast<double>(n);
            acc += q[l] * std::complex<double>(std::cos(phase), std::sin(phase));
        }
        r[j] = acc / root;
    }
    return r;
}

/// Inverse mode transform. A mode vector that came from a real configuration
/// must return one; an imaginary residue above tol reports a malformed input.
inline std::vector<double> from_normal_modes(std::span<const std::complex<double>> r,
                                             double tol = 1e-9) {
    std::size_t n = r.size();
    if (n == 0) throw std::invalid_argument("mode transform needs a nonempty vector");
    std::vector<double> q(n);
    double root = std::sqrt(static_cast<double>(n));
    for (std::size_t l = 0; l < n; ++l) {
        std::complex<double> acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double phase = -2.0 * std::numbers::pi * static_cast<double>(l) *
                           static_cast<double>(j) / static_cast<double>(n);
            acc += r[j] * std::complex<double>(std::cos(phase), std::sin(phase));
        }
        acc /= root;
        if (std::abs(acc.imag()) > tol)
            throw std::domain_error("imaginary residue in inverse mode transform");
        q[l] = acc.real();
    }
    return q;
}

/// Closed-form evolution of one decoupled mode under the second-order
/// recurrence r_{m+1} = (2 + d^2) r_m - r_{m-1}, given r_0 and r_1. The
/// coefficients split on the growth factors; d = 0 is the double root case
/// where the solution degenerates to linear drift.
inline std::complex<double> mode_value(std::complex<double> r0, std::complex<double> r1, double d,
                                       std::uint64_t m) {
    // Analytically zero couplings reach here as cosine-sum dust (~1e-16);
    // below 1e-8 the two growth factors round to the same double, the gap
    // vanishes, and the split blows up. The drift branch is then exact to
    // m^2 d^2 / 2, far under that threshold for any m this library serves.
    if (std::abs(d) < 1e-8) return r0 + static_cast<double>(m) * (r1 - r0);
    GrowthPair rho = growth_factors(d);
    double gap = rho.expanding - rho.contracting;
    std::complex<double> a_plus = (r1 - r0 * rho.contracting) / gap;
    std::complex<double> a_minus = (r0 * rho.expanding - r1) / gap;
    return a_plus * std::pow(rho.expanding, static_cast<double>(m)) +
           a_minus * std::pow(rho.contracting, static_cast<double>(m));
}

/// All modes at once; d is the coupling spectrum in matching mode order.
inline std::vector<std::complex<double>> evolve_modes(std::span<const std::complex<double>> r0,
                                                      std::span<const std::complex<double>> r1,
                                                      std::span<const double> d,
                                                      std::uint64_t m) {
    if (r0.size() != r1.size() || r0.size() != d.size())
        throw std::invalid_argument("mode vectors and spectrum must have equal length");
    std::vector<std::complex<double>> out(r0.size());
    for (std::size_t j = 0; j < r0.size(); ++j) out[j] = mode_value(r0[j], r1[j], d[j], m);
    return out;
}

} // namespace circat
