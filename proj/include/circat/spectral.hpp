#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "circat/graph.hpp"

namespace circat {

/// Coupling-matrix eigenvalues d_j, j = 0..n-1, from the closed form for a
/// symmetric circulant row: cosine sum over half the offsets, with the lone
/// antipodal term g_{n/2} (-1)^j appearing for even n. All values are real.
inline std::vector<double> coupling_spectrum(const GeneratingVector& g) {
    require_symmetric(g);
    std::size_t n = g.size();
    std::vector<double> d(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double acc = static_cast<double>(g.bits[0]);
        for (std::size_t l = 1; l <= (n - 1) / 2; ++l)
            acc += 2.0 * static_cast<double>(g.bits[l]) *
                   std::cos(2.0 * std::numbers::pi * static_cast<double>(j) *
                            static_cast<double>(l) / static_cast<double>(n));
        if (n % 2 == 0)
            acc += static_cast<double>(g.bits[n / 2]) * (j % 2 == 0 ? 1.0 : -1.0);
        d[j] = acc;
    }
    return d;
}

/// Same spectrum through the explicit complex DFT of the first row. Symmetric
/// input must leave no imaginary residue beyond roundoff; a residue above tol
/// means the input was not mirror symmetric and the result would be bogus.
inline std::vector<double> coupling_spectrum_dft(const GeneratingVector& g, double tol = 1e-9) {
    std::size_t n = g.size();
    if (n == 0) throw std::invalid_argument("generating vector must be nonempty");
    std::vector<double> d(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        std::complex<double> acc = 0.0;
        for (std::size_t l = 0; l < n; ++l) {
            double phase = 2.0 * std::numbers::pi * static_cast<double>(j) *
                           static_cast<double>(l) / static_cast<double>(n);
            acc += static_cast<double>(g.bits[l]) * std::complex<double>(std::cos(phase), std::sin(phase));
        }
        if (std::abs(acc.imag()) > tol)
            throw std::domain_error("imaginary residue in circulant spectrum, input row is not symmetric");
        d[j] = acc.real();
    }
    return d;
}

/// Expanding and contracting growth factors of one decoupled mode.
struct GrowthPair {
    double expanding;
    double contracting;
};

/// Per-mode growth factors, the roots of x^2 - (2 + d^2) x + 1. Computed as
/// rho+ = (|d|/2 + sqrt(d^2/4 + 1))^2 and rho- = 1/rho+, which avoids the
/// cancellation the quadratic formula suffers for the small root.
inline GrowthPair growth_factors(double d) {
    double u = std::abs(d) / 2.0;
    double s = u + std::sqrt(u * u + 1.0);
    double plus = s * s;
    return GrowthPair{plus, 1.0 / plus};
}

/// Positive Lyapunov exponent of one mode, ln rho+ = 2 asinh(|d| / 2).
inline double lyapunov_exponent(double d) { return 2.0 * std::asinh(std::abs(d) / 2.0); }

inline std::vector<double> lyapunov_spectrum(std::span<const double> d) {
    std::vector<double> lam(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) lam[j] = lyapunov_exponent(d[j]);
    return lam;
}

/// Kolmogorov-Sinai entropy: sum of the positive exponents.
inline double ks_entropy(std::span<const double> lambda) {
    double s = 0.0;
    for (double x : lambda) s += x;
    return s;
}

inline std::vector<double> sorted_descending(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end(), [](double a, double b) { return a > b; });
    return xs;
}

/// Everything the spectra consumers need, in natural mode order.
struct SpectrumReport {
    std::size_t n = 0;
    GeneratingVector g;
    std::vector<double> d;
    std::vector<double> lambda;
    double s_ks = 0.0;
};

inline SpectrumReport make_spectrum_report(const GeneratingVector& g) {
    SpectrumReport rep;
    rep.n = g.size();
    rep.g = g;
    rep.d = coupling_spectrum(g);
    rep.lambda = lyapunov_spectrum(rep.d);
    rep.s_ks = ks_entropy(rep.lambda);
    return rep;
}

} // namespace circat
