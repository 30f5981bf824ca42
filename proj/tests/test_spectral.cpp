#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "circat/experiments.hpp"
#include "circat/spectral.hpp"

#include "oracles.hpp"

using namespace circat;
using Catch::Matchers::WithinAbs;

TEST_CASE("complete graph spectrum is n-1 with an n-1 fold -1", "[spectral]") {
    auto d = coupling_spectrum(parse_bit_string("011"));
    REQUIRE_THAT(d[0], WithinAbs(2.0, 1e-12));
    REQUIRE_THAT(d[1], WithinAbs(-1.0, 1e-12));
    REQUIRE_THAT(d[2], WithinAbs(-1.0, 1e-12));

    for (std::size_t n : {4u, 9u, 16u}) {
        auto dn = coupling_spectrum(stride_vector(n, 1, false));
        REQUIRE_THAT(dn[0], WithinAbs(static_cast<double>(n - 1), 1e-11));
        for (std::size_t j = 1; j < n; ++j) REQUIRE_THAT(dn[j], WithinAbs(-1.0, 1e-11));
    }
}

TEST_CASE("pinned small spectra", "[spectral]") {
    auto single = coupling_spectrum(parse_bit_string("1"));
    REQUIRE(single.size() == 1);
    REQUIRE_THAT(single[0], WithinAbs(1.0, 1e-15));

    // Pure self-loops couple nothing: every mode sits at 1.
    auto loops = coupling_spectrum(parse_bit_string("100"));
    for (double v : loops) REQUIRE_THAT(v, WithinAbs(1.0, 1e-15));

    // Alternating row on n = 8: modes 0 and 4 at +-4, the rest exactly 0.
    auto alt = coupling_spectrum(stride_vector(8, 2, false));
    REQUIRE_THAT(alt[0], WithinAbs(4.0, 1e-12));
    REQUIRE_THAT(alt[4], WithinAbs(-4.0, 1e-12));
    for (std::size_t j : {1u, 2u, 3u, 5u, 6u, 7u}) REQUIRE_THAT(alt[j], WithinAbs(0.0, 1e-12));

    // Self-loop complete graph: one mode at n, the rest exactly 0.
    auto slc = coupling_spectrum(stride_vector(6, 1, true));
    REQUIRE_THAT(slc[0], WithinAbs(6.0, 1e-11));
    for (std::size_t j = 1; j < 6; ++j) REQUIRE_THAT(slc[j], WithinAbs(0.0, 1e-11));
}

TEST_CASE("closed form agrees with the explicit DFT", "[spectral]") {
    Rng rng(31);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + rng.below(256);
        auto g = oracle::random_symmetric_bits(n, rng);
        auto a = coupling_spectrum(g);
        auto b = coupling_spectrum_dft(g);
        for (std::size_t j = 0; j < n; ++j) REQUIRE_THAT(a[j], WithinAbs(b[j], 1e-9));
    }
}

TEST_CASE("DFT rejects an asymmetric row", "[spectral]") {
    REQUIRE_THROWS_AS(coupling_spectrum_dft(parse_bit_string("110")), std::domain_error);
    REQUIRE_THROWS_AS(coupling_spectrum(parse_bit_string("110")), std::invalid_argument);
}

TEST_CASE("mirror modes coincide", "[spectral]") {
    auto d = coupling_spectrum(from_integer(1072));
    std::size_t n = d.size();
    for (std::size_t j = 1; j < n; ++j) REQUIRE_THAT(d[j], WithinAbs(d[n - j], 1e-12));
}

TEST_CASE("growth factors solve the mode quadratic", "[spectral]") {
    GrowthPair flat = growth_factors(0.0);
    REQUIRE_THAT(flat.expanding, WithinAbs(1.0, 1e-15));
    REQUIRE_THAT(flat.contracting, WithinAbs(1.0, 1e-15));

    GrowthPair unit = growth_factors(1.0);
    REQUIRE_THAT(unit.expanding, WithinAbs((3.0 + std::sqrt(5.0)) / 2.0, 1e-14));
    REQUIRE_THAT(unit.contracting, WithinAbs((3.0 - std::sqrt(5.0)) / 2.0, 1e-14));

    GrowthPair mirror = growth_factors(-1.0);
    REQUIRE_THAT(mirror.expanding, WithinAbs(unit.expanding, 1e-15));

    for (double d = -1000.0; d <= 1000.0; d += 7.3) {
        GrowthPair p = growth_factors(d);
        REQUIRE_THAT(p.expanding * p.contracting, WithinAbs(1.0, 1e-12));
        REQUIRE_THAT(p.expanding + p.contracting, WithinAbs(2.0 + d * d, 1e-9 * (2.0 + d * d)));
        REQUIRE(p.expanding >= 1.0);
    }
}

TEST_CASE("pinned Lyapunov exponents", "[spectral]") {
    REQUIRE_THAT(lyapunov_exponent(0.0), WithinAbs(0.0, 1e-15));
    REQUIRE_THAT(lyapunov_exponent(1.0), WithinAbs(0.9624236501192069, 1e-13));
    REQUIRE_THAT(lyapunov_exponent(-1.0), WithinAbs(0.9624236501192069, 1e-13));
    REQUIRE_THAT(lyapunov_exponent(2.0), WithinAbs(std::log(3.0 + 2.0 * std::sqrt(2.0)), 1e-13));
    // Exponent equals the log of the expanding factor by construction.
    for (double d : {0.25, 1.5, 3.0, 10.0})
        REQUIRE_THAT(lyapunov_exponent(d), WithinAbs(std::log(growth_factors(d).expanding), 1e-12));
}

TEST_CASE("entropy is the exponent sum with known closed forms", "[spectral]") {
    // Complete graph: one fast mode at n-1 plus n-1 golden-mean modes.
    for (std::size_t n : {3u, 11u, 101u}) {
        SpectrumReport rep = make_spectrum_report(stride_vector(n, 1, false));
        double expect = lyapunov_exponent(static_cast<double>(n - 1)) +
                        static_cast<double>(n - 1) * lyapunov_exponent(1.0);
        REQUIRE_THAT(rep.s_ks, WithinAbs(expect, 1e-9));
    }
    // Self-loop complete graph: single chaotic mode, everything else frozen.
    SpectrumReport slc = make_spectrum_report(stride_vector(16, 1, true));
    REQUIRE_THAT(slc.s_ks, WithinAbs(lyapunov_exponent(16.0), 1e-10));

    SpectrumReport zero = make_spectrum_report(parse_bit_string("000"));
    REQUIRE_THAT(zero.s_ks, WithinAbs(0.0, 1e-15));
}

TEST_CASE("report fields are consistent", "[spectral]") {
    SpectrumReport rep = make_spectrum_report(from_integer(1072));
    REQUIRE(rep.n == 11);
    REQUIRE(rep.g == from_integer(1072));
    REQUIRE(rep.d.size() == 11);
    REQUIRE(rep.lambda.size() == 11);
    double sum = 0.0;
    for (std::size_t j = 0; j < rep.n; ++j) {
        REQUIRE_THAT(rep.lambda[j], WithinAbs(lyapunov_exponent(rep.d[j]), 1e-14));
        sum += rep.lambda[j];
    }
    REQUIRE_THAT(rep.s_ks, WithinAbs(sum, 1e-12));
}

TEST_CASE("sorting is descending and stable under permutation", "[spectral]") {
    auto sorted = sorted_descending({0.5, 2.0, -1.0, 2.0});
    REQUIRE(sorted == std::vector<double>{2.0, 2.0, 0.5, -1.0});
    REQUIRE(sorted_descending({}) == std::vector<double>{});
}
