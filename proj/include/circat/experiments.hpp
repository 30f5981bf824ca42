#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "circat/graph.hpp"
#include "circat/parallel.hpp"
#include "circat/spectral.hpp"

namespace circat {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace detail

/// Derive an independent substream seed from a base seed and a stream index.
/// Used to give every (grid point, replication) its own generator, so results
/// do not depend on thread count or evaluation order.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed;
    std::uint64_t a = detail::splitmix64(s);
    s ^= stream * 0xD1342543DE82EF95ULL + 0x2545F4914F6CDD1DULL;
    std::uint64_t b = detail::splitmix64(s);
    return a ^ (b + 0x9E3779B97F4A7C15ULL);
}

/// Deterministic random source. std::mt19937_64 has a fixed portable output
/// sequence; the distribution logic lives here because the standard
/// distributions are implementation-defined and would break byte-for-byte
/// reproducibility across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform integer in [0, bound), unbiased by rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("bound must be positive");
        std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        std::uint64_t rem = (max % bound + 1) % bound; // 2^64 mod bound
        std::uint64_t ceiling = max - rem;             // largest accepted draw
        for (;;) {
            std::uint64_t x = eng_();
            if (x <= ceiling) return x % bound;
        }
    }

private:
    std::mt19937_64 eng_;
};

/// Uniform random mirror-symmetric binary coupling row with an exact neighbor
/// count and no self-loop. Mirror pairs (l, n-l) contribute two neighbors, the
/// antipodal offset n/2 (even n only) contributes one, so an odd degree is
/// impossible on odd n and that request throws.
inline GeneratingVector random_symmetric_vector(std::size_t n, std::size_t deg, Rng& rng) {
    if (n < 2) throw std::invalid_argument("random coupling needs n >= 2");
    if (deg > n - 1) throw std::invalid_argument("degree can be at most n - 1");
    bool has_antipode = (n % 2 == 0);
    std::size_t pair_slots = has_antipode ? n / 2 - 1 : (n - 1) / 2;
    bool use_antipode = false;
    std::size_t pairs_needed;
    if (deg % 2 == 0) {
        pairs_needed = deg / 2;
    } else {
        if (!has_antipode)
            throw std::domain_error("odd degree is impossible for a symmetric coupling on odd n");
        use_antipode = true;
        pairs_needed = (deg - 1) / 2;
    }
    if (pairs_needed > pair_slots)
        throw std::invalid_argument("degree too large for the available mirror pairs");
    // Partial Fisher-Yates over the pair offsets 1..pair_slots.
    std::vector<std::size_t> slots(pair_slots);
    std::iota(slots.begin(), slots.end(), std::size_t{1});
    for (std::size_t i = 0; i < pairs_needed; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(pair_slots - i));
        std::swap(slots[i], slots[j]);
    }
    std::vector<std::int64_t> bits(n, 0);
    for (std::size_t i = 0; i < pairs_needed; ++i) {
        bits[slots[i]] = 1;
        bits[n - slots[i]] = 1;
    }
    if (use_antipode) bits[n / 2] = 1;
    return GeneratingVector{std::move(bits)};
}

/// One point of an entropy-versus-size curve.
struct EntropyPoint {
    unsigned stride = 0;
    std::size_t n = 0;
    std::size_t deg = 0;
    double s_ks = 0.0;
};

/// Kolmogorov-Sinai entropy across a size grid for each stride family.
/// Rows come back stride-major in grid order regardless of thread count.
inline std::vector<EntropyPoint> run_entropy_curves(const std::vector<unsigned>& strides,
                                                    bool self_loops,
                                                    const std::vector<std::size_t>& sizes,
                                                    unsigned threads = 1) {
    for (unsigned r : strides)
        if (r == 0) throw std::invalid_argument("stride must be positive");
    for (std::size_t n : sizes)
        if (n < 2) throw std::invalid_argument("entropy sweep needs n >= 2");
    std::size_t count = strides.size() * sizes.size();
    return parallel_map(count, threads, [&](std::size_t idx) {
        unsigned r = strides[idx / sizes.size()];
        std::size_t n = sizes[idx % sizes.size()];
        GeneratingVector g = stride_vector(n, r, self_loops);
        SpectrumReport rep = make_spectrum_report(g);
        return EntropyPoint{r, n, degree(g), rep.s_ks};
    });
}

/// Spectrum of the graph labeled by the binary expansion of an integer.
struct IntegerGraphReport {
    std::uint64_t label = 0;
    GeneratingVector g;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    SpectrumReport spectrum;
};

/// Decode an integer label into its coupling graph and full spectrum report.
/// Labels whose expansion is not mirror symmetric are rejected with the
/// offending entry pair named.
inline IntegerGraphReport run_integer_graph(std::uint64_t label) {
    GeneratingVector g = from_integer(label);
    require_symmetric(g);
    IntegerGraphReport rep;
    rep.label = label;
    rep.g = g;
    rep.edges = edge_list(g);
    rep.spectrum = make_spectrum_report(g);
    return rep;
}

/// Entropy comparison for one size: deterministic stride reference, its
/// prime-free variant, and a random degree-matched ensemble.
struct EnsembleRecord {
    std::size_t n = 0;
    std::size_t deg = 0;
    double deterministic = 0.0;
    double deterministic_prime = 0.0;
    std::vector<double> samples;
    double mean = 0.0;
    bool skipped = false; // degree parity impossible, no ensemble drawn
};

/// Random-ensemble entropy study. Every (size, replication) pair draws from
/// its own seed substream, so records are reproducible for any thread count.
inline std::vector<EnsembleRecord> run_random_ensemble(const std::vector<std::size_t>& sizes,
                                                       unsigned stride, std::size_t replications,
                                                       std::uint64_t seed, unsigned threads = 1) {
    if (stride == 0) throw std::invalid_argument("stride must be positive");
    if (replications == 0) throw std::invalid_argument("need at least one replication");
    return parallel_map(sizes.size(), threads, [&](std::size_t idx) {
        std::size_t n = sizes[idx];
        EnsembleRecord rec;
        rec.n = n;
        GeneratingVector ref = stride_vector(n, stride, false);
        rec.deg = degree(ref);
        rec.deterministic = make_spectrum_report(ref).s_ks;
        rec.deterministic_prime =
            make_spectrum_report(stride_vector_prime_free(n, stride, false)).s_ks;
        if (rec.deg % 2 == 1 && n % 2 == 1) {
            rec.skipped = true;
            return rec;
        }
        rec.samples.reserve(replications);
        double total = 0.0;
        for (std::size_t rep = 0; rep < replications; ++rep) {
            Rng rng(mix_seed(seed, static_cast<std::uint64_t>(n) * 1000003ULL + rep));
            GeneratingVector sample = random_symmetric_vector(n, rec.deg, rng);
            double s = make_spectrum_report(sample).s_ks;
            rec.samples.push_back(s);
            total += s;
        }
        rec.mean = total / static_cast<double>(replications);
        return rec;
    });
}

/// Ordinary least squares y = slope x + intercept with the coefficient of
/// determination. A perfectly flat response counts as a perfect fit.
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

inline LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit needs two series of equal length, at least two points");
    double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit needs at least two distinct x values");
    LinearFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss_res = syy - f.slope * sxy;
    f.r_squared = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
    return f;
}

} // namespace circat
