#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "circat/checked.hpp"
#include "circat/matrix.hpp"

namespace circat {

/// First row of a binary circulant adjacency matrix on n nodes.
///
/// Entry l says whether every node i couples to node (i + l) mod n. Entry 0 is
/// the self-loop bit. The adjacency matrix is symmetric exactly when the row
/// is mirror-symmetric, g[l] == g[n - l] for l = 1..n-1; constructors that
/// build matrices enforce this, the raw vector type does not.
struct GeneratingVector {
    std::vector<std::int64_t> bits;

    std::size_t size() const { return bits.size(); }

    friend bool operator==(const GeneratingVector& a, const GeneratingVector& b) = default;
};

inline GeneratingVector make_generating_vector(std::vector<std::int64_t> bits) {
    if (bits.empty()) throw std::invalid_argument("generating vector must be nonempty");
    for (std::size_t l = 0; l < bits.size(); ++l)
        if (bits[l] != 0 && bits[l] != 1)
            throw std::invalid_argument("generating vector entries must be 0 or 1, entry " +
                                        std::to_string(l) + " is " + std::to_string(bits[l]));
    return GeneratingVector{std::move(bits)};
}

/// Parse "10000110000" style strings, one character per node, g_0 first.
inline GeneratingVector parse_bit_string(std::string_view s) {
    std::vector<std::int64_t> bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("bit string may contain only 0 and 1, got '" +
                                        std::string(1, c) + "'");
        bits.push_back(c - '0');
    }
    return make_generating_vector(std::move(bits));
}

inline std::string to_bit_string(const GeneratingVector& g) {
    std::string s;
    s.reserve(g.size());
    for (std::int64_t b : g.bits) s.push_back(b ? '1' : '0');
    return s;
}

/// Binary expansion of m >= 1, most significant bit first, so the bit count of
/// m fixes the number of nodes. Example: 1072 = 0b10000110000 gives n = 11.
inline GeneratingVector from_integer(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("graph integer must be at least 1");
    int top = 63;
    while (((m >> top) & 1u) == 0) --top;
    std::vector<std::int64_t> bits;
    bits.reserve(static_cast<std::size_t>(top) + 1);
    for (int i = top; i >= 0; --i) bits.push_back(static_cast<std::int64_t>((m >> i) & 1u));
    return GeneratingVector{std::move(bits)};
}

inline std::uint64_t to_integer(const GeneratingVector& g) {
    if (g.size() > 64) throw std::invalid_argument("generating vector too long for a 64-bit label");
    std::uint64_t m = 0;
    for (std::int64_t b : g.bits) m = (m << 1u) | static_cast<std::uint64_t>(b);
    if (m == 0) throw std::invalid_argument("zero vector has no positive integer label");
    return m;
}

inline bool validate_symmetric(const GeneratingVector& g) {
    std::size_t n = g.size();
    for (std::size_t l = 1; l < n; ++l)
        if (g.bits[l] != g.bits[n - l]) return false;
    return true;
}

/// Throws with the first offending mirror pair named, for CLI error messages.
inline void require_symmetric(const GeneratingVector& g) {
    std::size_t n = g.size();
    for (std::size_t l = 1; l < n; ++l)
        if (g.bits[l] != g.bits[n - l])
            throw std::invalid_argument("generating vector is not mirror symmetric: entries " +
                                        std::to_string(l) + " and " + std::to_string(n - l) +
                                        " differ");
}

/// Number of neighbors of each node, loops excluded: popcount of g_1..g_{n-1}.
inline std::size_t degree(const GeneratingVector& g) {
    std::size_t d = 0;
    for (std::size_t l = 1; l < g.size(); ++l) d += static_cast<std::size_t>(g.bits[l]);
    return d;
}

/// Stride-r connection set on n nodes: offsets k in 1..n-1 reachable by
/// counting in steps of r from either end, (k-1) % r == 0 or (n-k-1) % r == 0.
/// The two-sided rule keeps the set mirror symmetric. Stride 1 is the complete
/// graph for every n; stride 2 on odd n also fills every offset.
inline std::vector<std::size_t> stride_connection_set(std::size_t n, std::size_t r) {
    if (n == 0) throw std::invalid_argument("node count must be positive");
    if (r == 0) throw std::invalid_argument("stride must be positive");
    std::vector<std::size_t> s;
    for (std::size_t k = 1; k < n; ++k)
        if ((k - 1) % r == 0 || (n - k - 1) % r == 0) s.push_back(k);
    return s;
}

/// Variant without the offset-by-one: k % r == 0 or (n-k) % r == 0. Named
/// prime-free because for r = 2 it keeps only even offsets, so the dense
/// alternating structure of the plain stride-2 set on odd n disappears.
inline std::vector<std::size_t> stride_connection_set_prime_free(std::size_t n, std::size_t r) {
    if (n == 0) throw std::invalid_argument("node count must be positive");
    if (r == 0) throw std::invalid_argument("stride must be positive");
    std::vector<std::size_t> s;
    for (std::size_t k = 1; k < n; ++k)
        if (k % r == 0 || (n - k) % r == 0) s.push_back(k);
    return s;
}

inline GeneratingVector connection_set_vector(std::size_t n, const std::vector<std::size_t>& set,
                                              bool self_loops) {
    std::vector<std::int64_t> bits(n, 0);
    if (self_loops) bits[0] = 1;
    for (std::size_t k : set) {
        if (k == 0 || k >= n) throw std::invalid_argument("connection offset out of range");
        bits[k] = 1;
    }
    return GeneratingVector{std::move(bits)};
}

inline GeneratingVector stride_vector(std::size_t n, std::size_t r, bool self_loops) {
    return connection_set_vector(n, stride_connection_set(n, r), self_loops);
}

inline GeneratingVector stride_vector_prime_free(std::size_t n, std::size_t r, bool self_loops) {
    return connection_set_vector(n, stride_connection_set_prime_free(n, r), self_loops);
}

/// Alternating family used by the period sweeps over system size: couple
/// offset l exactly when min(l, n-l) is odd. Odd n gives the chain
/// (0,1,1), (0,1,0,1,1,0,1), ...; even n reproduces the stride-2 vectors.
inline GeneratingVector periodic_vector(std::size_t n) {
    if (n == 0) throw std::invalid_argument("node count must be positive");
    std::vector<std::int64_t> bits(n, 0);
    for (std::size_t l = 1; l < n; ++l) bits[l] = (std::min(l, n - l) % 2 == 1) ? 1 : 0;
    return GeneratingVector{std::move(bits)};
}

/// Undirected edge list {i, j} with i <= j; the self-loop bit contributes
/// (i, i) for every node. Mirror-symmetric input required.
inline std::vector<std::pair<std::size_t, std::size_t>> edge_list(const GeneratingVector& g) {
    require_symmetric(g);
    std::size_t n = g.size();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    if (g.bits[0])
        for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, i);
    for (std::size_t l = 1; l <= n / 2; ++l) {
        if (!g.bits[l]) continue;
        if (2 * l == n) {
            for (std::size_t i = 0; i < n / 2; ++i) edges.emplace_back(i, i + l);
        } else {
            // Offset class l < n/2 holds exactly n distinct undirected edges;
            // the wrap pairs come out normalized.
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t j = (i + l) % n;
                edges.emplace_back(std::min(i, j), std::max(i, j));
            }
        }
    }
    return edges;
}

/// Circulant matrix, stored as its first row. Row i is the first row rotated
/// right i places: entry (i, j) = row[(j - i) mod n].
struct Circulant {
    std::vector<std::int64_t> row;

    std::size_t size() const { return row.size(); }

    std::int64_t entry(std::size_t i, std::size_t j) const {
        std::size_t n = row.size();
        return row[(j + n - i) % n]; // requires i, j < n
    }

    friend bool operator==(const Circulant& a, const Circulant& b) = default;
};

inline Circulant circ_zero(std::size_t n) { return Circulant{std::vector<std::int64_t>(n, 0)}; }

inline Circulant circ_identity(std::size_t n) {
    Circulant c = circ_zero(n);
    if (n == 0) throw std::invalid_argument("circulant size must be positive");
    c.row[0] = 1;
    return c;
}

/// Cyclic shift generator P: entry (i, i+1) = 1. P^n = I, and for n = 1 the
/// shift is the identity.
inline Circulant circ_shift(std::size_t n) {
    if (n == 0) throw std::invalid_argument("circulant size must be positive");
    Circulant c = circ_zero(n);
    c.row[1 % n] = 1;
    return c;
}

inline Circulant adjacency_circulant(const GeneratingVector& g) {
    require_symmetric(g);
    return Circulant{g.bits};
}

inline IntMatrix to_dense(const Circulant& c) {
    std::size_t n = c.size();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = c.entry(i, j);
    return m;
}

inline bool circ_symmetric(const Circulant& c) {
    std::size_t n = c.size();
    for (std::size_t l = 1; l < n; ++l)
        if (c.row[l] != c.row[n - l]) return false;
    return true;
}

inline void require_same_size(const Circulant& a, const Circulant& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("circulant size mismatch: " + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()));
}

inline Circulant circ_add(const Circulant& a, const Circulant& b,
                          std::optional<std::int64_t> N = std::nullopt) {
    require_same_size(a, b);
    Circulant r = circ_zero(a.size());
    for (std::size_t l = 0; l < a.size(); ++l)
        r.row[l] = N ? add_mod(a.row[l], b.row[l], *N) : checked_add(a.row[l], b.row[l]);
    return r;
}

/// Product of circulants is the circular convolution of their first rows.
/// Exact (checked) without a modulus, 128-bit accumulation with one.
inline Circulant circ_mul(const Circulant& a, const Circulant& b,
                          std::optional<std::int64_t> N = std::nullopt) {
    require_same_size(a, b);
    std::size_t n = a.size();
    Circulant r = circ_zero(n);
    if (N) {
        if (*N <= 0) throw std::invalid_argument("modulus must be positive");
        for (std::size_t i = 0; i < n; ++i) {
            __int128 acc = 0;
            for (std::size_t l = 0; l < n; ++l) {
                if (a.row[l] == 0) continue;
                acc += static_cast<__int128>(floor_mod(a.row[l], *N)) *
                       floor_mod(b.row[(i + n - l) % n], *N);
            }
            r.row[i] = static_cast<std::int64_t>(acc % *N);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t acc = 0;
            for (std::size_t l = 0; l < n; ++l) {
                if (a.row[l] == 0) continue;
                acc = checked_add(acc, checked_mul(a.row[l], b.row[(i + n - l) % n]));
            }
            r.row[i] = acc;
        }
    }
    return r;
}

inline Circulant circ_mod(const Circulant& a, std::int64_t N) {
    Circulant r = a;
    for (auto& x : r.row) x = floor_mod(x, N);
    return r;
}

/// Direct sum diag(C1, C2) of two circulant blocks, as a dense matrix.
inline IntMatrix block_diagonal(const Circulant& c1, const Circulant& c2) {
    std::size_t n1 = c1.size(), n2 = c2.size();
    IntMatrix m(n1 + n2, n1 + n2);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) m(i, j) = c1.entry(i, j);
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j) m(n1 + i, n1 + j) = c2.entry(i, j);
    return m;
}

/// Two-level coupling [[C1, B], [B^T, C2]] with circulant blocks of one size.
/// The result is symmetric exactly when C1 and C2 are.
struct BlockCoupling {
    Circulant c1, b, c2;
};

inline IntMatrix assemble(const BlockCoupling& bc) {
    require_same_size(bc.c1, bc.b);
    require_same_size(bc.b, bc.c2);
    std::size_t n = bc.c1.size();
    IntMatrix m(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = bc.c1.entry(i, j);
            m(i, n + j) = bc.b.entry(i, j);
            m(n + i, j) = bc.b.entry(j, i);
            m(n + i, n + j) = bc.c2.entry(i, j);
        }
    return m;
}

} // namespace circat
