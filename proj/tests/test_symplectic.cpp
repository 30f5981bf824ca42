#include <catch2/catch_amalgamated.hpp>

#include "circat/experiments.hpp"
#include "circat/symplectic.hpp"

#include "oracles.hpp"

using namespace circat;

namespace {

IntMatrix from_rows(std::size_t n, std::initializer_list<std::int64_t> xs) {
    IntMatrix m(n, n);
    std::size_t i = 0;
    for (std::int64_t x : xs) m.v[i++] = x;
    REQUIRE(i == n * n);
    return m;
}

// Companion-style block [[0, -I], [I, D]] whose characteristic polynomial is
// det(x^2 I - x D + I), the product of the mode quadratics when D = 2I + C^2.
IntMatrix companion_block(const IntMatrix& d) {
    std::size_t n = d.rows;
    IntMatrix b(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        b(i, n + i) = -1;
        b(n + i, i) = 1;
        for (std::size_t j = 0; j < n; ++j) b(n + i, n + j) = d(i, j);
    }
    return b;
}

} // namespace

TEST_CASE("half step and full step have the pinned block layout", "[symplectic]") {
    IntMatrix acm_half = fibonacci_matrix(from_rows(1, {1}));
    REQUIRE(acm_half == from_rows(2, {0, 1, 1, 1}));

    IntMatrix acm = evolution_matrix(from_rows(1, {1}));
    REQUIRE(acm == from_rows(2, {1, 1, 1, 2}));

    REQUIRE(evolution_matrix(from_rows(2, {0, 0, 0, 0})) == IntMatrix::identity(4));

    IntMatrix swap2 = from_rows(2, {0, 1, 1, 0});
    REQUIRE(evolution_matrix(swap2) == from_rows(4, {1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 2, 0, 1, 0, 0, 2}));

    IntMatrix generic = fibonacci_matrix(from_rows(2, {3, 5, 5, 7}));
    REQUIRE(generic == from_rows(4, {0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 3, 5, 0, 1, 5, 7}));
}

TEST_CASE("full step is the square of the half step", "[symplectic]") {
    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + rng.below(8);
        auto g = oracle::random_symmetric_bits(n, rng);
        IntMatrix c = to_dense(adjacency_circulant(g));
        IntMatrix l = fibonacci_matrix(c);
        REQUIRE(l * l == evolution_matrix(c));
        REQUIRE(evolution_matrix(g) == evolution_matrix(c));
    }
}

TEST_CASE("symplectic form and the exact structure tests", "[symplectic]") {
    IntMatrix j = symplectic_form(1);
    REQUIRE(j == from_rows(2, {0, -1, 1, 0}));
    REQUIRE(det_exact(symplectic_form(4)) == 1);

    REQUIRE(is_symplectic(evolution_matrix(from_rows(1, {1}))));
    REQUIRE(is_symplectic(IntMatrix::identity(6)));
    REQUIRE_FALSE(is_symplectic(from_rows(2, {1, 1, 0, -1})));
    REQUIRE(is_anti_symplectic(from_rows(2, {1, 1, 0, -1})));

    REQUIRE(is_anti_symplectic(fibonacci_matrix(from_rows(1, {1}))));
    REQUIRE_FALSE(is_anti_symplectic(IntMatrix::identity(4)));

    REQUIRE_THROWS_AS(is_symplectic(IntMatrix(3, 3)), std::invalid_argument);
    REQUIRE_THROWS_AS(is_symplectic(IntMatrix(2, 4)), std::invalid_argument);
}

TEST_CASE("structure holds for every symmetric binary coupling", "[symplectic]") {
    Rng rng(13);
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 1 + rng.below(8);
        auto g = oracle::random_symmetric_bits(n, rng);
        IntMatrix c = to_dense(adjacency_circulant(g));
        IntMatrix l = fibonacci_matrix(c);
        IntMatrix m = evolution_matrix(c);
        REQUIRE(is_anti_symplectic(l));
        REQUIRE(is_symplectic(m));
        REQUIRE(is_symmetric(m));
        // Anti-symplectic squares to symplectic: the sign cancels.
        REQUIRE(is_symplectic(l * l));
    }
}

TEST_CASE("symplectic matrices compose and invert exactly", "[symplectic]") {
    Rng rng(17);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + rng.below(5);
        IntMatrix a = evolution_matrix(to_dense(adjacency_circulant(oracle::random_symmetric_bits(n, rng))));
        IntMatrix b = evolution_matrix(to_dense(adjacency_circulant(oracle::random_symmetric_bits(n, rng))));
        REQUIRE(is_symplectic(a * b));
        IntMatrix inv = symplectic_inverse(a);
        REQUIRE(a * inv == IntMatrix::identity(2 * n));
        REQUIRE(inv * a == IntMatrix::identity(2 * n));
        REQUIRE(symplectic_inverse(inv) == a);
    }
}

TEST_CASE("evolution matrix is positive definite with determinant one", "[symplectic]") {
    Rng rng(19);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + rng.below(6);
        IntMatrix m = evolution_matrix(to_dense(adjacency_circulant(oracle::random_symmetric_bits(n, rng))));
        REQUIRE(det_exact(m) == 1);
        REQUIRE(positive_definite(m));
    }
    REQUIRE_FALSE(positive_definite(from_rows(2, {1, 2, 2, 1})));
    REQUIRE_FALSE(positive_definite(from_rows(2, {0, 0, 0, 0})));
    REQUIRE_FALSE(positive_definite(from_rows(2, {1, 2, 3, 4})));
    std::vector<__int128> minors;
    REQUIRE(leading_minors(evolution_matrix(parse_bit_string("011")), minors));
    for (__int128 d : minors) REQUIRE(d > 0);
}

TEST_CASE("two-level couplings feed the same construction", "[symplectic]") {
    Circulant k3 = adjacency_circulant(parse_bit_string("011"));
    IntMatrix coupled = assemble(BlockCoupling{k3, circ_shift(3), k3});
    IntMatrix m = evolution_matrix(coupled);
    REQUIRE(is_symplectic(m));
    REQUIRE(is_symmetric(m));
    REQUIRE(det_exact(m) == 1);
    REQUIRE(evolution_matrix(assemble(BlockCoupling{k3, circ_zero(3), k3})) ==
            evolution_matrix(block_diagonal(k3, k3)));
}

TEST_CASE("eigenvalues come in per-mode growth pairs", "[symplectic]") {
    REQUIRE(eigen_relation_check(parse_bit_string("1")));
    REQUIRE(eigen_relation_check(parse_bit_string("0")));
    REQUIRE(eigen_relation_check(parse_bit_string("011")));
    REQUIRE(eigen_relation_check(parse_bit_string("11001001")));
    Rng rng(23);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 1 + rng.below(8);
        REQUIRE(eigen_relation_check(oracle::random_symmetric_bits(n, rng)));
    }
    // The exact determinant sweep overflows 128-bit intermediates once the
    // doubled dimension passes ~16; the failure is loud, not silent.
    REQUIRE_THROWS_AS(eigen_relation_check(from_integer(1072)), std::overflow_error);
}

TEST_CASE("characteristic polynomial factors through the coupling square", "[symplectic]") {
    // Exact identity: char(M) equals char([[0, -I], [I, 2I + C^2]]), and mod 2
    // the 2I term vanishes, leaving the coupling square alone. Coefficientwise
    // comparison; sampling mod 2 could not tell these apart.
    Rng rng(29);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + rng.below(4);
        auto g = oracle::random_symmetric_bits(n, rng);
        IntMatrix c = to_dense(adjacency_circulant(g));
        IntMatrix m = evolution_matrix(c);
        IntMatrix csq = c * c;

        IntMatrix shifted = csq;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) = checked_add(shifted(i, i), 2);
        auto exact_lhs = oracle::char_poly(m);
        auto exact_rhs = oracle::char_poly(companion_block(shifted));
        REQUIRE(exact_lhs == exact_rhs);

        auto mod2_rhs = oracle::char_poly(companion_block(csq));
        REQUIRE(exact_lhs.size() == mod2_rhs.size());
        for (std::size_t i = 0; i < exact_lhs.size(); ++i) {
            __int128 diff = exact_lhs[i] - mod2_rhs[i];
            REQUIRE(diff % 2 == 0);
        }
    }
}
