#include "toric/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace toric;

namespace {

RatMatrix ints(const std::vector<std::vector<long>>& rows) {
    std::vector<IntVector> r;
    for (const auto& row : rows) {
        IntVector v;
        for (long x : row) v.emplace_back(x);
        r.push_back(v);
    }
    return RatMatrix::from_int_rows(r, rows.empty() ? 0 : rows.front().size());
}

IntVector iv(std::initializer_list<long> xs) {
    IntVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

// Random unimodular matrix as a product of elementary row operations.
RatMatrix random_unimodular(std::size_t n, std::mt19937_64& rng) {
    RatMatrix u = RatMatrix::identity(n);
    for (int step = 0; step < 12; ++step) {
        const std::size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;
        const long c = static_cast<long>(rng() % 5) - 2;
        for (std::size_t k = 0; k < n; ++k) u(i, k) += c * u(j, k);
    }
    return u;
}

bool proportional(const RatVector& a, const IntVector& b) {
    Rat ratio = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] == 0) {
            if (a[i] != 0) return false;
            continue;
        }
        Rat r = a[i] / Rat(b[i]);
        if (ratio == 0) ratio = r;
        if (r != ratio) return false;
    }
    return ratio != 0;
}

}  // namespace

TEST_CASE("rank of small matrices") {
    CHECK(rank(RatMatrix::identity(3)) == 3);
    CHECK(rank(RatMatrix(4, 2)) == 0);
    CHECK(rank(RatMatrix(0, 5)) == 0);
    CHECK(rank(ints({{1, 2}, {2, 4}, {3, 6}})) == 1);
}

TEST_CASE("rank is invariant under unimodular changes of basis") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 2 + rng() % 4, c = 2 + rng() % 4;
        RatMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a(i, j) = static_cast<long>(rng() % 5) - 2;
        // Force a dependent row now and then.
        if (trial % 3 == 0 && r > 1)
            for (std::size_t j = 0; j < c; ++j) a(r - 1, j) = a(0, j) * 2;
        const auto base = rank(a);
        CHECK(rank(random_unimodular(r, rng) * a * random_unimodular(c, rng)) == base);
        CHECK(rank(a.transpose()) == base);
    }
}

TEST_CASE("kernel basis examples") {
    auto k = kernel_basis(ints({{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(proportional(k[0], iv({1, -1})));
    CHECK(kernel_basis(RatMatrix::identity(3)).empty());
    k = kernel_basis(ints({{1, 0, 1}, {0, 1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(proportional(k[0], iv({1, 1, -1})));
}

TEST_CASE("kernel satisfies rank-nullity and annihilation") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
        RatMatrix a(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) a(i, j) = static_cast<long>(rng() % 3) - 1;
        auto k = kernel_basis(a);
        CHECK(rank(a) + k.size() == c);
        for (const auto& v : k) {
            RatMatrix col = RatMatrix::from_rows({v}, c).transpose();
            CHECK((a * col).is_zero());
        }
        if (!k.empty()) CHECK(rank(RatMatrix::from_rows(k, c)) == k.size());
    }
}

TEST_CASE("primitive representatives") {
    CHECK(saturate_and_primitive(iv({2, 4, 6})) == iv({1, 2, 3}));
    CHECK(saturate_and_primitive(iv({0, -5})) == iv({0, -1}));
    CHECK(saturate_and_primitive(iv({3, 7})) == iv({3, 7}));
    CHECK_THROWS_AS(saturate_and_primitive(iv({0, 0})), std::invalid_argument);
}

TEST_CASE("integer kernel is a saturated basis") {
    // x + 2y + 3z = 0 over Z: index of the rational kernel's integer span must be 1.
    std::vector<IntVector> rows{iv({2, 4, 6})};
    auto k = integer_kernel_basis(rows, 3);
    REQUIRE(k.size() == 2);
    for (const auto& v : k) CHECK(dot(rows[0], v) == 0);
    // gcd of the 2x2 minors of the basis equals 1 exactly when the basis is saturated.
    Int g = 0;
    for (const auto& s : lex_subsets(3, 2)) {
        Int m = k[0][static_cast<std::size_t>(s[0])] * k[1][static_cast<std::size_t>(s[1])] -
                k[0][static_cast<std::size_t>(s[1])] * k[1][static_cast<std::size_t>(s[0])];
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
    }
    CHECK(g == 1);
}

TEST_CASE("unit pairing vector") {
    IntVector w = iv({6, 10, 15});
    CHECK(dot(w, unit_pairing_vector(w)) == 1);
    CHECK_THROWS(unit_pairing_vector(iv({2, 4})));
}

TEST_CASE("determinant and binomials") {
    CHECK(determinant({{1, 2}, {3, 4}}) == -2);
    CHECK(determinant({{2, 0, 0}, {0, 3, 0}, {1, 1, 0}}) == 0);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(lex_subsets(4, 2).size() == 6);
}

TEST_CASE("degree-one contraction onto the empty wedge") {
    WedgeBasis src({{1, 0}, {0, 1}}, 1);
    WedgeBasis dst({{0, 1}}, 0);
    RatMatrix m = interior_product_matrix(src, dst, iv({1, 0}));
    REQUIRE(m.rows() == 1);
    REQUIRE(m.cols() == 2);
    CHECK(m(0, 0) == 1);
    CHECK(m(0, 1) == 0);
    CHECK(interior_product_matrix(src, dst, iv({0, 0})).is_zero());
}

TEST_CASE("degree-two contraction agrees with the expansion formula") {
    // Source Λ^2 Q^3 on the standard basis, target Λ^1 of n^⊥.
    const IntVector n = iv({1, 2, 0});
    WedgeBasis src({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 2);
    const std::vector<RatVector> perp{{2, -1, 0}, {0, 0, 1}};
    WedgeBasis dst(perp, 1);
    RatMatrix m = interior_product_matrix(src, dst, n);
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 3);
    for (std::size_t c = 0; c < src.size(); ++c) {
        const int i = src.index[c][0], j = src.index[c][1];
        // ι_n(e_i ∧ e_j) = n_i e_j - n_j e_i
        RatVector expect(3, 0);
        expect[static_cast<std::size_t>(j)] += Rat(n[static_cast<std::size_t>(i)]);
        expect[static_cast<std::size_t>(i)] -= Rat(n[static_cast<std::size_t>(j)]);
        RatVector got(3, 0);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t x = 0; x < 3; ++x) got[x] += m(r, c) * perp[r][x];
        CHECK(got == expect);
    }
    // Contracting twice by the same vector gives zero.
    WedgeBasis last({{0, 0, 1}}, 0);
    RatMatrix m2 = interior_product_matrix(dst, last, n);
    CHECK((m2 * m).is_zero());
}

TEST_CASE("contraction rejects a target that misses the image") {
    WedgeBasis src({{1, 0}, {0, 1}}, 1);
    CHECK_THROWS_WITH_AS(interior_product_matrix(src, WedgeBasis({{1, 1}}, 0), iv({1, 0})),
                         "target subspace does not contain image", std::invalid_argument);
}
