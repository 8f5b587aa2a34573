#include <doctest.h>

#include <random>

#include "orbitlab/error.hpp"
#include "orbitlab/linalg.hpp"
#include "orbitlab/polynomial.hpp"

using namespace orbitlab;
using namespace orbitlab::exact;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, Domain d = Domain::rational(),
                     long lo = -4, long hi = 4) {
    std::uniform_int_distribution<long> dist(lo, hi);
    Matrix m(r, c, d);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, dist(rng));
    }
    return m;
}

Matrix random_low_rank(std::size_t r, std::size_t c, std::size_t k, std::mt19937_64& rng) {
    return random_matrix(r, k, rng) * random_matrix(k, c, rng);
}

Matrix jordan_block(std::size_t n) {
    Matrix j(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) j.set(i, i + 1, 1);
    return j;
}

}  // namespace

TEST_CASE("scalar canonical forms") {
    const Domain q = Domain::rational();
    CHECK(Scalar::parse(q, "6/4").to_string() == "3/2");
    CHECK(Scalar::parse(q, "-2").to_string() == "-2/1");
    CHECK(Scalar::parse(q, "3/-6") == Scalar::parse(q, "-1/2"));

    const Domain f7 = Domain::prime_field(7);
    CHECK(Scalar::parse(f7, "10").to_string() == "3");
    CHECK((Scalar::from_int(f7, 3) * Scalar::from_int(f7, 5)).to_string() == "1");
    CHECK(Scalar::from_int(f7, 3).inverse() == Scalar::from_int(f7, 5));
    CHECK_THROWS_AS(Domain::prime_field(9), InvalidArgument);

    const Domain c3 = Domain::cyclotomic(3);
    const Scalar z = Scalar::root_of_unity(3, 1);
    CHECK(z.pow(3).is_one());
    CHECK_FALSE(z.is_one());
    // 1 + z + z^2 = 0
    CHECK((Scalar::one(c3) + z + z * z).is_zero());
    CHECK(Scalar::parse(c3, "zeta:3:2") == z * z);
    CHECK(z * z.inverse() == Scalar::one(c3));

    CHECK_THROWS_AS(Scalar::one(q) + Scalar::one(f7), DomainMismatch);
}

TEST_CASE("scalar arithmetic is exact") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-50, 50);
    for (int trial = 0; trial < 200; ++trial) {
        const Scalar a(mpq_class(dist(rng), 1 + std::abs(dist(rng))));
        const Scalar b(mpq_class(dist(rng), 1 + std::abs(dist(rng))));
        CHECK(a + b - b == a);
        if (!b.is_zero()) CHECK(a * b / b == a);
    }
    const Domain c5 = Domain::cyclotomic(5);
    const Scalar z = Scalar::root_of_unity(5, 1);
    const Scalar w = Scalar::parse(c5, "1/2,3,0,-1");
    CHECK(w + z - z == w);
    CHECK(w * z / z == w);
}

TEST_CASE("rank examples") {
    CHECK(rank(Matrix(3, 3)) == 0);
    CHECK(rank(Matrix::identity(4)) == 4);
    CHECK(rank(Matrix(3, 3, Domain::prime_field(5))) == 0);
    CHECK(rank(Matrix::from_ints(2, 2, {1, 2, 2, 4})) == 1);
    CHECK(rank(Matrix::from_ints(2, 2, {1, 1, 0, 1}, Domain::prime_field(2))) == 2);
    CHECK(rank(Matrix::from_ints(2, 2, {1, 1, 1, 3}, Domain::prime_field(2))) == 1);
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(Matrix::identity(5)).empty());
    CHECK(kernel_basis(Matrix(2, 3)).size() == 3);
    const auto k = kernel_basis(Matrix::from_ints(2, 2, {1, 1, 1, 1}));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -k[0][1]);
    CHECK_FALSE(k[0][0].is_zero());
}

TEST_CASE("fraction-free and field elimination agree") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + trial % 7;
        const std::size_t c = 1 + (trial * 5) % 8;
        const Matrix m = trial % 2 ? random_low_rank(r, c, 1 + trial % 3, rng) : random_matrix(r, c, rng);
        const auto a = echelon(m, Elimination::FractionFree);
        const auto b = echelon(m, Elimination::Field);
        CHECK(a.pivots == b.pivots);
        CHECK(a.reduced == b.reduced);
    }
}

TEST_CASE("rank plus nullity") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t r = 1 + trial % 6;
        const std::size_t c = 1 + (trial * 3) % 7;
        const Matrix m = random_low_rank(r, c, 1 + trial % 4, rng);
        const auto k = kernel_basis(m);
        CHECK(rank(m) + k.size() == c);
        for (const auto& v : k) {
            for (const auto& entry : m * v) CHECK(entry.is_zero());
        }
        CHECK(rank(m) <= std::min(r, c));
    }
}

TEST_CASE("rank is invariant under invertible row operations") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 8;
        const std::size_t c = 1 + (trial * 7) % 8;
        Matrix p = random_matrix(n, n, rng);
        while (determinant(p).is_zero()) p = random_matrix(n, n, rng);
        const Matrix m = random_low_rank(n, c, 1 + trial % 5, rng);
        CHECK(rank(p * m) == rank(m));
    }
}

TEST_CASE("determinant and inverse") {
    const Matrix a = Matrix::from_ints(3, 3, {2, 0, 1, 1, 3, 2, 1, 1, 2});
    CHECK(determinant(a) == Scalar(6));
    CHECK(a * inverse(a) == Matrix::identity(3));
    CHECK_THROWS_AS(inverse(Matrix::from_ints(2, 2, {1, 2, 2, 4})), SingularMatrix);
}

TEST_CASE("minimal polynomial examples") {
    CHECK(minimal_polynomial(Matrix::identity(3)) == Polynomial::from_ints({-1, 1}));
    CHECK(minimal_polynomial(Matrix::from_ints(2, 2, {1, 0, 0, -1})) == Polynomial::from_ints({-1, 0, 1}));
    CHECK(minimal_polynomial(jordan_block(3)) == Polynomial::from_ints({0, 0, 0, 1}));
    CHECK_THROWS_AS(minimal_polynomial(Matrix(2, 3)), ShapeMismatch);
}

TEST_CASE("minimal polynomial divides characteristic polynomial") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 6;
        Matrix m = trial % 3 == 0 ? random_low_rank(n, n, 1 + trial % 2, rng) : random_matrix(n, n, rng, Domain::rational(), -2, 2);
        if (trial % 5 == 0) m = Matrix::identity(n) + jordan_block(n);
        const Polynomial mp = minimal_polynomial(m);
        const Polynomial cp = characteristic_polynomial(m);
        CHECK(cp.degree() == static_cast<int>(n));
        CHECK(mp.divides(cp));
        CHECK(mp.evaluate(m).is_zero());
        CHECK(cp.evaluate(m).is_zero());
    }
}

TEST_CASE("characteristic polynomial against determinant at integer points") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + trial % 4;
        const Matrix m = random_matrix(n, n, rng);
        const Polynomial cp = characteristic_polynomial(m);
        for (long t = -2; t <= 2; ++t) {
            CHECK(cp.evaluate(Scalar(t)) == determinant(Scalar(t) * Matrix::identity(n) - m));
        }
    }
}

TEST_CASE("squarefree examples") {
    CHECK(is_squarefree(Polynomial::from_ints({-1, 0, 1})));
    CHECK_FALSE(is_squarefree(Polynomial::from_ints({0, 0, 1})));
    CHECK(is_squarefree(Polynomial::from_ints({0, -1, 0, 1})));
    CHECK_THROWS_AS(is_squarefree(Polynomial()), InvalidArgument);
}

TEST_CASE("subspace sums") {
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < 5; ++i) {
        Vector v(5, Scalar(0));
        v[i] = 1;
        basis.push_back(v);
    }
    CHECK(subspace_sum_dim(basis, basis) == 5);

    std::vector<Vector> a, b;
    for (std::size_t i = 0; i < 5; ++i) {
        Vector v(9, Scalar(0));
        v[i] = 1;
        (i < 2 ? a : b).push_back(v);
    }
    CHECK(subspace_sum_dim(a, b) == 5);

    std::vector<Vector> bad{Vector(3, Scalar(0))};
    CHECK_THROWS_AS(subspace_sum_dim(a, bad), ShapeMismatch);
}

TEST_CASE("solve in span") {
    const Matrix basis = Matrix::from_ints(3, 2, {1, 0, 1, 1, 0, 1});
    const Matrix target = Matrix::from_ints(3, 1, {2, 5, 3});
    const Matrix coords = solve_in_span(basis, target);
    CHECK(basis * coords == target);
    CHECK_THROWS(solve_in_span(basis, Matrix::from_ints(3, 1, {1, 0, 0})));
}
