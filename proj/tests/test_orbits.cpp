#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "orbitlab/error.hpp"
#include "orbitlab/linalg.hpp"
#include "orbitlab/orbits.hpp"

using namespace orbitlab;
using namespace orbitlab::orbits;
using exact::Matrix;
using graded::Component;

namespace {

GradedDecomposition D(std::vector<Component> c) { return GradedDecomposition(std::move(c)); }

NilpotentPair pair(std::size_t p, std::size_t q, std::initializer_list<long> x, std::initializer_list<long> y) {
    return NilpotentPair(Matrix::from_ints(p, q, x), Matrix::from_ints(q, p, y));
}

}  // namespace

TEST_CASE("nilpotency") {
    CHECK(is_nilpotent_pair(NilpotentPair::zero(0, 0)));
    CHECK(is_nilpotent_pair(NilpotentPair::zero(2, 3)));
    CHECK_FALSE(is_nilpotent_pair(pair(1, 2, {1, 0}, {1, 0})));
    CHECK(is_nilpotent_pair(representative(D({{2, 1}}))));
    CHECK(nilpotency_witness(pair(1, 2, {1, 0}, {1, 0})) == -1);
    CHECK_THROWS_AS(NilpotentPair(Matrix(1, 2), Matrix(1, 2)), ShapeMismatch);
}

TEST_CASE("rank invariant examples") {
    const auto zero = rank_invariant(NilpotentPair::zero(1, 2));
    CHECK(zero.xy[0] == 1);
    CHECK(zero.yx[0] == 2);
    for (std::size_t k = 1; k < zero.xy.size(); ++k) CHECK(zero.xy[k] == 0);
    CHECK(zero.rank_x() == 0);
    CHECK(zero.rank_y() == 0);

    const auto reg = rank_invariant(pair(1, 2, {1, 0}, {0, 1}));
    CHECK(reg.yx[1] == 1);
    CHECK(reg.xy[1] == 0);
    CHECK(reg.rank_x() == 1);
    CHECK(reg.rank_y() == 1);

    const auto anchor = rank_invariant(representative(D({{8, 1}, {2, 1}, {1, 1}})));
    CHECK(anchor.rank_x() == 6);
    CHECK(anchor.rank_y() == 5);
}

TEST_CASE("representatives") {
    const auto zero = representative(D({{0, 0}, {0, 1}, {0, 1}}));
    CHECK(zero.x.is_zero());
    CHECK(zero.y.is_zero());
    CHECK(classify(representative(D({{2, 1}}))) == D({{2, 1}}));
    // On V_1^0 the only arrow of e is v_1 -> v_0, from V_1 to V_0: it lives in y.
    const auto chain = representative(D({{1, 0}}));
    CHECK(chain.x.is_zero());
    CHECK_FALSE(chain.y.is_zero());
}

TEST_CASE("classify examples") {
    CHECK(classify(NilpotentPair::zero(1, 2)) == D({{0, 0}, {0, 1}, {0, 1}}));
    CHECK(classify(pair(1, 2, {1, 0}, {0, 0})) == D({{1, 1}, {0, 1}}));
    CHECK(classify(pair(1, 2, {0, 0}, {1, 0})) == D({{1, 0}, {0, 1}}));
    CHECK(classify(pair(1, 2, {1, 0}, {0, 1})) == D({{2, 1}}));
    CHECK_THROWS_AS(classify(pair(1, 2, {1, 0}, {1, 0})), InvalidArgument);
}

TEST_CASE("transpose examples") {
    const auto moved = transpose_move(pair(1, 2, {1, 0}, {0, 0}));
    CHECK(moved.x.is_zero());
    CHECK(moved.y == Matrix::from_ints(2, 1, {1, 0}));
    CHECK(classify(transpose_move(representative(D({{2, 1}})))) == D({{2, 1}}));
    CHECK(transpose_orbit(D({{4, 1}})) == D({{4, 1}}));
    CHECK(transpose_orbit(D({{1, 0}, {0, 1}})) == D({{1, 1}, {0, 1}}));
    CHECK(transpose_orbit(D({{1, 1}, {2, 1}, {8, 1}})) == D({{1, 0}, {2, 1}, {8, 1}}));
    CHECK(is_transpose_stable(D({{2, 1}})));
    CHECK_FALSE(is_transpose_stable(D({{1, 1}, {2, 1}, {8, 1}})));
    CHECK(is_transpose_stable(D({{0, 0}, {0, 1}})));
}

TEST_CASE("rank tables are non-increasing and start at p, q") {
    for (int n = 1; n <= 6; ++n) {
        for (int p = 0; p <= n; ++p) {
            for (const auto& d : graded::enumerate_decompositions(p, n - p)) {
                const auto inv = rank_invariant(representative(d));
                CHECK(inv.xy[0] == static_cast<std::size_t>(p));
                CHECK(inv.yx[0] == static_cast<std::size_t>(n - p));
                for (const auto* seq : {&inv.xy, &inv.yx, &inv.xyx, &inv.yxy}) {
                    CHECK(std::is_sorted(seq->rbegin(), seq->rend()));
                }
                CHECK(inv == predicted_invariant(d));
            }
        }
    }
}

TEST_CASE("round trip and transpose rule up to p+q = 8") {
    for (int n = 1; n <= 8; ++n) {
        for (int p = 0; p <= n; ++p) {
            for (const auto& d : graded::enumerate_decompositions(p, n - p)) {
                const auto e = representative(d);
                CHECK(classify(e) == d);
                CHECK(transpose_orbit(d) == classify(transpose_move(e)));
            }
        }
    }
}

TEST_CASE("classification is conjugation invariant") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> dist(-2, 2);
    auto random_invertible = [&](std::size_t n) {
        for (;;) {
            Matrix m(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) m.set(i, j, dist(rng));
            }
            if (!exact::determinant(m).is_zero()) return m;
        }
    };
    for (const auto& d : graded::enumerate_decompositions(3, 4)) {
        const auto e = representative(d);
        const Matrix a = random_invertible(3);
        const Matrix b = random_invertible(4);
        // (x, y) -> (a x b^{-1}, b y a^{-1})
        const NilpotentPair moved(a * e.x * exact::inverse(b), b * e.y * exact::inverse(a));
        CHECK(classify(moved) == d);
    }
}

TEST_CASE("distinct decompositions have distinct rank tables") {
    for (int p = 0; p <= 4; ++p) {
        for (int q = 0; q <= 4; ++q) {
            std::set<OrbitInvariant> seen;
            const auto all = graded::enumerate_decompositions(p, q);
            for (const auto& d : all) seen.insert(rank_invariant(representative(d)));
            CHECK(seen.size() == all.size());
        }
    }
}

TEST_CASE("finite field exhaustion over F_2") {
    for (int p = 1; p <= 6; ++p) {
        for (int q = 1; 2 * p * q <= 12; ++q) {
            const auto found = finite_field_invariants(p, q, 2, 2);
            CHECK(found.size() == graded::enumerate_decompositions(p, q).size());
        }
    }
}

TEST_CASE("classification over a prime field") {
    const auto d = D({{3, 0}, {2, 1}});
    const auto e = representative(d, exact::Domain::prime_field(11));
    CHECK(classify(e) == d);
    CHECK_THROWS_AS(classify(representative(d, exact::Domain::prime_field(7))), InvalidArgument);
}
