#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "orbitlab/graded.hpp"
#include "orbitlab/matrix.hpp"

namespace orbitlab::orbits {

using exact::Domain;
using exact::Matrix;
using graded::GradedDecomposition;

/// A point e = (x, y) of I_{p,q} = Hom(V_0, V_1) + Hom(V_1, V_0): x is p x q,
/// y is q x p, both acting on row vectors, so xy is an endomorphism of V_0.
struct NilpotentPair {
    Matrix x;
    Matrix y;
    int p = 0;
    int q = 0;

    NilpotentPair() = default;
    NilpotentPair(Matrix x_block, Matrix y_block);
    static NilpotentPair zero(int p, int q, Domain domain = Domain::rational());
};

/// Ranks of the alternating words in (x, y) for k = 0..p+q. Equal tables
/// mean equal H_{p,q}-orbits for nilpotent pairs.
struct OrbitInvariant {
    std::vector<std::size_t> xy;   // rank (xy)^k
    std::vector<std::size_t> yx;   // rank (yx)^k
    std::vector<std::size_t> xyx;  // rank x(yx)^k
    std::vector<std::size_t> yxy;  // rank y(xy)^k

    std::size_t rank_x() const { return xyx.at(0); }
    std::size_t rank_y() const { return yxy.at(0); }

    friend auto operator<=>(const OrbitInvariant&, const OrbitInvariant&) = default;
};

/// (xy)^p = 0.
bool is_nilpotent_pair(const NilpotentPair& e);

/// Smallest k with (xy)^k = 0, or none within p + 1 steps.
int nilpotency_witness(const NilpotentPair& e);

OrbitInvariant rank_invariant(const NilpotentPair& e);

/// The rank table of representative(d), predicted by counting basis vectors
/// v_j of each parity with j >= k.
OrbitInvariant predicted_invariant(const GradedDecomposition& d);

/// The Hom(V_0, V_1) and Hom(V_1, V_0) blocks of the triple's e, as row-vector
/// matrices x and y.
NilpotentPair representative(const GradedDecomposition& d, Domain domain = Domain::rational());

/// Decodes the rank table into summand counts and confirms the answer
/// against its own representative.
GradedDecomposition classify(const NilpotentPair& e);

/// (x, y) -> (y^t, x^t).
NilpotentPair transpose_move(const NilpotentPair& e);

/// Combinatorial image of an orbit under the transpose: odd lambda flips omega.
GradedDecomposition transpose_orbit(const GradedDecomposition& d);

bool is_transpose_stable(const GradedDecomposition& d);

/// Distinct rank tables among all nilpotent pairs in I_{p,q}(F_l),
/// enumerated exhaustively and split across threads by blocks of the
/// lexicographic order of the entries.
std::set<OrbitInvariant> finite_field_invariants(int p, int q, std::uint64_t ell, unsigned threads = 1);

}  // namespace orbitlab::orbits
