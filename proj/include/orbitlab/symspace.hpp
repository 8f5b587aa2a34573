#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "orbitlab/matrix.hpp"
#include "orbitlab/polynomial.hpp"

namespace orbitlab::symspace {

using exact::Domain;
using exact::Matrix;
using exact::Polynomial;
using exact::Scalar;

/// Label of a closed double coset H g H in GL_{p+q}: the char poly of tau(g)
/// is (t - 1)^alpha (t + 1)^{2k} prod_i (t^2 - 2 a_i t + 1).
struct CosetInvariant {
    int k = 0;
    int nu = 0;
    std::vector<Scalar> a_values;  // sorted canonically, a^2 != 1

    friend bool operator==(const CosetInvariant&, const CosetInvariant&) = default;
    std::string to_string() const;
};

/// diag(1_p, -1_q).
Matrix omega(int p, int q, Domain domain = Domain::rational());

/// tau(g) = g theta(g^{-1}) = g w g^{-1} w with w = omega(p, q).
Matrix tau(const Matrix& g, int p, int q);

/// Closedness of H g H, read as semisimplicity of tau(g): its minimal
/// polynomial is squarefree.
bool is_closed(const Matrix& g, int p, int q);

/// The involution x_{p,k}: blocks (k, p-k, k, q-k) with the two k-blocks swapped.
Matrix rep_xpk(int p, int q, int k, Domain domain = Domain::rational());

/// Representative with nu = |a_values| quadratic blocks [[1,1],[a-1,a+1]] on
/// coordinate pairs (i, n - nu + i) around a middle x_{p-nu,k}.
Matrix rep_nu_block(int p, int q, int k, const std::vector<Scalar>& a_values,
                    Domain domain = Domain::rational());

CosetInvariant coset_invariants(const Matrix& g, int p, int q);

/// n^2 - dim(h_{p,q} + Ad_g h_{p,q}).
std::size_t normal_space_dim(const Matrix& g, int p, int q);

/// Random invertible block-diagonal element of H_{p,q}(Q) with small integer entries.
Matrix random_h_element(int p, int q, std::mt19937_64& rng);

}  // namespace orbitlab::symspace
