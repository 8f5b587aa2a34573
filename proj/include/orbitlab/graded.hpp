#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "orbitlab/matrix.hpp"

namespace orbitlab::graded {

using exact::Domain;
using exact::Matrix;

/// One irreducible graded summand V_lambda^omega: highest weight lambda,
/// highest weight vector of parity omega.
struct Component {
    int lambda = 0;
    int omega = 0;
    friend auto operator<=>(const Component&, const Component&) = default;
};

struct ParityDims {
    int even = 0;  // dim of the intersection with V_0
    int odd = 0;   // dim of the intersection with V_1
    friend bool operator==(const ParityDims&, const ParityDims&) = default;
};

ParityDims parity_dims(int lambda, int omega);

/// Multiset of summands, kept sorted descending by (lambda, omega) so that
/// equality is structural. Labels one nilpotent H_{p,q}-orbit in I_{p,q}.
class GradedDecomposition {
public:
    GradedDecomposition() = default;
    explicit GradedDecomposition(std::vector<Component> components);

    const std::vector<Component>& components() const { return components_; }
    std::size_t size() const { return components_.size(); }
    int p() const { return p_; }
    int q() const { return q_; }
    int dimension() const { return p_ + q_; }
    /// All summands one-dimensional, i.e. the zero orbit.
    bool is_zero_orbit() const;

    /// "{(8,1),(2,1),(1,1)}"
    std::string to_string() const;

    friend bool operator==(const GradedDecomposition& a, const GradedDecomposition& b) {
        return a.components_ == b.components_;
    }
    friend auto operator<=>(const GradedDecomposition& a, const GradedDecomposition& b) {
        return a.components_ <=> b.components_;
    }

private:
    std::vector<Component> components_;
    int p_ = 0;
    int q_ = 0;
};

/// Every decomposition with parity dimensions (p, q), each exactly once, in
/// descending lexicographic order of the sorted component lists.
std::vector<GradedDecomposition> enumerate_decompositions(int p, int q);

/// Graded sl2-triple realising a decomposition on V = sum of the summands.
/// Basis order: summands in canonical order, each with v_0..v_lambda.
struct Sl2Triple {
    Matrix h;
    Matrix e;
    Matrix f;
    std::vector<int> parity;  // parity of each basis vector
};

Sl2Triple build_sl2_triple(const GradedDecomposition& d, Domain domain = Domain::rational());

/// Interaction number m_{i,j} between two summands.
long m_pair(int lambda_i, int omega_i, int lambda_j, int omega_j);

/// Sum of m_{i,j} over all ordered pairs, diagonal included.
long m_sum(const GradedDecomposition& d);

/// tr(2 - h) on I_{p,q}^f via the closed formula
/// 2pq + (sum m_{i,j})/2 + (p - q)^2/2.
long trace_formula(const GradedDecomposition& d);

struct TraceOracle {
    std::size_t dim_i = 0;    // dim I_{p,q} = 2pq
    std::size_t dim_i_f = 0;  // dim ker(ad f) on I_{p,q}
    long trace_h = 0;         // trace of ad h restricted to I^f
    long value = 0;           // 2 dim I^f - trace_h
};

/// Builds the triple, takes the kernel of ad f on the odd part of End(V) and
/// the trace of ad h restricted to it. Independent of trace_formula.
TraceOracle trace_oracle(const GradedDecomposition& d);
long trace_bruteforce(const GradedDecomposition& d);

/// dim of the H_{p,q}-orbit of e: (p^2 + q^2) minus the dimension of the
/// centraliser of e in gl_p + gl_q.
std::size_t orbit_dim(const GradedDecomposition& d);

/// Largest orbit_dim among the nilpotent orbits in I_{p,q} (memoised).
std::size_t max_orbit_dim(int p, int q, unsigned threads = 1);

bool is_regular(const GradedDecomposition& d, int p, int q, unsigned threads = 1);

/// The sum 4t(t+1) + 4 sum_{i<=t} (lambda_i + lambda_{t+1+i}) i for a
/// decomposition whose summands all have even lambda and q = p + 1.
long even_positivity_sum(const GradedDecomposition& d);

}  // namespace orbitlab::graded
