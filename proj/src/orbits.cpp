#include "orbitlab/orbits.hpp"

#include <algorithm>
#include <numeric>

#include "orbitlab/error.hpp"
#include "orbitlab/linalg.hpp"
#include "orbitlab/parallel.hpp"

namespace orbitlab::orbits {

using exact::Scalar;
using graded::Component;

NilpotentPair::NilpotentPair(Matrix x_block, Matrix y_block)
    : x(std::move(x_block)), y(std::move(y_block)), p(static_cast<int>(x.rows())),
      q(static_cast<int>(x.cols())) {
    if (y.rows() != x.cols() || y.cols() != x.rows()) {
        throw ShapeMismatch("y must be q x p when x is p x q");
    }
    if (!(x.domain() == y.domain())) throw DomainMismatch("x and y live in different domains");
}

NilpotentPair NilpotentPair::zero(int p, int q, Domain domain) {
    if (p < 0 || q < 0) throw InvalidArgument("negative dimension");
    return NilpotentPair(Matrix(static_cast<std::size_t>(p), static_cast<std::size_t>(q), domain),
                         Matrix(static_cast<std::size_t>(q), static_cast<std::size_t>(p), domain));
}

int nilpotency_witness(const NilpotentPair& e) {
    const Matrix xy = e.x * e.y;
    Matrix power = Matrix::identity(xy.rows(), xy.domain());
    for (int k = 0; k <= e.p + 1; ++k) {
        if (power.is_zero()) return k;
        power = power * xy;
    }
    return -1;
}

bool is_nilpotent_pair(const NilpotentPair& e) {
    if (e.y.rows() != e.x.cols() || e.y.cols() != e.x.rows()) throw ShapeMismatch("inconsistent pair shape");
    if (e.p == 0) return true;
    return (e.x * e.y).power(static_cast<unsigned>(e.p)).is_zero();
}

OrbitInvariant rank_invariant(const NilpotentPair& e) {
    const std::size_t len = static_cast<std::size_t>(e.p + e.q) + 1;
    OrbitInvariant inv;
    const Matrix xy = e.x * e.y;
    const Matrix yx = e.y * e.x;
    Matrix a = Matrix::identity(static_cast<std::size_t>(e.p), e.x.domain());  // (xy)^k
    Matrix b = Matrix::identity(static_cast<std::size_t>(e.q), e.x.domain());  // (yx)^k
    for (std::size_t k = 0; k < len; ++k) {
        inv.xy.push_back(exact::rank(a));
        inv.yx.push_back(exact::rank(b));
        inv.xyx.push_back(exact::rank(e.x * b));
        inv.yxy.push_back(exact::rank(e.y * a));
        a = a * xy;
        b = b * yx;
    }
    return inv;
}

OrbitInvariant predicted_invariant(const GradedDecomposition& d) {
    const std::size_t len = static_cast<std::size_t>(d.dimension()) + 1;
    // count[parity][j]: number of basis vectors v_j of that parity, then
    // suffix sums give ranks of powers of e.
    auto count_at_least = [&](int parity, int m) {
        std::size_t n = 0;
        for (const auto& c : d.components()) {
            for (int j = m; j <= c.lambda; ++j) {
                if ((c.omega + j) % 2 == parity) ++n;
            }
        }
        return n;
    };
    OrbitInvariant inv;
    for (std::size_t k = 0; k < len; ++k) {
        const int m = static_cast<int>(2 * k);
        inv.xy.push_back(count_at_least(0, m));
        inv.yx.push_back(count_at_least(1, m));
        inv.xyx.push_back(count_at_least(0, m + 1));
        inv.yxy.push_back(count_at_least(1, m + 1));
    }
    return inv;
}

NilpotentPair representative(const GradedDecomposition& d, Domain domain) {
    const auto triple = graded::build_sl2_triple(d, domain);
    std::vector<std::size_t> v0, v1;
    for (std::size_t i = 0; i < triple.parity.size(); ++i) (triple.parity[i] == 0 ? v0 : v1).push_back(i);
    if (v0.empty() || v1.empty()) return NilpotentPair::zero(d.p(), d.q(), domain);
    // x is the Hom(V_0, V_1) part of e and y the Hom(V_1, V_0) part, each
    // written as a matrix acting on row vectors (hence the transposes).
    return NilpotentPair(triple.e.submatrix(v1, v0).transpose(), triple.e.submatrix(v0, v1).transpose());
}

namespace {

// rank(e^m restricted to V_parity), read off the four word sequences.
long power_rank(const OrbitInvariant& inv, int parity, int m) {
    const auto k = static_cast<std::size_t>(m / 2);
    const auto& seq = parity == 0 ? (m % 2 == 0 ? inv.xy : inv.xyx) : (m % 2 == 0 ? inv.yx : inv.yxy);
    return k < seq.size() ? static_cast<long>(seq[k]) : 0L;
}

}  // namespace

GradedDecomposition classify(const NilpotentPair& e) {
    if (!is_nilpotent_pair(e)) throw InvalidArgument("pair is not nilpotent: (xy)^p != 0");
    const auto ell = e.x.domain().characteristic();
    if (ell != 0 && ell <= static_cast<std::uint64_t>(e.p + e.q)) {
        throw InvalidArgument("classification over F_l needs l > p + q");
    }
    const OrbitInvariant inv = rank_invariant(e);
    const int n = e.p + e.q;

    // at_least[m][w]: summands with lambda >= m and top parity w.
    auto at_least = [&](int m, int w) {
        const int parity = (w + m) % 2;
        return power_rank(inv, parity, m) - power_rank(inv, parity, m + 1);
    };
    std::vector<Component> comps;
    for (int m = 0; m < std::max(n, 1); ++m) {
        for (int w = 0; w < 2; ++w) {
            const long mult = at_least(m, w) - at_least(m + 1, w);
            if (mult < 0) throw InternalInconsistency("rank table does not come from a nilpotent pair");
            for (long i = 0; i < mult; ++i) comps.push_back({m, w});
        }
    }
    GradedDecomposition d(std::move(comps));
    if (d.p() != e.p || d.q() != e.q) throw InternalInconsistency("decoded summands have the wrong dimensions");
    if (!(predicted_invariant(d) == inv)) {
        throw InternalInconsistency("no decomposition matches the rank table");
    }
    return d;
}

NilpotentPair transpose_move(const NilpotentPair& e) { return NilpotentPair(e.y.transpose(), e.x.transpose()); }

GradedDecomposition transpose_orbit(const GradedDecomposition& d) {
    std::vector<Component> comps = d.components();
    for (auto& c : comps) {
        if (c.lambda % 2 == 1) c.omega = 1 - c.omega;
    }
    return GradedDecomposition(std::move(comps));
}

bool is_transpose_stable(const GradedDecomposition& d) { return transpose_orbit(d) == d; }

std::set<OrbitInvariant> finite_field_invariants(int p, int q, std::uint64_t ell, unsigned threads) {
    const Domain field = Domain::prime_field(ell);
    const std::size_t slots = 2 * static_cast<std::size_t>(p) * static_cast<std::size_t>(q);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < slots; ++i) {
        if (total > (1ULL << 24) / ell) throw InvalidArgument("exhaustive scan too large");
        total *= ell;
    }
    std::vector<Scalar> values;
    for (std::uint64_t v = 0; v < ell; ++v) values.push_back(Scalar::from_int(field, static_cast<long>(v)));

    const std::size_t blocks = std::max(1U, threads);
    std::vector<std::set<OrbitInvariant>> partial(blocks);
    parallel_for(blocks, threads, [&](std::size_t block) {
        const std::uint64_t begin = total * block / blocks;
        const std::uint64_t end = total * (block + 1) / blocks;
        for (std::uint64_t code = begin; code < end; ++code) {
            Matrix x(static_cast<std::size_t>(p), static_cast<std::size_t>(q), field);
            Matrix y(static_cast<std::size_t>(q), static_cast<std::size_t>(p), field);
            std::uint64_t rest = code;
            for (std::size_t s = 0; s < slots; ++s) {
                const auto digit = static_cast<std::size_t>(rest % ell);
                rest /= ell;
                if (digit == 0) continue;
                const std::size_t half = slots / 2;
                if (s < half) {
                    x.set(s / static_cast<std::size_t>(q), s % static_cast<std::size_t>(q), values[digit]);
                } else {
                    const std::size_t t = s - half;
                    y.set(t / static_cast<std::size_t>(p), t % static_cast<std::size_t>(p), values[digit]);
                }
            }
            NilpotentPair e(std::move(x), std::move(y));
            if (is_nilpotent_pair(e)) partial[block].insert(rank_invariant(e));
        }
    });
    std::set<OrbitInvariant> all;
    for (auto& s : partial) all.merge(s);
    return all;
}

}  // namespace orbitlab::orbits
