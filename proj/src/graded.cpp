#include "orbitlab/graded.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "orbitlab/error.hpp"
#include "orbitlab/linalg.hpp"
#include "orbitlab/parallel.hpp"

namespace orbitlab::graded {

using exact::Scalar;

ParityDims parity_dims(int lambda, int omega) {
    if (lambda < 0) throw InvalidArgument("highest weight must be non-negative");
    if (omega != 0 && omega != 1) throw InvalidArgument("parity must be 0 or 1");
    if (lambda % 2 == 1) return {(lambda + 1) / 2, (lambda + 1) / 2};
    // v_j has parity omega + j, so the parity omega gets the extra vector.
    const int big = lambda / 2 + 1;
    const int small = lambda / 2;
    return omega == 0 ? ParityDims{big, small} : ParityDims{small, big};
}

GradedDecomposition::GradedDecomposition(std::vector<Component> components)
    : components_(std::move(components)) {
    for (const auto& c : components_) {
        const auto dims = parity_dims(c.lambda, c.omega);
        p_ += dims.even;
        q_ += dims.odd;
    }
    std::sort(components_.begin(), components_.end(), std::greater<>());
}

bool GradedDecomposition::is_zero_orbit() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const Component& c) { return c.lambda == 0; });
}

std::string GradedDecomposition::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < components_.size(); ++i) {
        os << (i ? "," : "") << '(' << components_[i].lambda << ',' << components_[i].omega << ')';
    }
    os << '}';
    return os.str();
}

std::vector<GradedDecomposition> enumerate_decompositions(int p, int q) {
    if (p < 0 || q < 0) throw InvalidArgument("negative parity dimension");
    std::vector<Component> kinds;
    for (int lambda = std::max(0, p + q - 1); lambda >= 0; --lambda) {
        kinds.push_back({lambda, 1});
        kinds.push_back({lambda, 0});
    }

    std::vector<GradedDecomposition> out;
    std::vector<Component> current;
    // Choose multiplicities kind by kind, largest kind first.
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t k, int rp, int rq) {
        if (rp == 0 && rq == 0) {
            out.emplace_back(current);
            return;
        }
        if (k == kinds.size()) return;
        const auto dims = parity_dims(kinds[k].lambda, kinds[k].omega);
        const std::size_t mark = current.size();
        int used_p = 0;
        int used_q = 0;
        for (int mult = 0;; ++mult) {
            if (used_p > rp || used_q > rq) break;
            rec(k + 1, rp - used_p, rq - used_q);
            current.push_back(kinds[k]);
            used_p += dims.even;
            used_q += dims.odd;
        }
        current.resize(mark);
    };
    if (p + q > 0) rec(0, p, q);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

Sl2Triple build_sl2_triple(const GradedDecomposition& d, Domain domain) {
    const std::size_t n = static_cast<std::size_t>(d.dimension());
    if (domain.characteristic() != 0 && domain.characteristic() <= n) {
        throw InvalidArgument("prime field must have l > p + q for the sl2 structure constants");
    }
    Sl2Triple t{Matrix(n, n, domain), Matrix(n, n, domain), Matrix(n, n, domain), {}};
    std::size_t base = 0;
    for (const auto& c : d.components()) {
        const long lambda = c.lambda;
        for (long j = 0; j <= lambda; ++j) {
            const std::size_t idx = base + static_cast<std::size_t>(j);
            t.h.set(idx, idx, lambda - 2 * j);
            if (j < lambda) t.f.set(idx + 1, idx, 1);            // f v_j = v_{j+1}
            if (j > 0) t.e.set(idx - 1, idx, j * (lambda - j + 1));  // e v_j = j(lambda-j+1) v_{j-1}
            t.parity.push_back(static_cast<int>((c.omega + j) % 2));
        }
        base += static_cast<std::size_t>(lambda) + 1;
    }
    return t;
}

long m_pair(int li, int wi, int lj, int wj) {
    if (li < 0 || lj < 0) throw InvalidArgument("highest weight must be non-negative");
    const bool odd_i = li % 2 == 1;
    const bool odd_j = lj % 2 == 1;
    if (odd_i != odd_j) return std::min(li, lj) + 1;
    if (odd_i) return wi == wj ? 2L * std::min(li, lj) + 2 : 0;
    return wi == wj ? -std::abs(li - lj) - 1L : static_cast<long>(li) + lj + 3;
}

long m_sum(const GradedDecomposition& d) {
    long total = 0;
    for (const auto& a : d.components()) {
        for (const auto& b : d.components()) total += m_pair(a.lambda, a.omega, b.lambda, b.omega);
    }
    return total;
}

long trace_formula(const GradedDecomposition& d) {
    const long p = d.p();
    const long q = d.q();
    const long twice = m_sum(d) + (p - q) * (p - q);
    if (twice % 2 != 0) {
        throw InternalInconsistency("odd half-sum in trace formula for " + d.to_string());
    }
    return 2 * p * q + twice / 2;
}

namespace {

long to_integer(const Scalar& s) {
    const mpq_class v = s.to_rational();
    if (v.get_den() != 1 || !v.get_num().fits_slong_p()) {
        throw InternalInconsistency("expected an integer, got " + s.to_string());
    }
    return v.get_num().get_si();
}

struct Position {
    std::size_t row;
    std::size_t col;
};

// Index lists of the matrix units E_ab, split by whether a and b share parity.
std::pair<std::vector<Position>, std::vector<Position>> split_units(const std::vector<int>& parity) {
    std::vector<Position> even, odd;
    for (std::size_t a = 0; a < parity.size(); ++a) {
        for (std::size_t b = 0; b < parity.size(); ++b) {
            (parity[a] == parity[b] ? even : odd).push_back({a, b});
        }
    }
    return {even, odd};
}

// Matrix of X -> [m, X] from span{E_ab : ab in domain} to coordinates `range`.
Matrix commutator_map(const Matrix& m, const std::vector<Position>& domain,
                      const std::vector<Position>& range) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> where(n * n, SIZE_MAX);
    for (std::size_t k = 0; k < range.size(); ++k) where[range[k].row * n + range[k].col] = k;

    Matrix out(range.size(), domain.size(), m.domain());
    for (std::size_t k = 0; k < domain.size(); ++k) {
        const auto [a, b] = domain[k];
        Matrix image(n, n, m.domain());
        // (m E_ab)_{cb} = m_ca and (E_ab m)_{ad} = m_bd.
        for (std::size_t c = 0; c < n; ++c) {
            if (!m(c, a).is_zero()) image.set(c, b, image(c, b) + m(c, a));
        }
        for (std::size_t dcol = 0; dcol < n; ++dcol) {
            if (!m(b, dcol).is_zero()) image.set(a, dcol, image(a, dcol) - m(b, dcol));
        }
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t dcol = 0; dcol < n; ++dcol) {
                if (image(c, dcol).is_zero()) continue;
                const std::size_t slot = where[c * n + dcol];
                if (slot == SIZE_MAX) {
                    throw InternalInconsistency("commutator left the expected graded piece");
                }
                out.set(slot, k, image(c, dcol));
            }
        }
    }
    return out;
}

}  // namespace

TraceOracle trace_oracle(const GradedDecomposition& d) {
    const Sl2Triple t = build_sl2_triple(d);
    const auto [even, odd] = split_units(t.parity);

    TraceOracle r;
    r.dim_i = odd.size();
    if (odd.empty()) return r;

    // ker(ad f) inside I_{p,q}; ad f maps odd to even.
    const auto kernel = exact::kernel_basis(commutator_map(t.f, odd, even));
    r.dim_i_f = kernel.size();
    if (!kernel.empty()) {
        const Matrix basis = Matrix::from_columns(kernel, odd.size(), t.h.domain());
        const Matrix ad_h = commutator_map(t.h, odd, odd);
        const Matrix restricted = exact::solve_in_span(basis, ad_h * basis);
        Scalar trace = Scalar::zero(t.h.domain());
        for (std::size_t i = 0; i < restricted.rows(); ++i) trace += restricted(i, i);
        r.trace_h = to_integer(trace);
    }
    r.value = 2 * static_cast<long>(r.dim_i_f) - r.trace_h;
    return r;
}

long trace_bruteforce(const GradedDecomposition& d) { return trace_oracle(d).value; }

std::size_t orbit_dim(const GradedDecomposition& d) {
    const Sl2Triple t = build_sl2_triple(d);
    const auto [even, odd] = split_units(t.parity);
    if (odd.empty()) return 0;
    // xi in gl_p + gl_q (even units); [xi, e] is odd.
    const std::size_t centraliser = exact::kernel_basis(commutator_map(t.e, even, odd)).size();
    return even.size() - centraliser;
}

std::size_t max_orbit_dim(int p, int q, unsigned threads) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::size_t> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({p, q}); it != cache.end()) return it->second;
    }
    const auto all = enumerate_decompositions(p, q);
    std::vector<std::size_t> dims(all.size());
    parallel_for(all.size(), threads, [&](std::size_t i) { dims[i] = orbit_dim(all[i]); });
    const std::size_t best = dims.empty() ? 0 : *std::max_element(dims.begin(), dims.end());
    std::lock_guard lock(mutex);
    cache.emplace(std::pair{p, q}, best);
    return best;
}

bool is_regular(const GradedDecomposition& d, int p, int q, unsigned threads) {
    if (d.p() != p || d.q() != q) {
        throw ShapeMismatch("decomposition " + d.to_string() + " does not have parity dims (" +
                            std::to_string(p) + "," + std::to_string(q) + ")");
    }
    return orbit_dim(d) == max_orbit_dim(p, q, threads);
}

long even_positivity_sum(const GradedDecomposition& d) {
    if (d.q() != d.p() + 1) throw InvalidArgument("positivity sum needs q = p + 1");
    std::vector<long> zero_parity, one_parity;
    for (const auto& c : d.components()) {
        if (c.lambda % 2 != 0) throw InvalidArgument("positivity sum needs all weights even");
        (c.omega == 0 ? zero_parity : one_parity).push_back(c.lambda);
    }
    // components() is sorted descending, so both lists already are.
    const long t = static_cast<long>(zero_parity.size());
    if (static_cast<long>(one_parity.size()) != t + 1) {
        throw InternalInconsistency("even summands do not split as t and t + 1");
    }
    long sum = 4 * t * (t + 1);
    for (long i = 1; i <= t; ++i) {
        sum += 4 * (zero_parity[static_cast<std::size_t>(i - 1)] + one_parity[static_cast<std::size_t>(i)]) * i;
    }
    return sum;
}

}  // namespace orbitlab::graded
