#pragma once

#include <string>
#include <vector>

#include "quotient.hpp"

namespace ocijac {

// The socle piece B_{n-r}(2(d_sum-n-1)+e_sum) carrying the trace functional.
// For a smooth transversal configuration (with r >= 1) it is one-dimensional
// and the trace is normalized as the coefficient of its unique standard
// monomial; any other dimension is reported as a smoothness diagnostic
// failure. For r > n the pairing is the zero map by convention and no trace
// is defined.
template <class F>
struct TracePiece {
    GradedIndex idx;
    long dim = 0;
    bool zero_map_convention = false;  // r > n
    bool ok = false;                   // dim == 1
    std::string socle_monomial;        // set iff ok
};

template <class F>
TracePiece<F> trace_piece(const JacobianRing<F>& ring) {
    const GradedShape& sh = ring.shape();
    TracePiece<F> t;
    t.idx = GradedIndex{sh.m(), 2 * (sh.d_sum() - sh.n - 1) + sh.e_sum()};
    if (sh.r() > sh.n) {
        t.zero_map_convention = true;
        return t;
    }
    auto pc = ring.piece(t.idx);
    t.dim = pc->dim;
    t.ok = (t.dim == 1);
    if (t.ok) t.socle_monomial = pc->standard_term(0).to_string();
    return t;
}

enum class DualityCase { i, ii, iii, injectivity_only, none };
enum class DualityVerdict { perfect, injective, no_claim, failed };

inline const char* to_string(DualityCase c) {
    switch (c) {
        case DualityCase::i: return "i";
        case DualityCase::ii: return "ii";
        case DualityCase::iii: return "iii";
        case DualityCase::injectivity_only: return "injectivity_only";
        default: return "none";
    }
}
inline const char* to_string(DualityVerdict v) {
    switch (v) {
        case DualityVerdict::perfect: return "perfect";
        case DualityVerdict::injective: return "injective";
        case DualityVerdict::no_claim: return "no_claim";
        default: return "FAILED";
    }
}

// The pairing h_p(l): B_p(d_sum-n-1+l) x B_{n-r-p}(d_sum+e_sum-n-1-l) -> k,
// (x, y) -> trace(x*y), as an explicit matrix over the standard monomials.
template <class F>
struct PairingReport {
    int p = 0;
    long ell = 0;
    long left_dim = 0, right_dim = 0;
    ExactMatrix<F> matrix;
    long rank = 0;
    DualityCase applicable_case = DualityCase::none;
    DualityVerdict verdict = DualityVerdict::no_claim;
    bool injectivity_claim = false;       // p = n-r, s >= 1, l < e_max (checked independently)
    bool zero_map = false;                // r > n convention
    bool boundary_ell_eq_emax = false;    // l == e_max under case (ii)
};

// Which perfectness/injectivity hypothesis covers (p, l), if any:
//   (i)   s >= 1, p < n-r, l < e_max
//   (ii)  s >= 1, 0 <= l <= e_max, r+s <= n
//   (iii) s = 0, l = 0, and n-r >= 1 or n-r = p = 0
//   injectivity only: p = n-r, s >= 1, l < e_max
inline DualityCase duality_case(const GradedShape& sh, int p, long ell) {
    if (sh.s() >= 1 && p < sh.m() && ell < sh.e_max()) return DualityCase::i;
    if (sh.s() >= 1 && 0 <= ell && ell <= sh.e_max() && sh.r() + sh.s() <= sh.n)
        return DualityCase::ii;
    if (sh.s() == 0 && ell == 0 && (sh.m() >= 1 || (sh.m() == 0 && p == 0)))
        return DualityCase::iii;
    if (sh.s() >= 1 && p == sh.m() && ell < sh.e_max()) return DualityCase::injectivity_only;
    return DualityCase::none;
}

template <class F>
PairingReport<F> pairing_matrix(const JacobianRing<F>& ring, int p, long ell) {
    const F& f = ring.field();
    const GradedShape& sh = ring.shape();
    GradedIndex left{p, sh.d_sum() - sh.n - 1 + ell};
    GradedIndex right{sh.m() - p, sh.d_sum() + sh.e_sum() - sh.n - 1 - ell};

    PairingReport<F> rep{p, ell, 0, 0, ExactMatrix<F>(f, 0, 0), 0,
                         duality_case(sh, p, ell), DualityVerdict::no_claim, false, false};
    rep.boundary_ell_eq_emax =
        (rep.applicable_case == DualityCase::ii && sh.s() >= 1 && ell == sh.e_max());

    if (sh.r() > sh.n) {
        rep.zero_map = true;
        rep.left_dim = ring.dim_B(left);
        rep.right_dim = ring.dim_B(right);
        rep.matrix = ExactMatrix<F>(f, rep.left_dim, rep.right_dim);
        rep.applicable_case = DualityCase::none;
        return rep;
    }

    TracePiece<F> tr = trace_piece(ring);
    if (!tr.ok)
        throw SmoothnessDiagnosticError("trace piece has dimension " + std::to_string(tr.dim) +
                                        " (expected 1); configuration is likely not smooth and "
                                        "transversal");
    auto pl = ring.piece(left);
    auto pr = ring.piece(right);
    auto ps = ring.piece(tr.idx);
    rep.left_dim = pl->dim;
    rep.right_dim = pr->dim;
    rep.matrix = ExactMatrix<F>(f, pl->dim, pr->dim);
    for (long i = 0; i < pl->dim; ++i) {
        BElement<F> bi{left, std::vector<typename F::Element>((size_t)pl->dim, f.zero())};
        bi.coords[(size_t)i] = f.one();
        for (long j = 0; j < pr->dim; ++j) {
            BElement<F> bj{right, std::vector<typename F::Element>((size_t)pr->dim, f.zero())};
            bj.coords[(size_t)j] = f.one();
            BElement<F> prod = ring.multiply(bi, bj);
            rep.matrix.set(i, j, prod.coords[0]);  // trace = coefficient of the socle monomial
        }
    }
    rep.rank = rank_of(rep.matrix);
    return rep;
}

// Verifies every claim whose hypothesis holds: a perfect pairing under cases
// (i)-(iii), and independently full row rank whenever the injectivity
// hypothesis p = n-r, s >= 1, l < e_max is met (the two can overlap).
template <class F>
PairingReport<F> check_duality(const JacobianRing<F>& ring, int p, long ell) {
    PairingReport<F> rep = pairing_matrix(ring, p, ell);
    if (rep.zero_map) return rep;
    const GradedShape& sh = ring.shape();
    rep.injectivity_claim = (sh.s() >= 1 && p == sh.m() && ell < sh.e_max());
    bool failed = false;
    switch (rep.applicable_case) {
        case DualityCase::i:
        case DualityCase::ii:
        case DualityCase::iii:
            if (!(rep.rank == rep.left_dim && rep.left_dim == rep.right_dim)) failed = true;
            break;
        default:
            break;
    }
    if (rep.injectivity_claim && rep.rank != rep.left_dim) failed = true;
    if (failed) {
        rep.verdict = DualityVerdict::failed;
    } else if (rep.applicable_case == DualityCase::i || rep.applicable_case == DualityCase::ii ||
               rep.applicable_case == DualityCase::iii) {
        rep.verdict = DualityVerdict::perfect;
    } else if (rep.injectivity_claim) {
        rep.verdict = DualityVerdict::injective;
    } else {
        rep.verdict = DualityVerdict::no_claim;
    }
    return rep;
}

// Kernel and surjectivity data of eta: B_0(d_sum+e_sum-n-1) -> B_{n-r}(d_sum-n-1)^*,
// x -> trace(x * .). Its kernel consists of the trivial wedge classes, of
// expected dimension C(s-1, n-r).
struct EtaReport {
    long source_dim = 0;  // dim B_0(d_sum+e_sum-n-1)
    long target_dim = 0;  // dim B_{n-r}(d_sum-n-1)
    long rank = 0;
    long kernel_dim = 0;
    long expected = 0;  // C(s-1, n-r), zero for s <= 1
    bool surjective = false;
};

template <class F>
EtaReport eta_kernel(const JacobianRing<F>& ring) {
    const GradedShape& sh = ring.shape();
    if (sh.m() < 1) throw std::invalid_argument("eta_kernel requires n - r >= 1");
    PairingReport<F> h = pairing_matrix(ring, sh.m(), 0);
    EtaReport rep;
    rep.source_dim = h.right_dim;  // eta is the transpose of h_{n-r}(0)
    rep.target_dim = h.left_dim;
    rep.rank = h.rank;
    rep.kernel_dim = rep.source_dim - rep.rank;
    rep.expected = sh.s() <= 1 ? 0 : (long)binomial(sh.s() - 1, sh.m());
    rep.surjective = (rep.rank == rep.target_dim);
    return rep;
}

}  // namespace ocijac
