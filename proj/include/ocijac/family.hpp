#pragma once

#include "koszul.hpp"
#include "quotient.hpp"

namespace ocijac {

// Fiberwise input for the Gauss-Manin kernel computation: a tangent-image
// subspace W of B_1(0) (full space for a universal family) and the family
// defect c_S >= 0. The codimension of the tangent space is taken to be the
// recorded codimension of W.
template <class F>
struct FamilyInput {
    SubspaceSpec<F> w;
    long c_s = 0;
};

struct NablaKernelReport {
    int p = 0, q = 0;
    long source_dim = 0;      // dim B_q(d_sum+e_sum-n-1)
    long rank = 0;
    long kernel_dim = 0;
    long trivial_expected = 0;  // C(s-1, m) at (p,q) = (m,0), else 0
    int condition_case = 0;     // 1 for 1<=p<=m-1, 2 for (m,0), 0 for the (0,m) edge
    bool condition_holds = false;
    bool claimed = false;  // a kernel identity is asserted for this (p,q)
    bool holds = true;     // false only when a claimed identity fails numerically
    bool ring_level_only = false;  // m = 1: W lives in the ring model only
};

// Kernel of the stacked multiplication map
//   B_q(d_sum+e_sum-n-1) -> ⊕_{w in basis(W)} B_{q+1}(d_sum+e_sum-n-1),
// the fiberwise avatar of the Gauss-Manin map on H^{p,q}. Under the degree
// condition the kernel is zero for 1 <= p <= m-1 and consists exactly of the
// trivial wedge classes (dimension C(s-1,m)) at (p,q) = (m,0).
template <class F>
NablaKernelReport nabla_kernel(const JacobianRing<F>& ring, const FamilyInput<F>& input, int p,
                               int q) {
    const GradedShape& sh = ring.shape();
    if (p + q != sh.m() || p < 0 || q < 0)
        throw std::invalid_argument("nabla_kernel requires p + q = n - r with p, q >= 0");
    if (input.c_s < 0) throw std::invalid_argument("c_S must be >= 0");

    const F& f = ring.field();
    GradedIndex src{q, sh.d_sum() + sh.e_sum() - sh.n - 1};
    GradedIndex dst{q + 1, sh.d_sum() + sh.e_sum() - sh.n - 1};
    const long src_dim = ring.dim_B(src);
    const long dst_dim = ring.dim_B(dst);

    ExactMatrix<F> stacked(f, dst_dim * (long)input.w.basis.size(), src_dim);
    for (long k = 0; k < (long)input.w.basis.size(); ++k) {
        ExactMatrix<F> op = ring.multiplication_operator(input.w.basis[(size_t)k], src);
        for (long r = 0; r < op.rows(); ++r)
            for (const auto& [c, val] : op.row(r)) stacked.add(k * dst_dim + r, c, val);
    }

    NablaKernelReport rep;
    rep.p = p;
    rep.q = q;
    rep.source_dim = src_dim;
    rep.rank = rank_of(stacked);
    rep.kernel_dim = src_dim - rep.rank;
    rep.trivial_expected =
        (p == sh.m() && q == 0 && sh.s() >= 2) ? (long)binomial(sh.s() - 1, sh.m()) : 0;
    rep.ring_level_only = (sh.m() == 1);

    const long c = input.w.codim;
    if (p >= 1 && p <= sh.m() - 1) {
        rep.condition_case = 1;
        rep.condition_holds = sh.delta_min() * (p - 1) + sh.d_sum() >= sh.n + 1 + input.c_s + c;
        rep.claimed = rep.condition_holds;
        if (rep.claimed) rep.holds = (rep.kernel_dim == 0);
    } else if (p == sh.m() && q == 0) {
        rep.condition_case = 2;
        rep.condition_holds =
            sh.delta_min() * (sh.m() - 1) + sh.d_sum() >= sh.n + 1 + input.c_s + c;
        rep.claimed = rep.condition_holds;
        if (rep.claimed) rep.holds = (rep.kernel_dim == rep.trivial_expected);
    } else {
        rep.condition_case = 0;  // (0, m): no identity asserted
    }
    return rep;
}

// Lower bound for the codimension of any component of the Noether-Lefschetz
// locus: delta_min*(n-r-1) + sum(d_i) - c_S - n. Values <= 0 are reported
// verbatim and flagged vacuous.
struct NlBound {
    long value = 0;
    bool vacuous = false;
};

inline NlBound nl_bound(int n, int r, int s, const std::vector<long>& d,
                        const std::vector<long>& e, long c_s) {
    if (r < 0 || s < 0 || r + s < 1) throw std::invalid_argument("need r, s >= 0 with r + s >= 1");
    if ((int)d.size() != r) throw std::invalid_argument("degree list d must have r entries");
    if ((int)e.size() != s) throw std::invalid_argument("degree list e must have s entries");
    for (long v : d)
        if (v < 1) throw std::invalid_argument("degrees d_i must be >= 1");
    for (long v : e)
        if (v < 1) throw std::invalid_argument("degrees e_j must be >= 1");
    if (c_s < 0) throw std::invalid_argument("c_S must be >= 0");
    GradedShape sh{n, d, e};
    NlBound b;
    b.value = sh.delta_min() * (long)(n - r - 1) + sh.d_sum() - c_s - n;
    b.vacuous = b.value <= 0;
    return b;
}

// Codimension bookkeeping for the sharp plane-curve component: the fiber over
// a fixed (point, tangent line) pair has codimension
// C(d+2,2) - 1 - C(d+1,2) + 1 = d + 1 in the moduli space, and subtracting
// dim M = 3 for the choice of the pair leaves codimension d - 2.
struct SigmaReport {
    long d = 0;
    long codim_with_pair = 0;  // d + 1
    long codim = 0;            // d - 2
};

inline SigmaReport sigma_component_codim(long d) {
    if (d < 2) throw std::invalid_argument("sigma_component_codim requires d >= 2");
    SigmaReport rep;
    rep.d = d;
    rep.codim_with_pair = binomial(d + 2, 2) - 1 - binomial(d + 1, 2) + 1;
    if (rep.codim_with_pair != d + 1)
        throw std::logic_error("codimension identity C(d+2,2)-1-C(d+1,2)+1 = d+1 failed");
    rep.codim = rep.codim_with_pair - 3;  // dim M = 3
    return rep;
}

}  // namespace ocijac
