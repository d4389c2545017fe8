#pragma once

#include <string>
#include <vector>

#include "quotient.hpp"

namespace ocijac {

enum class HodgeMode { prim, full };

// Logarithmic Hodge number of U = X \ Z: the primitive part of
// H^q(X, Omega^p(log Z)(l)) is dim B_q(d_sum + e_sum - n - 1 + l), and the
// full group exceeds it by 1 exactly at the middle (p = q, s = 0, l = 0)
// where the hyperplane-power class is split off.
template <class F>
long hodge_number(const JacobianRing<F>& ring, int p, int q, long ell, HodgeMode mode) {
    const GradedShape& sh = ring.shape();
    if (sh.n < sh.r() + 1)
        throw std::invalid_argument("hodge_number requires n >= r+1 (positive-dimensional fiber)");
    if (ell < 0) throw std::invalid_argument("hodge_number requires twist l >= 0");
    if (q < 0 || q > sh.m()) throw std::invalid_argument("hodge_number requires 0 <= q <= n-r");
    if (p != sh.m() - q) throw std::invalid_argument("hodge_number requires p + q = n-r");

    long prim = ring.dim_B(GradedIndex{q, sh.d_sum() + sh.e_sum() - sh.n - 1 + ell});
    if (mode == HodgeMode::full && sh.s() == 0 && ell == 0 && p == q) return prim + 1;
    return prim;
}

struct HodgeEntry {
    int p, q;
    long ell;
    long prim, full;
};

struct HodgeTable {
    int m = 0;
    long ell = 0;
    std::vector<HodgeEntry> entries;  // q = 0..m
};

template <class F>
HodgeTable hodge_table(const JacobianRing<F>& ring, long ell) {
    HodgeTable t;
    t.m = ring.shape().m();
    t.ell = ell;
    for (int q = 0; q <= t.m; ++q) {
        int p = t.m - q;
        t.entries.push_back(HodgeEntry{p, q, ell, hodge_number(ring, p, q, ell, HodgeMode::prim),
                                       hodge_number(ring, p, q, ell, HodgeMode::full)});
    }
    return t;
}

// Dimension of the subspace of H^0(X, Omega^q(log Z)) spanned by wedge
// products of the dlog classes of the ratios G_j^{e_s}/G_s^{e_j}: C(s-1, q)
// for s >= 2, zero for s <= 1.
inline long trivial_dim(const GradedShape& shape, int q) {
    if (q <= 0) throw std::invalid_argument("trivial_dim requires q >= 1");
    if (shape.s() <= 1) return 0;
    return (long)binomial(shape.s() - 1, q);
}

}  // namespace ocijac
