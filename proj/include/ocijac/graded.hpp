#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"

namespace ocijac {

// Position (q, l) in the bigrading: q is the total degree in the auxiliary
// variables mu_1..mu_r, lam_1..lam_s, and l the twist of the polynomial
// degree. Negative values are legal and index the zero space.
struct GradedIndex {
    int q = 0;
    long ell = 0;
    bool operator==(const GradedIndex& o) const { return q == o.q && ell == o.ell; }
    bool operator<(const GradedIndex& o) const {
        return q != o.q ? q < o.q : ell < o.ell;
    }
};

// One basis element of a graded piece: mu-exponents a, lam-exponents b and a
// polynomial monomial of degree a.d + b.e + l.
struct BigradedTerm {
    std::vector<int> mu;   // length r
    std::vector<int> lam;  // length s
    Monomial mono;

    int aux_degree() const {
        int q = 0;
        for (int v : mu) q += v;
        for (int v : lam) q += v;
        return q;
    }

    std::vector<int> flatten() const {
        std::vector<int> key;
        key.reserve(mu.size() + lam.size() + mono.exponents.size());
        key.insert(key.end(), mu.begin(), mu.end());
        key.insert(key.end(), lam.begin(), lam.end());
        key.insert(key.end(), mono.exponents.begin(), mono.exponents.end());
        return key;
    }

    bool operator==(const BigradedTerm& o) const {
        return mu == o.mu && lam == o.lam && mono == o.mono;
    }

    std::string to_string() const {
        std::string out;
        for (size_t i = 0; i < mono.exponents.size(); ++i) {
            int e = mono.exponents[i];
            if (e == 0) continue;
            if (!out.empty()) out += "*";
            out += "X" + std::to_string(i);
            if (e > 1) out += "^" + std::to_string(e);
        }
        auto aux = [&out](const char* name, const std::vector<int>& exps) {
            for (size_t i = 0; i < exps.size(); ++i) {
                if (exps[i] == 0) continue;
                if (!out.empty()) out += "*";
                out += name + std::to_string(i + 1);
                if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
            }
        };
        aux("mu", mu);
        aux("lam", lam);
        return out.empty() ? "1" : out;
    }
};

// Degree data of a configuration; everything about ambient pieces depends
// only on this, not on the coefficient field.
struct GradedShape {
    int n = 0;
    std::vector<long> d;  // degrees of the F_i
    std::vector<long> e;  // degrees of the G_j

    int r() const { return (int)d.size(); }
    int s() const { return (int)e.size(); }
    int m() const { return n - r(); }
    int nvars() const { return n + 1; }
    long d_sum() const {
        long t = 0;
        for (long v : d) t += v;
        return t;
    }
    long e_sum() const {
        long t = 0;
        for (long v : e) t += v;
        return t;
    }
    long delta_min() const {
        long mn = 0;
        bool first = true;
        for (long v : d) {
            if (first || v < mn) mn = v;
            first = false;
        }
        for (long v : e) {
            if (first || v < mn) mn = v;
            first = false;
        }
        return mn;
    }
    long d_max() const {
        long mx = 0;
        for (long v : d) mx = std::max(mx, v);
        return mx;
    }
    long e_max() const {
        long mx = 0;
        for (long v : e) mx = std::max(mx, v);
        return mx;
    }
};

namespace detail {

// Non-negative integer vectors of given length and sum, in increasing
// lexicographic order.
inline void enumerate_compositions(int length, int total,
                                   std::vector<std::vector<int>>& out) {
    std::vector<int> cur((size_t)length, 0);
    if (length == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == length - 1) {
            cur[(size_t)i] = rem;
            out.push_back(cur);
            cur[(size_t)i] = 0;
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[(size_t)i] = v;
            self(self, i + 1, rem - v);
        }
        cur[(size_t)i] = 0;
    };
    rec(rec, 0, total);
}

}  // namespace detail

// Ordered basis of the ambient piece A_q(l): for each aux-exponent pair
// (a, b) with sum q (increasing lexicographic on the concatenated vector),
// all monomials of degree a.d + b.e + l in descending grevlex order.
inline std::vector<BigradedTerm> basis_A(const GradedShape& shape, GradedIndex idx) {
    std::vector<BigradedTerm> out;
    if (idx.q < 0) return out;
    std::vector<std::vector<int>> comps;
    detail::enumerate_compositions(shape.r() + shape.s(), idx.q, comps);
    for (const auto& comp : comps) {
        long deg = idx.ell;
        for (int i = 0; i < shape.r(); ++i) deg += (long)comp[(size_t)i] * shape.d[(size_t)i];
        for (int j = 0; j < shape.s(); ++j)
            deg += (long)comp[(size_t)(shape.r() + j)] * shape.e[(size_t)j];
        if (deg < 0) continue;
        BigradedTerm t;
        t.mu.assign(comp.begin(), comp.begin() + shape.r());
        t.lam.assign(comp.begin() + shape.r(), comp.end());
        for (const Monomial& m : monomials_of_degree(shape.nvars(), deg)) {
            t.mono = m;
            out.push_back(t);
        }
    }
    return out;
}

// dim A_q(l) by stars and bars, without enumerating the basis.
inline long dim_A(const GradedShape& shape, GradedIndex idx) {
    if (idx.q < 0) return 0;
    std::vector<std::vector<int>> comps;
    detail::enumerate_compositions(shape.r() + shape.s(), idx.q, comps);
    long total = 0;
    for (const auto& comp : comps) {
        long deg = idx.ell;
        for (int i = 0; i < shape.r(); ++i) deg += (long)comp[(size_t)i] * shape.d[(size_t)i];
        for (int j = 0; j < shape.s(); ++j)
            deg += (long)comp[(size_t)(shape.r() + j)] * shape.e[(size_t)j];
        if (deg < 0) continue;
        total += (long)binomial(shape.n + deg, shape.n);
    }
    return total;
}

// Basis of a piece together with a term -> position lookup.
struct AmbientBasis {
    GradedIndex idx;
    std::vector<BigradedTerm> terms;
    std::map<std::vector<int>, long> position;

    long find(const BigradedTerm& t) const {
        auto it = position.find(t.flatten());
        return it == position.end() ? -1 : it->second;
    }
    long dim() const { return (long)terms.size(); }
};

inline AmbientBasis make_ambient_basis(const GradedShape& shape, GradedIndex idx) {
    AmbientBasis b;
    b.idx = idx;
    b.terms = basis_A(shape, idx);
    for (long i = 0; i < (long)b.terms.size(); ++i) b.position.emplace(b.terms[(size_t)i].flatten(), i);
    return b;
}

// Homogeneous bigraded element: a finite combination of terms, all lying in
// the single piece A_q(l) recorded in idx.
template <class F>
struct AElement {
    GradedIndex idx;
    std::vector<std::pair<BigradedTerm, typename F::Element>> terms;
};

// Validated input data: ambient dimension n, defining polynomials and their
// inferred degrees. The K3 flag records whether (n, degrees) is one of the
// three complete-intersection K3 shapes with s = 0.
template <class F>
struct Configuration {
    F field;
    GradedShape shape;
    std::vector<Polynomial<F>> f_polys;
    std::vector<Polynomial<F>> g_polys;
    bool is_k3 = false;

    int n() const { return shape.n; }
    int r() const { return shape.r(); }
    int s() const { return shape.s(); }
    int m() const { return shape.m(); }
};

template <class F>
Configuration<F> make_configuration(F field, int n, std::vector<Polynomial<F>> f_polys,
                                    std::vector<Polynomial<F>> g_polys) {
    if (n < 2) throw std::invalid_argument("ambient dimension n must be >= 2");
    if (f_polys.empty() && g_polys.empty())
        throw std::invalid_argument("need at least one defining polynomial (r+s >= 1)");
    Configuration<F> cfg{std::move(field), GradedShape{n, {}, {}}, std::move(f_polys),
                         std::move(g_polys), false};
    auto check = [&](const Polynomial<F>& p, const char* family, size_t i) {
        if (p.nvars() != n + 1)
            throw std::invalid_argument(std::string(family) + "[" + std::to_string(i) +
                                        "] has wrong variable count");
        if (p.is_zero())
            throw std::invalid_argument(std::string(family) + "[" + std::to_string(i) + "] is zero");
        auto deg = p.homogeneous_degree();
        if (!deg)
            throw std::invalid_argument(std::string("inhomogeneous ") + family + "[" +
                                        std::to_string(i) + "]");
        if (*deg < 1)
            throw std::invalid_argument(std::string(family) + "[" + std::to_string(i) +
                                        "] must have degree >= 1");
        return *deg;
    };
    for (size_t i = 0; i < cfg.f_polys.size(); ++i)
        cfg.shape.d.push_back(check(cfg.f_polys[i], "F", i));
    for (size_t j = 0; j < cfg.g_polys.size(); ++j)
        cfg.shape.e.push_back(check(cfg.g_polys[j], "G", j));

    if (cfg.s() == 0) {
        std::vector<long> sorted = cfg.shape.d;
        std::sort(sorted.begin(), sorted.end());
        cfg.is_k3 = (n == 3 && sorted == std::vector<long>{4}) ||
                    (n == 4 && sorted == std::vector<long>{2, 3}) ||
                    (n == 5 && sorted == std::vector<long>{2, 2, 2});
    }
    return cfg;
}

// The generators of the Jacobian ideal: Theta_k in A_1(-1) combining the
// partials of all F_i and G_j, the F_i themselves in A_0(d_i), and G_j*lam_j
// in A_1(0).
template <class F>
struct JacobianGenerators {
    std::vector<AElement<F>> theta;          // n+1 entries
    std::vector<AElement<F>> f_gens;         // r entries
    std::vector<AElement<F>> g_lambda_gens;  // s entries
};

namespace detail {

template <class F>
AElement<F> poly_as_element(const Configuration<F>& cfg, const Polynomial<F>& p, int mu_index,
                            int lam_index, GradedIndex idx) {
    AElement<F> el;
    el.idx = idx;
    BigradedTerm t;
    t.mu.assign((size_t)cfg.r(), 0);
    t.lam.assign((size_t)cfg.s(), 0);
    if (mu_index >= 0) t.mu[(size_t)mu_index] = 1;
    if (lam_index >= 0) t.lam[(size_t)lam_index] = 1;
    for (const auto& [m, c] : p.terms()) {
        t.mono = m;
        el.terms.push_back({t, c});
    }
    return el;
}

}  // namespace detail

template <class F>
JacobianGenerators<F> jacobian_generators(const Configuration<F>& cfg) {
    JacobianGenerators<F> g;
    const F& f = cfg.field;
    for (int k = 0; k <= cfg.n(); ++k) {
        AElement<F> theta;
        theta.idx = GradedIndex{1, -1};
        for (int i = 0; i < cfg.r(); ++i) {
            auto part = detail::poly_as_element(
                cfg, cfg.f_polys[(size_t)i].partial_derivative(k), i, -1, theta.idx);
            theta.terms.insert(theta.terms.end(), part.terms.begin(), part.terms.end());
        }
        for (int j = 0; j < cfg.s(); ++j) {
            auto part = detail::poly_as_element(
                cfg, cfg.g_polys[(size_t)j].partial_derivative(k), -1, j, theta.idx);
            theta.terms.insert(theta.terms.end(), part.terms.begin(), part.terms.end());
        }
        g.theta.push_back(std::move(theta));
    }
    for (int i = 0; i < cfg.r(); ++i)
        g.f_gens.push_back(detail::poly_as_element(cfg, cfg.f_polys[(size_t)i], -1, -1,
                                                   GradedIndex{0, cfg.shape.d[(size_t)i]}));
    for (int j = 0; j < cfg.s(); ++j)
        g.g_lambda_gens.push_back(
            detail::poly_as_element(cfg, cfg.g_polys[(size_t)j], -1, j, GradedIndex{1, 0}));

    // Euler identity: sum_k X_k * Theta_k = sum_i d_i F_i mu_i + sum_j e_j G_j lam_j.
    std::map<std::vector<int>, typename F::Element> lhs, rhs;
    auto accumulate = [&](std::map<std::vector<int>, typename F::Element>& acc,
                          const BigradedTerm& t, const typename F::Element& c) {
        auto key = t.flatten();
        auto it = acc.find(key);
        if (it == acc.end()) {
            acc.emplace(std::move(key), c);
        } else {
            it->second = f.add(it->second, c);
            if (f.is_zero(it->second)) acc.erase(it);
        }
    };
    for (int k = 0; k <= cfg.n(); ++k) {
        for (const auto& [t, c] : g.theta[(size_t)k].terms) {
            BigradedTerm xt = t;
            xt.mono.exponents[(size_t)k] += 1;
            accumulate(lhs, xt, c);
        }
    }
    for (int i = 0; i < cfg.r(); ++i) {
        typename F::Element di = f.from_long(cfg.shape.d[(size_t)i]);
        for (const auto& [m, c] : cfg.f_polys[(size_t)i].terms()) {
            BigradedTerm t;
            t.mu.assign((size_t)cfg.r(), 0);
            t.lam.assign((size_t)cfg.s(), 0);
            t.mu[(size_t)i] = 1;
            t.mono = m;
            accumulate(rhs, t, f.mul(di, c));
        }
    }
    for (int j = 0; j < cfg.s(); ++j) {
        typename F::Element ej = f.from_long(cfg.shape.e[(size_t)j]);
        for (const auto& [m, c] : cfg.g_polys[(size_t)j].terms()) {
            BigradedTerm t;
            t.mu.assign((size_t)cfg.r(), 0);
            t.lam.assign((size_t)cfg.s(), 0);
            t.lam[(size_t)j] = 1;
            t.mono = m;
            accumulate(rhs, t, f.mul(ej, c));
        }
    }
    if (lhs != rhs) throw std::logic_error("Euler identity violated by generator construction");
    return g;
}

// Rows spanning J cap A_q(l) in the coordinates of basis_A(q, l): every
// product of a generator with the full monomial basis of the matching
// complementary piece. Row order is Theta_0..Theta_n, then F_1..F_r, then
// G_1*lam_1..G_s*lam_s, factor terms in basis order within each generator.
template <class F>
ExactMatrix<F> ideal_piece_span(const Configuration<F>& cfg, const JacobianGenerators<F>& gens,
                                GradedIndex idx, const AmbientBasis& ambient) {
    const F& f = cfg.field;
    std::vector<std::pair<const AElement<F>*, GradedIndex>> products;
    for (const auto& th : gens.theta)
        products.push_back({&th, GradedIndex{idx.q - 1, idx.ell + 1}});
    for (int i = 0; i < cfg.r(); ++i)
        products.push_back({&gens.f_gens[(size_t)i], GradedIndex{idx.q, idx.ell - cfg.shape.d[(size_t)i]}});
    for (int j = 0; j < cfg.s(); ++j)
        products.push_back({&gens.g_lambda_gens[(size_t)j], GradedIndex{idx.q - 1, idx.ell}});

    std::vector<SparseRow<F>> rows;
    for (const auto& [gen, factor_idx] : products) {
        for (const BigradedTerm& t : basis_A(cfg.shape, factor_idx)) {
            std::map<long, typename F::Element> acc;
            for (const auto& [gt, c] : gen->terms) {
                BigradedTerm prod;
                prod.mu = t.mu;
                for (size_t i = 0; i < prod.mu.size(); ++i) prod.mu[i] += gt.mu[i];
                prod.lam = t.lam;
                for (size_t j = 0; j < prod.lam.size(); ++j) prod.lam[j] += gt.lam[j];
                prod.mono = monomial_product(t.mono, gt.mono);
                long col = ambient.find(prod);
                if (col < 0) throw std::logic_error("generator product escaped the target piece");
                auto it = acc.find(col);
                if (it == acc.end()) {
                    acc.emplace(col, c);
                } else {
                    it->second = f.add(it->second, c);
                    if (f.is_zero(it->second)) acc.erase(it);
                }
            }
            SparseRow<F> row(acc.begin(), acc.end());
            rows.push_back(std::move(row));
        }
    }

    ExactMatrix<F> m(f, (long)rows.size(), ambient.dim());
    for (long r = 0; r < (long)rows.size(); ++r)
        for (auto& [c, v] : rows[(size_t)r]) m.set(r, c, v);
    return m;
}

}  // namespace ocijac
