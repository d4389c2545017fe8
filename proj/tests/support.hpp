#pragma once

// Shared helpers for the test suites: ring builders, independent small-matrix
// oracles, and deterministic random instance generation.

#include <string>
#include <vector>

#include "ocijac/ocijac.hpp"

namespace testsupport {

using namespace ocijac;

inline PrimeField default_prime_field() { return PrimeField(FieldSpec::kDefaultPrime); }
inline PrimeField second_prime_field() { return PrimeField(FieldSpec::kSecondPrime); }

template <class F>
JacobianRing<F> make_ring(F field, int n, const std::vector<std::string>& f_texts,
                          const std::vector<std::string>& g_texts) {
    std::vector<Polynomial<F>> fs, gs;
    for (const auto& t : f_texts) fs.push_back(Polynomial<F>::parse(t, n + 1, field));
    for (const auto& t : g_texts) gs.push_back(Polynomial<F>::parse(t, n + 1, field));
    return JacobianRing<F>(make_configuration(field, n, std::move(fs), std::move(gs)));
}

inline JacobianRing<PrimeField> prime_ring(int n, const std::vector<std::string>& f_texts,
                                           const std::vector<std::string>& g_texts) {
    return make_ring(default_prime_field(), n, f_texts, g_texts);
}

inline JacobianRing<RationalField> rational_ring(int n, const std::vector<std::string>& f_texts,
                                                 const std::vector<std::string>& g_texts) {
    return make_ring(RationalField{}, n, f_texts, g_texts);
}

// Determinant by Laplace expansion; fine for the <= 6x6 oracle sizes.
template <class F>
typename F::Element det_laplace(const F& f,
                                const std::vector<std::vector<typename F::Element>>& a) {
    const size_t n = a.size();
    if (n == 0) return f.one();
    if (n == 1) return a[0][0];
    typename F::Element acc = f.zero();
    for (size_t j = 0; j < n; ++j) {
        if (f.is_zero(a[0][j])) continue;
        std::vector<std::vector<typename F::Element>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<typename F::Element> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(std::move(row));
        }
        typename F::Element term = f.mul(a[0][j], det_laplace(f, minor));
        acc = (j % 2 == 0) ? f.add(acc, term) : f.sub(acc, term);
    }
    return acc;
}

// Independent rank oracle: the largest k for which some k x k minor is
// nonzero. Exponential; only for small matrices.
template <class F>
long rank_by_minors(const ExactMatrix<F>& m) {
    const F& f = m.field();
    const long nr = m.rows(), nc = m.cols();
    auto subsets = [](long n, long k) {
        std::vector<std::vector<long>> out;
        std::vector<long> cur((size_t)k);
        auto rec = [&](auto&& self, long pos, long start) -> void {
            if (pos == k) {
                out.push_back(cur);
                return;
            }
            for (long i = start; i < n; ++i) {
                cur[(size_t)pos] = i;
                self(self, pos + 1, i + 1);
            }
        };
        rec(rec, 0, 0);
        return out;
    };
    for (long k = std::min(nr, nc); k >= 1; --k) {
        for (const auto& rows : subsets(nr, k)) {
            for (const auto& cols : subsets(nc, k)) {
                std::vector<std::vector<typename F::Element>> sub;
                for (long r : rows) {
                    std::vector<typename F::Element> row;
                    for (long c : cols) row.push_back(m.at(r, c));
                    sub.push_back(std::move(row));
                }
                if (!f.is_zero(det_laplace(f, sub))) return k;
            }
        }
    }
    return 0;
}

template <class F>
ExactMatrix<F> random_matrix(const F& f, DetRng& rng, long rows, long cols, long lo = -5,
                             long hi = 5) {
    ExactMatrix<F> m(f, rows, cols);
    for (long r = 0; r < rows; ++r)
        for (long c = 0; c < cols; ++c) m.set(r, c, f.from_long(rng.int_in(lo, hi)));
    return m;
}

// Dense homogeneous polynomial of the given degree with every coefficient a
// nonzero small integer; such a draw is smooth/transversal away from a
// measure-zero locus.
inline std::string random_dense_poly_text(DetRng& rng, int nvars, long degree) {
    std::string out;
    for (const Monomial& m : monomials_of_degree(nvars, degree)) {
        long coeff = rng.int_in(1, 40);
        bool negative = rng.below(2) == 1;
        std::string mono;
        for (size_t i = 0; i < m.exponents.size(); ++i) {
            int e = m.exponents[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "X" + std::to_string(i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        std::string term = std::to_string(coeff);
        if (!mono.empty()) term += "*" + mono;
        if (out.empty())
            out = (negative ? "-" : "") + term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out;
}

// Field-independent instance data (polynomials as text, integral coefficients).
struct InstanceText {
    int n = 0;
    std::vector<std::string> f_texts;
    std::vector<std::string> g_texts;
    GradedShape shape;
};

struct InstanceLimits {
    int n_min = 2, n_max = 4;
    long d_min = 2, d_max = 4;
    long e_min = 1, e_max = 2;
    int s_min = 0, s_max = 2;
    long max_ambient_dim = 500;   // cap on every piece the duality window touches
    long max_span_rows = 3000;
};

// Draws a shape within the limits whose duality-window pieces stay desk-sized,
// then fills in dense random polynomials. r >= 1 and m = n - r >= 1 always.
inline InstanceText random_instance(DetRng& rng, const InstanceLimits& lim) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        int n = (int)rng.int_in(lim.n_min, lim.n_max);
        int r = (int)rng.int_in(1, n - 1);
        int s = (int)rng.int_in(lim.s_min, lim.s_max);
        GradedShape shape;
        shape.n = n;
        for (int i = 0; i < r; ++i) shape.d.push_back(rng.int_in(lim.d_min, lim.d_max));
        for (int j = 0; j < s; ++j) shape.e.push_back(rng.int_in(lim.e_min, lim.e_max));

        // every piece appearing in the trace/pairing window must stay small
        bool ok = true;
        auto check_piece = [&](GradedIndex idx) {
            long dim = dim_A(shape, idx);
            long rows = (long)(n + 1) * dim_A(shape, GradedIndex{idx.q - 1, idx.ell + 1});
            for (long dv : shape.d) rows += dim_A(shape, GradedIndex{idx.q, idx.ell - dv});
            rows += (long)s * dim_A(shape, GradedIndex{idx.q - 1, idx.ell});
            if (dim > lim.max_ambient_dim || rows > lim.max_span_rows) ok = false;
        };
        check_piece(GradedIndex{shape.m(), 2 * (shape.d_sum() - n - 1) + shape.e_sum()});
        for (int p = 0; p <= shape.m() && ok; ++p) {
            for (long ell = 0; ell <= shape.e_max() && ok; ++ell) {
                check_piece(GradedIndex{p, shape.d_sum() - n - 1 + ell});
                check_piece(GradedIndex{shape.m() - p, shape.d_sum() + shape.e_sum() - n - 1 - ell});
            }
        }
        check_piece(GradedIndex{1, 0});
        if (!ok) continue;

        InstanceText inst;
        inst.n = n;
        inst.shape = shape;
        for (int i = 0; i < r; ++i)
            inst.f_texts.push_back(random_dense_poly_text(rng, n + 1, shape.d[(size_t)i]));
        for (int j = 0; j < s; ++j)
            inst.g_texts.push_back(random_dense_poly_text(rng, n + 1, shape.e[(size_t)j]));
        return inst;
    }
    throw std::runtime_error("random_instance: no shape within limits");
}

}  // namespace testsupport
