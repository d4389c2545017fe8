#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "graded.hpp"

namespace ocijac {

// One graded piece B_q(l) = A_q(l) / (J cap A_q(l)), presented on standard
// monomials: the ambient basis elements at non-pivot columns of the
// echelonized ideal span. nf_table rewrites each ambient basis vector on the
// standard monomials, which makes normal forms and products cheap lookups.
template <class F>
struct QuotientPiece {
    using Element = typename F::Element;

    GradedIndex idx;
    AmbientBasis ambient;
    long ideal_rank = 0;
    std::vector<long> pivot_cols;
    std::vector<long> standard_cols;  // ascending ambient column indices
    long dim = 0;                     // = ambient.dim() - ideal_rank

    // nf_table[ambient_index] = image of that ambient basis vector in B,
    // as a sparse vector over standard-monomial positions.
    std::vector<std::vector<std::pair<long, Element>>> nf_table;

    const BigradedTerm& standard_term(long k) const {
        return ambient.terms[(size_t)standard_cols[(size_t)k]];
    }
};

// Element of one piece of B, as dense coordinates over the standard monomials.
template <class F>
struct BElement {
    GradedIndex idx;
    std::vector<typename F::Element> coords;
};

// The Jacobian ring of a configuration, computed piecewise on demand. Pieces
// are immutable once built; the memo supports concurrent lookup.
template <class F>
class JacobianRing {
public:
    using Element = typename F::Element;

    explicit JacobianRing(Configuration<F> cfg)
        : cfg_(std::move(cfg)),
          gens_(jacobian_generators(cfg_)),
          mutex_(std::make_unique<std::mutex>()) {}

    const Configuration<F>& cfg() const { return cfg_; }
    const GradedShape& shape() const { return cfg_.shape; }
    const F& field() const { return cfg_.field; }
    const JacobianGenerators<F>& generators() const { return gens_; }

    long dim_A(GradedIndex idx) const { return ocijac::dim_A(cfg_.shape, idx); }
    std::vector<BigradedTerm> basis_A(GradedIndex idx) const {
        return ocijac::basis_A(cfg_.shape, idx);
    }
    ExactMatrix<F> ideal_piece_span(GradedIndex idx) const {
        AmbientBasis basis = make_ambient_basis(cfg_.shape, idx);
        return ocijac::ideal_piece_span(cfg_, gens_, idx, basis);
    }

    std::shared_ptr<const QuotientPiece<F>> piece(GradedIndex idx) const {
        {
            std::lock_guard<std::mutex> lock(*mutex_);
            auto it = memo_.find(idx);
            if (it != memo_.end()) return it->second;
        }
        auto built = std::make_shared<QuotientPiece<F>>(build_piece(idx));
        std::lock_guard<std::mutex> lock(*mutex_);
        auto [it, inserted] = memo_.emplace(idx, built);
        return it->second;
    }

    long dim_B(GradedIndex idx) const { return piece(idx)->dim; }

    // Quotient projection of an ambient coordinate vector.
    BElement<F> normal_form(const std::vector<Element>& ambient_coords, GradedIndex idx) const {
        auto pc = piece(idx);
        if ((long)ambient_coords.size() != pc->ambient.dim())
            throw std::invalid_argument("normal_form: coordinate length mismatch");
        const F& f = cfg_.field;
        BElement<F> out{idx, std::vector<Element>((size_t)pc->dim, f.zero())};
        for (long a = 0; a < pc->ambient.dim(); ++a) {
            const Element& c = ambient_coords[(size_t)a];
            if (f.is_zero(c)) continue;
            for (const auto& [pos, v] : pc->nf_table[(size_t)a])
                out.coords[(size_t)pos] = f.add(out.coords[(size_t)pos], f.mul(c, v));
        }
        return out;
    }

    BElement<F> zero_element(GradedIndex idx) const {
        return BElement<F>{idx, std::vector<Element>((size_t)piece(idx)->dim, cfg_.field.zero())};
    }

    // The unit of B_0(0) (always one-dimensional: the constants survive).
    BElement<F> unit() const {
        BElement<F> one = zero_element(GradedIndex{0, 0});
        one.coords[0] = cfg_.field.one();
        return one;
    }

    // Ring multiplication: lift both factors to their standard-monomial
    // representatives, multiply termwise in A and project. Independent of the
    // chosen representatives since the ideal is an ideal.
    BElement<F> multiply(const BElement<F>& x, const BElement<F>& y) const {
        const F& f = cfg_.field;
        auto px = piece(x.idx);
        auto py = piece(y.idx);
        if ((long)x.coords.size() != px->dim || (long)y.coords.size() != py->dim)
            throw std::invalid_argument("multiply: coordinate length mismatch");
        GradedIndex target{x.idx.q + y.idx.q, x.idx.ell + y.idx.ell};
        auto pt = piece(target);
        BElement<F> out{target, std::vector<Element>((size_t)pt->dim, f.zero())};
        for (long i = 0; i < px->dim; ++i) {
            if (f.is_zero(x.coords[(size_t)i])) continue;
            for (long j = 0; j < py->dim; ++j) {
                if (f.is_zero(y.coords[(size_t)j])) continue;
                Element c = f.mul(x.coords[(size_t)i], y.coords[(size_t)j]);
                long amb = product_index(*px, i, *py, j, *pt);
                for (const auto& [pos, v] : pt->nf_table[(size_t)amb])
                    out.coords[(size_t)pos] = f.add(out.coords[(size_t)pos], f.mul(c, v));
            }
        }
        return out;
    }

    // Matrix of multiplication by a fixed element w of B_1(0), as a map
    // B_q(l) -> B_{q+1}(l) on standard-monomial coordinates.
    ExactMatrix<F> multiplication_operator(const std::vector<Element>& w_coords,
                                           GradedIndex src) const {
        const F& f = cfg_.field;
        auto pw = piece(GradedIndex{1, 0});
        auto ps = piece(src);
        if ((long)w_coords.size() != pw->dim)
            throw std::invalid_argument("multiplication_operator: B_1(0) coordinate mismatch");
        GradedIndex dst{src.q + 1, src.ell};
        auto pd = piece(dst);
        ExactMatrix<F> mat(f, pd->dim, ps->dim);
        for (long j = 0; j < ps->dim; ++j) {
            for (long k = 0; k < pw->dim; ++k) {
                if (f.is_zero(w_coords[(size_t)k])) continue;
                long amb = product_index(*pw, k, *ps, j, *pd);
                for (const auto& [pos, v] : pd->nf_table[(size_t)amb])
                    mat.add(pos, j, f.mul(w_coords[(size_t)k], v));
            }
        }
        return mat;
    }

private:
    long product_index(const QuotientPiece<F>& pa, long i, const QuotientPiece<F>& pb, long j,
                       const QuotientPiece<F>& target) const {
        const BigradedTerm& ta = pa.standard_term(i);
        const BigradedTerm& tb = pb.standard_term(j);
        BigradedTerm prod;
        prod.mu = ta.mu;
        for (size_t k = 0; k < prod.mu.size(); ++k) prod.mu[k] += tb.mu[k];
        prod.lam = ta.lam;
        for (size_t k = 0; k < prod.lam.size(); ++k) prod.lam[k] += tb.lam[k];
        prod.mono = monomial_product(ta.mono, tb.mono);
        long amb = target.ambient.find(prod);
        if (amb < 0) throw std::logic_error("product escaped the target piece");
        return amb;
    }

    QuotientPiece<F> build_piece(GradedIndex idx) const {
        const F& f = cfg_.field;
        QuotientPiece<F> pc;
        pc.idx = idx;
        pc.ambient = make_ambient_basis(cfg_.shape, idx);
        ExactMatrix<F> span = ocijac::ideal_piece_span(cfg_, gens_, idx, pc.ambient);
        EchelonResult<F> ech = echelon(span);
        pc.ideal_rank = ech.rank;
        pc.pivot_cols = ech.pivot_cols;

        std::vector<long> pivot_row_of((size_t)pc.ambient.dim(), -1);
        for (long i = 0; i < ech.rank; ++i) pivot_row_of[(size_t)ech.pivot_cols[(size_t)i]] = i;

        std::vector<long> std_pos((size_t)pc.ambient.dim(), -1);
        for (long c = 0; c < pc.ambient.dim(); ++c) {
            if (pivot_row_of[(size_t)c] < 0) {
                std_pos[(size_t)c] = (long)pc.standard_cols.size();
                pc.standard_cols.push_back(c);
            }
        }
        pc.dim = (long)pc.standard_cols.size();

        pc.nf_table.resize((size_t)pc.ambient.dim());
        for (long c = 0; c < pc.ambient.dim(); ++c) {
            long pr = pivot_row_of[(size_t)c];
            if (pr < 0) {
                pc.nf_table[(size_t)c].push_back({std_pos[(size_t)c], f.one()});
            } else {
                // pivot column: e_c == RREF row minus its non-pivot tail, so
                // modulo the ideal e_c maps to the negated tail
                for (const auto& [col, v] : ech.reduced_rows[(size_t)pr]) {
                    if (col == c) continue;
                    if (std_pos[(size_t)col] >= 0)
                        pc.nf_table[(size_t)c].push_back({std_pos[(size_t)col], f.neg(v)});
                }
            }
        }
        return pc;
    }

    Configuration<F> cfg_;
    JacobianGenerators<F> gens_;
    std::unique_ptr<std::mutex> mutex_;  // owned so rings stay movable
    mutable std::map<GradedIndex, std::shared_ptr<const QuotientPiece<F>>> memo_;
};

}  // namespace ocijac
