#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "field.hpp"

namespace ocijac {

template <class F>
using SparseRow = std::vector<std::pair<long, typename F::Element>>;  // sorted by column, nonzero values only

// Sparse matrix over an exact field. Entries are kept sorted per row and
// never store zeros; indices are checked on mutation.
template <class F>
class ExactMatrix {
public:
    using Element = typename F::Element;

    ExactMatrix(F field, long rows, long cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_((size_t)rows) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const F& field() const { return field_; }

    const SparseRow<F>& row(long r) const { return data_[check_row(r)]; }

    Element at(long r, long c) const {
        check_index(r, c);
        const auto& rw = data_[(size_t)r];
        auto it = std::lower_bound(rw.begin(), rw.end(), c,
                                   [](const auto& p, long col) { return p.first < col; });
        if (it != rw.end() && it->first == c) return it->second;
        return field_.zero();
    }

    void set(long r, long c, Element v) {
        check_index(r, c);
        auto& rw = data_[(size_t)r];
        auto it = std::lower_bound(rw.begin(), rw.end(), c,
                                   [](const auto& p, long col) { return p.first < col; });
        if (it != rw.end() && it->first == c) {
            if (field_.is_zero(v))
                rw.erase(it);
            else
                it->second = std::move(v);
        } else if (!field_.is_zero(v)) {
            rw.insert(it, {c, std::move(v)});
        }
    }

    void add(long r, long c, const Element& v) {
        if (field_.is_zero(v)) return;
        check_index(r, c);
        auto& rw = data_[(size_t)r];
        auto it = std::lower_bound(rw.begin(), rw.end(), c,
                                   [](const auto& p, long col) { return p.first < col; });
        if (it != rw.end() && it->first == c) {
            it->second = field_.add(it->second, v);
            if (field_.is_zero(it->second)) rw.erase(it);
        } else {
            rw.insert(it, {c, v});
        }
    }

    long nnz() const {
        long total = 0;
        for (const auto& rw : data_) total += (long)rw.size();
        return total;
    }

    bool is_zero() const { return nnz() == 0; }

    ExactMatrix transposed() const {
        ExactMatrix t(field_, cols_, rows_);
        for (long r = 0; r < rows_; ++r)
            for (const auto& [c, v] : data_[(size_t)r]) t.data_[(size_t)c].push_back({r, v});
        // rows were filled in increasing r, already sorted per column
        return t;
    }

    std::vector<Element> apply(const std::vector<Element>& x) const {
        if ((long)x.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
        std::vector<Element> y((size_t)rows_, field_.zero());
        for (long r = 0; r < rows_; ++r) {
            Element acc = field_.zero();
            for (const auto& [c, v] : data_[(size_t)r])
                acc = field_.add(acc, field_.mul(v, x[(size_t)c]));
            y[(size_t)r] = std::move(acc);
        }
        return y;
    }

    ExactMatrix multiply(const ExactMatrix& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("multiply: dimension mismatch");
        ExactMatrix out(field_, rows_, rhs.cols_);
        std::vector<Element> acc((size_t)rhs.cols_, field_.zero());
        for (long r = 0; r < rows_; ++r) {
            for (auto& e : acc) e = field_.zero();
            for (const auto& [k, v] : data_[(size_t)r])
                for (const auto& [c, w] : rhs.data_[(size_t)k])
                    acc[(size_t)c] = field_.add(acc[(size_t)c], field_.mul(v, w));
            for (long c = 0; c < rhs.cols_; ++c)
                if (!field_.is_zero(acc[(size_t)c])) out.data_[(size_t)r].push_back({c, acc[(size_t)c]});
        }
        return out;
    }

    static ExactMatrix from_rows(F field, long cols,
                                 const std::vector<std::vector<Element>>& dense_rows) {
        ExactMatrix m(field, (long)dense_rows.size(), cols);
        for (long r = 0; r < m.rows_; ++r) {
            if ((long)dense_rows[(size_t)r].size() != cols)
                throw std::invalid_argument("from_rows: ragged row");
            for (long c = 0; c < cols; ++c)
                if (!m.field_.is_zero(dense_rows[(size_t)r][(size_t)c]))
                    m.data_[(size_t)r].push_back({c, dense_rows[(size_t)r][(size_t)c]});
        }
        return m;
    }

    std::vector<Element> dense_row(long r) const {
        std::vector<Element> out((size_t)cols_, field_.zero());
        for (const auto& [c, v] : data_[check_row(r)]) out[(size_t)c] = v;
        return out;
    }

private:
    size_t check_row(long r) const {
        if (r < 0 || r >= rows_) throw std::out_of_range("row index");
        return (size_t)r;
    }
    void check_index(long r, long c) const {
        check_row(r);
        if (c < 0 || c >= cols_) throw std::out_of_range("column index");
    }

    F field_;
    long rows_, cols_;
    std::vector<SparseRow<F>> data_;
};

template <class F>
struct EchelonResult {
    std::vector<long> pivot_cols;  // strictly increasing
    long rank = 0;
    // Reduced row-echelon rows (pivot entries normalized to 1), one per pivot,
    // in pivot-column order. RREF is canonical: it depends only on the row
    // space, never on row order.
    std::vector<SparseRow<F>> reduced_rows;
    // Present iff requested: reduced_rows[i] = sum_j transform[i][j] * input_row[j].
    bool has_transform = false;
    std::vector<SparseRow<F>> transform;
};

namespace detail {

// Working row for elimination: sparse until fill-in passes 50% of the width,
// dense afterwards.
template <class E>
struct WorkRow {
    long cols = 0;
    bool dense = false;
    std::vector<std::pair<long, E>> sp;  // sorted, nonzero
    std::vector<E> dn;
    long nnz = 0;
    long lead_lb = 0;  // no nonzero entries strictly left of this column

    void init(long width) {
        cols = width;
        dense = false;
        sp.clear();
        dn.clear();
        nnz = 0;
        lead_lb = 0;
    }

    bool empty() const { return nnz == 0; }

    template <class IsZero>
    void densify(const E& zero, IsZero is_zero) {
        if (dense) return;
        dn.assign((size_t)cols, zero);
        lead_lb = sp.empty() ? cols : sp.front().first;
        for (auto& [c, v] : sp) dn[(size_t)c] = std::move(v);
        sp.clear();
        sp.shrink_to_fit();
        dense = true;
        (void)is_zero;
    }

    template <class IsZero>
    E get(long c, const E& zero, IsZero is_zero) const {
        if (dense) return dn[(size_t)c];
        auto it = std::lower_bound(sp.begin(), sp.end(), c,
                                   [](const auto& p, long col) { return p.first < col; });
        if (it != sp.end() && it->first == c && !is_zero(it->second)) return it->second;
        return zero;
    }

    template <class IsZero>
    long leading_col(IsZero is_zero) {
        if (!dense) return sp.empty() ? -1 : sp.front().first;
        for (long c = lead_lb; c < cols; ++c) {
            if (!is_zero(dn[(size_t)c])) {
                lead_lb = c;
                return c;
            }
        }
        lead_lb = cols;
        return -1;
    }

    template <class Fn, class IsZero>
    void for_each_nonzero(Fn fn, IsZero is_zero) const {
        if (dense) {
            for (long c = 0; c < cols; ++c)
                if (!is_zero(dn[(size_t)c])) fn(c, dn[(size_t)c]);
        } else {
            for (const auto& [c, v] : sp) fn(c, v);
        }
    }

    // self <- alpha*self + beta*other  (alpha nonzero; beta may be zero)
    template <class Ops>
    void combine(const E& alpha, const E& beta, const WorkRow& other, const Ops& ops) {
        if (dense) {
            if (!ops.is_one(alpha)) {
                for (long c = 0; c < cols; ++c)
                    if (!ops.is_zero(dn[(size_t)c])) dn[(size_t)c] = ops.mul(alpha, dn[(size_t)c]);
            }
            if (!ops.is_zero(beta)) {
                bool first = true;
                other.for_each_nonzero(
                    [&](long c, const E& v) {
                        if (first) {
                            lead_lb = std::min(lead_lb, c);
                            first = false;
                        }
                        bool was = !ops.is_zero(dn[(size_t)c]);
                        dn[(size_t)c] = ops.add(dn[(size_t)c], ops.mul(beta, v));
                        bool now = !ops.is_zero(dn[(size_t)c]);
                        nnz += (now ? 1 : 0) - (was ? 1 : 0);
                    },
                    [&](const E& v) { return ops.is_zero(v); });
            }
            return;
        }
        // sparse self: merge with other's nonzeros
        std::vector<std::pair<long, E>> merged;
        merged.reserve(sp.size() + 8);
        auto emit = [&](long c, E v) {
            if (!ops.is_zero(v)) merged.emplace_back(c, std::move(v));
        };
        if (other.dense) {
            size_t i = 0;
            for (long c = 0; c < cols; ++c) {
                const E* ov = ops.is_zero(other.dn[(size_t)c]) ? nullptr : &other.dn[(size_t)c];
                const E* sv = nullptr;
                if (i < sp.size() && sp[i].first == c) sv = &sp[i].second;
                if (!ov && !sv) continue;
                E val = ops.zero();
                if (sv) {
                    val = ops.mul(alpha, *sv);
                    ++i;
                }
                if (ov && !ops.is_zero(beta)) val = ops.add(val, ops.mul(beta, *ov));
                emit(c, std::move(val));
            }
        } else {
            size_t i = 0, j = 0;
            while (i < sp.size() || j < other.sp.size()) {
                if (j >= other.sp.size() || (i < sp.size() && sp[i].first < other.sp[j].first)) {
                    emit(sp[i].first, ops.mul(alpha, sp[i].second));
                    ++i;
                } else if (i >= sp.size() || other.sp[j].first < sp[i].first) {
                    if (!ops.is_zero(beta)) emit(other.sp[j].first, ops.mul(beta, other.sp[j].second));
                    ++j;
                } else {
                    E val = ops.mul(alpha, sp[i].second);
                    if (!ops.is_zero(beta)) val = ops.add(val, ops.mul(beta, other.sp[j].second));
                    emit(sp[i].first, std::move(val));
                    ++i;
                    ++j;
                }
            }
        }
        sp = std::move(merged);
        nnz = (long)sp.size();
        if (2 * nnz > cols) densify(ops.zero(), [&](const E& v) { return ops.is_zero(v); });
    }

    template <class Fn>
    void map_values(Fn fn) {
        if (dense) {
            for (auto& v : dn) fn(v);
        } else {
            for (auto& [c, v] : sp) fn(v);
        }
    }
};

struct PrimeOps {
    PrimeField f;
    using E = PrimeField::Element;
    E zero() const { return 0; }
    bool is_zero(E v) const { return v == 0; }
    bool is_one(E v) const { return v == 1; }
    E add(E a, E b) const { return f.add(a, b); }
    E mul(E a, E b) const { return f.mul(a, b); }
};

struct IntOps {
    using E = mpz_class;
    E zero() const { return E(0); }
    bool is_zero(const E& v) const { return v == 0; }
    bool is_one(const E& v) const { return v == 1; }
    E add(const E& a, const E& b) const { return E(a + b); }
    E mul(const E& a, const E& b) const { return E(a * b); }
};

// Shared pivot-selection loop. Pivot choice is fixed: smallest column index
// first, then smallest (original) row index; this makes pivot lists and
// standard-monomial bases reproducible. EngineStep eliminates column c from
// row r given the pivot slot.
template <class E, class IsZero, class EngineStep, class PostPivot>
inline void eliminate(std::vector<WorkRow<E>>& rows, long cols, std::vector<long>& pivot_cols,
                      std::vector<long>& pivot_slots, IsZero is_zero, EngineStep step,
                      PostPivot post_pivot) {
    std::vector<long> active(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) active[i] = (long)i;
    for (long c = 0; c < cols; ++c) {
        long sel = -1;
        size_t sel_pos = 0;
        for (size_t i = 0; i < active.size(); ++i) {
            if (rows[(size_t)active[i]].leading_col(is_zero) == c) {
                sel = active[i];
                sel_pos = i;
                break;
            }
        }
        if (sel < 0) continue;
        active.erase(active.begin() + (long)sel_pos);
        post_pivot(sel, c);
        for (long r : active)
            if (!is_zero(rows[(size_t)r].get(c, E{}, is_zero))) step(r, sel, c);
        for (long r : pivot_slots)
            if (!is_zero(rows[(size_t)r].get(c, E{}, is_zero))) step(r, sel, c);
        pivot_slots.push_back(sel);
        pivot_cols.push_back(c);
    }
}

// Gauss-Jordan over a prime field; pivot rows are scaled to 1 on selection.
inline EchelonResult<PrimeField> echelon_prime(const ExactMatrix<PrimeField>& m,
                                               bool want_transform) {
    const PrimeField& f = m.field();
    PrimeOps ops{f};
    auto is_zero = [](std::uint64_t v) { return v == 0; };
    const long nr = m.rows(), nc = m.cols();

    std::vector<WorkRow<std::uint64_t>> work((size_t)nr), trans;
    for (long r = 0; r < nr; ++r) {
        work[(size_t)r].init(nc);
        for (const auto& [c, v] : m.row(r)) work[(size_t)r].sp.push_back({c, v});
        work[(size_t)r].nnz = (long)work[(size_t)r].sp.size();
    }
    if (want_transform) {
        trans.resize((size_t)nr);
        for (long r = 0; r < nr; ++r) {
            trans[(size_t)r].init(nr);
            trans[(size_t)r].sp.push_back({r, 1});
            trans[(size_t)r].nnz = 1;
        }
    }

    EchelonResult<PrimeField> res;
    std::vector<long> slots;
    eliminate<std::uint64_t>(
        work, nc, res.pivot_cols, slots, is_zero,
        [&](long r, long piv, long c) {
            std::uint64_t fct = work[(size_t)r].get(c, 0, is_zero);
            std::uint64_t beta = f.neg(fct);
            work[(size_t)r].combine(1, beta, work[(size_t)piv], ops);
            if (want_transform) trans[(size_t)r].combine(1, beta, trans[(size_t)piv], ops);
        },
        [&](long sel, long c) {
            std::uint64_t pv = work[(size_t)sel].get(c, 0, is_zero);
            std::uint64_t s = f.inv(pv);
            if (s != 1) {
                work[(size_t)sel].map_values([&](std::uint64_t& v) { v = f.mul(v, s); });
                if (want_transform)
                    trans[(size_t)sel].map_values([&](std::uint64_t& v) { v = f.mul(v, s); });
            }
        });

    res.rank = (long)res.pivot_cols.size();
    res.reduced_rows.reserve((size_t)res.rank);
    for (long slot : slots) {
        SparseRow<PrimeField> row;
        work[(size_t)slot].for_each_nonzero([&](long c, std::uint64_t v) { row.push_back({c, v}); },
                                            is_zero);
        res.reduced_rows.push_back(std::move(row));
    }
    if (want_transform) {
        res.has_transform = true;
        for (long slot : slots) {
            SparseRow<PrimeField> row;
            trans[(size_t)slot].for_each_nonzero(
                [&](long c, std::uint64_t v) { row.push_back({c, v}); }, is_zero);
            res.transform.push_back(std::move(row));
        }
    }
    return res;
}

// Fraction-free elimination over the rationals: rows are scaled to primitive
// integer vectors, combined by cross-multiplication, and renormalized by
// their content after every step, so all intermediate entries stay integral.
// Pivots are divided out only when emitting the final reduced rows.
inline EchelonResult<RationalField> echelon_rational(const ExactMatrix<RationalField>& m,
                                                     bool want_transform) {
    IntOps ops;
    auto is_zero = [](const mpz_class& v) { return v == 0; };
    const long nr = m.rows(), nc = m.cols();

    std::vector<WorkRow<mpz_class>> work((size_t)nr), trans;
    std::vector<mpq_class> prescale((size_t)nr, mpq_class(1));
    for (long r = 0; r < nr; ++r) {
        work[(size_t)r].init(nc);
        mpz_class denom_lcm = 1;
        for (const auto& [c, v] : m.row(r)) {
            mpz_class d = v.get_den();
            mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), d.get_mpz_t());
        }
        mpz_class content = 0;
        std::vector<std::pair<long, mpz_class>> ints;
        for (const auto& [c, v] : m.row(r)) {
            mpz_class num = mpz_class(v * denom_lcm);
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
            ints.emplace_back(c, std::move(num));
        }
        if (content == 0) content = 1;
        for (auto& [c, v] : ints) {
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
            work[(size_t)r].sp.push_back({c, std::move(v)});
        }
        work[(size_t)r].nnz = (long)work[(size_t)r].sp.size();
        prescale[(size_t)r] = mpq_class(denom_lcm) / mpq_class(content);
    }
    if (want_transform) {
        trans.resize((size_t)nr);
        for (long r = 0; r < nr; ++r) {
            trans[(size_t)r].init(nr);
            trans[(size_t)r].sp.push_back({r, mpz_class(1)});
            trans[(size_t)r].nnz = 1;
        }
    }

    auto joint_content = [&](long r) {
        mpz_class g = 0;
        work[(size_t)r].for_each_nonzero(
            [&](long, const mpz_class& v) { mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t()); },
            is_zero);
        if (want_transform)
            trans[(size_t)r].for_each_nonzero(
                [&](long, const mpz_class& v) { mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t()); },
                is_zero);
        return g;
    };
    auto divide_out = [&](long r, const mpz_class& g) {
        if (g == 0 || g == 1) return;
        work[(size_t)r].map_values([&](mpz_class& v) {
            if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        });
        if (want_transform)
            trans[(size_t)r].map_values([&](mpz_class& v) {
                if (v != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
            });
    };

    EchelonResult<RationalField> res;
    std::vector<long> slots;
    eliminate<mpz_class>(
        work, nc, res.pivot_cols, slots, is_zero,
        [&](long r, long piv, long c) {
            mpz_class pv = work[(size_t)piv].get(c, mpz_class(0), is_zero);
            mpz_class rv = work[(size_t)r].get(c, mpz_class(0), is_zero);
            mpz_class beta = -rv;
            work[(size_t)r].combine(pv, beta, work[(size_t)piv], ops);
            if (want_transform) trans[(size_t)r].combine(pv, beta, trans[(size_t)piv], ops);
            divide_out(r, joint_content(r));
        },
        [&](long, long) {});

    res.rank = (long)res.pivot_cols.size();
    RationalField rf;
    for (size_t i = 0; i < slots.size(); ++i) {
        long slot = slots[i];
        mpq_class pivot_val(work[(size_t)slot].get(res.pivot_cols[i], mpz_class(0), is_zero));
        SparseRow<RationalField> row;
        work[(size_t)slot].for_each_nonzero(
            [&](long c, const mpz_class& v) { row.push_back({c, mpq_class(v) / pivot_val}); },
            is_zero);
        res.reduced_rows.push_back(std::move(row));
        if (want_transform) {
            SparseRow<RationalField> trow;
            trans[(size_t)slot].for_each_nonzero(
                [&](long j, const mpz_class& v) {
                    mpq_class t = mpq_class(v) / pivot_val * prescale[(size_t)j];
                    if (t != 0) trow.push_back({j, std::move(t)});
                },
                is_zero);
            res.transform.push_back(std::move(trow));
        }
    }
    res.has_transform = want_transform;
    return res;
}

}  // namespace detail

template <class F>
EchelonResult<F> echelon(const ExactMatrix<F>& m, bool want_transform = false) {
    if constexpr (std::is_same_v<F, RationalField>)
        return detail::echelon_rational(m, want_transform);
    else
        return detail::echelon_prime(m, want_transform);
}

template <class F>
long rank_of(const ExactMatrix<F>& m) {
    return echelon(m).rank;
}

// Right null space basis read off the RREF: one vector per non-pivot column,
// in ascending column order. Always returns cols - rank vectors.
template <class F>
std::vector<std::vector<typename F::Element>> kernel_basis(const ExactMatrix<F>& m) {
    using E = typename F::Element;
    const F& f = m.field();
    EchelonResult<F> ech = echelon(m);
    std::vector<bool> is_pivot((size_t)m.cols(), false);
    for (long c : ech.pivot_cols) is_pivot[(size_t)c] = true;
    std::vector<std::vector<E>> basis;
    for (long j = 0; j < m.cols(); ++j) {
        if (is_pivot[(size_t)j]) continue;
        std::vector<E> v((size_t)m.cols(), f.zero());
        v[(size_t)j] = f.one();
        for (size_t i = 0; i < ech.reduced_rows.size(); ++i) {
            for (const auto& [c, val] : ech.reduced_rows[i]) {
                if (c == j) {
                    v[(size_t)ech.pivot_cols[i]] = f.neg(val);
                    break;
                }
                if (c > j) break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
struct ReduceResult {
    std::vector<typename F::Element> residue;
    // present iff residue == 0: target = sum coefficients[i] * span[i]
    std::optional<std::vector<typename F::Element>> coefficients;
};

// Reduces target modulo the span: subtracts the unique combination of RREF
// rows matching target on the pivot coordinates. The residue is supported
// only on non-pivot coordinates and vanishes iff target lies in the span.
template <class F>
ReduceResult<F> reduce_against(const F& field,
                               const std::vector<std::vector<typename F::Element>>& span,
                               const std::vector<typename F::Element>& target) {
    using E = typename F::Element;
    const long n = (long)target.size();
    for (const auto& v : span)
        if ((long)v.size() != n) throw std::invalid_argument("reduce_against: dimension mismatch");

    ExactMatrix<F> m = ExactMatrix<F>::from_rows(field, n, span);
    EchelonResult<F> ech = echelon(m, /*want_transform=*/true);

    std::vector<E> residue = target;
    std::vector<E> coeffs(span.size(), field.zero());
    for (size_t i = 0; i < ech.reduced_rows.size(); ++i) {
        const E fct = residue[(size_t)ech.pivot_cols[i]];
        if (field.is_zero(fct)) continue;
        for (const auto& [c, val] : ech.reduced_rows[i])
            residue[(size_t)c] = field.sub(residue[(size_t)c], field.mul(fct, val));
        for (const auto& [j, val] : ech.transform[i])
            coeffs[(size_t)j] = field.add(coeffs[(size_t)j], field.mul(fct, val));
    }
    bool zero = true;
    for (const auto& v : residue)
        if (!field.is_zero(v)) {
            zero = false;
            break;
        }
    ReduceResult<F> out;
    out.residue = std::move(residue);
    if (zero) out.coefficients = std::move(coeffs);
    return out;
}

}  // namespace ocijac
