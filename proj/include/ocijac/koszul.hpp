#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "quotient.hpp"
#include "util.hpp"

namespace ocijac {

// A subspace V of B_1(0), given by an independent basis in standard-monomial
// coordinates. codim = dim B_1(0) - |basis|.
template <class F>
struct SubspaceSpec {
    enum class Source { full, explicit_vectors, random };
    Source source = Source::full;
    std::vector<std::vector<typename F::Element>> basis;
    long b1_dim = 0;
    long codim = 0;
    std::uint64_t seed = 0;  // meaningful for random
};

template <class F>
SubspaceSpec<F> full_subspace(const JacobianRing<F>& ring) {
    const F& f = ring.field();
    SubspaceSpec<F> v;
    v.source = SubspaceSpec<F>::Source::full;
    v.b1_dim = ring.dim_B(GradedIndex{1, 0});
    v.codim = 0;
    for (long i = 0; i < v.b1_dim; ++i) {
        std::vector<typename F::Element> unit((size_t)v.b1_dim, f.zero());
        unit[(size_t)i] = f.one();
        v.basis.push_back(std::move(unit));
    }
    return v;
}

template <class F>
SubspaceSpec<F> subspace_from_vectors(const JacobianRing<F>& ring,
                                      std::vector<std::vector<typename F::Element>> vectors) {
    const F& f = ring.field();
    SubspaceSpec<F> v;
    v.source = SubspaceSpec<F>::Source::explicit_vectors;
    v.b1_dim = ring.dim_B(GradedIndex{1, 0});
    for (const auto& vec : vectors)
        if ((long)vec.size() != v.b1_dim)
            throw std::invalid_argument("subspace vector length does not match dim B_1(0)");
    ExactMatrix<F> m = ExactMatrix<F>::from_rows(f, v.b1_dim, vectors);
    if (rank_of(m) != (long)vectors.size())
        throw std::invalid_argument("subspace vectors are linearly dependent");
    v.basis = std::move(vectors);
    v.codim = v.b1_dim - (long)v.basis.size();
    return v;
}

// Deterministic random subspace of the given codimension. codim 0 returns the
// full standard basis; otherwise small random integer vectors are drawn from
// the seed (redrawing deterministically in the unlikely dependent case).
template <class F>
SubspaceSpec<F> random_subspace(const JacobianRing<F>& ring, long codim, std::uint64_t seed) {
    const F& f = ring.field();
    long b1 = ring.dim_B(GradedIndex{1, 0});
    if (codim < 0 || codim > b1)
        throw std::invalid_argument("subspace codimension out of range [0, dim B_1(0)]");
    if (codim == 0) {
        SubspaceSpec<F> v = full_subspace(ring);
        v.seed = seed;
        return v;
    }
    SubspaceSpec<F> v;
    v.source = SubspaceSpec<F>::Source::random;
    v.b1_dim = b1;
    v.codim = codim;
    v.seed = seed;
    const long count = b1 - codim;
    DetRng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<std::vector<typename F::Element>> vecs;
        for (long i = 0; i < count; ++i) {
            std::vector<typename F::Element> vec((size_t)b1, f.zero());
            for (long j = 0; j < b1; ++j) vec[(size_t)j] = f.from_long(rng.int_in(-9, 9));
            vecs.push_back(std::move(vec));
        }
        if (count == 0 ||
            rank_of(ExactMatrix<F>::from_rows(f, b1, vecs)) == count) {
            v.basis = std::move(vecs);
            return v;
        }
    }
    throw std::runtime_error("random_subspace: failed to draw independent vectors");
}

// Subspace file format: header "# b1dim=<N>", then one vector per line as
// space-separated integers in the standard-monomial order of B_1(0).
template <class F>
SubspaceSpec<F> read_subspace_file(const JacobianRing<F>& ring, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open subspace file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty subspace file: " + path);
    long declared = -1;
    if (line.rfind("# b1dim=", 0) == 0) {
        declared = std::stol(line.substr(8));
    } else {
        throw std::runtime_error("subspace file must start with '# b1dim=<N>'");
    }
    long b1 = ring.dim_B(GradedIndex{1, 0});
    if (declared != b1)
        throw std::runtime_error("subspace header b1dim=" + std::to_string(declared) +
                                 " does not match dim B_1(0)=" + std::to_string(b1));
    const F& f = ring.field();
    std::vector<std::vector<typename F::Element>> vecs;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<typename F::Element> vec;
        long long value;
        while (ls >> value) vec.push_back(f.from_long((long)value));
        if ((long)vec.size() != b1)
            throw std::runtime_error("subspace vector has " + std::to_string(vec.size()) +
                                     " coordinates, expected " + std::to_string(b1));
        vecs.push_back(std::move(vec));
    }
    return subspace_from_vectors(ring, std::move(vecs));
}

inline void write_subspace_file(const std::string& path, long b1_dim,
                                const std::vector<std::vector<long>>& vectors) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write subspace file: " + path);
    out << "# b1dim=" << b1_dim << "\n";
    for (const auto& vec : vectors) {
        for (size_t i = 0; i < vec.size(); ++i) out << (i ? " " : "") << vec[i];
        out << "\n";
    }
}

namespace detail {

// Strictly increasing index tuples of the given length, in lexicographic
// order; the wedge basis of ∧^len V.
inline std::vector<std::vector<int>> wedge_tuples(int dim_v, int len) {
    std::vector<std::vector<int>> out;
    if (len < 0 || len > dim_v) return out;
    std::vector<int> cur((size_t)len);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == len) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < dim_v; ++i) {
            cur[(size_t)pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

inline long tuple_index(const std::vector<std::vector<int>>& tuples, const std::vector<int>& t) {
    auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
    if (it == tuples.end() || *it != t) throw std::logic_error("wedge tuple not found");
    return (long)(it - tuples.begin());
}

}  // namespace detail

// Koszul differential B_p(l) ⊗ ∧^{q+1}V -> B_{p+1}(l) ⊗ ∧^q V,
//   b ⊗ v_{i_0}∧...∧v_{i_q}  ->  sum_t (-1)^t (v_{i_t}·b) ⊗ v_{i_0}∧...v̂_{i_t}...∧v_{i_q}.
// Basis index layout on both sides: wedge tuple major, B coordinate minor.
template <class F>
ExactMatrix<F> koszul_differential(const JacobianRing<F>& ring, const SubspaceSpec<F>& v, int p,
                                   long ell, int q) {
    const F& f = ring.field();
    const int dim_v = (int)v.basis.size();
    GradedIndex src_piece{p, ell}, dst_piece{p + 1, ell};
    const long dim_src_b = ring.dim_B(src_piece);
    const long dim_dst_b = ring.dim_B(dst_piece);
    auto src_tuples = detail::wedge_tuples(dim_v, q + 1);
    auto dst_tuples = detail::wedge_tuples(dim_v, q);
    const long rows = dim_dst_b * (long)dst_tuples.size();
    const long cols = dim_src_b * (long)src_tuples.size();
    ExactMatrix<F> mat(f, rows, cols);
    if (rows == 0 || cols == 0) return mat;

    // multiplication operators for each basis vector of V
    std::vector<ExactMatrix<F>> mult;
    mult.reserve((size_t)dim_v);
    for (int i = 0; i < dim_v; ++i)
        mult.push_back(ring.multiplication_operator(v.basis[(size_t)i], src_piece));

    for (long ti = 0; ti < (long)src_tuples.size(); ++ti) {
        const auto& tuple = src_tuples[(size_t)ti];
        for (size_t t = 0; t < tuple.size(); ++t) {
            std::vector<int> sub = tuple;
            sub.erase(sub.begin() + (long)t);
            long tj = detail::tuple_index(dst_tuples, sub);
            bool negate = (t % 2) == 1;
            const ExactMatrix<F>& op = mult[(size_t)tuple[t]];
            for (long r = 0; r < op.rows(); ++r)
                for (const auto& [c, val] : op.row(r))
                    mat.add(tj * dim_dst_b + r, ti * dim_src_b + c,
                            negate ? f.neg(val) : val);
        }
    }
    return mat;
}

enum class KoszulCase { i, ii, iii, none };

inline const char* to_string(KoszulCase c) {
    switch (c) {
        case KoszulCase::i: return "i";
        case KoszulCase::ii: return "ii";
        case KoszulCase::iii: return "iii";
        default: return "none";
    }
}

// Which exactness hypothesis covers (p, l, q, c), if any:
//   (i)   q = 0, p >= 0, delta_min*p + l >= c
//   (ii)  q = 1, p >= 0, delta_min*p + l >= 1 + c, delta_min*(p+1) + l >= d_max + c
//   (iii) p >= 0, delta_min*(r+p) + l >= d_sum + q + c,
//         d_sum + e_max - n - 1 > l >= d_sum - n - 1,
//         and r+s <= n+2 or p <= n - r - floor(q/2)
inline KoszulCase koszul_case(const GradedShape& sh, int p, long ell, int q, long c) {
    if (p >= 0 && q == 0 && sh.delta_min() * p + ell >= c) return KoszulCase::i;
    if (p >= 0 && q == 1 && sh.delta_min() * p + ell >= 1 + c &&
        sh.delta_min() * (p + 1) + ell >= sh.d_max() + c)
        return KoszulCase::ii;
    if (p >= 0 && sh.delta_min() * (sh.r() + p) + ell >= sh.d_sum() + q + c &&
        sh.d_sum() + sh.e_max() - sh.n - 1 > ell && ell >= sh.d_sum() - sh.n - 1 &&
        (sh.r() + sh.s() <= sh.n + 2 || p <= sh.n - sh.r() - q / 2))
        return KoszulCase::iii;
    return KoszulCase::none;
}

struct KoszulReport {
    int p = 0;
    long ell = 0;
    int q = 0;
    long codim = 0;
    long dim_source = 0;  // B_p(l) ⊗ ∧^{q+1}V
    long dim_middle = 0;  // B_{p+1}(l) ⊗ ∧^q V
    long dim_target = 0;  // B_{p+2}(l) ⊗ ∧^{q-1}V
    long rank_in = 0, rank_out = 0;
    long middle_homology = 0;
    KoszulCase condition_case = KoszulCase::none;
    bool exact_claimed = false;
    bool holds = true;             // false only when a claimed case fails numerically
    bool boundary_ell_low = false; // l == d_sum - n - 1 under case (iii)
};

// Middle homology of B_p(l)⊗∧^{q+1}V -> B_{p+1}(l)⊗∧^q V -> B_{p+2}(l)⊗∧^{q-1}V.
// When one of the sufficient conditions applies the homology must vanish;
// outside them the homology is reported without any claim.
template <class F>
KoszulReport check_exactness(const JacobianRing<F>& ring, const SubspaceSpec<F>& v, int p,
                             long ell, int q) {
    const GradedShape& sh = ring.shape();
    if (sh.s() < 1) throw std::invalid_argument("koszul exactness requires s >= 1");
    KoszulReport rep;
    rep.p = p;
    rep.ell = ell;
    rep.q = q;
    rep.codim = v.codim;

    ExactMatrix<F> d_in = koszul_differential(ring, v, p, ell, q);
    rep.dim_middle = d_in.rows();
    rep.dim_source = d_in.cols();
    rep.rank_in = rank_of(d_in);
    if (q >= 1) {
        ExactMatrix<F> d_out = koszul_differential(ring, v, p + 1, ell, q - 1);
        rep.dim_target = d_out.rows();
        rep.rank_out = rank_of(d_out);
    } else {
        rep.dim_target = 0;
        rep.rank_out = 0;
    }
    rep.middle_homology = rep.dim_middle - rep.rank_in - rep.rank_out;
    rep.condition_case = koszul_case(sh, p, ell, q, v.codim);
    rep.exact_claimed = rep.condition_case != KoszulCase::none;
    rep.holds = !rep.exact_claimed || rep.middle_homology == 0;
    rep.boundary_ell_low =
        (rep.condition_case == KoszulCase::iii && ell == sh.d_sum() - sh.n - 1);
    return rep;
}

}  // namespace ocijac
