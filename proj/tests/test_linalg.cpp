#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace ocijac;
using testsupport::default_prime_field;
using testsupport::random_matrix;
using testsupport::rank_by_minors;

TEST_CASE("echelon: identity and zero matrices") {
    RationalField q;
    ExactMatrix<RationalField> id(q, 2, 2);
    id.set(0, 0, q.one());
    id.set(1, 1, q.one());
    auto ech = echelon(id);
    REQUIRE(ech.rank == 2);
    REQUIRE(ech.pivot_cols == std::vector<long>{0, 1});

    ExactMatrix<RationalField> zero(q, 3, 5);
    auto ez = echelon(zero);
    REQUIRE(ez.rank == 0);
    REQUIRE(ez.pivot_cols.empty());
}

TEST_CASE("echelon rank matches the minor-rank oracle on small random matrices") {
    PrimeField fp = default_prime_field();
    RationalField q;
    DetRng rng(0x11aabb01);
    for (int trial = 0; trial < 40; ++trial) {
        long rows = rng.int_in(1, 5), cols = rng.int_in(1, 5);
        auto mp = random_matrix(fp, rng, rows, cols, -4, 4);
        REQUIRE(rank_of(mp) == rank_by_minors(mp));
        auto mq = random_matrix(q, rng, rows, cols, -4, 4);
        REQUIRE(rank_of(mq) == rank_by_minors(mq));
    }
}

TEST_CASE("planted-rank 50x50 product has rank 30 and a 20-dimensional kernel") {
    PrimeField fp = default_prime_field();
    DetRng rng(0x11aabb02);
    // full-rank 50x30 and 30x50 factors (random draws; rank checked below)
    ExactMatrix<PrimeField> a = random_matrix(fp, rng, 50, 30, -20, 20);
    ExactMatrix<PrimeField> b = random_matrix(fp, rng, 30, 50, -20, 20);
    REQUIRE(rank_of(a) == 30);
    REQUIRE(rank_of(b) == 30);
    ExactMatrix<PrimeField> m = a.multiply(b);
    REQUIRE(rank_of(m) == 30);

    auto kernel = kernel_basis(m);
    REQUIRE(kernel.size() == 20);
    for (const auto& v : kernel) {
        auto image = m.apply(v);
        for (const auto& entry : image) REQUIRE(fp.is_zero(entry));
    }
}

TEST_CASE("kernel_basis on tiny matrices") {
    RationalField q;
    ExactMatrix<RationalField> id(q, 3, 3);
    for (long i = 0; i < 3; ++i) id.set(i, i, q.one());
    REQUIRE(kernel_basis(id).empty());

    ExactMatrix<RationalField> row(q, 1, 2);
    row.set(0, 0, q.one());
    row.set(0, 1, q.one());
    auto k = kernel_basis(row);
    REQUIRE(k.size() == 1);
    // proportional to (1, -1)
    REQUIRE(k[0][0] == -k[0][1]);
    REQUIRE(k[0][0] != 0);
}

TEST_CASE("kernel vectors are annihilated exactly over both fields") {
    DetRng rng(0x11aabb03);
    PrimeField fp = default_prime_field();
    RationalField q;
    for (int trial = 0; trial < 10; ++trial) {
        long rows = rng.int_in(2, 7), cols = rng.int_in(2, 7);
        auto mq = random_matrix(q, rng, rows, cols, -6, 6);
        for (const auto& v : kernel_basis(mq)) {
            for (const auto& entry : mq.apply(v)) REQUIRE(entry == 0);
        }
        auto mp = random_matrix(fp, rng, rows, cols, -6, 6);
        for (const auto& v : kernel_basis(mp)) {
            for (const auto& entry : mp.apply(v)) REQUIRE(entry == 0);
        }
    }
}

TEST_CASE("reduce_against: membership, residue and recovered coefficients") {
    RationalField q;
    SECTION("target equal to the first span vector") {
        std::vector<std::vector<mpq_class>> span = {{1, 2, 3}, {0, 1, 1}};
        auto res = reduce_against(q, span, {1, 2, 3});
        REQUIRE(res.coefficients.has_value());
        REQUIRE((*res.coefficients)[0] == 1);
        REQUIRE((*res.coefficients)[1] == 0);
        for (const auto& v : res.residue) REQUIRE(v == 0);
    }
    SECTION("target outside the span has a nonzero residue") {
        std::vector<std::vector<mpq_class>> span = {{1, 0}};
        auto res = reduce_against(q, span, {0, 1});
        REQUIRE(!res.coefficients.has_value());
        REQUIRE(res.residue[1] != 0);
    }
    SECTION("construct-then-solve round trip through 10 random vectors") {
        DetRng rng(0x11aabb04);
        const long dim = 14, count = 10;
        std::vector<std::vector<mpq_class>> span;
        RationalField f;
        for (long i = 0; i < count; ++i) {
            std::vector<mpq_class> v((size_t)dim);
            for (auto& x : v) x = f.from_long(rng.int_in(-9, 9));
            span.push_back(std::move(v));
        }
        std::vector<mpq_class> combo((size_t)count);
        std::vector<mpq_class> target((size_t)dim, 0);
        for (long i = 0; i < count; ++i) {
            combo[(size_t)i] = f.from_long(rng.int_in(-5, 5));
            for (long j = 0; j < dim; ++j)
                target[(size_t)j] += combo[(size_t)i] * span[(size_t)i][(size_t)j];
        }
        auto res = reduce_against(f, span, target);
        REQUIRE(res.coefficients.has_value());
        // recovered coefficients reproduce the target (maybe along a different
        // combination if the span is redundant)
        std::vector<mpq_class> rebuilt((size_t)dim, 0);
        for (long i = 0; i < count; ++i)
            for (long j = 0; j < dim; ++j)
                rebuilt[(size_t)j] += (*res.coefficients)[(size_t)i] * span[(size_t)i][(size_t)j];
        REQUIRE(rebuilt == target);
    }
    SECTION("dimension mismatch is an error") {
        std::vector<std::vector<mpq_class>> span = {{1, 0}};
        REQUIRE_THROWS_AS(reduce_against(q, span, {1, 2, 3}), std::invalid_argument);
    }
}

TEST_CASE("residue is supported on non-pivot coordinates only") {
    PrimeField fp = default_prime_field();
    DetRng rng(0x11aabb05);
    for (int trial = 0; trial < 10; ++trial) {
        long dim = rng.int_in(3, 8);
        std::vector<std::vector<std::uint64_t>> span;
        for (int i = 0; i < 3; ++i) {
            std::vector<std::uint64_t> v((size_t)dim);
            for (auto& x : v) x = fp.from_long(rng.int_in(-9, 9));
            span.push_back(std::move(v));
        }
        std::vector<std::uint64_t> target((size_t)dim);
        for (auto& x : target) x = fp.from_long(rng.int_in(-9, 9));
        auto res = reduce_against(fp, span, target);
        auto ech = echelon(ExactMatrix<PrimeField>::from_rows(fp, dim, span));
        for (long pc : ech.pivot_cols) REQUIRE(fp.is_zero(res.residue[(size_t)pc]));
    }
}

TEST_CASE("rank equals rank of the transpose") {
    DetRng rng(0x11aabb06);
    PrimeField fp = default_prime_field();
    RationalField q;
    for (int trial = 0; trial < 15; ++trial) {
        long rows = rng.int_in(1, 10), cols = rng.int_in(1, 10);
        auto mp = random_matrix(fp, rng, rows, cols, -8, 8);
        REQUIRE(rank_of(mp) == rank_of(mp.transposed()));
        auto mq = random_matrix(q, rng, rows, cols, -8, 8);
        REQUIRE(rank_of(mq) == rank_of(mq.transposed()));
    }
}

TEST_CASE("echelon is deterministic across repeated runs") {
    DetRng rng(0x11aabb07);
    PrimeField fp = default_prime_field();
    auto m = random_matrix(fp, rng, 12, 9, -9, 9);
    auto e1 = echelon(m);
    auto e2 = echelon(m);
    REQUIRE(e1.pivot_cols == e2.pivot_cols);
    REQUIRE(e1.reduced_rows == e2.reduced_rows);
}

TEST_CASE("rank over F_p is at most rank over Q, and default primes agree on integer matrices") {
    DetRng rng(0x11aabb08);
    PrimeField p1 = default_prime_field();
    PrimeField p2 = testsupport::second_prime_field();
    RationalField q;
    for (int trial = 0; trial < 12; ++trial) {
        long rows = rng.int_in(2, 10), cols = rng.int_in(2, 10);
        // one integer matrix, three embeddings
        std::vector<std::vector<long>> ints((size_t)rows, std::vector<long>((size_t)cols));
        for (auto& row : ints)
            for (auto& v : row) v = rng.int_in(-30, 30);
        ExactMatrix<RationalField> mq(q, rows, cols);
        ExactMatrix<PrimeField> m1(p1, rows, cols), m2(p2, rows, cols);
        for (long r = 0; r < rows; ++r)
            for (long c = 0; c < cols; ++c) {
                mq.set(r, c, q.from_long(ints[(size_t)r][(size_t)c]));
                m1.set(r, c, p1.from_long(ints[(size_t)r][(size_t)c]));
                m2.set(r, c, p2.from_long(ints[(size_t)r][(size_t)c]));
            }
        long rq = rank_of(mq);
        REQUIRE(rank_of(m1) <= rq);
        REQUIRE(rank_of(m1) == rank_of(m2));
    }
}

TEST_CASE("fraction-free transform reproduces the reduced rows from the input") {
    DetRng rng(0x11aabb09);
    RationalField q;
    for (int trial = 0; trial < 8; ++trial) {
        long rows = rng.int_in(2, 7), cols = rng.int_in(2, 7);
        ExactMatrix<RationalField> m(q, rows, cols);
        for (long r = 0; r < rows; ++r)
            for (long c = 0; c < cols; ++c) {
                // include honest fractions to exercise the prescaling
                mpq_class v((long)rng.int_in(-6, 6), (long)rng.int_in(1, 4));
                v.canonicalize();
                m.set(r, c, v);
            }
        auto ech = echelon(m, /*want_transform=*/true);
        REQUIRE(ech.has_transform);
        for (size_t i = 0; i < ech.reduced_rows.size(); ++i) {
            std::vector<mpq_class> rebuilt((size_t)cols, 0);
            for (const auto& [j, t] : ech.transform[i])
                for (long c = 0; c < cols; ++c) rebuilt[(size_t)c] += t * m.at(j, c);
            std::vector<mpq_class> expected((size_t)cols, 0);
            for (const auto& [c, v] : ech.reduced_rows[i]) expected[(size_t)c] = v;
            REQUIRE(rebuilt == expected);
        }
    }
}

TEST_CASE("dense fill-in fallback produces the same echelon as sparse inputs") {
    // wide matrix whose elimination densifies rows: compare against the
    // minor-rank oracle and transpose rank
    DetRng rng(0x11aabb0a);
    PrimeField fp = default_prime_field();
    ExactMatrix<PrimeField> m(fp, 6, 6);
    for (long r = 0; r < 6; ++r)
        for (long c = 0; c < 6; ++c)
            if (rng.below(3) != 0) m.set(r, c, fp.from_long(rng.int_in(1, 9)));
    REQUIRE(rank_of(m) == rank_by_minors(m));
}

TEST_CASE("FieldSpec validates primes") {
    REQUIRE_THROWS_AS(FieldSpec::prime_field(10), std::invalid_argument);
    REQUIRE_THROWS_AS(FieldSpec::prime_field(1), std::invalid_argument);
    REQUIRE_NOTHROW(FieldSpec::prime_field(FieldSpec::kDefaultPrime));
    REQUIRE_NOTHROW(FieldSpec::prime_field(FieldSpec::kSecondPrime));
    REQUIRE(is_prime_u64(2));
    REQUIRE(is_prime_u64((1ull << 61) - 1));  // Mersenne prime
    REQUIRE(!is_prime_u64((1ull << 60)));
}
