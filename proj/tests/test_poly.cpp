#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace ocijac;
using P = Polynomial<RationalField>;

namespace {
RationalField q;
P parse(const std::string& text, int nvars = 3) { return P::parse(text, nvars, q); }
}  // namespace

TEST_CASE("parser: spec grammar examples") {
    auto fermat = P::parse("X0^4 + X1^4 + X2^4 + X3^4", 4, q);
    REQUIRE(fermat.term_count() == 4);
    REQUIRE(fermat.homogeneous_degree() == 4);

    auto p = parse("2*X0*X1 - X2^2");
    REQUIRE(p.term_count() == 2);
    REQUIRE(p.homogeneous_degree() == 2);

    auto mixed = parse("X0 + X1^2");
    REQUIRE(mixed.term_count() == 2);
    REQUIRE(!mixed.homogeneous_degree().has_value());
}

TEST_CASE("parser: like terms combine and zero terms drop") {
    REQUIRE(parse("X0 + X0").term_count() == 1);
    REQUIRE(parse("X0 - X0").is_zero());
    REQUIRE(parse("0").is_zero());
    REQUIRE(parse("X0*X0").homogeneous_degree() == 2);
    REQUIRE(parse("3").term_count() == 1);
    REQUIRE(parse("-X0 + X1").term_count() == 2);
}

TEST_CASE("parser: errors carry positions and reasons") {
    REQUIRE_THROWS_AS(parse("X0 + + X1"), ParseError);
    REQUIRE_THROWS_AS(parse("X5", 3), ParseError);       // variable index >= nvars
    REQUIRE_THROWS_AS(parse("2.5*X0"), ParseError);      // non-integer coefficient
    REQUIRE_THROWS_AS(parse("X0 *"), ParseError);
    REQUIRE_THROWS_AS(parse(""), ParseError);
    try {
        parse("X0 + $");
    } catch (const ParseError& e) {
        REQUIRE(e.position() == 5);
    }
    try {
        parse("2.5*X0");
    } catch (const ParseError& e) {
        REQUIRE(std::string(e.what()).find("not an integer") != std::string::npos);
    }
}

TEST_CASE("partial derivatives") {
    auto p = parse("X0^4");
    auto dp = p.partial_derivative(0);
    REQUIRE(dp.equals(parse("4*X0^3")));
    REQUIRE(parse("X0^3").partial_derivative(1).is_zero());
    REQUIRE_THROWS_AS(p.partial_derivative(3), std::invalid_argument);
}

TEST_CASE("Euler identity: sum of X_k d/dX_k scales by the degree") {
    DetRng rng(0x22cc01);
    for (int trial = 0; trial < 20; ++trial) {
        int nvars = (int)rng.int_in(2, 4);
        long deg = rng.int_in(1, 5);
        auto text = testsupport::random_dense_poly_text(rng, nvars, deg);
        auto p = P::parse(text, nvars, q);
        P total(q, nvars);
        for (int k = 0; k < nvars; ++k) {
            P xk(q, nvars);
            Monomial unit;
            unit.exponents.assign((size_t)nvars, 0);
            unit.exponents[(size_t)k] = 1;
            xk.add_term(unit, q.one());
            total = total.plus(xk.times(p.partial_derivative(k)));
        }
        REQUIRE(total.equals(p.scaled(q.from_long(deg))));
    }
}

TEST_CASE("multiplication: identities and degree additivity") {
    auto a = parse("X0 + X1");
    auto b = parse("X0 - X1");
    REQUIRE(a.times(parse("1")).equals(a));
    REQUIRE(a.times(b).equals(parse("X0^2 - X1^2")));

    DetRng rng(0x22cc02);
    for (int trial = 0; trial < 100; ++trial) {
        int nvars = (int)rng.int_in(2, 4);
        long da = rng.int_in(1, 4), db = rng.int_in(1, 4);
        auto pa = P::parse(testsupport::random_dense_poly_text(rng, nvars, da), nvars, q);
        auto pb = P::parse(testsupport::random_dense_poly_text(rng, nvars, db), nvars, q);
        REQUIRE(pa.times(pb).homogeneous_degree() == da + db);
    }
}

TEST_CASE("multiplication is commutative and associative") {
    DetRng rng(0x22cc03);
    for (int trial = 0; trial < 10; ++trial) {
        int nvars = 3;
        auto pa = P::parse(testsupport::random_dense_poly_text(rng, nvars, rng.int_in(1, 3)), nvars, q);
        auto pb = P::parse(testsupport::random_dense_poly_text(rng, nvars, rng.int_in(1, 3)), nvars, q);
        auto pc = P::parse(testsupport::random_dense_poly_text(rng, nvars, rng.int_in(1, 3)), nvars, q);
        REQUIRE(pa.times(pb).equals(pb.times(pa)));
        REQUIRE(pa.times(pb).times(pc).equals(pa.times(pb.times(pc))));
    }
}

TEST_CASE("monomials_of_degree counts and order") {
    REQUIRE(monomials_of_degree(3, 2).size() == 6);
    REQUIRE(monomials_of_degree(4, 5).size() == 56);  // C(8,5) by stars and bars
    REQUIRE(monomials_of_degree(2, 0).size() == 1);
    REQUIRE(monomials_of_degree(3, -1).empty());

    // counts match the closed form across the advertised window, and the
    // listing is strictly decreasing in the term order
    for (int v = 2; v <= 6; ++v) {
        for (long d = 0; d <= 12; ++d) {
            auto list = monomials_of_degree(v, d);
            REQUIRE((long long)list.size() == binomial(v - 1 + d, d));
            for (size_t i = 1; i < list.size(); ++i)
                REQUIRE(grevlex_greater(list[i - 1], list[i]));
        }
    }

    // classic grevlex feature: X1^2 precedes X0*X2
    auto deg2 = monomials_of_degree(3, 2);
    std::vector<std::vector<int>> expect = {{2, 0, 0}, {1, 1, 0}, {0, 2, 0},
                                            {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
    for (size_t i = 0; i < expect.size(); ++i) REQUIRE(deg2[i].exponents == expect[i]);
}

TEST_CASE("parse -> print -> parse is a fixpoint") {
    DetRng rng(0x22cc04);
    for (int trial = 0; trial < 30; ++trial) {
        int nvars = (int)rng.int_in(2, 5);
        auto text = testsupport::random_dense_poly_text(rng, nvars, rng.int_in(0, 4));
        auto p = P::parse(text, nvars, q);
        auto printed = p.to_string();
        auto reparsed = P::parse(printed, nvars, q);
        REQUIRE(reparsed.equals(p));
        REQUIRE(reparsed.to_string() == printed);
    }
    // prime-field coefficients normalize into [1, p-1] and round-trip too
    PrimeField fp = testsupport::default_prime_field();
    auto p = Polynomial<PrimeField>::parse("1048584*X0 - X1", 2, fp);
    REQUIRE(p.to_string() == "X0 + 1048582*X1");
    REQUIRE(Polynomial<PrimeField>::parse(p.to_string(), 2, fp).equals(p));
}
