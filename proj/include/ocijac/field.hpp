#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "util.hpp"

namespace ocijac {

// Deterministic Miller-Rabin, exact for all 64-bit inputs with this witness
// set (Sorenson-Webster bound exceeds 2^64).
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
        return (std::uint64_t)((unsigned __int128)a * b % n);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t acc = 1;
        while (e) {
            if (e & 1) acc = mulmod(acc, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return acc;
    };
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a % n, d);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Coefficient-field selector: exact rationals, or a prime field used as a
// fast computational proxy for characteristic zero.
struct FieldSpec {
    enum class Kind { rationals, prime_field };
    Kind kind = Kind::rationals;
    std::uint64_t prime = 0;  // meaningful iff kind == prime_field

    static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }

    static FieldSpec prime_field(std::uint64_t p) {
        if (p >= (1ull << 62)) throw std::invalid_argument("prime must be < 2^62");
        if (!is_prime_u64(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
        return FieldSpec{Kind::prime_field, p};
    }

    // Defaults used throughout for modular runs and cross-checks.
    static constexpr std::uint64_t kDefaultPrime = 1048583;
    static constexpr std::uint64_t kSecondPrime = 2097169;

    std::string name() const {
        return kind == Kind::rationals ? "q" : "fp:" + std::to_string(prime);
    }
    bool operator==(const FieldSpec& o) const { return kind == o.kind && prime == o.prime; }
};

// Field types expose: Element, zero/one, from_long/from_mpz, add/sub/mul/neg,
// inv/div (nonzero divisor), is_zero/eq, to_string, spec(). Elements are
// value types with exact arithmetic.

class RationalField {
public:
    using Element = mpq_class;

    FieldSpec spec() const { return FieldSpec::rationals(); }

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_long(long v) const { return Element(v); }
    Element from_mpz(const mpz_class& v) const { return Element(v); }

    Element add(const Element& a, const Element& b) const { return Element(a + b); }
    Element sub(const Element& a, const Element& b) const { return Element(a - b); }
    Element mul(const Element& a, const Element& b) const { return Element(a * b); }
    Element neg(const Element& a) const { return Element(-a); }
    Element inv(const Element& a) const {
        if (a == 0) throw std::domain_error("division by zero");
        return Element(1 / a);
    }
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

    bool is_zero(const Element& a) const { return a == 0; }
    bool eq(const Element& a, const Element& b) const { return a == b; }
    std::string to_string(const Element& a) const { return a.get_str(); }
};

class PrimeField {
public:
    using Element = std::uint64_t;  // canonical representative in [0, p)

    PrimeField() : p_(FieldSpec::kDefaultPrime) {}
    explicit PrimeField(std::uint64_t p) : p_(FieldSpec::prime_field(p).prime) {}

    FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::prime_field, p_}; }
    std::uint64_t modulus() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }

    Element from_long(long v) const {
        long long r = (long long)(v % (long long)p_);
        if (r < 0) r += (long long)p_;
        return (Element)r;
    }
    Element from_mpz(const mpz_class& v) const {
        mpz_class m = v % mpz_class(std::to_string(p_));
        if (m < 0) m += mpz_class(std::to_string(p_));
        return (Element)m.get_ui();
    }

    Element add(Element a, Element b) const {
        Element s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element mul(Element a, Element b) const {
        return (Element)((unsigned __int128)a * b % p_);
    }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element inv(Element a) const {
        if (a == 0) throw std::domain_error("division by zero");
        // Fermat: a^(p-2)
        Element acc = 1, base = a;
        std::uint64_t e = p_ - 2;
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }
    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    bool is_zero(Element a) const { return a == 0; }
    bool eq(Element a, Element b) const { return a == b; }
    std::string to_string(Element a) const { return std::to_string(a); }

private:
    std::uint64_t p_;
};

}  // namespace ocijac
