#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "util.hpp"

namespace ocijac {

// Exponent vector in X0..Xn (length nvars).
struct Monomial {
    std::vector<int> exponents;

    long degree() const {
        long d = 0;
        for (int e : exponents) d += e;
        return d;
    }
    bool operator==(const Monomial& o) const { return exponents == o.exponents; }
};

// Graded reverse-lexicographic order with X0 > X1 > ... > Xn: higher total
// degree wins; on ties the monomial whose trailing exponent difference is
// negative is the larger one.
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
    long da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (size_t i = a.exponents.size(); i-- > 0;) {
        int diff = a.exponents[i] - b.exponents[i];
        if (diff != 0) return diff < 0;
    }
    return false;
}

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (size_t i = 0; i < m.exponents.size(); ++i) m.exponents[i] += b.exponents[i];
    return m;
}

// All monomials of total degree d in nvars variables, listed in descending
// grevlex order (X0^d first). Empty for d < 0.
inline std::vector<Monomial> monomials_of_degree(int nvars, long d) {
    std::vector<Monomial> out;
    if (d < 0 || nvars <= 0) return out;
    Monomial cur;
    cur.exponents.assign((size_t)nvars, 0);
    // enumerate recursively, then sort into the canonical order
    std::vector<int> stack;
    auto rec = [&](auto&& self, int var, long rem) -> void {
        if (var == nvars - 1) {
            cur.exponents[(size_t)var] = (int)rem;
            out.push_back(cur);
            return;
        }
        for (long e = rem; e >= 0; --e) {
            cur.exponents[(size_t)var] = (int)e;
            self(self, var + 1, rem - e);
        }
        cur.exponents[(size_t)var] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), grevlex_greater);
    return out;
}

// Sparse multivariate polynomial over an exact field. Terms are kept in
// descending grevlex order with no zero coefficients.
template <class F>
class Polynomial {
public:
    using Element = typename F::Element;
    using TermMap = std::map<Monomial, Element, GrevlexGreater>;

    Polynomial(F field, int nvars) : field_(std::move(field)), nvars_(nvars) {
        if (nvars <= 0) throw std::invalid_argument("polynomial needs at least one variable");
    }

    const F& field() const { return field_; }
    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Element& c) {
        if ((int)m.exponents.size() != nvars_) throw std::invalid_argument("monomial arity mismatch");
        if (field_.is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = field_.add(it->second, c);
            if (field_.is_zero(it->second)) terms_.erase(it);
        }
    }

    // Degree shared by all terms, if there is one. Empty for the zero
    // polynomial and for inhomogeneous ones.
    std::optional<long> homogeneous_degree() const {
        if (terms_.empty()) return std::nullopt;
        long d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return std::nullopt;
        return d;
    }

    Polynomial plus(const Polynomial& o) const {
        check_compatible(o);
        Polynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    Polynomial scaled(const Element& s) const {
        Polynomial r(field_, nvars_);
        if (field_.is_zero(s)) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, field_.mul(c, s));
        return r;
    }

    Polynomial times(const Polynomial& o) const {
        check_compatible(o);
        Polynomial r(field_, nvars_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_)
                r.add_term(monomial_product(ma, mb), field_.mul(ca, cb));
        return r;
    }

    Polynomial partial_derivative(int var) const {
        if (var < 0 || var >= nvars_) throw std::invalid_argument("derivative index out of range");
        Polynomial r(field_, nvars_);
        for (const auto& [m, c] : terms_) {
            int e = m.exponents[(size_t)var];
            if (e == 0) continue;
            Monomial dm = m;
            dm.exponents[(size_t)var] = e - 1;
            r.add_term(dm, field_.mul(c, field_.from_long(e)));
        }
        return r;
    }

    bool equals(const Polynomial& o) const {
        if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
        auto it = terms_.begin(), jt = o.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt)
            if (!(it->first == jt->first) || !field_.eq(it->second, jt->second)) return false;
        return true;
    }

    // Canonical rendering: descending grevlex term order, "+"/"-" separators,
    // coefficient 1 omitted, exponent 1 printed bare. Integral coefficients
    // round-trip through parse().
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = field_.to_string(c);
            bool negative = !cs.empty() && cs[0] == '-';
            if (negative) cs = cs.substr(1);
            if (first) {
                if (negative) out += "-";
                first = false;
            } else {
                out += negative ? " - " : " + ";
            }
            std::string mono = render_monomial(m);
            if (mono.empty()) {
                out += cs;
            } else if (cs == "1") {
                out += mono;
            } else {
                out += cs + "*" + mono;
            }
        }
        return out;
    }

    // Parses the grammar
    //   poly   := term (("+" | "-") term)*
    //   term   := coeff | [coeff "*"] factor ("*" factor)*
    //   factor := "X" nat ["^" nat]
    //   coeff  := nat
    // with whitespace ignored between tokens and an optional leading "-".
    static Polynomial parse(const std::string& text, int nvars, F field) {
        Parser p{text, 0, nvars, field};
        Polynomial out(field, nvars);
        p.skip_ws();
        bool negative = false;
        if (p.peek() == '-') {
            negative = true;
            p.advance();
        } else if (p.peek() == '+') {
            throw ParseError("unexpected '+'", p.pos);
        }
        while (true) {
            auto [mono, coeff] = p.parse_term();
            out.add_term(mono, negative ? field.neg(coeff) : coeff);
            p.skip_ws();
            if (p.at_end()) break;
            char op = p.peek();
            if (op == '+') {
                negative = false;
            } else if (op == '-') {
                negative = true;
            } else {
                throw ParseError(std::string("expected '+' or '-', found '") + op + "'", p.pos);
            }
            p.advance();
        }
        return out;
    }

private:
    void check_compatible(const Polynomial& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
        if (!(field_.spec() == o.field_.spec())) throw std::invalid_argument("field mismatch");
    }

    static std::string render_monomial(const Monomial& m) {
        std::string out;
        for (size_t i = 0; i < m.exponents.size(); ++i) {
            int e = m.exponents[i];
            if (e == 0) continue;
            if (!out.empty()) out += "*";
            out += "X" + std::to_string(i);
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out;
    }

    struct Parser {
        const std::string& s;
        size_t pos;
        int nvars;
        F field;

        bool at_end() {
            skip_ws();
            return pos >= s.size();
        }
        char peek() { return pos < s.size() ? s[pos] : '\0'; }
        void advance() { ++pos; }
        void skip_ws() {
            while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
        }

        mpz_class parse_nat(const char* what) {
            skip_ws();
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            if (pos == start) throw ParseError(std::string("expected ") + what, pos);
            if (pos < s.size() && s[pos] == '.')
                throw ParseError(std::string(what) + " is not an integer", pos);
            return mpz_class(s.substr(start, pos - start));
        }

        int parse_var_index() {
            skip_ws();
            if (peek() != 'X') throw ParseError("expected variable 'X<index>'", pos);
            advance();
            if (pos >= s.size() || !std::isdigit((unsigned char)s[pos]))
                throw ParseError("expected variable index after 'X'", pos);
            mpz_class idx = parse_nat("variable index");
            if (idx >= nvars)
                throw ParseError("variable index " + idx.get_str() + " out of range (nvars=" +
                                     std::to_string(nvars) + ")",
                                 pos);
            return (int)idx.get_ui();
        }

        std::pair<Monomial, typename F::Element> parse_term() {
            skip_ws();
            Monomial mono;
            mono.exponents.assign((size_t)nvars, 0);
            typename F::Element coeff = field.one();
            bool saw_factor = false;

            if (std::isdigit((unsigned char)peek())) {
                coeff = field.from_mpz(parse_nat("coefficient"));
                skip_ws();
                if (peek() == '*') {
                    advance();
                } else {
                    return {mono, coeff};  // bare coefficient term
                }
            }
            while (true) {
                int var = parse_var_index();
                long exp = 1;
                skip_ws();
                if (peek() == '^') {
                    advance();
                    mpz_class e = parse_nat("exponent");
                    if (e > 1000000) throw ParseError("exponent too large", pos);
                    exp = e.get_si();
                }
                mono.exponents[(size_t)var] += (int)exp;
                saw_factor = true;
                skip_ws();
                if (peek() == '*') {
                    advance();
                    continue;
                }
                break;
            }
            if (!saw_factor) throw ParseError("expected term", pos);
            return {mono, coeff};
        }
    };

    F field_;
    int nvars_;
    TermMap terms_;
};

}  // namespace ocijac
