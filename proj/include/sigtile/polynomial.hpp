#pragma once

// Sparse exact bivariate polynomials over Z or Q, keyed by monomial and
// iterated in descending term order (leading term first).

#include "sigtile/monomial.hpp"
#include "sigtile/numbers.hpp"

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace sigtile {

template <class C>
struct Leading {
    Monomial ht;  // head term (monomial)
    C hc;         // head coefficient
};

template <class C>
class Polynomial {
  public:
    using coeff_type = C;
    using map_type = std::map<Monomial, C, DegLexGreater>;

    Polynomial() = default;
    explicit Polynomial(const C& c) {
        if (c != 0) terms_[Monomial{0, 0}] = c;
    }
    Polynomial(const C& c, const Monomial& m) {
        if (c != 0) terms_[m] = c;
    }

    static Polynomial variable_x() { return Polynomial(C(1), Monomial{1, 0}); }
    static Polynomial variable_y() { return Polynomial(C(1), Monomial{0, 1}); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const map_type& terms() const { return terms_; }

    const C* coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? nullptr : &it->second;
    }

    std::int64_t degree() const {
        if (is_zero()) throw std::domain_error("degree of zero polynomial");
        return terms_.begin()->first.degree();
    }

    Leading<C> leading() const {
        if (is_zero()) throw std::domain_error("leading term of zero polynomial");
        const auto& it = *terms_.begin();
        return {it.first, it.second};
    }

    void add_term(const Monomial& m, const C& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // *this += c * x^t.a y^t.b * p; the workhorse of every reduction step.
    void add_scaled_shifted(const C& c, const Monomial& t, const Polynomial& p) {
        if (c == 0) return;
        for (const auto& [m, pc] : p.terms_) add_term(t * m, c * pc);
    }

    Polynomial operator-() const {
        Polynomial r;
        for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial scale(const C& c) const {
        Polynomial r;
        if (c == 0) return r;
        for (const auto& [m, pc] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, c * pc);
        return r;
    }

    Polynomial mul_monomial(const Monomial& t) const {
        Polynomial r;
        for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), t * m, c);
        return r;
    }

    Polynomial derivative_y() const {
        Polynomial r;
        for (const auto& [m, c] : terms_) {
            if (m.b == 0) continue;
            r.add_term(Monomial{m.a, m.b - 1}, c * C(m.b));
        }
        return r;
    }

    C evaluate(const C& x0, const C& y0) const {
        C acc(0);
        for (const auto& [m, c] : terms_) acc += c * power(x0, m.a) * power(y0, m.b);
        return acc;
    }

    Polynomial swap_xy() const {
        Polynomial r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.b, m.a}, c);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) {
        return !(a == b);
    }

  private:
    static C power(const C& base, std::int64_t e) {
        C r(1), b = base;
        for (; e > 0; e >>= 1) {
            if (e & 1) r *= b;
            b *= b;
        }
        return r;
    }

    map_type terms_;
};

using PolyZ = Polynomial<Int>;
using PolyQ = Polynomial<Rat>;

inline PolyQ to_rational(const PolyZ& p) {
    PolyQ r;
    for (const auto& [m, c] : p.terms()) r.add_term(m, Rat(c));
    return r;
}

// --- text format -------------------------------------------------------
//
// Terms print as `c*x^a*y^b` with unit coefficients and unit exponents
// elided, joined by ` + ` / ` - `, leading terms first:
// `x^2*y + x*y - x - 1`, `2*x*y - 2`, `3/4*x + 1/2`. The parser accepts
// this format (whitespace-insensitively, `*` optional) and round-trips
// printer output bit-exactly.

namespace detail {

inline bool coeff_is_negative(const Int& c) { return c < 0; }
inline bool coeff_is_negative(const Rat& c) { return c < 0; }
inline Int coeff_abs(const Int& c) { return abs(c); }
inline Rat coeff_abs(const Rat& c) { return abs(c); }

}  // namespace detail

template <class C>
std::string to_string(const Polynomial<C>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        bool neg = detail::coeff_is_negative(c);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        C a = detail::coeff_abs(c);
        if (m.is_one()) {
            out += coeff_to_string(a);
        } else {
            if (a != 1) out += coeff_to_string(a) + "*";
            out += to_string(m);
        }
    }
    return out;
}

namespace detail {

struct PolyLexer {
    const std::string& s;
    std::size_t i = 0;

    explicit PolyLexer(const std::string& str) : s(str) {}

    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip_ws();
        return s[i++];
    }

    Int integer() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw std::invalid_argument("polynomial parse: digit expected at offset " + std::to_string(start));
        return Int(s.substr(start, i - start));
    }

    std::int64_t exponent() {
        Int e = integer();
        if (e < 0 || e > 1000000) throw std::invalid_argument("polynomial parse: exponent out of range");
        return static_cast<std::int64_t>(e);
    }
};

inline Int parse_coeff(PolyLexer& lx, const Int*) {
    Int n = lx.integer();
    if (lx.peek() == '/') throw std::invalid_argument("polynomial parse: rational coefficient in an integer polynomial");
    return n;
}

inline Rat parse_coeff(PolyLexer& lx, const Rat*) {
    Int n = lx.integer();
    if (lx.peek() == '/') {
        lx.take();
        Int d = lx.integer();
        if (d == 0) throw std::invalid_argument("polynomial parse: zero denominator");
        return Rat(n) / d;
    }
    return Rat(n);
}

}  // namespace detail

template <class C>
Polynomial<C> parse_polynomial(const std::string& text) {
    detail::PolyLexer lx(text);
    Polynomial<C> result;
    bool any = false;
    while (!lx.eof()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.take();
            if (c == '-') sign = -1;
        } else if (any) {
            throw std::invalid_argument("polynomial parse: expected '+' or '-' at offset " + std::to_string(lx.i));
        }
        // one term: optional coefficient, then variable powers
        C coeff(1);
        Monomial mono;
        bool saw_factor = false;
        for (;;) {
            char f = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(f))) {
                coeff *= detail::parse_coeff(lx, static_cast<const C*>(nullptr));
                saw_factor = true;
            } else if (f == 'x' || f == 'y') {
                lx.take();
                std::int64_t e = 1;
                if (lx.peek() == '^') {
                    lx.take();
                    e = lx.exponent();
                }
                (f == 'x' ? mono.a : mono.b) += e;
                saw_factor = true;
            } else if (f == '*') {
                lx.take();
                continue;
            } else {
                break;
            }
        }
        if (!saw_factor)
            throw std::invalid_argument("polynomial parse: empty term at offset " + std::to_string(lx.i));
        if (sign < 0) coeff = -coeff;
        result.add_term(mono, coeff);
        any = true;
    }
    if (!any) throw std::invalid_argument("polynomial parse: empty input");
    return result;
}

}  // namespace sigtile
