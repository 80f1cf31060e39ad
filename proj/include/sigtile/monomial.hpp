#pragma once

// Monomials x^a y^b and the fixed term order: total degree first, ties
// broken lexicographically with x > y, so 1 < y < x < y^2 < xy < x^2 < y^3 < ...

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sigtile {

struct Monomial {
    std::int64_t a = 0;  // exponent of x
    std::int64_t b = 0;  // exponent of y

    std::int64_t degree() const { return a + b; }
    bool is_one() const { return a == 0 && b == 0; }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    Monomial operator*(const Monomial& o) const { return {a + o.a, b + o.b}; }
};

enum class Ordering { Less, Equal, Greater };

inline Ordering cmp(const Monomial& m1, const Monomial& m2) {
    if (m1.degree() != m2.degree())
        return m1.degree() < m2.degree() ? Ordering::Less : Ordering::Greater;
    if (m1.a != m2.a)
        return m1.a < m2.a ? Ordering::Less : Ordering::Greater;
    return Ordering::Equal;
}

inline bool monomial_less(const Monomial& m1, const Monomial& m2) {
    return cmp(m1, m2) == Ordering::Less;
}

// Comparator for descending iteration: the leading monomial comes first.
struct DegLexGreater {
    bool operator()(const Monomial& m1, const Monomial& m2) const {
        return cmp(m1, m2) == Ordering::Greater;
    }
};

inline bool divides(const Monomial& d, const Monomial& m) {
    return d.a <= m.a && d.b <= m.b;
}

inline Monomial mono_div(const Monomial& m, const Monomial& d) {
    if (!divides(d, m)) throw std::domain_error("mono_div: not divisible");
    return {m.a - d.a, m.b - d.b};
}

inline Monomial mono_lcm(const Monomial& m1, const Monomial& m2) {
    return {m1.a > m2.a ? m1.a : m2.a, m1.b > m2.b ? m1.b : m2.b};
}

inline std::string to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string s;
    if (m.a > 0) {
        s += "x";
        if (m.a > 1) s += "^" + std::to_string(m.a);
    }
    if (m.b > 0) {
        if (!s.empty()) s += "*";
        s += "y";
        if (m.b > 1) s += "^" + std::to_string(m.b);
    }
    return s;
}

}  // namespace sigtile
