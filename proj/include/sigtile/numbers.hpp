#pragma once

// Coefficient domains: arbitrary-precision integers and rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace sigtile {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Euclidean division with remainder in [0, |m|): a = q*m + r.
// cpp_int's operator/ truncates toward zero, which is the wrong convention
// for E-reduction, so the quotient is adjusted here.
inline void euclid_divmod(const Int& a, const Int& m, Int& q, Int& r) {
    if (m == 0) throw std::domain_error("euclid_divmod: zero modulus");
    q = a / m;
    r = a - q * m;
    if (r < 0) {
        if (m > 0) { q -= 1; r += m; }
        else       { q += 1; r -= m; }
    }
}

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

// g = gcd(a, b) = u*a + v*b, with g >= 0.
inline void ext_gcd(const Int& a, const Int& b, Int& g, Int& u, Int& v) {
    Int old_r = a, r = b;
    Int old_u = 1, cu = 0;
    Int old_v = 0, cv = 1;
    while (r != 0) {
        Int quot = old_r / r;
        Int t;
        t = old_r - quot * r; old_r = r; r = t;
        t = old_u - quot * cu; old_u = cu; cu = t;
        t = old_v - quot * cv; old_v = cv; cv = t;
    }
    g = old_r; u = old_u; v = old_v;
    if (g < 0) { g = -g; u = -u; v = -v; }
}

// Traits that let the polynomial machinery treat Z and Q uniformly.

template <class C> struct coeff_traits;

template <> struct coeff_traits<Int> {
    static constexpr bool is_field = false;
    static const char* name() { return "Z"; }
    // Does a divide b exactly?
    static bool divides(const Int& a, const Int& b) { return a != 0 && b % a == 0; }
    static Int exact_div(const Int& b, const Int& a) { return b / a; }
    // lcm of head coefficients as used by S-polynomials.
    static Int head_lcm(const Int& a, const Int& b) { return lcm(a, b); }
};

template <> struct coeff_traits<Rat> {
    static constexpr bool is_field = true;
    static const char* name() { return "Q"; }
    static bool divides(const Rat& a, const Rat&) { return a != 0; }
    static Rat exact_div(const Rat& b, const Rat& a) { return b / a; }
    static Rat head_lcm(const Rat&, const Rat&) { return Rat(1); }
};

inline std::string coeff_to_string(const Int& c) { return c.str(); }
inline std::string coeff_to_string(const Rat& c) {
    if (denominator(c) == 1) return numerator(c).str();
    return numerator(c).str() + "/" + denominator(c).str();
}

inline Rat to_rat(const Int& c) { return Rat(c); }

}  // namespace sigtile
