#pragma once

// Rectangle arithmetic for n = 2k >= 8: the row-collapsed polynomial
// P_{p,q}(y), divisibility by Q(y) = 1 + y + ... + y^(n-1), the quotient
// sign-sum S(-1) = 2 P'(-1) / n, and B-tile counting by parity case.

#include "sigtile/tiles.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace sigtile {

enum class ParityCase { A, B, C, None };  // A: p even q odd, B: p odd q even, C: both even

inline const char* to_string(ParityCase pc) {
    switch (pc) {
        case ParityCase::A: return "A";
        case ParityCase::B: return "B";
        case ParityCase::C: return "C";
        default: return "none";
    }
}

struct RectReport {
    std::int64_t p = 0, q = 0;  // normalized so p <= q
    int n = 0;
    PolyZ remainder;            // P_{p,q} mod Q, univariate in y
    bool divisible = false;
    Int deriv_value;            // P'_{p,q}(-1), always defined
    ParityCase parity_case = ParityCase::None;
    std::optional<Int> s_minus;       // quotient evaluated at -1; only when divisible
    std::optional<Int> b_count;       // extra B tiles; only when divisible
    std::optional<bool> satisfiable;  // b_count divisible by k-2; only when divisible
};

// Coefficients ramp 1..p, plateau at p, ramp back down; degree p + q - 2.
inline PolyZ build_P(std::int64_t p, std::int64_t q) {
    if (p < 1 || q < 1) throw std::invalid_argument("build_P: sides must be positive");
    PolyZ out;
    for (std::int64_t e = 0; e <= p + q - 2; ++e) {
        std::int64_t c = std::min({e + 1, p, q, p + q - 1 - e});
        out.add_term(Monomial{0, e}, Int(c));
    }
    return out;
}

inline PolyZ build_Q(int n) {
    detail::require_even_n(n, 2);
    return geom_sum_y(n);
}

// Long division in y over Z; the divisor must be univariate in y with head
// coefficient dividing exactly at every step (it is monic in all uses here).
inline std::pair<PolyZ, PolyZ> divide_univariate_y(const PolyZ& num, const PolyZ& den) {
    if (den.is_zero()) throw std::domain_error("divide_univariate_y: zero divisor");
    for (const auto& [m, c] : den.terms())
        if (m.a != 0) throw std::domain_error("divide_univariate_y: divisor not univariate in y");
    const auto lead = den.leading();
    PolyZ quotient, rem = num;
    while (!rem.is_zero()) {
        const auto lr = rem.leading();
        if (lr.ht.a != 0) throw std::domain_error("divide_univariate_y: dividend not univariate in y");
        if (lr.ht.b < lead.ht.b) break;
        if (lr.hc % lead.hc != 0)
            throw std::domain_error("divide_univariate_y: inexact coefficient division");
        const Int qc = lr.hc / lead.hc;
        const Monomial shift{0, lr.ht.b - lead.ht.b};
        quotient.add_term(shift, qc);
        rem.add_scaled_shifted(-qc, shift, den);
    }
    return {std::move(quotient), std::move(rem)};
}

inline RectReport rect_report(std::int64_t p, std::int64_t q, int n) {
    detail::require_even_n(n, 8);
    if (p < 1 || q < 1) throw std::invalid_argument("rect_report: sides must be positive");
    if (p > q) std::swap(p, q);
    const int k = n / 2;

    RectReport rep;
    rep.p = p;
    rep.q = q;
    rep.n = n;

    const PolyZ P = build_P(p, q);
    const PolyZ Q = build_Q(n);
    auto [quot, rem] = divide_univariate_y(P, Q);
    rep.remainder = std::move(rem);
    rep.divisible = rep.remainder.is_zero();
    rep.deriv_value = P.derivative_y().evaluate(Int(1), Int(-1));

    const bool p_even = p % 2 == 0, q_even = q % 2 == 0;
    rep.parity_case = p_even ? (q_even ? ParityCase::C : ParityCase::A)
                             : (q_even ? ParityCase::B : ParityCase::None);

    if (rep.divisible) {
        Int s = quot.evaluate(Int(1), Int(-1));
        if (Int(2) * rep.deriv_value != Int(n) * s)
            throw std::logic_error("rect_report: sign-sum disagrees with the derivative formula");
        rep.s_minus = s;

        auto exact = [](Int num, int den) {
            if (num % den != 0)
                throw std::logic_error("rect_report: B-count formula did not divide exactly");
            return Int(num / den);
        };
        Int count;
        switch (rep.parity_case) {
            case ParityCase::A: count = exact(Int(p) * Int(1 - k), n); break;
            case ParityCase::B: count = exact(Int(q), n); break;
            case ParityCase::C: count = 0; break;
            default:
                throw std::logic_error("rect_report: divisible with both sides odd");
        }
        rep.b_count = count;
        rep.satisfiable = count % Int(k - 2) == 0;
    }
    return rep;
}

inline std::pair<Int, Int> sign_sum_and_derivative(std::int64_t p, std::int64_t q, int n) {
    RectReport rep = rect_report(p, q, n);
    if (!rep.s_minus)
        throw std::domain_error("sign_sum_and_derivative: P_{p,q} is not divisible by Q");
    return {*rep.s_minus, rep.deriv_value};
}

inline std::pair<Int, bool> b_tile_count(std::int64_t p, std::int64_t q, int n) {
    RectReport rep = rect_report(p, q, n);
    if (!rep.divisible)
        throw std::domain_error("b_tile_count: P_{p,q} is not divisible by Q");
    return {*rep.b_count, *rep.satisfiable};
}

}  // namespace sigtile
