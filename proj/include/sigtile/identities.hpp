#pragma once

// Exact polynomial identities connecting the tile generators to the
// reference bases: membership combinations, S-polynomial reductions,
// telescoping column reductions, and auxiliary-tile constructions.
// Each check expands both sides over Z[x,y] and compares term by term.

#include "sigtile/tiles.hpp"

#include <string>
#include <vector>

namespace sigtile {

struct IdentityCheck {
    std::string name;
    bool ok;
};

namespace detail {

inline PolyZ term(Int c, int a, int b) { return PolyZ(std::move(c), Monomial{a, b}); }

inline void chk(std::vector<IdentityCheck>& out, const std::string& name, const PolyZ& lhs,
                const PolyZ& rhs) {
    out.push_back({name, lhs == rhs});
}

inline void identities_t4(std::vector<IdentityCheck>& out) {
    const PolyZ b1 = parse_polynomial<Int>("x^2 + x + y + 1");
    const PolyZ b2 = parse_polynomial<Int>("y^2 + y + x + 1");
    const PolyZ one(Int(1));
    chk(out, "membership: h2 = -b1 + (x+1) b2", h2(2), -b1 + (PolyZ::variable_x() + one) * b2);
    chk(out, "membership: h4 = -b2 + (y+1) b1", h4(2), -b2 + (PolyZ::variable_y() + one) * b1);
    chk(out, "s-combination b1,b2: y^2 b1 - x^2 b2 = (x+y+1)(b2-b1)",
        term(1, 0, 2) * b1 - term(1, 2, 0) * b2,
        (PolyZ::variable_x() + PolyZ::variable_y() + one) * (b2 - b1));
}

inline void identities_membership(std::vector<IdentityCheck>& out, int k) {
    const PolyZ left1 = parse_polynomial<Int>("x*y + y - 1");
    const PolyZ left3 = parse_polynomial<Int>("x*y + x - 1");
    chk(out, "membership: (xy+y-1) h1 - y h2 = c3", left1 * h1(k) - term(1, 0, 1) * h2(k), c3());
    chk(out, "membership: (xy+x-1) h3 - x h4 = c4", left3 * h3(k) - term(1, 1, 0) * h4(k), c4());
}

inline void identities_aux_and_radical(std::vector<IdentityCheck>& out, int k) {
    const int n = 2 * k;
    const PolyZ B = parse_polynomial<Int>("x*y - 1");
    chk(out, "aux tile: y h1 - c4 = column(n) - y B",
        h1(k).mul_monomial(Monomial{0, 1}) - c4(), geom_sum_y(n) - B.mul_monomial(Monomial{0, 1}));
    chk(out, "radical witness x: (k-2) x h3 - c5 = (k-2) row(n)",
        term(Int(k - 2), 1, 0) * h3(k) - c5(k), geom_sum_x(n).scale(Int(k - 2)));
    chk(out, "radical witness y: (k-2) y h1 - c5 = (k-2) column(n)",
        term(Int(k - 2), 0, 1) * h1(k) - c5(k), geom_sum_y(n).scale(Int(k - 2)));
}

// S-polynomial reduction identities for the five-element basis, valid for
// k >= 4. The cofactor sums depend on the parity of k:
//   A(v) = sum of v^j over 0 <= j <= k-4 with j == k (mod 2),
//   W(v) = sum of v^j over 0 <= j <= k-3 with j != k (mod 2).
inline void identities_c_family(std::vector<IdentityCheck>& out, int k) {
    const int e = (k % 2 == 1) ? 1 : 0;
    const Int f12((k - 1) / 2);
    const PolyZ C1 = c1(k), C2 = c2(k), C3 = c3(), C4 = c4(), C5 = c5(k);

    auto parity_sum = [k](bool in_x, int upper, bool matching_parity) {
        PolyZ s;
        for (int j = 0; j <= upper; ++j)
            if ((j % 2 == k % 2) == matching_parity)
                s.add_term(in_x ? Monomial{j, 0} : Monomial{0, j}, Int(1));
        return s;
    };
    const PolyZ Ax = parity_sum(true, k - 4, true);
    const PolyZ Ay = parity_sum(false, k - 4, true);
    const PolyZ Wx = parity_sum(true, k - 3, false);
    const PolyZ Wy = parity_sum(false, k - 3, false);

    chk(out, "s-reduction c1,c3",
        term(1, 2, 0) * C1 - term(1, 0, k - 1) * C3,
        term(1, 1, 0) * C2 - term(1, 0, k - 2) * C4 + term(1, 0, k - 2) * C3 +
            (term(1, 1, 0) * Ay) * C4 - term(1, 1, 0) * C5 + term(f12, 1, 0) * C3);
    chk(out, "s-reduction c1,c4",
        term(1, 1, 0) * C1 - term(1, 0, k - 2) * C4,
        C2 + Ay * C4 - C5 + C3.scale(f12));
    chk(out, "s-reduction c1,c5",
        term(Int(k - 2), 1, 0) * C1 - term(1, 0, k - 1) * C5,
        C2.scale(Int(k - 2)) + (Wy * C4).scale(Int(k - 2)) - C5.scale(Int(k - 3 + 2 * e)) +
            C3.scale(Int(k - 2) * f12));
    chk(out, "s-reduction c2,c3",
        term(1, 0, 1) * C2 - term(1, k - 2, 0) * C3,
        C1 + Ax * C3 - C5 + C4.scale(f12));
    chk(out, "s-reduction c2,c4",
        term(1, 0, 2) * C2 - term(1, k - 1, 0) * C4,
        term(1, 0, 1) * C1 - term(1, k - 2, 0) * C3 + term(1, k - 2, 0) * C4 +
            (term(1, 0, 1) * Ax) * C3 - term(1, 0, 1) * C5 + term(f12, 0, 1) * C4);
    chk(out, "s-reduction c2,c5",
        term(Int(k - 2), 0, 1) * C2 - term(1, k - 1, 0) * C5,
        C1.scale(Int(k - 2)) + (Wx * C3).scale(Int(k - 2)) - C5.scale(Int(k - 3 + 2 * e)) +
            C4.scale(Int(k - 2) * f12));
    chk(out, "s-reduction c3,c4", term(1, 0, 1) * C3 - term(1, 1, 0) * C4, -C3 + C4);
    chk(out, "s-reduction c3,c5", C3.scale(Int(k - 2)) - term(1, 1, 0) * C5, C5);
    chk(out, "s-reduction c4,c5", C4.scale(Int(k - 2)) - term(1, 0, 1) * C5, C5);
    {
        PolyZ G = PolyZ(Int(1) - f12);
        for (int j = 1; j <= k - 1; ++j) {
            G.add_term(Monomial{j, 0}, Int(1));
            G.add_term(Monomial{0, j}, Int(1));
        }
        G.add_term(Monomial{1, 1}, f12);
        chk(out, "s-combination c1,c2", term(1, k, 0) * C1 - term(1, 0, k) * C2, (C2 - C1) * G);
    }
}

inline void identities_t4_plus(std::vector<IdentityCheck>& out) {
    const PolyZ D1 = d1();
    const PolyZ D2 = parse_polynomial<Int>("x - y");
    const PolyZ g1 = h1(2), g2 = h2(2), g3 = h3(2), g4 = h4(2), g5 = h5();
    chk(out, "square basis: d1 = g1 + g4 - x g5", D1, g1 + g4 - term(1, 1, 0) * g5);
    chk(out, "square basis: d2 = -g4 + x g5", D2, -g4 + term(1, 1, 0) * g5);
    chk(out, "conversion g1 = d1 + d2", g1, D1 + D2);
    chk(out, "conversion g2 = y d1 + (y^2+y+1) d2", g2,
        term(1, 0, 1) * D1 + parse_polynomial<Int>("y^2 + y + 1") * D2);
    chk(out, "conversion g3 = d1 + (x+y+1) d2", g3, D1 + parse_polynomial<Int>("x + y + 1") * D2);
    chk(out, "conversion g4 = y d1 + (xy+y^2+x+2y) d2", g4,
        term(1, 0, 1) * D1 + parse_polynomial<Int>("x*y + y^2 + x + 2*y") * D2);
    chk(out, "conversion g5 = d1 + (y+1) d2", g5, D1 + parse_polynomial<Int>("y + 1") * D2);
    chk(out, "s-polynomial d1,d2 expansion", term(1, 1, 0) * D1 - term(1, 0, 2) * D2,
        parse_polynomial<Int>("2*x*y + x + y^3"));
    chk(out, "s-reduction d1,d2", term(1, 1, 0) * D1 - term(1, 0, 2) * D2,
        term(1, 0, 1) * D1 + parse_polynomial<Int>("2*y + 1") * D2);
}

inline void identities_plus_family(std::vector<IdentityCheck>& out, int k) {
    const PolyZ D1 = d1(), D2 = d2(k), D3 = d3(k), H5 = h5();
    const PolyZ one(Int(1));
    const PolyZ X = PolyZ::variable_x(), Y = PolyZ::variable_y();

    chk(out, "square tile times y minus c4 = d1", H5.mul_monomial(Monomial{0, 1}) - c4(), D1);
    {
        PolyZ M;
        for (int j = 1; j <= k - 2; ++j) M.add_term(Monomial{0, 2 * k - 3 - 2 * j}, Int(j));
        const PolyZ step = parse_polynomial<Int>("1 + y - y^2 - y^3");
        PolyZ flat = (Y * Y + Y).scale(Int(k - 1)) + one + X;
        chk(out, "telescoping column reduction of h1", h1(k) + M * step, flat);
        chk(out, "step tile factors through d1", step, (one - Y) * D1);
    }
    const PolyZ t = one + X + (Y + Y * Y).scale(Int(k - 1));
    const PolyZ u = PolyZ(Int(-(k - 2))) + X - Y.scale(Int(k - 1));
    chk(out, "flat strip minus (k-1) d1", t - D1.scale(Int(k - 1)), u);
    chk(out, "linear combination reaches -d3",
        u.scale(Int(k - 1)) + (PolyZ(Int(-(k - 2))) - X.scale(Int(k - 1)) + Y), -D3);
    chk(out, "linear combination reaches d2", u + (Y + one).scale(Int(k) * Int(k - 2)), D2);
    chk(out, "square tile from d1,d2", H5,
        (one + Y) * D2 - D1.scale(Int((k - 2) * (k - 1) - 1)));
    chk(out, "flat strip from basis", D2 - D3 + D1.scale(Int(k - 1)), t);
    {
        PolyZ evens;
        for (int j = 0; j <= k - 2; ++j) evens.add_term(Monomial{0, 2 * j}, Int(1));
        chk(out, "h1 to h2 conversion",
            h1(k) + parse_polynomial<Int>("x*y^2 + x*y - y - 1") * evens, h2(k));
    }
    const PolyZ w = (Y * Y + Y).scale(Int(k)) + one - term(1, 1, 1);
    chk(out, "hook strip from basis", D1 + Y * (D3 - D2), w);
    chk(out, "hook strip closes to -c4", (Y + one) * w - term(Int(k), 0, 1) * D1, -c4());
    const Int m((k - 2) * (k - 1) - 1);
    chk(out, "row pair from d2 and square", parse_polynomial<Int>("x^2 + 2*x + 1"),
        (one + X) * D2 - H5.scale(m));
    chk(out, "mixed strip from d2,d3",
        PolyZ(Int((k - 1) * (k - 2))) + X.scale(m) + Y,
        D2.scale(m) - D3.scale(Int(k - 1) * Int(k - 3)));
    chk(out, "doubled row from d2,d3", (one + X).scale(Int(k) * Int(k - 2)),
        D2.scale(Int(k) * Int(k - 2)) - D3.scale(m));
    const Int kk(k * (k - 2));
    chk(out, "s-reduction d1,d2", D1.scale(kk * m) - term(kk, 0, 1) * D2,
        D2.scale(kk) - (one + X) * D3);
    chk(out, "s-reduction d1,d3", D1.scale(kk) - term(1, 0, 1) * D3, D3);
    chk(out, "s-reduction d2,d3", -(term(kk, 0, 1) * D2) + term(1, 1, 0) * D3,
        D1.scale(kk * (Int(1) - Int((k - 1) * (k - 2)))) + D2.scale(kk) - D3);
}

}  // namespace detail

// Every identity applicable to the tile family (n, plus), each expanded
// and compared exactly.
inline std::vector<IdentityCheck> identity_suite(int n, bool plus) {
    detail::require_even_n(n, 4);
    const int k = n / 2;
    std::vector<IdentityCheck> out;
    if (!plus) {
        detail::identities_membership(out, k);
        if (k == 2) detail::identities_t4(out);
        if (k >= 3) detail::identities_aux_and_radical(out, k);
        if (k >= 4) detail::identities_c_family(out, k);
    } else {
        if (k == 2) detail::identities_t4_plus(out);
        if (k >= 3) detail::identities_plus_family(out, k);
    }
    return out;
}

}  // namespace sigtile
