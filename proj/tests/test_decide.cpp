// Decision layer: signed-tileability via ideal membership with test-monomial
// search, the closed-form predicates, scaled membership, and grid scans.

#include <catch2/catch_amalgamated.hpp>

#include "sigtile/decide.hpp"

#include <random>

using namespace sigtile;

namespace {

// Recomputes the membership claim of a Yes decision from scratch.
template <class C>
bool yes_decision_checks_out(const CellSet& region, int n, bool plus, const Decision<C>& dec) {
    if (dec.answer != Verdict::Yes) return false;
    if (!dec.test_monomial) return false;
    const auto basis = cached_tile_basis<C>(n, plus);
    const PolyZ base = cells_to_poly(region.normalized());
    Polynomial<C> f;
    for (const auto& [m, c] : base.terms()) f.add_term(m, C(c));
    return ideal_contains(f.mul_monomial(*dec.test_monomial), *basis);
}

}  // namespace

TEST_CASE("fixed rectangle decisions over Z") {
    SECTION("6 x 2 under the 6-cell family: tileable") {
        const auto dec = signed_tileable<Int>(rect_region(6, 2), tile_set(6, false));
        CHECK(dec.answer == Verdict::Yes);
        CHECK(yes_decision_checks_out(rect_region(6, 2), 6, false, dec));
    }
    SECTION("8 x 3 under the 8-cell family: not tileable") {
        const auto dec = signed_tileable<Int>(rect_region(8, 3), tile_set(8, false));
        CHECK(dec.answer == Verdict::No);
        CHECK(dec.test_bound == 8);
        CHECK(!dec.test_monomial);
    }
    SECTION("16 x 3 under the 8-cell family: tileable") {
        const auto dec = signed_tileable<Int>(rect_region(16, 3), tile_set(8, false));
        CHECK(dec.answer == Verdict::Yes);
        CHECK(yes_decision_checks_out(rect_region(16, 3), 8, false, dec));
    }
    SECTION("1 x 1 under the 6-cell family: not tileable") {
        CHECK(signed_tileable<Int>(rect_region(1, 1), tile_set(6, false)).answer ==
              Verdict::No);
    }
}

TEST_CASE("rational weights decide more rectangles than integer weights") {
    const CellSet r = rect_region(8, 3);
    const TileSet ts = tile_set(8, false);
    CHECK(signed_tileable<Int>(r, ts).answer == Verdict::No);
    const auto q = signed_tileable<Rat>(r, ts);
    CHECK(q.answer == Verdict::Yes);
    CHECK(yes_decision_checks_out(r, 8, false, q));
}

TEST_CASE("decision plumbing") {
    CHECK_THROWS_AS(signed_tileable<Int>(CellSet{}, tile_set(6, false)),
                    std::invalid_argument);

    // The method and search bound are echoed.
    const auto dec = signed_tileable<Int>(rect_region(2, 3), tile_set(6, false), 2);
    CHECK(dec.method == Method::groebner);
    CHECK(dec.test_bound == 2);

    CHECK(std::string(to_string(Verdict::Yes)) == "yes");
    CHECK(std::string(to_string(Verdict::No)) == "no");
    CHECK(std::string(to_string(Method::groebner)) == "groebner");

    // The per-process basis cache hands out one shared basis per family.
    const auto a = cached_tile_basis<Int>(6, false);
    const auto b = cached_tile_basis<Int>(6, false);
    CHECK(a.get() == b.get());
    CHECK(is_groebner(*a).is_groebner);
}

TEST_CASE("a fresh completion under a tiny step cap raises the resource error") {
    // n = 14 is used nowhere else in this binary, so the cache is cold here.
    CHECK_THROWS_AS(
        signed_tileable<Int>(rect_region(2, 2), tile_set(14, false), -1, BuchbergerOptions{1}),
        ResourceCapError);
}

TEST_CASE("decisions are translation invariant") {
    std::mt19937 rng(321);
    std::uniform_int_distribution<std::int64_t> cell(0, 3), shift(-4, 7);
    const TileSet ts = tile_set(6, false);
    for (int i = 0; i < 10; ++i) {
        CellSet region;
        for (int j = 0; j < 6; ++j) region.insert(cell(rng), cell(rng));
        const auto base = signed_tileable<Int>(region, ts);
        const auto moved = signed_tileable<Int>(region.translated(shift(rng), shift(rng)), ts);
        CHECK(base.answer == moved.answer);
        CHECK(base.test_monomial == moved.test_monomial);
    }
}

TEST_CASE("decisions are symmetric in the rectangle sides") {
    const TileSet ts = tile_set(6, false);
    for (std::int64_t p = 1; p <= 6; ++p)
        for (std::int64_t q = p; q <= 6; ++q)
            CHECK(signed_tileable<Int>(rect_region(p, q), ts).answer ==
                  signed_tileable<Int>(rect_region(q, p), ts).answer);
}

TEST_CASE("integer tileability implies rational tileability") {
    for (const int n : {6, 8}) {
        const TileSet ts = tile_set(n, false);
        for (std::int64_t p = 1; p <= 12; ++p) {
            for (std::int64_t q = p; q <= 12; ++q) {
                if (signed_tileable<Int>(rect_region(q, p), ts).answer == Verdict::Yes) {
                    INFO("n=" << n << " p=" << p << " q=" << q);
                    CHECK(signed_tileable<Rat>(rect_region(q, p), ts).answer == Verdict::Yes);
                }
            }
        }
    }
}

TEST_CASE("rectangle closed form: fixed truth table") {
    CHECK(closed_form_rect(6, false, 6, 2));
    CHECK(closed_form_rect(6, false, 2, 6));
    CHECK(!closed_form_rect(6, false, 1, 1));
    CHECK(!closed_form_rect(8, false, 3, 8));
    CHECK(closed_form_rect(8, false, 3, 16));  // odd side with 16 | other
    CHECK(closed_form_rect(8, false, 8, 10));
    CHECK(!closed_form_rect(8, false, 8, 9));

    // 4-cell family: both sides even and one divisible by 4.
    CHECK(closed_form_rect(4, false, 4, 2));
    CHECK(!closed_form_rect(4, false, 2, 2));
    CHECK(closed_form_rect(4, true, 2, 2));
    CHECK(!closed_form_rect(4, true, 2, 3));

    // Square-added families keep the even-even case unconditionally.
    CHECK(closed_form_rect(8, true, 2, 2));
    CHECK(closed_form_rect(8, true, 3, 16));
    CHECK(!closed_form_rect(8, true, 3, 8));

    CHECK_THROWS_AS(closed_form_rect(7, false, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_rect(8, false, 0, 1), std::invalid_argument);
}

TEST_CASE("rational-weight closed form: fixed truth table") {
    CHECK(barnes_closed_form(8, false, 3, 8));
    CHECK(!barnes_closed_form(8, false, 3, 5));
    CHECK(barnes_closed_form(6, true, 2, 5));
    CHECK(!barnes_closed_form(6, true, 3, 5));
    CHECK(barnes_closed_form(4, true, 2, 2));
    CHECK(!barnes_closed_form(4, true, 2, 3));
    CHECK_THROWS_AS(barnes_closed_form(4, false, 2, 2), std::invalid_argument);
}

TEST_CASE("inflated-copy closed form: implemented predicate") {
    // Even factors or factors divisible by n/2 - 2.
    CHECK(closed_form_inflated(6, 1));
    CHECK(closed_form_inflated(6, 5));
    CHECK(closed_form_inflated(8, 2));
    CHECK(closed_form_inflated(8, 4));
    CHECK(!closed_form_inflated(8, 1));
    CHECK(!closed_form_inflated(8, 3));
    CHECK(closed_form_inflated(10, 3));
    CHECK(!closed_form_inflated(10, 5));
    CHECK_THROWS_AS(closed_form_inflated(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_inflated(8, 0), std::invalid_argument);
}

TEST_CASE("scaled rectangle membership") {
    CHECK(scaled_membership(6, 6, 5));
    CHECK(scaled_membership(8, 8, 3));
    CHECK(scaled_membership(8, 3, 8));
    CHECK(scaled_membership(8, 16, 16));
    CHECK_THROWS_AS(scaled_membership(8, 3, 5), std::invalid_argument);
    CHECK_THROWS_AS(scaled_membership(4, 4, 4), std::invalid_argument);
}

TEST_CASE("grid scan: zero mismatches, determinism, row order") {
    const ScanResult a = scan_rects<Int>(6, false, 8);
    CHECK(a.rows.size() == 36);
    CHECK(a.mismatches == 0);
    CHECK(a.errors == 0);
    for (const auto& row : a.rows) {
        CHECK(row.agree);
        CHECK(row.groebner_answer == row.closed_answer);
        CHECK(row.error.empty());
    }
    // Rows arrive in lexicographic (p, q) order with p <= q.
    for (std::size_t i = 0; i + 1 < a.rows.size(); ++i) {
        const auto &r1 = a.rows[i], &r2 = a.rows[i + 1];
        CHECK((r1.p < r2.p || (r1.p == r2.p && r1.q < r2.q)));
        CHECK(r1.p <= r1.q);
    }

    // Determinism, including across worker counts.
    const ScanResult b = scan_rects<Int>(6, false, 8, 3);
    REQUIRE(b.rows.size() == a.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].p == b.rows[i].p);
        CHECK(a.rows[i].q == b.rows[i].q);
        CHECK(a.rows[i].groebner_answer == b.rows[i].groebner_answer);
        CHECK(a.rows[i].test_monomial == b.rows[i].test_monomial);
    }

    // Rational-weight scan against the rational closed form.
    const ScanResult q = scan_rects<Rat>(8, false, 10, 2);
    CHECK(q.mismatches == 0);
    CHECK(q.errors == 0);

    CHECK_THROWS_AS(scan_rects<Int>(6, false, 0), std::invalid_argument);
}

TEST_CASE("concatenating tileable rectangles stays tileable") {
    const TileSet ts = tile_set(6, false);
    // 6 x 2 and 6 x 4 stacked side by side give 6 x 6; all three decide Yes.
    CHECK(signed_tileable<Int>(rect_region(6, 2), ts).answer == Verdict::Yes);
    CHECK(signed_tileable<Int>(rect_region(6, 4), ts).answer == Verdict::Yes);
    CellSet stacked = rect_region(6, 2);
    for (const Cell& c : rect_region(6, 4).translated(0, 2).cells)
        stacked.insert(c.col, c.row);
    REQUIRE(stacked.size() == 36);
    CHECK(signed_tileable<Int>(stacked, ts).answer == Verdict::Yes);
}
