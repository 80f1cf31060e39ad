// Rectangle arithmetic for n = 2k >= 8: the row-collapsed polynomial P,
// divisibility by Q, the quotient sign-sum, the derivative shortcut, and
// B-tile counting by parity case.

#include <catch2/catch_amalgamated.hpp>

#include "sigtile/decide.hpp"
#include "sigtile/rectcalc.hpp"

#include <random>

using namespace sigtile;

TEST_CASE("P: fixed expansions and structural properties") {
    CHECK(build_P(2, 3) == parse_polynomial<Int>("1 + 2*y + 2*y^2 + y^3"));
    CHECK(build_P(1, 5) == geom_sum_y(5));
    CHECK(build_P(3, 4).evaluate(Int(1), Int(1)) == 12);  // total cell count
    CHECK_THROWS_AS(build_P(0, 3), std::invalid_argument);

    std::mt19937 rng(64);
    std::uniform_int_distribution<std::int64_t> d(1, 20);
    for (int i = 0; i < 50; ++i) {
        const std::int64_t p = d(rng), q = d(rng);
        const PolyZ P = build_P(p, q);
        CHECK(P == build_P(q, p));
        CHECK(P.degree() == p + q - 2);
        CHECK(P.evaluate(Int(1), Int(1)) == Int(p) * Int(q));
        CHECK(P.leading().hc == 1);
        // Row-by-row reconstruction: the rectangle collapses column-wise to
        // a sum of p shifted flat runs of length q.
        PolyZ rows;
        for (std::int64_t j = 0; j < p; ++j)
            rows += geom_sum_y(q).mul_monomial(Monomial{0, j});
        CHECK(P == rows);
    }
}

TEST_CASE("Q: fixed values") {
    CHECK(build_Q(8) == parse_polynomial<Int>("1+y+y^2+y^3+y^4+y^5+y^6+y^7"));
    CHECK(build_Q(8).evaluate(Int(1), Int(1)) == 8);
    CHECK(build_Q(8).evaluate(Int(1), Int(-1)) == 0);
    CHECK_THROWS_AS(build_Q(7), std::invalid_argument);
}

TEST_CASE("univariate division in y: identity and errors") {
    std::mt19937 rng(512);
    std::uniform_int_distribution<std::int64_t> d(1, 20);
    for (int i = 0; i < 50; ++i) {
        const PolyZ num = build_P(d(rng), d(rng));
        const PolyZ den = build_Q(8);
        const auto [quot, rem] = divide_univariate_y(num, den);
        CHECK(quot * den + rem == num);
        CHECK((rem.is_zero() || rem.degree() < den.degree()));
    }
    CHECK_THROWS_AS(divide_univariate_y(build_P(2, 2), PolyZ{}), std::domain_error);
    CHECK_THROWS_AS(divide_univariate_y(build_P(2, 2), parse_polynomial<Int>("x + y")),
                    std::domain_error);
    CHECK_THROWS_AS(divide_univariate_y(parse_polynomial<Int>("x*y"), build_Q(8)),
                    std::domain_error);
    CHECK_THROWS_AS(divide_univariate_y(PolyZ::variable_y(), parse_polynomial<Int>("2*y")),
                    std::domain_error);
}

TEST_CASE("rectangle reports: fixed cases at n = 8") {
    SECTION("8 x 9: divisible, case A, count -3, not satisfiable") {
        const RectReport r = rect_report(8, 9, 8);
        CHECK(r.divisible);
        CHECK(r.parity_case == ParityCase::A);
        CHECK(r.deriv_value == 4);  // p/2
        REQUIRE(r.s_minus);
        CHECK(*r.s_minus == 1);
        REQUIRE(r.b_count);
        CHECK(*r.b_count == -3);  // p(1-k)/n = 8(-3)/8
        REQUIRE(r.satisfiable);
        CHECK(!*r.satisfiable);
        CHECK(!closed_form_rect(8, false, 8, 9));
    }
    SECTION("3 x 16: divisible, case B, count 2, satisfiable") {
        const RectReport r = rect_report(3, 16, 8);
        CHECK(r.divisible);
        CHECK(r.parity_case == ParityCase::B);
        CHECK(r.deriv_value == 8);  // q/2
        CHECK(*r.s_minus == 2);
        CHECK(*r.b_count == 2);  // q/n
        CHECK(*r.satisfiable);
        CHECK(closed_form_rect(8, false, 3, 16));
    }
    SECTION("8 x 10: divisible, case C, count 0, satisfiable") {
        const RectReport r = rect_report(8, 10, 8);
        CHECK(r.divisible);
        CHECK(r.parity_case == ParityCase::C);
        CHECK(r.deriv_value == 0);
        CHECK(*r.s_minus == 0);
        CHECK(*r.b_count == 0);
        CHECK(*r.satisfiable);
        CHECK(closed_form_rect(8, false, 8, 10));
    }
    SECTION("4 x 9: not divisible, derivative still reported") {
        const RectReport r = rect_report(4, 9, 8);
        CHECK(!r.divisible);
        CHECK(!r.remainder.is_zero());
        CHECK(r.deriv_value == 2);  // p/2 in case A
        CHECK(!r.s_minus);
        CHECK(!r.b_count);
        CHECK(!r.satisfiable);
    }
    SECTION("3 x 8: divisible, case B, count 1, not satisfiable") {
        const RectReport r = rect_report(3, 8, 8);
        CHECK(r.divisible);
        CHECK(r.deriv_value == 4);
        CHECK(*r.b_count == 1);
        CHECK(!*r.satisfiable);
        CHECK(!closed_form_rect(8, false, 3, 8));
    }
    SECTION("3 x 10: not divisible") {
        CHECK(!rect_report(3, 10, 8).divisible);
    }
    SECTION("both sides odd: no parity case, never divisible") {
        const RectReport r = rect_report(3, 5, 8);
        CHECK(r.parity_case == ParityCase::None);
        CHECK(!r.divisible);
    }
    SECTION("argument normalization and domain errors") {
        const RectReport r = rect_report(9, 8, 8);
        CHECK(r.p == 8);
        CHECK(r.q == 9);
        CHECK_THROWS_AS(rect_report(2, 3, 6), std::invalid_argument);
        CHECK_THROWS_AS(rect_report(0, 3, 8), std::invalid_argument);
    }
}

TEST_CASE("wrapper accessors") {
    const auto [s, deriv] = sign_sum_and_derivative(3, 16, 8);
    CHECK(s == 2);
    CHECK(deriv == 8);
    const auto [count, sat] = b_tile_count(3, 16, 8);
    CHECK(count == 2);
    CHECK(sat);
    CHECK_THROWS_AS(sign_sum_and_derivative(3, 10, 8), std::domain_error);
    CHECK_THROWS_AS(b_tile_count(3, 10, 8), std::domain_error);
}

TEST_CASE("derivative matches the parity-case formulas") {
    for (const int n : {8, 10}) {
        for (std::int64_t p = 1; p <= 2 * n; ++p) {
            for (std::int64_t q = p; q <= 2 * n; ++q) {
                const RectReport r = rect_report(p, q, n);
                INFO("n=" << n << " p=" << p << " q=" << q);
                switch (r.parity_case) {
                    case ParityCase::A: CHECK(r.deriv_value == Int(r.p) / 2); break;
                    case ParityCase::B: CHECK(r.deriv_value == Int(r.q) / 2); break;
                    case ParityCase::C: CHECK(r.deriv_value == 0); break;
                    case ParityCase::None: break;
                }
                if (r.divisible) {
                    CHECK(Int(2) * r.deriv_value == Int(n) * *r.s_minus);
                    CHECK(*r.satisfiable == (*r.b_count % Int(n / 2 - 2) == 0));
                }
            }
        }
    }
}

TEST_CASE("divisibility happens exactly when a side is a multiple of n") {
    for (const int n : {8, 10}) {
        for (std::int64_t p = 1; p <= 2 * n; ++p) {
            for (std::int64_t q = p; q <= 2 * n; ++q) {
                const RectReport r = rect_report(p, q, n);
                INFO("n=" << n << " p=" << p << " q=" << q);
                CHECK(r.divisible == (p % n == 0 || q % n == 0));
            }
        }
    }
}

TEST_CASE("divisible-and-satisfiable matches the rectangle closed form") {
    for (const int n : {8, 10}) {
        for (std::int64_t p = 1; p <= 2 * n; ++p) {
            for (std::int64_t q = p; q <= 2 * n; ++q) {
                const RectReport r = rect_report(p, q, n);
                const bool predicted = r.divisible && r.satisfiable && *r.satisfiable;
                INFO("n=" << n << " p=" << p << " q=" << q);
                CHECK(predicted == closed_form_rect(n, false, p, q));
            }
        }
    }
}

TEST_CASE("parity case stringification") {
    CHECK(std::string(to_string(ParityCase::A)) == "A");
    CHECK(std::string(to_string(ParityCase::B)) == "B");
    CHECK(std::string(to_string(ParityCase::C)) == "C");
    CHECK(std::string(to_string(ParityCase::None)) == "none");
}
