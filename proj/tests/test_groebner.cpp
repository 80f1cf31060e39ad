// S-/G-polynomials, the Groebner criterion over Z and Q, Buchberger
// completion with its resource cap, and ideal membership/equality.

#include <catch2/catch_amalgamated.hpp>

#include "sigtile/groebner.hpp"
#include "sigtile/tiles.hpp"

#include <cstdlib>
#include <random>
#include <vector>

using namespace sigtile;

namespace {

std::vector<PolyQ> rationalized(const std::vector<PolyZ>& v) {
    std::vector<PolyQ> out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(to_rational(p));
    return out;
}

// Random element of the ideal spanned by G: a small random combination.
PolyZ rand_ideal_element(std::mt19937& rng, const std::vector<PolyZ>& G) {
    std::uniform_int_distribution<int> coeffd(-3, 3);
    std::uniform_int_distribution<std::int64_t> expd(0, 2);
    PolyZ f;
    for (const auto& g : G)
        f.add_scaled_shifted(Int(coeffd(rng)), Monomial{expd(rng), expd(rng)}, g);
    return f;
}

}  // namespace

TEST_CASE("S-polynomials: fixed expansions") {
    // Heads y^2 and x^2, both with coefficient 1.
    CHECK(s_poly(c1(2), c2(2)) ==
          parse_polynomial<Int>("x^3 + x^2*y + x^2 - x*y^2 - y^3 - y^2"));

    // Heads x^2*y (coeff 1) and x*y (coeff 2): the combination collapses to C5.
    CHECK(s_poly(c3(), c5(4)) == c5(4));

    CHECK(s_poly(c3(), c3()).is_zero());
    CHECK_THROWS_AS(s_poly(PolyZ{}, c3()), std::domain_error);
    CHECK_THROWS_AS(s_poly(c3(), PolyZ{}), std::domain_error);
}

TEST_CASE("S-polynomial cancels both leading terms") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> coeffd(-9, 9);
    std::uniform_int_distribution<std::int64_t> expd(0, 4);
    for (int i = 0; i < 100; ++i) {
        PolyZ f, g;
        f.add_term(Monomial{expd(rng), expd(rng)}, Int(coeffd(rng)));
        f.add_term(Monomial{expd(rng), expd(rng)}, Int(coeffd(rng)));
        g.add_term(Monomial{expd(rng), expd(rng)}, Int(coeffd(rng)));
        g.add_term(Monomial{expd(rng), expd(rng)}, Int(coeffd(rng)));
        if (f.is_zero() || g.is_zero()) continue;
        const Monomial lcm_m = mono_lcm(f.leading().ht, g.leading().ht);
        const PolyZ s = s_poly(f, g);
        if (!s.is_zero()) CHECK(monomial_less(s.leading().ht, lcm_m));
    }
}

TEST_CASE("G-polynomials: divisible heads and genuine Bezout combinations") {
    // Head coefficient 1 of C3 divides head coefficient 2 of C5: the
    // G-polynomial is the sign-normalized multiple of C3 at the lcm.
    CHECK(g_poly(c5(4), c3()) == c3());
    CHECK(g_poly(c3(), c5(4)) == c3());

    // gcd(2, 3) = 1 via Bezout.
    const PolyZ g = g_poly(parse_polynomial<Int>("2*x"), parse_polynomial<Int>("3*y"));
    CHECK(g.leading().ht == Monomial{1, 1});
    CHECK(g.leading().hc == 1);

    CHECK_THROWS_AS(g_poly(PolyZ{}, c3()), std::domain_error);
}

TEST_CASE("Groebner criterion: fixed positives and negatives") {
    // A single nonzero polynomial is always a Groebner basis of its ideal.
    CHECK(is_groebner(std::vector<PolyZ>{parse_polynomial<Int>("x^2 + 1")}).is_groebner);

    for (const int n : {4, 6, 8, 10}) {
        for (const bool plus : {false, true}) {
            const auto rep = is_groebner(reference_basis(n, plus));
            INFO("n=" << n << " plus=" << plus);
            CHECK(rep.is_groebner);
            CHECK(!rep.failing_pair.has_value());
        }
    }

    // The raw tile generators are not themselves a Groebner basis, and the
    // report pinpoints a failing critical pair whose combination is nonzero.
    const auto rep = is_groebner(generator_polys(tile_set(6, false)));
    CHECK(!rep.is_groebner);
    REQUIRE(rep.failing_pair.has_value());
    CHECK(!rep.failing_pair->combination.is_zero());
    CHECK(rep.failing_pair->i < rep.failing_pair->j);

    CHECK_THROWS_AS(is_groebner(std::vector<PolyZ>{}), std::invalid_argument);
    CHECK_THROWS_AS(is_groebner(std::vector<PolyZ>{PolyZ{}}), std::invalid_argument);
}

TEST_CASE("head normalization") {
    std::vector<PolyZ> vz = {parse_polynomial<Int>("-2*x + y")};
    normalize_heads(vz);
    CHECK(vz[0] == parse_polynomial<Int>("2*x - y"));

    std::vector<PolyQ> vq = {to_rational(parse_polynomial<Int>("-2*x + y"))};
    normalize_heads(vq);
    CHECK(vq[0] == parse_polynomial<Rat>("x - 1/2 y"));
}

TEST_CASE("Buchberger completion reproduces the reference bases") {
    // Integer coefficients, n = 4: the completed generators span the same
    // ideal as the two-element reference basis.
    const auto gens4 = generator_polys(tile_set(4, false));
    const auto b4 = buchberger(gens4);
    CHECK(is_groebner(b4).is_groebner);
    CHECK(ideal_equal(gens4, reference_basis(4, false)));

    const auto gens6 = generator_polys(tile_set(6, false));
    CHECK(ideal_equal(gens6, reference_basis(6, false)));

    // Rational coefficients, square-added variant at n = 6.
    CHECK(ideal_equal(rationalized(generator_polys(tile_set(6, true))),
                      rationalized(reference_basis(6, true))));

    CHECK_THROWS_AS(buchberger(std::vector<PolyZ>{}), std::invalid_argument);
    CHECK_THROWS_AS(buchberger(std::vector<PolyZ>{PolyZ{}}), std::invalid_argument);
}

TEST_CASE("Buchberger output is self-reduced and head-normalized") {
    for (const int n : {4, 6, 8}) {
        const auto bz = buchberger(generator_polys(tile_set(n, false)));
        for (const auto& g : bz) CHECK(g.leading().hc > 0);
        const auto bq = buchberger(rationalized(generator_polys(tile_set(n, false))));
        for (std::size_t i = 0; i < bq.size(); ++i) {
            CHECK(bq[i].leading().hc == 1);
            std::vector<PolyQ> others;
            for (std::size_t j = 0; j < bq.size(); ++j)
                if (j != i) others.push_back(bq[j]);
            if (others.empty()) continue;
            // No element of the output reduces any further against the rest.
            CHECK(normal_form(bq[i], others, ReduceMode::D).remainder == bq[i]);
        }
    }
}

TEST_CASE("step cap aborts completion with a resource error") {
    const auto gens = generator_polys(tile_set(6, false));
    CHECK_THROWS_AS(buchberger(gens, BuchbergerOptions{1}), ResourceCapError);
}

TEST_CASE("step cap environment override") {
    const char* old = std::getenv("SIGTILE_STEP_CAP");
    const std::string saved = old ? old : "";

    setenv("SIGTILE_STEP_CAP", "7", 1);
    CHECK(default_step_cap() == 7);
    setenv("SIGTILE_STEP_CAP", "not-a-number", 1);
    CHECK(default_step_cap() == 100000);
    setenv("SIGTILE_STEP_CAP", "0", 1);
    CHECK(default_step_cap() == 100000);
    unsetenv("SIGTILE_STEP_CAP");
    CHECK(default_step_cap() == 100000);

    if (old) setenv("SIGTILE_STEP_CAP", saved.c_str(), 1);
}

TEST_CASE("ideal membership: fixed cases") {
    const auto b6 = reference_basis(6, false);
    CHECK(ideal_contains(parse_polynomial<Int>("x*y - 1"), b6));
    CHECK(!ideal_contains(PolyZ::variable_x(), b6));
    CHECK(ideal_contains(PolyZ{}, b6));

    // x*y - 1 generates strictly less at n = 8: it is outside that ideal.
    CHECK(!ideal_contains(parse_polynomial<Int>("x*y - 1"), reference_basis(8, false)));
}

TEST_CASE("ideal equality distinguishes different tile families") {
    CHECK(!ideal_equal(reference_basis(6, false), reference_basis(8, false)));
    CHECK(ideal_equal(reference_basis(8, false), reference_basis(8, false)));
}

TEST_CASE("membership is monotone under monomial multiplication") {
    std::mt19937 rng(90210);
    std::uniform_int_distribution<std::int64_t> expd(0, 3);
    const auto basis = reference_basis(8, false);
    for (int i = 0; i < 30; ++i) {
        const PolyZ f = rand_ideal_element(rng, basis);
        if (f.is_zero()) continue;
        REQUIRE(ideal_contains(f, basis));
        const Monomial t{expd(rng), expd(rng)};
        CHECK(ideal_contains(f.mul_monomial(t), basis));
    }
}

TEST_CASE("integer membership implies rational membership") {
    std::mt19937 rng(1861);
    const auto gens = generator_polys(tile_set(6, false));
    const auto bz = buchberger(gens);
    const auto bq = buchberger(rationalized(gens));
    for (int i = 0; i < 30; ++i) {
        const PolyZ f = rand_ideal_element(rng, gens);
        if (f.is_zero()) continue;
        CHECK(ideal_contains(f, bz));
        CHECK(ideal_contains(to_rational(f), bq));
    }
}
