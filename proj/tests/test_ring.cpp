#include <doctest.h>

#include <random>
#include <stdexcept>

#include "stacky/ring.hpp"

using namespace stacky;

namespace {

// x^a y^b in two variables, coefficient c
Poly xy(int a, int b, const Rat& c = Rat(1)) {
    Monomial m;
    if (a > 0) m = mono_mul(m, Monomial::var(0, a));
    if (b > 0) m = mono_mul(m, Monomial::var(1, b));
    return Poly::monomial(2, m, c);
}

} // namespace

TEST_CASE("monomial arithmetic") {
    Monomial x = Monomial::var(0);
    Monomial y = Monomial::var(1);
    Monomial x2y = mono_mul(mono_mul(x, x), y);
    CHECK(x2y.exponent(0) == 2);
    CHECK(x2y.exponent(1) == 1);
    CHECK(x2y.exponent(5) == 0);
    CHECK(x2y.total_degree() == 3);
    CHECK(Monomial::one().is_one());

    CHECK(mono_divides(x, x2y));
    CHECK(!mono_divides(x2y, x));
    CHECK(mono_div(x2y, x) == mono_mul(x, y));
    CHECK(mono_lcm(mono_mul(x, x), mono_mul(x, y)) == x2y);
    CHECK(mono_lcm(Monomial::one(), y) == y);
}

TEST_CASE("monomial orders") {
    Monomial x = Monomial::var(0);
    Monomial y = Monomial::var(1);
    Monomial x2 = Monomial::var(0, 2);

    // Both orders refine total degree comparisons for these.
    for (auto order : {MonomialOrder::degrevlex, MonomialOrder::lex}) {
        CHECK(mono_less(Monomial::one(), x, order));
        CHECK(!mono_less(x, x, order));
    }
    // degrevlex compares degree first, lex does not.
    CHECK(mono_less(y, x2, MonomialOrder::degrevlex));
    CHECK(mono_less(x2, mono_mul(x, y), MonomialOrder::lex) == false);
    CHECK(mono_less(mono_mul(x, y), x2, MonomialOrder::lex));
    // In degrevlex, x*y beats y^2 but loses to x^2.
    CHECK(mono_less(mono_mul(y, y), mono_mul(x, y), MonomialOrder::degrevlex));
    CHECK(mono_less(mono_mul(x, y), x2, MonomialOrder::degrevlex));
}

TEST_CASE("polynomial arithmetic drops zero terms") {
    Poly p = xy(1, 0) + xy(0, 1);
    Poly q = xy(1, 0) - xy(0, 1);
    Poly s = p + q; // 2x
    CHECK(s.terms.size() == 1);
    CHECK(s == xy(1, 0, Rat(2)));
    CHECK((p - p).is_zero());
    CHECK((p * q) == xy(2, 0) - xy(0, 2));
    CHECK(poly_pow(p, 2) == xy(2, 0) + xy(1, 1, Rat(2)) + xy(0, 2));
    CHECK(poly_pow(p, 0) == Poly::constant(2, Rat(1)));
    CHECK((Rat(0) * p).is_zero());
}

TEST_CASE("groebner basis of {x^2-1, xy-1}") {
    Poly f = xy(2, 0) - Poly::constant(2, Rat(1));
    Poly g = xy(1, 1) - Poly::constant(2, Rat(1));
    GroebnerBasis gb = groebner({f, g});

    auto dim = quotient_dimension(gb);
    REQUIRE(dim.has_value());
    CHECK(*dim == 2);

    // Basis {1, v} where v is whichever of x, y survives the rewrite x = y.
    auto basis = standard_monomials(gb);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == Monomial::one());
    CHECK(basis[1].total_degree() == 1);

    // As classes, x^3 = x = y: all three share one normal form.
    Poly nf_x = normal_form(xy(1, 0), gb);
    CHECK(normal_form(xy(3, 0), gb) == nf_x);
    CHECK(normal_form(xy(0, 1), gb) == nf_x);
    CHECK(nf_x == Poly::monomial(2, basis[1]));
    CHECK(normal_form(f, gb).is_zero());
    CHECK(normal_form(g, gb).is_zero());
}

TEST_CASE("quotient dimension edge cases") {
    // Unit ideal: zero-dimensional quotient with empty basis.
    GroebnerBasis unit = groebner({Poly::constant(2, Rat(3))});
    CHECK(quotient_dimension(unit) == 0);
    CHECK(standard_monomials(unit).empty());

    // <x> in k[x,y] leaves y free.
    GroebnerBasis inf = groebner({xy(1, 0)});
    CHECK(!quotient_dimension(inf).has_value());
    CHECK_THROWS_AS(standard_monomials(inf), std::domain_error);

    // <x^2, xy, y^2>: basis {1, x, y}.
    GroebnerBasis sq = groebner({xy(2, 0), xy(1, 1), xy(0, 2)});
    CHECK(quotient_dimension(sq) == 3);
    auto mons = standard_monomials(sq);
    REQUIRE(mons.size() == 3);
    CHECK(mons[0] == Monomial::one());

    // <x - 1>: normal forms are constants in the single-variable ring.
    Poly xm1 = Poly::variable(1, 0) - Poly::constant(1, Rat(1));
    GroebnerBasis line = groebner({xm1});
    CHECK(quotient_dimension(line) == 1);
    CHECK(normal_form(poly_pow(Poly::variable(1, 0), 7), line) ==
          Poly::constant(1, Rat(1)));
}

TEST_CASE("normal form is a linear idempotent projection") {
    Poly f = xy(2, 0) - Poly::constant(2, Rat(1));
    Poly g = xy(1, 1) - Poly::constant(2, Rat(1));
    GroebnerBasis gb = groebner({f, g});

    std::mt19937 rng(99u);
    std::uniform_int_distribution<int> expo(0, 3);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 30; ++trial) {
        Poly p = Poly::zero(2);
        Poly q = Poly::zero(2);
        for (int k = 0; k < 4; ++k) {
            p = p + xy(expo(rng), expo(rng), Rat(coef(rng)));
            q = q + xy(expo(rng), expo(rng), Rat(coef(rng)));
        }
        Poly np = normal_form(p, gb);
        Poly nq = normal_form(q, gb);
        CHECK(normal_form(np, gb) == np);
        CHECK(normal_form(p + q, gb) == np + nq);
        CHECK(normal_form(p * f, gb).is_zero());
        CHECK(normal_form(p * g + q * f, gb).is_zero());
    }
}

TEST_CASE("s-polynomials of a groebner basis reduce to zero") {
    std::vector<Poly> gens = {xy(2, 0) - xy(0, 1), xy(1, 2) - Poly::constant(2, Rat(1))};
    for (auto order : {MonomialOrder::degrevlex, MonomialOrder::lex}) {
        GroebnerBasis gb = groebner(gens, order);
        for (size_t i = 0; i < gb.gens.size(); ++i)
            for (size_t j = i + 1; j < gb.gens.size(); ++j)
                CHECK(normal_form(s_polynomial(gb.gens[i], gb.gens[j], order), gb).is_zero());
        // Generators are monic and reduced against each other.
        for (const auto& p : gb.gens) CHECK(p.leading_coeff(order) == 1);
    }
}

TEST_CASE("quotient dimension is independent of the monomial order") {
    std::vector<std::vector<Poly>> ideals = {
        {xy(2, 0) - Poly::constant(2, Rat(1)), xy(1, 1) - Poly::constant(2, Rat(1))},
        {xy(2, 0), xy(1, 1), xy(0, 2)},
        {xy(3, 0) - xy(0, 1), xy(0, 2) - Poly::constant(2, Rat(1))},
    };
    for (const auto& gens : ideals) {
        auto d1 = quotient_dimension(groebner(gens, MonomialOrder::degrevlex));
        auto d2 = quotient_dimension(groebner(gens, MonomialOrder::lex));
        CHECK(d1 == d2);
    }
}

TEST_CASE("polynomial rendering") {
    std::vector<std::string> names = {"x", "y"};
    CHECK(poly_to_string(Poly::zero(2), names) == "0");
    CHECK(poly_to_string(Poly::constant(2, Rat(-3)), names) == "-3");
    Poly p = xy(2, 1, Rat(1)) - xy(0, 1, make_rat(1, 2)) + Poly::constant(2, Rat(5));
    CHECK(poly_to_string(p, names) == "x^2*y - 1/2*y + 5");
    CHECK(monomial_to_string(Monomial::one(), names) == "1");
    CHECK(monomial_to_string(mono_mul(Monomial::var(0), Monomial::var(1, 3)), names) == "x*y^3");
}

TEST_CASE("truncated geometric series") {
    // c = 0: only the m = 0 term survives.
    TruncatedSeries s = geometric_series(Poly::zero(1), 1, 3);
    CHECK(s.coeff[0] == Poly::constant(1, Rat(1)));
    for (int t = 1; t <= 3; ++t) CHECK(s.coeff[t].is_zero());

    // c = 1, h = 1: all-ones series.
    s = geometric_series(Poly::constant(1, Rat(1)), 1, 3);
    for (int t = 0; t <= 3; ++t) CHECK(s.coeff[t] == Poly::constant(1, Rat(1)));

    // c = u, h = 2: 1 + u t^2 + u^2 t^4.
    Poly u = Poly::variable(1, 0);
    s = geometric_series(u, 2, 5);
    CHECK(s.coeff[0] == Poly::constant(1, Rat(1)));
    CHECK(s.coeff[1].is_zero());
    CHECK(s.coeff[2] == u);
    CHECK(s.coeff[3].is_zero());
    CHECK(s.coeff[4] == poly_pow(u, 2));
    CHECK(s.coeff[5].is_zero());
}

TEST_CASE("geometric series inverts 1 - c t^h") {
    Poly u = Poly::variable(1, 0);
    for (int h = 1; h <= 3; ++h) {
        for (const Poly& c : {Poly::constant(1, Rat(2)), u, poly_pow(u, 2) - u}) {
            int T = 7;
            TruncatedSeries geo = geometric_series(c, h, T);
            // (1 - c t^h) * geo == 1
            TruncatedSeries lhs =
                series_sub(geo, series_shift(series_scale(c, geo), h));
            CHECK(lhs.coeff[0] == Poly::constant(1, Rat(1)));
            for (int t = 1; t <= T; ++t) CHECK(lhs.coeff[t].is_zero());
        }
    }
}

TEST_CASE("series arithmetic") {
    Poly u = Poly::variable(1, 0);
    // all-ones series against u * t^2 * (all ones)
    TruncatedSeries a = geometric_series(Poly::constant(1, Rat(1)), 1, 4);
    TruncatedSeries b = series_shift(series_scale(u, a), 2);
    TruncatedSeries sum = series_add(a, b);
    CHECK(sum.coeff[1] == Poly::constant(1, Rat(1)));
    CHECK(sum.coeff[2] == Poly::constant(1, Rat(1)) + u);
    TruncatedSeries prod = series_mul(b, b);
    CHECK(prod.coeff[3].is_zero());
    CHECK(prod.coeff[4] == poly_pow(u, 2));
    CHECK(series_sub(sum, b).coeff[2] == Poly::constant(1, Rat(1)));
    CHECK(series_zero(1, 4).coeff[4].is_zero());
}
