#include <doctest.h>

#include "hsi/errors.hpp"
#include "hsi/polyalg.hpp"
#include "support.hpp"

using namespace hsi;
using hsi::testing::random_polynomial;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }
Polynomial U(std::initializer_list<Q> c) { return Polynomial(c); }

}  // namespace

TEST_CASE("parse_rational accepts integers and fractions only") {
    CHECK(parse_rational("3") == Q(3));
    CHECK(parse_rational("-6/4") == Q(-3, 2));
    CHECK(parse_rational("+2/1") == Q(2));
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1e3"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("parse_polynomial names the bad token") {
    CHECK(P("1,4,1,-6").to_string() == "1,4,1,-6");
    CHECK(P("0,0,1,2").to_string() == "1,2");
    try {
        parse_polynomial("1,0.5,2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("0.5") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_polynomial(""), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1,,2"), ParseError);
}

TEST_CASE("even/odd split examples") {
    auto s = even_odd_split(P("1,2,1"));
    CHECK(s.p0 == U({1, 1}));
    CHECK(s.p1 == U({2}));
    s = even_odd_split(P("1,4,1,-6"));
    CHECK(s.p0 == U({4, -6}));
    CHECK(s.p1 == U({1, 1}));
    s = even_odd_split(P("1,0"));
    CHECK(s.p0.is_zero());
    CHECK(s.p1 == U({1}));
}

TEST_CASE("associated function examples") {
    auto f = associated_function(P("1,2,1"));
    CHECK(f.num == U({2}));
    CHECK(f.den == U({1, 1}));
    f = associated_function(P("1,1,-2"));
    CHECK(f.num == U({1}));
    CHECK(f.den == U({1, -2}));
    f = associated_function(P("1,4,1,-6"));
    CHECK(f.num == U({1, 1}));
    CHECK(f.den == U({4, -6}));
    try {
        associated_function(P("1,0,1,0"));
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(e.kind() == "degenerate-split");
    }
}

TEST_CASE("reflect examples") {
    CHECK(reflect(P("1,1,-2")) == P("1,-1,-2"));
    CHECK(reflect(P("1,4,1,-6")) == P("-1,4,-1,-6"));
    CHECK(reflect(P("5")) == P("5"));
}

TEST_CASE("gcd examples") {
    CHECK(poly_gcd(P("1,0,-1"), P("1,-1")) == P("1,-1"));
    CHECK(poly_gcd(P("1,2,1"), P("2")) == P("1"));
    CHECK(poly_gcd(P("1,0,-4"), P("1,-1,-2")) == P("1,-2"));
    CHECK_THROWS_AS(poly_gcd(Polynomial{}, Polynomial{}), DomainError);
}

TEST_CASE("laurent expansion examples") {
    auto s = laurent_expand(RationalFunction(U({2}), U({1, 1})), 2);
    CHECK(s.s_minus1 == 0);
    CHECK(s.s[0] == 2);
    CHECK(s.s[1] == -2);
    CHECK(s.s[2] == 2);
    s = laurent_expand(RationalFunction(U({1}), U({1, -2})), 2);
    CHECK(s.s == std::vector<Q>{1, 2, 4, 8});
    s = laurent_expand(RationalFunction(U({1, 1}), U({4, -6})), 1);
    CHECK(s.s_minus1 == Q(1, 4));
    CHECK(s.s[0] == Q(5, 8));
    CHECK(s.s[1] == Q(15, 16));
    try {
        laurent_expand(RationalFunction(U({1, 0, 0}), U({1})), 1);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(e.kind() == "unsupported-growth");
    }
}

TEST_CASE("division identity") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        Polynomial a = random_polynomial(rng, static_cast<int>(rng() % 9));
        Polynomial b = random_polynomial(rng, static_cast<int>(rng() % 5));
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("gcd divides both inputs") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
        Polynomial c = random_polynomial(rng, static_cast<int>(rng() % 3));
        Polynomial a = c * random_polynomial(rng, static_cast<int>(rng() % 4));
        Polynomial b = c * random_polynomial(rng, static_cast<int>(rng() % 4));
        Polynomial g = poly_gcd(a, b);
        CHECK(g.leading() == 1);
        CHECK(divmod(a, g).second.is_zero());
        CHECK(divmod(b, g).second.is_zero());
        CHECK(g.degree() >= c.degree());
    }
}

TEST_CASE("split identity up to degree 12") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 300; ++t) {
        Polynomial p = random_polynomial(rng, static_cast<int>(rng() % 13));
        auto s = even_odd_split(p);
        CHECK(s.p0.in_square() + Polynomial{1, 0} * s.p1.in_square() == p);
        CHECK(reflect(reflect(p)) == p);
    }
}

TEST_CASE("odd-even quotient identity at rational points") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 200; ++t) {
        Polynomial p = random_polynomial(rng, 1 + static_cast<int>(rng() % 10));
        auto s = even_odd_split(p);
        if (s.p0.is_zero()) continue;
        for (int k = -3; k <= 3; ++k) {
            Q x(k, 2);
            x.canonicalize();
            Q plus = p(x) + p(-x);
            Q minus = p(x) - p(-x);
            // z Phi(z^2) (p(z) + p(-z)) = p(z) - p(-z), denominators cleared
            CHECK(x * s.p1(x * x) * plus == minus * s.p0(x * x));
        }
    }
}

TEST_CASE("laurent recomposition") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        int dd = 1 + static_cast<int>(rng() % 5);
        Polynomial den = random_polynomial(rng, dd);
        Polynomial num = random_polynomial(rng, static_cast<int>(rng() % (dd + 2)));
        int pairs = 1 + static_cast<int>(rng() % 5);
        LaurentSeries s = laurent_expand(RationalFunction(num, den), pairs);
        REQUIRE(s.s.size() == static_cast<size_t>(2 * pairs));
        auto series = [&](int power) -> Q {
            if (power == 1) return s.s_minus2;
            if (power == 0) return s.s_minus1;
            return s.s[static_cast<size_t>(-power - 1)];
        };
        for (int e = dd + 1; e >= dd - 2 * pairs; --e) {
            Q sum = 0;
            for (int i = 0; i <= dd; ++i) {
                int power = e - i;
                if (power > 1 || power < -2 * pairs) continue;
                sum += den.power_coeff(i) * series(power);
            }
            Q expected = e >= 0 ? num.power_coeff(e) : Q(0);
            CHECK(sum == expected);
        }
    }
}

TEST_CASE("rational function arithmetic") {
    RationalFunction f(U({1}), U({1, 1}));
    RationalFunction g(U({1}), U({1, -1}));
    RationalFunction h = f + g;
    CHECK(h.equivalent(RationalFunction(U({2, 0}), U({1, 0, -1}))));
    CHECK((h - g).equivalent(f));
    CHECK(f.reciprocal().equivalent(RationalFunction(U({1, 1}), U({1}))));
    RationalFunction common(U({1, -1}), U({1, 0, -1}));
    CHECK(common.reduced().den == U({1, 1}));
    CHECK(common.pole_count() == 1);
}
