#include <doctest.h>

#include <algorithm>

#include "hsi/errors.hpp"
#include "hsi/oracle.hpp"
#include "hsi/stieltjes.hpp"
#include "support.hpp"

using namespace hsi;
using hsi::testing::random_polynomial;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }
Polynomial U(std::initializer_list<Q> c) { return Polynomial(c); }

Q grid(int j, int d) {
    Q v(j, d);
    v.canonicalize();
    return v;
}

struct PartialFractions {
    RationalFunction f;
    int negative = 0;
    int positive = 0;
    bool zero = false;
};

// beta + sum gamma_j / (u - omega_j), gamma_j > 0, distinct omega_j on a quarter grid
PartialFractions random_r_function(std::mt19937_64& rng, int poles, int sign_mode) {
    std::vector<int> slots;
    for (int j = -24; j <= 24; ++j) {
        if (sign_mode < 0 && j > 0) continue;
        if (sign_mode > 0 && j < 0) continue;
        slots.push_back(j);
    }
    std::shuffle(slots.begin(), slots.end(), rng);
    PartialFractions out;
    std::uniform_int_distribution<int> res(1, 12);
    std::uniform_int_distribution<int> beta(-8, 8);
    out.f = RationalFunction(Polynomial{grid(beta(rng), 2)}, Polynomial{Q(1)});
    for (int i = 0; i < poles; ++i) {
        Q w = grid(slots[static_cast<size_t>(i)], 4);
        if (w < 0) ++out.negative;
        if (w > 0) ++out.positive;
        if (w == 0) out.zero = true;
        out.f = out.f + RationalFunction(Polynomial{grid(res(rng), 3)}, Polynomial{Q(1), -w});
    }
    return out;
}

}  // namespace

TEST_CASE("expansion examples") {
    auto cf = stieltjes_expand(RationalFunction(U({2}), U({1, 1})));
    CHECK(cf.c0 == 0);
    CHECK(cf.c == std::vector<Q>{Q(1, 2), 2});
    CHECK(cf.tail == CfTail::even);
    cf = stieltjes_expand(RationalFunction(U({1}), U({1, -2})));
    CHECK(cf.c0 == 0);
    CHECK(cf.c == std::vector<Q>{1, Q(-1, 2)});
    cf = stieltjes_expand(RationalFunction(U({1, 1}), U({4, -6})));
    CHECK(cf.c0 == Q(1, 4));
    // Phi - 1/4 = (5/8) / (u - 3/2)
    CHECK(cf.c == std::vector<Q>{Q(8, 5), Q(-5, 12)});
    cf = stieltjes_expand(RationalFunction(U({1}), U({1, 0})));
    CHECK(cf.c == std::vector<Q>{1});
    CHECK(cf.tail == CfTail::odd);
    try {
        stieltjes_expand(RationalFunction(U({1, 0}), U({1, 0, 1})));
        FAIL("expected no-cf");
    } catch (const DomainError& e) {
        CHECK(e.kind() == "no-cf");
    }
}

TEST_CASE("continued fraction from hurwitz minors") {
    auto cf = cf_from_hurwitz_minors(P("1,2,1"));
    CHECK(cf.c == std::vector<Q>{Q(1, 2), 2});
    cf = cf_from_hurwitz_minors(P("1,1,-2"));
    CHECK(cf.c == std::vector<Q>{1, Q(-1, 2)});
    cf = cf_from_hurwitz_minors(P("1,4,1,-6"));
    CHECK(cf.c0 == Q(1, 4));
    CHECK(cf == stieltjes_expand(associated_function(P("1,4,1,-6"))));
    CHECK_THROWS_AS(cf_from_hurwitz_minors(P("1,0,1,1")), DomainError);
}

TEST_CASE("extended form for odd degree with a1 = 0") {
    auto e = extended_cf(P("1,0,1,3"));
    CHECK(e.c_minus1 == Q(-1, 3));
    CHECK(e.inner.c0 == Q(1, 3));
    CHECK(e.inner.c.empty());
    Polynomial p = P("2,0,3,5,1,7");
    e = extended_cf(p);
    RationalFunction linear(Polynomial{-e.c_minus1, Q(0)}, Polynomial{Q(1)});
    CHECK((linear + cf_reconstruct(e.inner)).equivalent(associated_function(p)));
    CHECK_THROWS_AS(extended_cf(P("1,1,1,1")), DomainError);
}

TEST_CASE("reconstruction examples") {
    StieltjesCF cf;
    cf.c = {Q(1, 2), 2};
    CHECK(cf_reconstruct(cf).equivalent(RationalFunction(U({2}), U({1, 1}))));
    cf.c = {1, Q(-1, 2)};
    CHECK(cf_reconstruct(cf).equivalent(RationalFunction(U({1}), U({1, -2}))));
    StieltjesCF constant;
    constant.c0 = 5;
    CHECK(cf_reconstruct(constant).equivalent(RationalFunction(U({5}), U({1}))));
}

TEST_CASE("pole sign summary examples") {
    auto s = pole_sign_summary(stieltjes_expand(RationalFunction(U({2}), U({1, 1}))));
    CHECK(s.negative_poles == 1);
    CHECK(s.r_function);
    s = pole_sign_summary(stieltjes_expand(RationalFunction(U({1}), U({1, -2}))));
    CHECK(s.negative_poles == 0);
    CHECK(s.r_function);
    StieltjesCF bad;
    bad.c = {-1, 1};
    CHECK_FALSE(pole_sign_summary(bad).r_function);
}

TEST_CASE("reconstruct after expand gives the reduced function") {
    std::mt19937_64 rng(31);
    int checked = 0;
    for (int t = 0; t < 300; ++t) {
        auto pf = random_r_function(rng, 1 + static_cast<int>(rng() % 6), 0);
        StieltjesCF cf;
        try {
            cf = stieltjes_expand(pf.f);
        } catch (const DomainError&) {
            continue;  // mixed pole signs may make some Dhat_j vanish
        }
        CHECK(cf_reconstruct(cf).equivalent(pf.f));
        CHECK(cf_reconstruct(cf).reduced().den == pf.f.reduced().den);
        ++checked;
    }
    CHECK(checked > 250);
}

TEST_CASE("expand after reconstruct is the identity") {
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> v(-12, 12);
    int checked = 0;
    for (int t = 0; t < 300; ++t) {
        StieltjesCF cf;
        cf.c0 = grid(v(rng), 3);
        int k = 1 + static_cast<int>(rng() % 8);
        for (int i = 0; i < k; ++i) {
            int x = 0;
            while (x == 0) x = v(rng);
            cf.c.push_back(grid(x, 2));
        }
        cf.tail = k % 2 == 0 ? CfTail::even : CfTail::odd;
        cf.r = (k + 1) / 2;
        StieltjesCF back;
        try {
            back = stieltjes_expand(cf_reconstruct(cf));
        } catch (const DomainError&) {
            continue;
        }
        CHECK(back == cf);
        ++checked;
    }
    CHECK(checked > 250);
}

TEST_CASE("nonpositive poles give positive coefficients") {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 200; ++t) {
        auto pf = random_r_function(rng, 1 + static_cast<int>(rng() % 6), -1);
        auto cf = stieltjes_expand(pf.f);
        for (Q c : cf.c) CHECK(c > 0);
        CHECK(cf.tail == (pf.zero ? CfTail::odd : CfTail::even));
        auto s = pole_sign_summary(cf);
        CHECK(s.r_function);
        CHECK(s.negative_poles == pf.negative);
    }
}

TEST_CASE("nonnegative poles give alternating coefficients") {
    std::mt19937_64 rng(34);
    for (int t = 0; t < 200; ++t) {
        auto pf = random_r_function(rng, 1 + static_cast<int>(rng() % 6), 1);
        auto cf = stieltjes_expand(pf.f);
        for (int i = 1; i <= cf.size(); ++i) CHECK((i % 2 == 1 ? cf.at(i) : Q(-cf.at(i))) > 0);
        auto s = pole_sign_summary(cf);
        CHECK(s.r_function);
        CHECK(s.negative_poles == 0);
    }
}

TEST_CASE("mixed poles: negative count from even coefficients") {
    std::mt19937_64 rng(35);
    int checked = 0;
    for (int t = 0; t < 200; ++t) {
        auto pf = random_r_function(rng, 1 + static_cast<int>(rng() % 6), 0);
        PoleSignSummary s;
        try {
            s = pole_sign_summary(stieltjes_expand(pf.f));
        } catch (const DomainError&) {
            continue;
        }
        CHECK(s.r_function);
        CHECK(s.negative_poles == pf.negative);
        ++checked;
    }
    CHECK(checked > 150);
}

TEST_CASE("positive coefficients give negative poles numerically") {
    std::mt19937_64 rng(36);
    std::uniform_int_distribution<int> v(1, 12);
    for (int t = 0; t < 100; ++t) {
        StieltjesCF cf;
        int k = 2 * (1 + static_cast<int>(rng() % 4));
        for (int i = 0; i < k; ++i) cf.c.push_back(grid(v(rng), 4));
        auto pf = numeric_partial_fractions(cf_reconstruct(cf));
        CHECK(pf.poles.size() == static_cast<size_t>(k / 2));
        for (double w : pf.poles) CHECK(w < 0);
        for (double g : pf.residues) CHECK(g > 0);
    }
}

TEST_CASE("hurwitz formula agrees with the hankel expansion") {
    std::mt19937_64 rng(37);
    int checked = 0;
    for (int t = 0; t < 300; ++t) {
        Polynomial p = random_polynomial(rng, 1 + static_cast<int>(rng() % 8));
        auto hm = hurwitz_minors(p);
        if (std::find(hm.delta.begin(), hm.delta.end(), Q(0)) != hm.delta.end()) continue;
        CHECK(cf_from_hurwitz_minors(p) == stieltjes_expand(associated_function(p)));
        ++checked;
    }
    CHECK(checked > 200);
}
