#include <doctest.h>

#include <algorithm>

#include "hsi/errors.hpp"
#include "hsi/oracle.hpp"
#include "support.hpp"

using namespace hsi;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }
Polynomial U(std::initializer_list<Q> c) { return Polynomial(c); }

std::vector<double> sorted_real_parts(const RootSet& rs) {
    std::vector<double> out;
    for (auto z : rs.roots) out.push_back(z.real());
    std::sort(out.begin(), out.end());
    return out;
}

RootSet roots_of(std::initializer_list<double> xs) {
    RootSet rs;
    for (double x : xs) rs.roots.emplace_back(x, 0.0);
    return rs;
}

StructureSpec spec_of(Label l, int n) {
    StructureSpec s;
    s.label = l;
    s.degree = n;
    return s;
}

}  // namespace

TEST_CASE("numeric root examples") {
    auto r = sorted_real_parts(numeric_roots(P("1,1,-2")));
    REQUIRE(r.size() == 2);
    CHECK(r[0] == doctest::Approx(-2).epsilon(1e-12));
    CHECK(r[1] == doctest::Approx(1).epsilon(1e-12));
    r = sorted_real_parts(numeric_roots(P("1,2,1")));
    REQUIRE(r.size() == 2);
    CHECK(r[0] == doctest::Approx(-1).epsilon(1e-6));
    CHECK(r[1] == doctest::Approx(-1).epsilon(1e-6));
    r = sorted_real_parts(numeric_roots(P("1,4,1,-6")));
    REQUIRE(r.size() == 3);
    CHECK(r[0] == doctest::Approx(-3).epsilon(1e-12));
    CHECK(r[1] == doctest::Approx(-2).epsilon(1e-12));
    CHECK(r[2] == doctest::Approx(1).epsilon(1e-12));
    CHECK(numeric_roots(P("1,0,0")).roots.size() == 2);
}

TEST_CASE("root classification examples") {
    auto v = classify_by_roots(roots_of({1, -2, -3}));
    CHECK_FALSE(v.indeterminate);
    CHECK(v.report.label == Label::generalized_hurwitz);
    CHECK(v.report.order_k == 1);
    v = classify_by_roots(roots_of({-1, -1}));
    CHECK(v.report.label == Label::hurwitz_stable);
    v = classify_by_roots(roots_of({1, -2}));
    CHECK(v.report.label == Label::self_interlacing);
    CHECK(v.report.si_type == SiType::I);
    v = classify_by_roots(roots_of({1e-6, -1}));
    CHECK(v.indeterminate);
    RootSet axis;
    axis.roots = {{0.0, 1.0}, {0.0, -1.0}, {-1.0, 0.0}};
    v = classify_by_roots(axis);
    CHECK(v.report.label == Label::quasi_stable);
    CHECK(v.report.degeneracy_m == 2);
}

TEST_CASE("generator examples") {
    StructureSpec s = spec_of(Label::self_interlacing, 2);
    s.real_roots = {1, -2};
    CHECK(generate_instance(s, 0).p == P("1,1,-2"));
    s = spec_of(Label::hurwitz_stable, 2);
    s.real_roots = {-1, -1};
    CHECK(generate_instance(s, 0).p == P("1,2,1"));
    s = spec_of(Label::generalized_hurwitz, 3);
    s.order_k = 1;
    s.real_roots = {1, -2, -3};
    CHECK(generate_instance(s, 0).p == P("1,4,1,-6"));
    s = spec_of(Label::hurwitz_stable, 2);
    s.real_roots = {1, -2};
    CHECK_THROWS_AS(generate_instance(s, 0), DomainError);
    s = spec_of(Label::generalized_hurwitz, 3);
    s.order_k = 3;
    CHECK_THROWS_AS(generate_instance(s, 0), DomainError);
    CHECK(expand_roots({Q(1)}, {ComplexPair{Q(-1), Q(2)}}) == P("1,1,3,-5"));
}

TEST_CASE("generator is deterministic") {
    StructureSpec s = spec_of(Label::generalized_hurwitz, 7);
    s.order_k = 2;
    CHECK(generate_instance(s, 5).p == generate_instance(s, 5).p);
}

TEST_CASE("strange experiment examples") {
    auto r = strange_experiment(P("1,2,1"));
    CHECK(r.q == P("1,-2,-1"));
    CHECK(r.q_counts.rhp == 1);
    CHECK(r.q_counts.lhp == 1);
    CHECK_FALSE(r.q_counts.has_nonreal);
    CHECK(r.q_counts_hold);
    CHECK_FALSE(r.q_counts.interlacing);
    auto roots = sorted_real_parts(r.q_roots);
    CHECK(roots[0] == doctest::Approx(1 - std::sqrt(2.0)));
    CHECK(roots[1] == doctest::Approx(1 + std::sqrt(2.0)));
    try {
        strange_experiment(P("1,1,-2"));
        FAIL("expected precondition error");
    } catch (const DomainError& e) {
        CHECK(e.kind() == "precondition");
    }
}

TEST_CASE("partial fraction examples") {
    auto pf = numeric_partial_fractions(RationalFunction(U({2}), U({1, 1})));
    REQUIRE(pf.poles.size() == 1);
    CHECK(pf.poles[0] == doctest::Approx(-1));
    CHECK(pf.residues[0] == doctest::Approx(2));
    pf = numeric_partial_fractions(RationalFunction(U({1, 1}), U({4, -6})));
    REQUIRE(pf.poles.size() == 1);
    CHECK(pf.poles[0] == doctest::Approx(1.5));
    CHECK(pf.residues[0] == doctest::Approx(0.625));
    CHECK(pf.beta == doctest::Approx(0.25));
    CHECK_THROWS_AS(numeric_partial_fractions(RationalFunction(U({1}), U({1, 0, 1}))), DomainError);
}

TEST_CASE("oracle agrees with construction and with the classifier") {
    struct Case {
        Label label;
        SiType type;
        std::optional<int> m;
    };
    std::vector<Case> cases = {{Label::hurwitz_stable, SiType::I, {}},
                               {Label::quasi_stable, SiType::I, 1},
                               {Label::quasi_stable, SiType::I, 2},
                               {Label::self_interlacing, SiType::I, {}},
                               {Label::self_interlacing, SiType::II, {}},
                               {Label::almost_self_interlacing, SiType::II, {}},
                               {Label::quasi_self_interlacing, SiType::I, 2}};
    int checked = 0;
    for (const Case& c : cases)
        for (int n = 1; n <= 8; ++n)
            for (std::uint64_t seed = 0; seed < 6; ++seed) {
                StructureSpec s = spec_of(c.label, n);
                s.si_type = c.type;
                s.degeneracy_m = c.m;
                Instance in;
                try {
                    in = generate_instance(s, seed);
                } catch (const DomainError&) {
                    continue;
                }
                auto v = classify_by_roots(numeric_roots(in.p));
                CHECK_FALSE(v.indeterminate);
                auto r = classify(in.p);
                CHECK(v.report.label == c.label);
                CHECK(r.label == c.label);
                CHECK(r.si_type == v.report.si_type);
                CHECK(r.order_k == v.report.order_k);
                CHECK(r.degeneracy_m == v.report.degeneracy_m);
                ++checked;
            }
    CHECK(checked > 250);
}

TEST_CASE("r-function certificate matches numeric partial fractions") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> root(-16, 16);
    int positive = 0;
    int negative = 0;
    for (int t = 0; t < 300; ++t) {
        int n = 2 + static_cast<int>(rng() % 7);
        std::vector<Q> roots;
        while (static_cast<int>(roots.size()) < n) {
            Q x(root(rng), 4);
            x.canonicalize();
            if (x == 0 || std::find(roots.begin(), roots.end(), x) != roots.end()) continue;
            roots.push_back(x);
        }
        Polynomial p = hsi::testing::from_roots(roots);
        RationalFunction phi;
        try {
            phi = associated_function(p).reduced();
        } catch (const DomainError&) {
            continue;
        }
        bool certified = is_r_function(phi).has_value();
        bool numeric = true;
        try {
            auto pf = numeric_partial_fractions(phi);
            numeric = pf.alpha >= 0;
            for (double g : pf.residues) numeric = numeric && g > 0;
        } catch (const DomainError&) {
            numeric = false;
        }
        CHECK(certified == numeric);
        (certified ? positive : negative)++;
    }
    CHECK(positive > 20);
    CHECK(negative > 20);
}

TEST_CASE("poles of the associated function sit on one side") {
    for (int n = 2; n <= 8; ++n)
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            auto stable = generate_instance(spec_of(Label::hurwitz_stable, n), seed);
            for (double w : numeric_partial_fractions(associated_function(stable.p)).poles) CHECK(w < 0);
            auto si = generate_instance(spec_of(Label::self_interlacing, n), seed);
            for (double w : numeric_partial_fractions(associated_function(si.p)).poles) CHECK(w > 0);
        }
}
