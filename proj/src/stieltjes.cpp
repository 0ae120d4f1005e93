#include "hsi/stieltjes.hpp"

#include <stdexcept>

#include "hsi/errors.hpp"
#include "hsi/minors.hpp"

namespace hsi {

namespace {

[[noreturn]] void no_cf(const std::string& name, int j) {
    throw DomainError("no-cf", name + "_" + std::to_string(j) + " vanishes");
}

}  // namespace

StieltjesCF stieltjes_expand(const RationalFunction& f) {
    RationalFunction r = f.reduced();
    if (r.num.degree() > r.den.degree())
        throw DomainError("unsupported-growth", "Stieltjes expansion needs a function finite at infinity");
    StieltjesCF cf;
    cf.r = r.den.degree();
    LaurentSeries s = laurent_expand(r, cf.r);
    cf.c0 = s.s_minus1;
    if (cf.r == 0) return cf;
    HankelMinors h = hankel_minors(s, cf.r);
    for (int j = 1; j <= cf.r; ++j) {
        if (h.d(j) == 0) no_cf("D", j);
        if (j < cf.r && h.dhat(j) == 0) no_cf("Dhat", j);
    }
    bool pole_at_zero = r.den(Q(0)) == 0;
    if (pole_at_zero != (h.dhat(cf.r) == 0)) throw std::logic_error("Dhat_r vanishing disagrees with a pole at 0");
    cf.tail = pole_at_zero ? CfTail::odd : CfTail::even;
    for (int j = 1; j <= cf.r; ++j) {
        cf.c.push_back(h.dhat(j - 1) * h.dhat(j - 1) / (h.d(j - 1) * h.d(j)));
        if (j == cf.r && pole_at_zero) break;
        cf.c.push_back(-h.d(j) * h.d(j) / (h.dhat(j - 1) * h.dhat(j)));
    }
    return cf;
}

StieltjesCF cf_from_hurwitz_minors(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("invalid-input", "continued fraction of the zero polynomial");
    int n = p.degree();
    HurwitzMinors hm = hurwitz_minors(p);
    int t = 0;
    while (t < n && hm.d(t + 1) != 0) ++t;
    for (int j = t + 1; j <= n; ++j)
        if (hm.d(j) != 0) throw DomainError("no-cf", "Delta_" + std::to_string(t + 1) + " vanishes");
    Q a0 = p.a(0);
    // Delta_{-1} = 1/a0
    auto D = [&](int j) { return j == -1 ? Q(1) / a0 : hm.d(j); };
    StieltjesCF cf;
    if (n % 2 == 0) {
        cf.c0 = 0;
        for (int i = 1; i <= t; ++i) cf.c.push_back(D(i - 1) * D(i - 1) / (D(i - 2) * D(i)));
    } else {
        if (t == 0) throw DomainError("no-cf", "Delta_1 vanishes");
        cf.c0 = D(0) * D(0) / (D(-1) * D(1));
        for (int i = 1; i <= t - 1; ++i) cf.c.push_back(D(i) * D(i) / (D(i - 1) * D(i + 1)));
    }
    int k = cf.size();
    cf.tail = (k % 2 == 0) ? CfTail::even : CfTail::odd;
    cf.r = (k + 1) / 2;
    return cf;
}

ExtendedCF extended_cf(const Polynomial& p) {
    int n = p.degree();
    if (n < 3 || n % 2 == 0 || p.a(1) != 0 || p.a(3) == 0)
        throw DomainError("invalid-input", "extended continued fraction needs odd degree >= 3, a1 = 0, a3 != 0");
    ExtendedCF out;
    Q ratio = p.a(0) / p.a(3);
    out.c_minus1 = -ratio;
    RationalFunction phi = associated_function(p).reduced();
    RationalFunction linear(Polynomial{ratio, Q(0)}, Polynomial{Q(1)});
    out.inner = stieltjes_expand(phi - linear);
    return out;
}

RationalFunction cf_reconstruct(const StieltjesCF& cf) {
    RationalFunction c0(Polynomial{cf.c0}, Polynomial{Q(1)});
    int k = cf.size();
    if (k == 0) return c0.reduced();
    auto term = [&](int i) {
        return i % 2 == 1 ? RationalFunction(Polynomial{cf.at(i), Q(0)}, Polynomial{Q(1)})
                          : RationalFunction(Polynomial{cf.at(i)}, Polynomial{Q(1)});
    };
    RationalFunction t = term(k);
    for (int i = k - 1; i >= 1; --i) t = term(i) + t.reciprocal();
    return c0 + t.reciprocal();
}

PoleSignSummary pole_sign_summary(const StieltjesCF& cf) {
    PoleSignSummary out;
    out.r_function = true;
    for (int i = 1; i <= cf.size(); ++i) {
        if (i % 2 == 1) {
            if (cf.at(i) <= 0) out.r_function = false;
        } else if (cf.at(i) > 0) {
            ++out.negative_poles;
        }
    }
    return out;
}

}  // namespace hsi
