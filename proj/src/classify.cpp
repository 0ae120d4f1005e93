#include "hsi/classify.hpp"

#include <stdexcept>

#include "hsi/errors.hpp"

namespace hsi {

std::string to_string(Label label) {
    switch (label) {
        case Label::hurwitz_stable: return "hurwitz-stable";
        case Label::quasi_stable: return "quasi-stable";
        case Label::self_interlacing: return "self-interlacing";
        case Label::almost_self_interlacing: return "almost-self-interlacing";
        case Label::quasi_self_interlacing: return "quasi-self-interlacing";
        case Label::generalized_hurwitz: return "generalized-hurwitz";
        case Label::unclassified: return "unclassified";
    }
    return "unclassified";
}

std::string to_string(SiType t) { return t == SiType::I ? "I" : "II"; }

std::optional<RFunctionCertificate> is_r_function(const RationalFunction& f, std::string* reason) {
    auto fail = [&](const std::string& why) -> std::optional<RFunctionCertificate> {
        if (reason) *reason = why;
        return std::nullopt;
    };
    RationalFunction r = f.reduced();
    RFunctionCertificate cert;
    if (r.num.is_zero()) return cert;
    int dn = r.num.degree();
    int dd = r.den.degree();
    if (dn > dd + 1 || dn < dd - 1) return fail("degree gap exceeds one");
    cert.r = dd;
    LaurentSeries s = laurent_expand(r, dd);
    cert.s_minus2 = s.s_minus2;
    if (s.s_minus2 > 0) return fail("s_-2 > 0");
    HankelMinors h = hankel_minors(s, dd);
    cert.D = h.D;
    cert.Dhat = h.Dhat;
    for (int j = 1; j <= dd; ++j)
        if (h.d(j) <= 0) return fail("D_" + std::to_string(j) + " <= 0");
    cert.pole_at_zero = dd > 0 && r.den(Q(0)) == 0;
    PoleSignCount c = pole_sign_count(r, cert);
    cert.negative_poles = c.r_minus;
    cert.positive_poles = c.r_plus;
    return cert;
}

PoleSignCount pole_sign_count(const RationalFunction&, const RFunctionCertificate& cert) {
    PoleSignCount out;
    out.zero_pole = cert.pole_at_zero;
    int k = cert.pole_at_zero ? cert.r - 1 : cert.r;
    std::vector<Q> seq{Q(1)};
    for (int j = 1; j <= k; ++j) seq.push_back(cert.Dhat.at(static_cast<size_t>(j - 1)));
    out.r_minus = scf_frobenius(seq);
    out.r_plus = cert.r - out.r_minus - (cert.pole_at_zero ? 1 : 0);
    return out;
}

Polynomial normalized(const Polynomial& p) { return p.leading() < 0 ? -p : p; }

bool hurwitz_minor_test(const Polynomial& p) {
    Polynomial q = normalized(p);
    if (q.degree() < 1) return !q.is_zero();
    for (const Q& d : hurwitz_minors(q).delta)
        if (d <= 0) return false;
    return true;
}

bool eta_test(const Polynomial& p) {
    Polynomial q = normalized(p);
    if (q.degree() < 1) return !q.is_zero();
    for (const Q& e : hurwitz_minors(q).eta)
        if (e <= 0) return false;
    return true;
}

bool finite_hurwitz_tn_test(const Polynomial& p, int max_order) {
    Polynomial q = normalized(p);
    if (q.degree() < 1) return !q.is_zero();
    QMatrix h = hurwitz_matrix(q);
    if (determinant(h) == 0) return false;
    return total_nonnegativity_scan(h, max_order).totally_nonnegative;
}

bool lienard_chipart(const Polynomial& p, int variant) {
    if (variant < 1 || variant > 4) throw DomainError("invalid-input", "Lienard-Chipart variant must be 1..4");
    Polynomial q = normalized(p);
    int n = q.degree();
    if (n < 1) return !q.is_zero();
    bool skip_one = variant == 2 || variant == 4;
    for (int i = n; i >= 0;) {
        if (q.a(i) <= 0) return false;
        i -= (skip_one && i == n) ? 1 : 2;
    }
    HurwitzMinors hm = hurwitz_minors(q);
    int start = (variant <= 2) ? n - 1 : n;
    for (int j = start; j >= 1; j -= 2)
        if (hm.d(j) <= 0) return false;
    return true;
}

std::optional<int> quasi_stable_degeneracy(const Polynomial& p) {
    Polynomial q = normalized(p);
    int n = q.degree();
    if (n < 1) return q.is_zero() ? std::nullopt : std::optional<int>(0);
    HurwitzMinors hm = hurwitz_minors(q);
    int t = 0;
    while (t < n && hm.d(t + 1) > 0) ++t;
    for (int j = t + 1; j <= n; ++j)
        if (hm.d(j) != 0) return std::nullopt;
    if (t < n) {
        // A shared factor g(z^2) hides zeros from the minors; they sit on the
        // imaginary axis only when g has real nonpositive zeros.
        EvenOddSplit s = even_odd_split(q);
        Polynomial g = poly_gcd(s.p0, s.p1);
        if (g.degree() >= 1) {
            RationalFunction lg(g.derivative(), g);
            auto cert = is_r_function(lg);
            if (!cert || cert->positive_poles != 0) return std::nullopt;
        }
    }
    return n - t;
}

std::optional<GeneralizedOrder> generalized_hurwitz_order(const Polynomial& p) {
    Polynomial q = normalized(p);
    int n = q.degree();
    if (n < 1) return q.is_zero() ? std::nullopt : std::optional<GeneralizedOrder>(GeneralizedOrder{});
    HurwitzMinors hm = hurwitz_minors(q);
    for (int j = n - 1; j >= 1; j -= 2)
        if (hm.d(j) <= 0) return std::nullopt;
    GeneralizedOrder out;
    out.zero_root = q.a(n) == 0;
    std::vector<Q> seq;
    for (int j = out.zero_root ? n - 2 : n; j >= 1; j -= 2) seq.push_back(hm.d(j));
    seq.push_back(Q(1));
    if (seq.front() == 0) return std::nullopt;
    out.k = scf_frobenius(seq) + (out.zero_root ? 1 : 0);
    return out;
}

std::optional<int> generalized_lienard_chipart_order(const Polynomial& p) {
    if (!generalized_hurwitz_order(p)) return std::nullopt;
    Polynomial q = normalized(p);
    int n = q.degree();
    if (n < 1) return 0;
    bool zero = q.a(n) == 0;
    std::vector<Q> l1, l2;
    int top = zero ? n - 2 : n;
    for (int i = top; i >= 0; i -= 2) l1.push_back(q.a(i));
    l1.push_back(Q(1));
    if (!zero) l2.push_back(q.a(n));
    for (int i = n - 1; i >= 0; i -= 2) l2.push_back(q.a(i));
    l2.push_back(Q(1));
    int v1 = strong_sign_changes(l1);
    int v2 = strong_sign_changes(l2);
    if (v1 != v2) throw std::logic_error("coefficient sign-change formulas disagree");
    return v1 + (zero ? 1 : 0);
}

bool self_interlacing_minor_test(const Polynomial& p) {
    Polynomial q = normalized(p);
    int n = q.degree();
    if (n < 1) return false;
    HurwitzMinors hm = hurwitz_minors(q);
    for (int j = n - 1; j >= 1; j -= 2)
        if (hm.d(j) <= 0) return false;
    int half = (n + 1) / 2;
    for (int i = 0; n - 2 * i >= 1; ++i) {
        Q v = hm.d(n - 2 * i);
        if ((half - i) % 2 != 0) v = -v;
        if (v <= 0) return false;
    }
    return true;
}

Polynomial dual_transform(const Polynomial& p) {
    if (p.is_zero()) return p;
    int n = p.degree();
    std::vector<Q> b(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        long e = (n % 2 == 0) ? static_cast<long>(j) * (j - 1) / 2 : static_cast<long>(j) * (j + 1) / 2;
        b[static_cast<size_t>(j)] = (e % 2 == 0) ? p.a(j) : Q(-p.a(j));
    }
    Polynomial mapped(std::move(b));
    EvenOddSplit s = even_odd_split(p);
    Polynomial z{Q(1), Q(0)};
    Polynomial minus_z2{Q(-1), Q(0), Q(0)};
    auto compose = [&](const Polynomial& f) {
        Polynomial acc;
        for (const Q& c : f.coeffs()) acc = acc * minus_z2 + Polynomial{c};
        return acc;
    };
    Polynomial direct = compose(s.p0) - z * compose(s.p1);
    long e = static_cast<long>(n) * (n + 1) / 2;
    if (e % 2 != 0) direct = -direct;
    if (!(direct == mapped)) throw std::logic_error("dual coefficient map disagrees with its defining formula");
    return mapped;
}

std::vector<Polynomial> derivative_family(const Polynomial& p) {
    std::vector<Polynomial> out;
    int n = p.degree();
    if (n < 2) return out;
    for (int j = 1; j <= n / 2 - 1; ++j) {
        std::vector<Q> c;
        for (int i = 0; i <= n - 2 * j; ++i) {
            long h = (n - i) / 2;
            long ff = 1;
            for (int t = 0; t < j; ++t) ff *= (h - t);
            c.push_back(Q(ff) * p.a(i));
        }
        out.emplace_back(std::move(c));
    }
    return out;
}

Polynomial subsample_family(const Polynomial& p, int r) {
    int n = p.degree();
    if (r < 1 || r > n) throw DomainError("invalid-input", "subsample step must lie in 1..deg p");
    int l = n / 2;
    int k = l / r;
    std::vector<Q> c;
    if (n % 2 == 0) {
        c.assign(static_cast<size_t>(2 * k) + 1, Q(0));
        for (int i = 0; i <= k; ++i) c[static_cast<size_t>(2 * i)] = p.a(2 * r * i);
        for (int i = 1; i <= k; ++i) c[static_cast<size_t>(2 * i - 1)] = p.a(2 * r * i - 1);
    } else {
        c.assign(static_cast<size_t>(2 * k) + 2, Q(0));
        for (int i = 0; i <= k; ++i) {
            c[static_cast<size_t>(2 * i)] = p.a(2 * r * i);
            c[static_cast<size_t>(2 * i + 1)] = p.a(2 * r * i + 1);
        }
    }
    return Polynomial(std::move(c));
}

bool new_stability_criterion(const Polynomial& p) {
    int n = p.degree();
    if (n < 1) return !p.is_zero();
    Polynomial m = p.negate_argument();
    if (n % 2 != 0) m = -m;
    // A common zero of p(z) and p(-z) is a symmetric pair, never stable.
    if (poly_gcd(p, m).degree() >= 1) return false;
    LaurentSeries s = laurent_expand(RationalFunction(m, p), n);
    HankelMinors h = hankel_minors(s, n);
    for (int j = 1; j <= n; ++j) {
        Q v = h.d(j);
        if ((static_cast<long>(j) * (j + 1) / 2) % 2 != 0) v = -v;
        if (v <= 0) return false;
    }
    return true;
}

namespace {

struct GhVerdict {
    Label label;
    int k;
};

/// Label of the generalized Hurwitz family from the gate and order, ignoring
/// the quasi-stable precedence.
std::optional<GhVerdict> generalized_family(const Polynomial& q, Certificates& cert) {
    auto gh = generalized_hurwitz_order(q);
    if (!gh || gh->k == 0) return std::nullopt;
    int n = q.degree();
    int kmax = (n + 1) / 2;
    cert.scf_order = gh->k;
    cert.v_order = generalized_lienard_chipart_order(q);
    if (gh->k == kmax) return GhVerdict{gh->zero_root ? Label::almost_self_interlacing : Label::self_interlacing, gh->k};
    return GhVerdict{Label::generalized_hurwitz, gh->k};
}

std::optional<int> quasi_self_interlacing(const Polynomial& q) {
    auto m = quasi_stable_degeneracy(normalized(dual_transform(q)));
    if (m && *m >= 1) return m;
    return std::nullopt;
}

std::string first_gate_failure(const Polynomial& q) {
    int n = q.degree();
    HurwitzMinors hm = hurwitz_minors(q);
    for (int j = n - 1; j >= 1; j -= 2)
        if (hm.d(j) <= 0) return "Delta_" + std::to_string(j) + " <= 0";
    return "";
}

}  // namespace

ClassificationReport classify(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("invalid-input", "cannot classify the zero polynomial");
    ClassificationReport rep;
    rep.normalized = p.leading() < 0;
    Polynomial q = normalized(p);
    int n = q.degree();
    if (n == 0) {
        rep.label = Label::hurwitz_stable;
        rep.order_k = 0;
        rep.degeneracy_m = 0;
        rep.certificates.route = "constant";
        return rep;
    }
    HurwitzMinors hm = hurwitz_minors(q);
    rep.certificates.delta = hm.delta;
    rep.certificates.eta = hm.eta;

    if (hurwitz_minor_test(q)) {
        rep.label = Label::hurwitz_stable;
        rep.order_k = 0;
        rep.degeneracy_m = 0;
        rep.certificates.route = "all Hurwitz minors positive";
        return rep;
    }
    if (auto m = quasi_stable_degeneracy(q)) {
        rep.label = Label::quasi_stable;
        rep.degeneracy_m = *m;
        rep.certificates.route = "leading Hurwitz minors positive, trailing minors zero";
        return rep;
    }
    if (auto gh = generalized_family(q, rep.certificates)) {
        rep.label = gh->label;
        rep.order_k = gh->k;
        rep.si_type = SiType::I;
        rep.certificates.route = "generalized Hurwitz gate";
        return rep;
    }
    rep.certificates.failed_gate = first_gate_failure(q);
    if (auto m = quasi_self_interlacing(q)) {
        rep.label = Label::quasi_self_interlacing;
        rep.degeneracy_m = *m;
        rep.si_type = SiType::I;
        rep.certificates.route = "dual polynomial quasi-stable";
        return rep;
    }
    Polynomial r = normalized(reflect(q));
    Certificates rc;
    if (auto gh = generalized_family(r, rc)) {
        rep.label = gh->label;
        rep.order_k = gh->k;
        rep.si_type = SiType::II;
        rep.certificates.scf_order = rc.scf_order;
        rep.certificates.v_order = rc.v_order;
        rep.certificates.route = "generalized Hurwitz gate on p(-z)";
        return rep;
    }
    if (auto m = quasi_self_interlacing(r)) {
        rep.label = Label::quasi_self_interlacing;
        rep.degeneracy_m = *m;
        rep.si_type = SiType::II;
        rep.certificates.route = "dual of p(-z) quasi-stable";
        return rep;
    }
    rep.label = Label::unclassified;
    rep.certificates.route = "no criterion matched";
    Label rl = Label::unclassified;
    if (hurwitz_minor_test(r))
        rl = Label::hurwitz_stable;
    else if (quasi_stable_degeneracy(r))
        rl = Label::quasi_stable;
    rep.certificates.reflected_label = rl;
    return rep;
}

}  // namespace hsi
