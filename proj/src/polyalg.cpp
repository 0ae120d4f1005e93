#include "hsi/polyalg.hpp"

#include <algorithm>
#include <regex>

#include "hsi/errors.hpp"

namespace hsi {

Q parse_rational(std::string_view token) {
    static const std::regex pattern(R"(\s*([+-]?[0-9]+)(/([0-9]+))?\s*)");
    std::string s(token);
    std::smatch m;
    if (!std::regex_match(s, m, pattern)) throw ParseError("malformed rational '" + s + "'");
    std::string digits = m[1].str();
    if (digits[0] == '+') digits.erase(0, 1);
    mpz_class num(digits, 10);
    mpz_class den(1);
    if (m[3].matched) den = mpz_class(m[3].str(), 10);
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    Q q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Q& x) { return x.get_str(); }

Polynomial::Polynomial(std::vector<Q> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<Q> coeffs) : coeffs_(coeffs) { normalize(); }

void Polynomial::normalize() {
    for (Q& c : coeffs_) c.canonicalize();
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Q& c) { return c != 0; });
    coeffs_.erase(coeffs_.begin(), first);
}

Polynomial Polynomial::monomial(const Q& c, int deg) {
    std::vector<Q> v(static_cast<size_t>(deg) + 1, Q(0));
    v[0] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_ascending(std::vector<Q> ascending) {
    std::reverse(ascending.begin(), ascending.end());
    return Polynomial(std::move(ascending));
}

Q Polynomial::a(int i) const {
    if (i < 0 || i > degree()) return Q(0);
    return coeffs_[static_cast<size_t>(i)];
}

Q Polynomial::power_coeff(int k) const { return a(degree() - k); }

Q Polynomial::leading() const { return coeffs_.empty() ? Q(0) : coeffs_.front(); }

Q Polynomial::operator()(const Q& x) const {
    Q acc(0);
    for (const Q& c : coeffs_) acc = acc * x + c;
    return acc;
}

std::complex<double> Polynomial::operator()(std::complex<double> z) const {
    std::complex<double> acc(0.0, 0.0);
    for (const Q& c : coeffs_) acc = acc * z + c.get_d();
    return acc;
}

Polynomial Polynomial::derivative() const {
    int n = degree();
    if (n <= 0) return Polynomial();
    std::vector<Q> v;
    v.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v.push_back(coeffs_[static_cast<size_t>(i)] * (n - i));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Q lead = leading();
    std::vector<Q> v = coeffs_;
    for (Q& c : v) c /= lead;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::negate_argument() const {
    std::vector<Q> v = coeffs_;
    int n = degree();
    for (int i = 0; i <= n; ++i)
        if ((n - i) % 2 != 0) v[static_cast<size_t>(i)] = -v[static_cast<size_t>(i)];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::in_square() const {
    if (is_zero()) return *this;
    std::vector<Q> v(2 * coeffs_.size() - 1, Q(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[2 * i] = coeffs_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
    std::vector<Q> v = coeffs_;
    for (Q& c : v) c = -c;
    return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& x, const Polynomial& y) {
    int n = std::max(x.degree(), y.degree());
    if (n < 0) return Polynomial();
    std::vector<Q> asc(static_cast<size_t>(n) + 1, Q(0));
    for (int k = 0; k <= n; ++k) asc[static_cast<size_t>(k)] = x.power_coeff(k) + y.power_coeff(k);
    return Polynomial::from_ascending(std::move(asc));
}

Polynomial operator-(const Polynomial& x, const Polynomial& y) { return x + (-y); }

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
    if (x.is_zero() || y.is_zero()) return Polynomial();
    std::vector<Q> v(x.coeffs_.size() + y.coeffs_.size() - 1, Q(0));
    for (size_t i = 0; i < x.coeffs_.size(); ++i)
        for (size_t j = 0; j < y.coeffs_.size(); ++j) v[i + j] += x.coeffs_[i] * y.coeffs_[j];
    return Polynomial(std::move(v));
}

Polynomial operator*(const Q& c, const Polynomial& p) {
    std::vector<Q> v = p.coeffs_;
    for (Q& x : v) x *= c;
    return Polynomial(std::move(v));
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += coeffs_[i].get_str();
    }
    return out;
}

Polynomial parse_polynomial(std::string_view text) {
    std::vector<Q> coeffs;
    size_t start = 0;
    std::string s(text);
    if (s.find_first_not_of(" \t\r\n") == std::string::npos) throw ParseError("empty coefficient list");
    while (true) {
        size_t comma = s.find(',', start);
        std::string token = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            coeffs.push_back(parse_rational(token));
        } catch (const ParseError&) {
            throw ParseError("bad coefficient token '" + token + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return Polynomial(std::move(coeffs));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw DomainError("invalid-input", "division by the zero polynomial");
    int dd = den.degree();
    std::vector<Q> rem = num.coeffs();
    if (num.degree() < dd) return {Polynomial(), num};
    size_t qlen = static_cast<size_t>(num.degree() - dd + 1);
    std::vector<Q> quot(qlen, Q(0));
    Q lead = den.leading();
    for (size_t i = 0; i < qlen; ++i) {
        Q f = rem[i] / lead;
        quot[i] = f;
        if (f == 0) continue;
        for (size_t j = 0; j < den.coeffs().size(); ++j) rem[i + j] -= f * den.coeffs()[j];
    }
    std::vector<Q> r(rem.begin() + static_cast<long>(qlen), rem.end());
    return {Polynomial(std::move(quot)), Polynomial(std::move(r))};
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("invalid-input", "gcd of two zero polynomials");
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second;
        x = y.monic();
        y = r.monic();
    }
    return x.monic();
}

EvenOddSplit even_odd_split(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("invalid-input", "even/odd split of the zero polynomial");
    int n = p.degree();
    std::vector<Q> even((static_cast<size_t>(n) / 2) + 1, Q(0));
    std::vector<Q> odd((static_cast<size_t>(n) + 1) / 2 + 1, Q(0));
    for (int k = 0; k <= n; ++k) {
        if (k % 2 == 0)
            even[static_cast<size_t>(k / 2)] = p.power_coeff(k);
        else
            odd[static_cast<size_t>(k / 2)] = p.power_coeff(k);
    }
    return {Polynomial::from_ascending(std::move(even)), Polynomial::from_ascending(std::move(odd))};
}

Polynomial reflect(const Polynomial& p) { return p.negate_argument(); }

RationalFunction::RationalFunction(Polynomial n, Polynomial d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw DomainError("invalid-input", "rational function with zero denominator");
}

RationalFunction RationalFunction::reduced() const {
    if (num.is_zero()) return RationalFunction(Polynomial(), Polynomial{Q(1)});
    Polynomial g = poly_gcd(num, den);
    Polynomial n = divmod(num, g).first;
    Polynomial d = divmod(den, g).first;
    Q lead = d.leading();
    return RationalFunction((Q(1) / lead) * n, d.monic());
}

RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
    return RationalFunction(x.num * y.den + y.num * x.den, x.den * y.den).reduced();
}

RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) {
    return RationalFunction(x.num * y.den - y.num * x.den, x.den * y.den).reduced();
}

RationalFunction RationalFunction::reciprocal() const {
    if (num.is_zero()) throw DomainError("invalid-input", "reciprocal of the zero function");
    return RationalFunction(den, num).reduced();
}

bool RationalFunction::equivalent(const RationalFunction& other) const {
    return num * other.den == other.num * den;
}

RationalFunction associated_function(const Polynomial& p) {
    EvenOddSplit s = even_odd_split(p);
    if (s.p0.is_zero()) throw DomainError("degenerate-split", "even part p0 vanishes identically");
    return RationalFunction(s.p1, s.p0);
}

LaurentSeries laurent_expand(const RationalFunction& r, int pairs) {
    int dn = r.num.degree();
    int dd = r.den.degree();
    if (dn > dd + 1)
        throw DomainError("unsupported-growth", "numerator degree exceeds denominator degree plus one");
    // Series coefficient of z^e for e = 1, 0, -1, ..., -2*pairs.
    int count = 2 * pairs + 2;
    std::vector<Q> t(static_cast<size_t>(count), Q(0));
    Q d0 = r.den.leading();
    for (int idx = 0; idx < count; ++idx) {
        int e = 1 - idx;
        Q acc = r.num.power_coeff(dd + e);
        for (int i = 1; i <= dd && i <= idx; ++i) acc -= r.den.a(i) * t[static_cast<size_t>(idx - i)];
        t[static_cast<size_t>(idx)] = acc / d0;
    }
    LaurentSeries out;
    out.s_minus2 = t[0];
    out.s_minus1 = t[1];
    out.s.assign(t.begin() + 2, t.end());
    return out;
}

}  // namespace hsi
