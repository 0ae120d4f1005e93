#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsi/rational.hpp"

namespace hsi {

/// Degree reported for the zero polynomial (stands in for minus infinity).
inline constexpr int kZeroDegree = -1;

/**
 * Dense polynomial with exact rational coefficients, leading coefficient
 * first: coeffs()[i] is a_i in a_0 z^n + a_1 z^{n-1} + ... + a_n.
 */
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Q> coeffs);
    Polynomial(std::initializer_list<Q> coeffs);

    /// c * z^deg
    static Polynomial monomial(const Q& c, int deg);
    /// Builds from ascending-power coefficients (index = power).
    static Polynomial from_ascending(std::vector<Q> ascending);

    int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Q>& coeffs() const { return coeffs_; }

    /// a_i, zero outside 0..n.
    Q a(int i) const;
    /// Coefficient of z^k.
    Q power_coeff(int k) const;
    Q leading() const;

    Q operator()(const Q& x) const;
    std::complex<double> operator()(std::complex<double> z) const;

    Polynomial derivative() const;
    Polynomial monic() const;
    /// p(-z)
    Polynomial negate_argument() const;
    /// p(z^2)
    Polynomial in_square() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& x, const Polynomial& y);
    friend Polynomial operator-(const Polynomial& x, const Polynomial& y);
    friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
    friend Polynomial operator*(const Q& c, const Polynomial& p);
    friend bool operator==(const Polynomial& x, const Polynomial& y) { return x.coeffs_ == y.coeffs_; }

    /// Comma-separated descending coefficients, "1,4,1,-6".
    std::string to_string() const;

   private:
    void normalize();
    std::vector<Q> coeffs_;
};

/// Parses the comma-separated coefficient format; throws ParseError naming the bad token.
Polynomial parse_polynomial(std::string_view text);

/// Quotient and remainder; throws DomainError on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

/// Monic gcd. Throws DomainError when both inputs are zero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// p(z) = p0(z^2) + z p1(z^2)
struct EvenOddSplit {
    Polynomial p0;
    Polynomial p1;
};

EvenOddSplit even_odd_split(const Polynomial& p);

/// Coefficient a_j negated iff n - j is odd, i.e. p(-z).
Polynomial reflect(const Polynomial& p);

struct RationalFunction {
    Polynomial num;
    Polynomial den;

    RationalFunction() : den(Polynomial{Q(1)}) {}
    RationalFunction(Polynomial n, Polynomial d);

    /// Gcd divided out, denominator monic.
    RationalFunction reduced() const;
    /// Number of poles, the degree of the reduced denominator.
    int pole_count() const { return reduced().den.degree(); }

    friend RationalFunction operator+(const RationalFunction& x, const RationalFunction& y);
    friend RationalFunction operator-(const RationalFunction& x, const RationalFunction& y);
    RationalFunction reciprocal() const;
    /// Same function after reduction.
    bool equivalent(const RationalFunction& other) const;
};

/// Phi = p1 / p0, unreduced.
RationalFunction associated_function(const Polynomial& p);

/// R(z) = s_{-2} z + s_{-1} + s_0/z + s_1/z^2 + ...
struct LaurentSeries {
    Q s_minus2;
    Q s_minus1;
    std::vector<Q> s;
};

/// Exact long division giving s_0 ... s_{2*pairs-1}.
LaurentSeries laurent_expand(const RationalFunction& r, int pairs);

}  // namespace hsi
