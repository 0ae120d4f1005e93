#pragma once

#include <utility>
#include <vector>

#include "hsi/polyalg.hpp"

namespace hsi {

enum class CfTail { even, odd };

/**
 * F(u) = c0 + 1/(c1 u + 1/(c2 + 1/(c3 u + ... + 1/T)))
 * T = c_{2r} (even tail) or c_{2r-1} u (odd tail, pole at the origin).
 */
struct StieltjesCF {
    Q c0;
    std::vector<Q> c;  // c_1..c_K
    CfTail tail = CfTail::even;
    int r = 0;

    /// c_i with c_0 at index 0.
    Q at(int i) const { return i == 0 ? c0 : c.at(static_cast<size_t>(i - 1)); }
    int size() const { return static_cast<int>(c.size()); }
    friend bool operator==(const StieltjesCF& x, const StieltjesCF& y) {
        return x.c0 == y.c0 && x.c == y.c && x.tail == y.tail && x.r == y.r;
    }
};

/// Odd-degree a1 = 0 form: Phi = -c_{-1} u + inner.
struct ExtendedCF {
    Q c_minus1;
    StieltjesCF inner;
};

/// Expansion from the Hankel minors of the Laurent series. Throws DomainError
/// (kind "no-cf") naming the first vanishing minor.
StieltjesCF stieltjes_expand(const RationalFunction& r);

/// Continued fraction of Phi from the Hurwitz minors of p.
StieltjesCF cf_from_hurwitz_minors(const Polynomial& p);

/// For odd n with a1 = 0 and a3 != 0.
ExtendedCF extended_cf(const Polynomial& p);

RationalFunction cf_reconstruct(const StieltjesCF& cf);

struct PoleSignSummary {
    int negative_poles = 0;
    bool r_function = false;
};

PoleSignSummary pole_sign_summary(const StieltjesCF& cf);

}  // namespace hsi
