#pragma once

#include <optional>
#include <vector>

#include "hsi/matrix.hpp"
#include "hsi/polyalg.hpp"

namespace hsi {

/// D_j and Dhat_j, j = 1..r, stored at index j-1.
struct HankelMinors {
    std::vector<Q> D;
    std::vector<Q> Dhat;
    int r = 0;

    /// D_j with D_0 = 1.
    Q d(int j) const { return j == 0 ? Q(1) : D.at(static_cast<size_t>(j - 1)); }
    /// Dhat_j with Dhat_0 = 1.
    Q dhat(int j) const { return j == 0 ? Q(1) : Dhat.at(static_cast<size_t>(j - 1)); }
};

HankelMinors hankel_minors(const LaurentSeries& series, int r);

/// Finite Hurwitz matrix H_n(p): entry (i, j) = a_{2j-i}, 1-based.
QMatrix hurwitz_matrix(const Polynomial& p);

/// Delta_1..Delta_n and eta_1..eta_{n+1}, stored at index j-1.
struct HurwitzMinors {
    std::vector<Q> delta;
    std::vector<Q> eta;
    int n = 0;

    /// Delta_j with Delta_0 = 1 and Delta_j = 0 beyond n.
    Q d(int j) const;
};

HurwitzMinors hurwitz_minors(const Polynomial& p);

enum class NablaLayout { automatic, deficient, equal_degree };

/// Leading principal minors of the Hurwitz-type matrix of the pair (p, q).
struct NablaMinors {
    std::vector<Q> nabla;
    NablaLayout layout = NablaLayout::automatic;

    Q at(int i) const { return nabla.at(static_cast<size_t>(i - 1)); }
};

/// Matrix of the pair (p, q); q is aligned to degree n = deg p.
/// deficient: 2n x 2n with rows [b1 b2 ...], [a0 a1 ...] shifted.
/// equal_degree: (2n+1) x (2n+1) with rows [a0 a1 ...], [b0 b1 ...] shifted.
QMatrix hurwitz_pair_matrix(const Polynomial& p, const Polynomial& q, NablaLayout layout);

NablaMinors nabla_minors(const Polynomial& p, const Polynomial& q,
                         NablaLayout layout = NablaLayout::automatic);

/// Frobenius sign-change count. Trailing zeros are dropped; a leading zero is rejected.
int scf_frobenius(const std::vector<Q>& seq);

/// Sign changes among nonzero entries.
int strong_sign_changes(const std::vector<Q>& seq);

struct TnVerdict {
    bool totally_nonnegative = true;
    std::vector<size_t> rows;
    std::vector<size_t> cols;
    Q value;
};

/// Scans every minor of order <= max_order; stops at the first negative one.
TnVerdict total_nonnegativity_scan(const QMatrix& m, int max_order);

enum class HankelMode { strict_tp, sign_regular };

bool hankel_character_test(const HankelMinors& minors, HankelMode mode);

}  // namespace hsi
