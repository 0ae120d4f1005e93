#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hsi/matrix.hpp"

namespace hsi {

/// Largest dimension accepted by the exhaustive minor scans.
inline constexpr size_t kMaxScanDimension = 8;

/// Anti-identity J.
QMatrix flip(size_t n);

struct MinorIndex {
    std::vector<size_t> rows;
    std::vector<size_t> cols;
    Q value;
};

struct SignatureSequence {
    /// eps_k for k = 1..max_order: +1, -1, or 0 when every minor of order k vanishes.
    std::vector<int> eps;
    bool sign_definite = true;
    /// Order and two minors of opposite sign when not sign definite.
    int witness_order = 0;
    std::optional<std::pair<MinorIndex, MinorIndex>> witness;
};

/// Scans all minors of order 1..max_order; stops at the first order with mixed signs.
SignatureSequence signature_scan(const QMatrix& m, int max_order);

/// eps_k = (-1)^{k(k-1)/2} for every k, all minors of order k vanishing counts as consistent.
bool has_flip_signature(const SignatureSequence& s);

/// M^2 nonsingular, totally nonnegative, with positive super- and sub-diagonal.
bool class_n_plus_check(const QMatrix& m);

/// For each i = 1..n-1 some r1, r2 with a_{n-i,r1} a_{n+1-r1,i} > 0 and a_{n+1-i,r2} a_{n+1-r2,i+1} > 0.
bool entries_condition(const QMatrix& a);

/// a1 at the bottom-right corner of the staircase, b_n..b_2 above it, c_2..c_n below.
/// b and c hold b_2..b_n and c_2..c_n.
QMatrix anti_bidiagonal(const Q& a1, const std::vector<Q>& b, const std::vector<Q>& c);

/// a1 at (1,1), b_j at (j-1, j), c_j at (j, j-1), zeros elsewhere.
QMatrix tridiagonal_equivalent(const Q& a1, const std::vector<Q>& b, const std::vector<Q>& c);

/// a_i at (i, n+1-i), b_i at (i, n-i), c_i at (i+1, n+1-i); a has n entries, b and c n-1.
QMatrix anti_tridiagonal(const std::vector<Q>& a, const std::vector<Q>& b, const std::vector<Q>& c);

/// Corner minors (-1)^{k(k-1)/2} A_J(1..k; n+1-k..n) > 0 for k = 1..n. The leading
/// minors of A_J J are evaluated too and must agree. Throws DomainError on a pattern mismatch.
bool anti_tridiagonal_criterion(const QMatrix& aj);

/// Characteristic polynomial classified as self-interlacing (either type).
bool si_spectrum_check(const QMatrix& m);

/// Product of random nonnegative bidiagonal factors with positive diagonals;
/// the result is nonsingular, totally nonnegative, with positive super- and sub-diagonal.
QMatrix random_tn(size_t n, std::uint64_t seed);

}  // namespace hsi
