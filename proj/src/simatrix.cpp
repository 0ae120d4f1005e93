#include "hsi/simatrix.hpp"

#include <random>
#include <stdexcept>

#include "hsi/classify.hpp"
#include "hsi/errors.hpp"

namespace hsi {

namespace {

int flip_sign(size_t k) { return (k * (k - 1) / 2) % 2 == 0 ? 1 : -1; }

void require_square(const QMatrix& m) {
    if (!m.square() || m.rows() == 0) throw DomainError("invalid-input", "matrix must be square and nonempty");
}

}  // namespace

QMatrix flip(size_t n) {
    if (n == 0) throw DomainError("invalid-input", "flip dimension must be at least 1");
    QMatrix j(n, n);
    for (size_t i = 0; i < n; ++i) j(i, n - 1 - i) = 1;
    return j;
}

SignatureSequence signature_scan(const QMatrix& m, int max_order) {
    require_square(m);
    if (m.rows() > kMaxScanDimension) throw DomainError("invalid-input", "sign scans are capped at dimension 8");
    size_t limit = std::min(static_cast<size_t>(std::max(max_order, 0)), m.rows());
    SignatureSequence out;
    for (size_t k = 1; k <= limit; ++k) {
        std::optional<MinorIndex> pos;
        std::optional<MinorIndex> neg;
        for_each_subset(m.rows(), k, [&](const std::vector<size_t>& rows) {
            return for_each_subset(m.cols(), k, [&](const std::vector<size_t>& cols) {
                Q d = minor(m, rows, cols);
                if (d > 0 && !pos) pos = MinorIndex{rows, cols, d};
                if (d < 0 && !neg) neg = MinorIndex{rows, cols, d};
                return !(pos && neg);
            });
        });
        if (pos && neg) {
            out.sign_definite = false;
            out.witness_order = static_cast<int>(k);
            out.witness = std::make_pair(*pos, *neg);
            return out;
        }
        out.eps.push_back(pos ? 1 : (neg ? -1 : 0));
    }
    return out;
}

bool has_flip_signature(const SignatureSequence& s) {
    if (!s.sign_definite) return false;
    for (size_t k = 1; k <= s.eps.size(); ++k) {
        int e = s.eps[k - 1];
        if (e != 0 && e != flip_sign(k)) return false;
    }
    return true;
}

bool class_n_plus_check(const QMatrix& m) {
    require_square(m);
    QMatrix sq = m * m;
    if (determinant(sq) == 0) return false;
    size_t n = sq.rows();
    for (size_t i = 0; i + 1 < n; ++i)
        if (sq(i, i + 1) <= 0 || sq(i + 1, i) <= 0) return false;
    return total_nonnegativity_scan(sq, static_cast<int>(n)).totally_nonnegative;
}

bool entries_condition(const QMatrix& a) {
    require_square(a);
    size_t n = a.rows();
    // 1-based access
    auto at = [&](size_t i, size_t j) { return a(i - 1, j - 1); };
    for (size_t i = 1; i + 1 <= n; ++i) {
        bool first = false;
        bool second = false;
        for (size_t r = 1; r <= n; ++r) {
            if (at(n - i, r) * at(n + 1 - r, i) > 0) first = true;
            if (at(n + 1 - i, r) * at(n + 1 - r, i + 1) > 0) second = true;
        }
        if (!first || !second) return false;
    }
    return true;
}

QMatrix anti_bidiagonal(const Q& a1, const std::vector<Q>& b, const std::vector<Q>& c) {
    if (b.size() != c.size()) throw DomainError("invalid-input", "b and c must have the same length");
    size_t n = b.size() + 1;
    if (a1 <= 0) throw DomainError("invalid-input", "anti-bidiagonal entries must be positive");
    for (size_t i = 0; i < b.size(); ++i)
        if (b[i] <= 0 || c[i] <= 0) throw DomainError("invalid-input", "anti-bidiagonal entries must be positive");
    QMatrix m(n, n);
    for (size_t t = 0; t + 2 <= 2 * n; ++t) {
        size_t row = (t + 1) / 2;
        size_t col = n - 1 - t / 2;
        Q v;
        if (t + 1 < n)
            v = b[n - t - 2];  // b_{n-t}
        else if (t + 1 == n)
            v = a1;
        else
            v = c[t - n];  // c_{t-n+2}
        m(row, col) = v;
    }
    return m;
}

QMatrix tridiagonal_equivalent(const Q& a1, const std::vector<Q>& b, const std::vector<Q>& c) {
    if (b.size() != c.size()) throw DomainError("invalid-input", "b and c must have the same length");
    size_t n = b.size() + 1;
    QMatrix k(n, n);
    k(0, 0) = a1;
    for (size_t j = 2; j <= n; ++j) {
        k(j - 2, j - 1) = b[j - 2];
        k(j - 1, j - 2) = c[j - 2];
    }
    return k;
}

QMatrix anti_tridiagonal(const std::vector<Q>& a, const std::vector<Q>& b, const std::vector<Q>& c) {
    size_t n = a.size();
    if (n == 0 || b.size() + 1 != n || c.size() + 1 != n)
        throw DomainError("invalid-input", "anti-tridiagonal needs n diagonal and n-1 off-diagonal entries");
    QMatrix m(n, n);
    for (size_t i = 1; i <= n; ++i) m(i - 1, n - i) = a[i - 1];
    for (size_t i = 1; i < n; ++i) {
        m(i - 1, n - i - 1) = b[i - 1];
        m(i, n - i) = c[i - 1];
    }
    return m;
}

bool anti_tridiagonal_criterion(const QMatrix& aj) {
    require_square(aj);
    size_t n = aj.rows();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            // anti-diagonal offset: 0 on the anti-diagonal, -1 above, +1 below
            long off = static_cast<long>(i + j) - static_cast<long>(n - 1);
            bool band = off >= -1 && off <= 1;
            if (!band && aj(i, j) != 0) throw DomainError("invalid-input", "matrix is not anti-tridiagonal");
            if (band && aj(i, j) <= 0) throw DomainError("invalid-input", "anti-tridiagonal entries must be positive");
        }
    std::vector<Q> lead = leading_principal_minors(aj * flip(n));
    bool corner = true;
    bool leading = true;
    for (size_t k = 1; k <= n; ++k) {
        std::vector<size_t> rows;
        std::vector<size_t> cols;
        for (size_t t = 0; t < k; ++t) {
            rows.push_back(t);
            cols.push_back(n - k + t);
        }
        if (flip_sign(k) * minor(aj, rows, cols) <= 0) corner = false;
        if (lead[k - 1] <= 0) leading = false;
    }
    if (corner != leading) throw std::logic_error("corner-minor and flipped leading-minor criteria disagree");
    return corner;
}

bool si_spectrum_check(const QMatrix& m) {
    require_square(m);
    return classify(char_poly(m)).label == Label::self_interlacing;
}

QMatrix random_tn(size_t n, std::uint64_t seed) {
    if (n == 0) throw DomainError("invalid-input", "dimension must be at least 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pos(1, 8);
    std::uniform_int_distribution<int> nonneg(0, 8);
    std::uniform_int_distribution<int> extra(0, 2);
    auto quarter = [](int j) {
        Q v(j, 4);
        v.canonicalize();
        return v;
    };
    auto bidiagonal = [&](bool lower, bool strict) {
        QMatrix f(n, n);
        for (size_t i = 0; i < n; ++i) f(i, i) = quarter(pos(rng));
        for (size_t i = 0; i + 1 < n; ++i) {
            Q v = quarter(strict ? pos(rng) : nonneg(rng));
            if (lower)
                f(i + 1, i) = v;
            else
                f(i, i + 1) = v;
        }
        return f;
    };
    QMatrix a = bidiagonal(true, true) * bidiagonal(false, true);
    for (int i = extra(rng); i > 0; --i) a = bidiagonal(true, false) * a;
    for (int i = extra(rng); i > 0; --i) a = a * bidiagonal(false, false);
    return a;
}

}  // namespace hsi
