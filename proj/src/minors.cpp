#include "hsi/minors.hpp"

#include <stdexcept>

#include "hsi/errors.hpp"

namespace hsi {

HankelMinors hankel_minors(const LaurentSeries& series, int r) {
    if (r < 0 || series.s.size() < static_cast<size_t>(2 * r))
        throw DomainError("length", "Hankel minors of order " + std::to_string(r) + " need s_0..s_" +
                                        std::to_string(2 * r - 1));
    HankelMinors out;
    out.r = r;
    for (int j = 1; j <= r; ++j) {
        QMatrix h(static_cast<size_t>(j), static_cast<size_t>(j));
        QMatrix hh(static_cast<size_t>(j), static_cast<size_t>(j));
        for (int a = 0; a < j; ++a)
            for (int b = 0; b < j; ++b) {
                h(static_cast<size_t>(a), static_cast<size_t>(b)) = series.s[static_cast<size_t>(a + b)];
                hh(static_cast<size_t>(a), static_cast<size_t>(b)) = series.s[static_cast<size_t>(a + b + 1)];
            }
        out.D.push_back(determinant(h));
        out.Dhat.push_back(determinant(hh));
    }
    return out;
}

QMatrix hurwitz_matrix(const Polynomial& p) {
    int n = std::max(p.degree(), 0);
    QMatrix h(static_cast<size_t>(n), static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) h(static_cast<size_t>(i - 1), static_cast<size_t>(j - 1)) = p.a(2 * j - i);
    return h;
}

Q HurwitzMinors::d(int j) const {
    if (j == 0) return Q(1);
    if (j < 0 || j > n) return Q(0);
    return delta[static_cast<size_t>(j - 1)];
}

HurwitzMinors hurwitz_minors(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("invalid-input", "Hurwitz minors of the zero polynomial");
    HurwitzMinors out;
    out.n = p.degree();
    out.delta = leading_principal_minors(hurwitz_matrix(p));
    // Truncation of the infinite Hurwitz matrix: entry (i, j) = a_{2j-i-1}.
    size_t m = static_cast<size_t>(out.n) + 1;
    QMatrix h(m, m);
    for (size_t i = 1; i <= m; ++i)
        for (size_t j = 1; j <= m; ++j)
            h(i - 1, j - 1) = p.a(2 * static_cast<int>(j) - static_cast<int>(i) - 1);
    out.eta = leading_principal_minors(h);
    for (int j = 1; j <= out.n + 1; ++j)
        if (out.eta[static_cast<size_t>(j - 1)] != p.a(0) * out.d(j - 1))
            throw std::logic_error("eta_j != a0 * Delta_{j-1}");
    return out;
}

QMatrix hurwitz_pair_matrix(const Polynomial& p, const Polynomial& q, NablaLayout layout) {
    int n = p.degree();
    if (n < 1) throw DomainError("invalid-pair", "pair matrix needs deg p >= 1");
    if (q.degree() > n) throw DomainError("invalid-pair", "deg q exceeds deg p");
    if (layout == NablaLayout::automatic)
        layout = q.degree() < n ? NablaLayout::deficient : NablaLayout::equal_degree;
    if (layout == NablaLayout::deficient && q.degree() == n)
        throw DomainError("invalid-pair", "deficient layout needs deg q < deg p");
    // b_i is the coefficient of z^{n-i} in q
    auto b = [&](int i) { return (i < 0 || i > n) ? Q(0) : q.power_coeff(n - i); };
    auto a = [&](int i) { return p.a(i); };
    size_t size = layout == NablaLayout::deficient ? static_cast<size_t>(2 * n) : static_cast<size_t>(2 * n + 1);
    QMatrix h(size, size);
    for (size_t row = 1; row <= size; ++row) {
        int k = static_cast<int>((row + 1) / 2);
        for (size_t col = 1; col <= size; ++col) {
            int j = static_cast<int>(col);
            Q v;
            if (layout == NablaLayout::deficient)
                v = (row % 2 == 1) ? b(j - k + 1) : a(j - k);
            else
                v = (row % 2 == 1) ? a(j - k) : b(j - k);
            h(row - 1, col - 1) = v;
        }
    }
    return h;
}

NablaMinors nabla_minors(const Polynomial& p, const Polynomial& q, NablaLayout layout) {
    if (p.a(0) == 0) throw DomainError("invalid-pair", "leading coefficient of p vanishes");
    if (layout == NablaLayout::automatic)
        layout = q.degree() < p.degree() ? NablaLayout::deficient : NablaLayout::equal_degree;
    NablaMinors out;
    out.layout = layout;
    out.nabla = leading_principal_minors(hurwitz_pair_matrix(p, q, layout));
    return out;
}

int scf_frobenius(const std::vector<Q>& seq) {
    size_t end = seq.size();
    while (end > 0 && seq[end - 1] == 0) --end;
    if (end == 0) return 0;
    if (seq[0] == 0) throw DomainError("invalid-sequence", "Frobenius count needs a nonzero first entry");
    std::vector<int> signs;
    signs.reserve(end);
    int last = 0;
    int run = 0;
    for (size_t i = 0; i < end; ++i) {
        int s = sgn(seq[i]);
        if (s != 0) {
            last = s;
            run = 0;
            signs.push_back(s);
        } else {
            ++run;
            int f = ((run * (run - 1) / 2) % 2 == 0) ? 1 : -1;
            signs.push_back(f * last);
        }
    }
    int changes = 0;
    for (size_t i = 1; i < signs.size(); ++i)
        if (signs[i] != signs[i - 1]) ++changes;
    return changes;
}

int strong_sign_changes(const std::vector<Q>& seq) {
    int prev = 0;
    int changes = 0;
    bool any = false;
    for (const Q& x : seq) {
        int s = sgn(x);
        if (s == 0) continue;
        any = true;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    if (!any) throw DomainError("invalid-sequence", "strong sign changes of an all-zero sequence");
    return changes;
}

TnVerdict total_nonnegativity_scan(const QMatrix& m, int max_order) {
    TnVerdict v;
    size_t limit = std::min({static_cast<size_t>(std::max(max_order, 0)), m.rows(), m.cols()});
    for (size_t k = 1; k <= limit; ++k) {
        bool done = !for_each_subset(m.rows(), k, [&](const std::vector<size_t>& rows) {
            return for_each_subset(m.cols(), k, [&](const std::vector<size_t>& cols) {
                Q d = minor(m, rows, cols);
                if (d < 0) {
                    v.totally_nonnegative = false;
                    v.rows = rows;
                    v.cols = cols;
                    v.value = d;
                    return false;
                }
                return true;
            });
        });
        if (done) break;
    }
    return v;
}

bool hankel_character_test(const HankelMinors& minors, HankelMode mode) {
    for (int j = 1; j <= minors.r; ++j) {
        if (minors.d(j) <= 0) return false;
        Q dh = minors.dhat(j);
        if (mode == HankelMode::strict_tp) {
            if (dh <= 0) return false;
        } else {
            if ((j % 2 == 0 ? dh : Q(-dh)) <= 0) return false;
        }
    }
    return true;
}

}  // namespace hsi
