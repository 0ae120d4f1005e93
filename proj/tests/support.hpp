#pragma once

#include <random>
#include <vector>

#include "hsi/matrix.hpp"
#include "hsi/polyalg.hpp"

namespace hsi::testing {

// Cofactor expansion, kept deliberately naive so it shares nothing with Bareiss.
inline Q laplace_det(const std::vector<std::vector<Q>>& m) {
    size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Q sum = 0;
    for (size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<std::vector<Q>> sub;
        for (size_t r = 1; r < n; ++r) {
            std::vector<Q> row;
            for (size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            sub.push_back(row);
        }
        Q term = m[0][c] * laplace_det(sub);
        sum += (c % 2 == 0) ? term : Q(-term);
    }
    return sum;
}

inline Q laplace_det(const QMatrix& m) {
    std::vector<std::vector<Q>> rows(m.rows(), std::vector<Q>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return laplace_det(rows);
}

// Leading principal minors of the finite Hurwitz matrix, entries a_{2j-i}.
inline std::vector<Q> naive_hurwitz_minors(const Polynomial& p) {
    int n = p.degree();
    std::vector<Q> out;
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<Q>> m(k, std::vector<Q>(k));
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j) m[i - 1][j - 1] = p.a(2 * j - i);
        out.push_back(laplace_det(m));
    }
    return out;
}

inline Q random_rational(std::mt19937_64& rng, int range, bool allow_zero = true) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, 3);
    while (true) {
        Q v(num(rng), den(rng));
        v.canonicalize();
        if (allow_zero || v != 0) return v;
    }
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int degree, int range = 6) {
    std::vector<Q> c;
    c.push_back(random_rational(rng, range, false));
    for (int i = 0; i < degree; ++i) c.push_back(random_rational(rng, range));
    return Polynomial(c);
}

// Product of linear factors, expanded by hand rather than through expand_roots.
inline Polynomial from_roots(const std::vector<Q>& roots) {
    std::vector<Q> c{Q(1)};
    for (const Q& r : roots) {
        std::vector<Q> next(c.size() + 1, Q(0));
        for (size_t i = 0; i < c.size(); ++i) {
            next[i] += c[i];
            next[i + 1] -= r * c[i];
        }
        c = next;
    }
    return Polynomial(c);
}

}  // namespace hsi::testing
