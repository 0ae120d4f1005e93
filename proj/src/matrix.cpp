#include "hsi/matrix.hpp"

#include "hsi/errors.hpp"

namespace hsi {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Q>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DomainError("invalid-input", "ragged matrix literal");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

QMatrix QMatrix::identity(size_t n) {
    QMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const {
    QMatrix s(rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
    return s;
}

QMatrix QMatrix::leading(size_t k) const {
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    return submatrix(idx, idx);
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
    if (x.cols_ != y.rows_) throw DomainError("invalid-input", "matrix shape mismatch");
    QMatrix r(x.rows_, y.cols_);
    for (size_t i = 0; i < x.rows_; ++i)
        for (size_t k = 0; k < x.cols_; ++k) {
            const Q& v = x(i, k);
            if (v == 0) continue;
            for (size_t j = 0; j < y.cols_; ++j) r(i, j) += v * y(k, j);
        }
    return r;
}

QMatrix operator+(const QMatrix& x, const QMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DomainError("invalid-input", "matrix shape mismatch");
    QMatrix r = x;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
    return r;
}

Q determinant(const QMatrix& m) {
    if (!m.square()) throw DomainError("invalid-input", "determinant of a non-square matrix");
    size_t n = m.rows();
    if (n == 0) return Q(1);
    std::vector<mpz_class> a(n * n);
    mpz_class scale = 1;
    for (size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        scale *= l;
        for (size_t j = 0; j < n; ++j) {
            Q v = m(i, j) * l;
            a[i * n + j] = v.get_num();
        }
    }
    auto at = [&](size_t i, size_t j) -> mpz_class& { return a[i * n + j]; };
    int s = 1;
    mpz_class prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && at(p, k) == 0) ++p;
            if (p == n) return Q(0);
            for (size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            s = -s;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                at(i, j) = t;
            }
        }
        prev = at(k, k);
    }
    Q det(at(n - 1, n - 1) * s, scale);
    det.canonicalize();
    return det;
}

Q minor(const QMatrix& m, const std::vector<size_t>& rows, const std::vector<size_t>& cols) {
    return determinant(m.submatrix(rows, cols));
}

std::vector<Q> leading_principal_minors(const QMatrix& m) {
    size_t k = std::min(m.rows(), m.cols());
    std::vector<Q> out;
    out.reserve(k);
    for (size_t j = 1; j <= k; ++j) out.push_back(determinant(m.leading(j)));
    return out;
}

Polynomial char_poly(const QMatrix& m) {
    if (!m.square()) throw DomainError("invalid-input", "characteristic polynomial of a non-square matrix");
    size_t n = m.rows();
    // c[k] multiplies z^{n-k}
    std::vector<Q> c(n + 1, Q(0));
    c[0] = 1;
    QMatrix mk(n, n);
    for (size_t k = 1; k <= n; ++k) {
        QMatrix prev = mk;
        for (size_t i = 0; i < n; ++i) prev(i, i) += c[k - 1];
        mk = m * prev;
        Q tr(0);
        for (size_t i = 0; i < n; ++i) tr += mk(i, i);
        c[k] = -tr / static_cast<long>(k);
    }
    return Polynomial(std::move(c));
}

}  // namespace hsi
