#pragma once

#include <string>
#include <vector>

#include "hsi/polyalg.hpp"
#include "hsi/rational.hpp"

namespace hsi {

/// Row-major exact rational matrix.
class QMatrix {
   public:
    QMatrix() = default;
    QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Q(0)) {}
    QMatrix(std::initializer_list<std::initializer_list<Q>> rows);

    static QMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Q& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Q& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    QMatrix submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const;
    QMatrix leading(size_t k) const;

    friend QMatrix operator*(const QMatrix& x, const QMatrix& y);
    friend QMatrix operator+(const QMatrix& x, const QMatrix& y);
    friend bool operator==(const QMatrix& x, const QMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Q> a_;
};

/// Fraction-free Bareiss elimination after clearing row denominators.
Q determinant(const QMatrix& m);

Q minor(const QMatrix& m, const std::vector<size_t>& rows, const std::vector<size_t>& cols);

/// Leading principal minors of orders 1..min(rows, cols).
std::vector<Q> leading_principal_minors(const QMatrix& m);

/// det(zI - M) by the Faddeev-LeVerrier recursion.
Polynomial char_poly(const QMatrix& m);

/// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order;
/// stops early when f returns false. Returns false iff stopped early.
template <class F>
bool for_each_subset(size_t n, size_t k, F&& f) {
    if (k > n) return true;
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!f(idx)) return false;
        size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace hsi
