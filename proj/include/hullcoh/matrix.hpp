#ifndef HULLCOH_MATRIX_HPP
#define HULLCOH_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace hullcoh {

using QVector = std::vector<Rational>;

inline bool vec_is_zero(const QVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline QVector vec_add(const QVector& a, const QVector& b) {
  require(a.size() == b.size(), errc::inconsistent, "vector size mismatch");
  QVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVector vec_sub(const QVector& a, const QVector& b) {
  require(a.size() == b.size(), errc::inconsistent, "vector size mismatch");
  QVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline QVector vec_scale(const Rational& c, const QVector& a) {
  QVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

// Dense matrix over the rationals.  Row-major storage.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      require(r.size() == cols_, errc::inconsistent, "ragged matrix literal");
      for (const auto& x : r) data_.push_back(x);
    }
  }

  static QMatrix identity(size_t n) {
    QMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static QMatrix from_columns(size_t dim, const std::vector<QVector>& cols) {
    QMatrix m(dim, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
      require(cols[j].size() == dim, errc::inconsistent, "column size mismatch");
      for (size_t i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_identity() const {
    if (!square()) return false;
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
  }

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

  QMatrix operator-() const {
    QMatrix r(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
    return r;
  }

  friend QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, errc::inconsistent, "matrix shape mismatch");
    QMatrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
    return r;
  }
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, errc::inconsistent, "matrix shape mismatch");
    QMatrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
    return r;
  }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    require(a.cols_ == b.rows_, errc::inconsistent, "matrix product shape mismatch");
    QMatrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (size_t j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b.at(k, j);
          if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }
  friend QMatrix operator*(const Rational& c, const QMatrix& a) {
    QMatrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = c * a.data_[i];
    return r;
  }

  QVector apply(const QVector& v) const {
    require(v.size() == cols_, errc::inconsistent, "matrix/vector size mismatch");
    QVector r(rows_);
    for (size_t i = 0; i < rows_; ++i) {
      Rational acc;
      for (size_t j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero() && !v[j].is_zero()) acc += at(i, j) * v[j];
      r[i] = acc;
    }
    return r;
  }

  QMatrix transpose() const {
    QMatrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  QVector row(size_t i) const {
    QVector r(cols_);
    for (size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }
  QVector column(size_t j) const {
    QVector c(rows_);
    for (size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  QVector flatten() const { return data_; }

  // Reduced row echelon form; pivot scan takes the first nonzero entry in
  // each column, top to bottom.  Returns the RREF and the pivot columns.
  std::pair<QMatrix, std::vector<size_t>> rref() const {
    QMatrix m = *this;
    std::vector<size_t> pivots;
    size_t lead = 0;
    for (size_t col = 0; col < cols_ && lead < rows_; ++col) {
      size_t sel = lead;
      while (sel < rows_ && m.at(sel, col).is_zero()) ++sel;
      if (sel == rows_) continue;
      if (sel != lead)
        for (size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(lead, j));
      Rational inv = m.at(lead, col).inv();
      for (size_t j = 0; j < cols_; ++j) m.at(lead, j) *= inv;
      for (size_t i = 0; i < rows_; ++i) {
        if (i == lead || m.at(i, col).is_zero()) continue;
        Rational f = m.at(i, col);
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) -= f * m.at(lead, j);
      }
      pivots.push_back(col);
      ++lead;
    }
    return {m, pivots};
  }

  size_t rank() const { return rref().second.size(); }

  // Basis of the right kernel.  One vector per free column: free variable set
  // to 1, pivot variables read off the RREF.  Deterministic, RREF-canonical.
  std::vector<QVector> kernel_basis() const {
    auto [r, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<QVector> basis;
    for (size_t col = 0; col < cols_; ++col) {
      if (is_pivot[col]) continue;
      QVector v(cols_);
      v[col] = 1;
      for (size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -r.at(pi, col);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // One exact solution of A x = b (free variables zero); throws Inconsistent
  // when there is none.
  QVector solve(const QVector& b) const {
    require(b.size() == rows_, errc::inconsistent, "rhs size mismatch");
    QMatrix aug(rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_) = b[i];
    }
    auto [r, pivots] = aug.rref();
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      if (pivots[pi] == cols_) fail(errc::inconsistent, "linear system has no solution");
    QVector x(cols_);
    for (size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = r.at(pi, cols_);
    return x;
  }

  QMatrix inverse() const {
    require(square(), errc::inconsistent, "inverse of non-square matrix");
    size_t n = rows_;
    QMatrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, n + i) = 1;
    }
    auto [r, pivots] = aug.rref();
    require(pivots.size() == n && pivots[n - 1] == n - 1, errc::inconsistent,
            "matrix is singular");
    QMatrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    return inv;
  }

  Rational det() const {
    require(square(), errc::inconsistent, "determinant of non-square matrix");
    QMatrix m = *this;
    Rational d(1);
    size_t n = rows_;
    for (size_t col = 0; col < n; ++col) {
      size_t sel = col;
      while (sel < n && m.at(sel, col).is_zero()) ++sel;
      if (sel == n) return Rational(0);
      if (sel != col) {
        for (size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(col, j));
        d = -d;
      }
      d *= m.at(col, col);
      Rational inv = m.at(col, col).inv();
      for (size_t i = col + 1; i < n; ++i) {
        if (m.at(i, col).is_zero()) continue;
        Rational f = m.at(i, col) * inv;
        for (size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
      }
    }
    return d;
  }

  bool is_nilpotent() const {
    if (!square()) return false;
    QMatrix p = *this;
    for (size_t k = 1; k < rows_; ++k) {
      if (p.is_zero()) return true;
      p = p * *this;
    }
    return p.is_zero();
  }

  bool is_unipotent() const {
    if (!square()) return false;
    return (*this - identity(rows_)).is_nilpotent();
  }

  std::string str() const {
    std::string s = "[";
    for (size_t i = 0; i < rows_; ++i) {
      s += i ? "; " : "";
      for (size_t j = 0; j < cols_; ++j) s += (j ? " " : "") + at(i, j).str();
    }
    return s + "]";
  }

 private:
  size_t rows_, cols_;
  std::vector<Rational> data_;
};

// Columns spanning the joint fixed space of a family of operators: the kernel
// of the stacked (M_i - I).
inline QMatrix joint_fixed_space(const std::vector<QMatrix>& ops, size_t dim) {
  if (ops.empty()) return QMatrix::identity(dim);
  QMatrix stacked(ops.size() * dim, dim);
  for (size_t k = 0; k < ops.size(); ++k) {
    require(ops[k].rows() == dim && ops[k].cols() == dim, errc::inconsistent,
            "fixed-space operator shape mismatch");
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = 0; j < dim; ++j)
        stacked.at(k * dim + i, j) = ops[k].at(i, j) - Rational(i == j ? 1 : 0);
  }
  return QMatrix::from_columns(dim, stacked.kernel_basis());
}

}  // namespace hullcoh

#endif
