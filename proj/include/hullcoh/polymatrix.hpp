#ifndef HULLCOH_POLYMATRIX_HPP
#define HULLCOH_POLYMATRIX_HPP

#include <string>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace hullcoh {

// Square-or-rectangular matrix with entries in Q[t_1..t_arity].
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(size_t rows, size_t cols, size_t arity)
      : rows_(rows), cols_(cols), arity_(arity),
        e_(rows * cols, QPoly::constant(arity, Rational(0))) {}

  static PolyMatrix identity(size_t n, size_t arity) {
    PolyMatrix m(n, n, arity);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = QPoly::one(arity);
    return m;
  }

  static PolyMatrix from_constant(const QMatrix& a, size_t arity) {
    PolyMatrix m(a.rows(), a.cols(), arity);
    for (size_t i = 0; i < a.rows(); ++i)
      for (size_t j = 0; j < a.cols(); ++j)
        m.at(i, j) = QPoly::constant(arity, a.at(i, j));
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t arity() const { return arity_; }
  bool square() const { return rows_ == cols_; }

  QPoly& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
  const QPoly& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

  bool is_zero() const {
    for (auto& p : e_)
      if (!p.is_zero()) return false;
    return true;
  }
  bool is_identity() const {
    if (!square()) return false;
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) {
        if (i == j && !(at(i, j) - QPoly::one(arity_)).is_zero()) return false;
        if (i != j && !at(i, j).is_zero()) return false;
      }
    return true;
  }

  bool operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && arity_ == o.arity_ && e_ == o.e_;
  }
  bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

  PolyMatrix operator+(const PolyMatrix& o) const {
    check_shape_(o);
    PolyMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] + o.e_[i];
    return r;
  }
  PolyMatrix operator-(const PolyMatrix& o) const {
    check_shape_(o);
    PolyMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] - o.e_[i];
    return r;
  }
  PolyMatrix operator-() const {
    PolyMatrix r = *this;
    for (auto& p : r.e_) p = -p;
    return r;
  }
  PolyMatrix operator*(const PolyMatrix& o) const {
    require(cols_ == o.rows_ && arity_ == o.arity_, errc::arity_mismatch,
            "polymatrix product shape mismatch");
    PolyMatrix r(rows_, o.cols_, arity_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        if (at(i, k).is_zero()) continue;
        for (size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
      }
    return r;
  }
  PolyMatrix operator*(const Rational& c) const {
    PolyMatrix r = *this;
    for (auto& p : r.e_) p = p * c;
    return r;
  }
  PolyMatrix scale_poly(const QPoly& q) const {
    PolyMatrix r = *this;
    for (auto& p : r.e_) p = p * q;
    return r;
  }

  PolyMatrix partial(size_t var) const {
    PolyMatrix r = *this;
    for (auto& p : r.e_) p = p.partial(var);
    return r;
  }

  QMatrix eval(const std::vector<Rational>& point) const {
    QMatrix r(rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).eval(point);
    return r;
  }

  PolyMatrix substitute(const std::vector<QPoly>& images, size_t new_arity) const {
    PolyMatrix r(rows_, cols_, new_arity);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].substitute(images, new_arity);
    return r;
  }
  PolyMatrix substitute_slot(size_t slot, const Rational& value) const {
    PolyMatrix r(rows_, cols_, arity_ - 1);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].substitute_slot(slot, value);
    return r;
  }
  PolyMatrix shift_up(size_t shift, size_t new_arity) const {
    PolyMatrix r(rows_, cols_, new_arity);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].shift_up(shift, new_arity);
    return r;
  }

  std::vector<QPoly> flatten() const { return e_; }

  bool is_nilpotent() const {
    require(square(), errc::not_nilpotent, "nilpotency needs a square matrix");
    PolyMatrix p = *this;
    for (size_t k = 1; k <= rows_; ++k) {
      if (p.is_zero()) return true;
      p = p * (*this);
    }
    return p.is_zero();
  }
  bool is_unipotent() const {
    return square() && (*this - identity(rows_, arity_)).is_nilpotent();
  }

  // log(I + N) = sum_{m>=1} (-1)^{m+1} N^m / m for nilpotent N.
  PolyMatrix log_unipotent() const {
    PolyMatrix n = *this - identity(rows_, arity_);
    require(n.is_nilpotent(), errc::not_unipotent, "log of a non-unipotent matrix");
    PolyMatrix acc(rows_, cols_, arity_);
    PolyMatrix pw = n;
    for (size_t m = 1; m <= rows_ && !pw.is_zero(); ++m) {
      Rational c = Rational(m % 2 ? 1 : -1) / Rational(static_cast<long>(m));
      acc = acc + pw * c;
      pw = pw * n;
    }
    return acc;
  }

  // exp(N) = sum N^m / m! for nilpotent N.
  PolyMatrix exp_nilpotent() const {
    require(is_nilpotent(), errc::not_nilpotent, "exp of a non-nilpotent matrix");
    PolyMatrix acc = identity(rows_, arity_);
    PolyMatrix pw = *this;
    Rational fact(1);
    for (size_t m = 1; m <= rows_ && !pw.is_zero(); ++m) {
      fact = fact * Rational(static_cast<long>(m));
      acc = acc + pw * fact.inv();
      pw = pw * (*this);
    }
    return acc;
  }

  // (I + N)^{-1} = sum (-N)^m for nilpotent N.
  PolyMatrix inverse_unipotent() const {
    PolyMatrix n = *this - identity(rows_, arity_);
    require(n.is_nilpotent(), errc::not_unipotent, "inverse of a non-unipotent matrix");
    PolyMatrix acc = identity(rows_, arity_);
    PolyMatrix pw = -n;
    for (size_t m = 1; m <= rows_ && !pw.is_zero(); ++m) {
      acc = acc + pw;
      pw = pw * (-n);
    }
    return acc;
  }

  std::string str() const {
    std::string s = "[";
    for (size_t i = 0; i < rows_; ++i) {
      if (i) s += "; ";
      for (size_t j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += at(i, j).str();
      }
    }
    return s + "]";
  }

 private:
  void check_shape_(const PolyMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_ && arity_ == o.arity_, errc::arity_mismatch,
            "polymatrix shape mismatch");
  }

  size_t rows_ = 0, cols_ = 0, arity_ = 0;
  std::vector<QPoly> e_;
};

}  // namespace hullcoh

#endif
