#ifndef HULLCOH_POLY_HPP
#define HULLCOH_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace hullcoh {

// Polynomial over Q in variables t_1..t_p (p = arity).  Terms are kept in a
// map keyed by dense exponent vectors, so iteration order is deterministic
// and zero coefficients are never stored.
class QPoly {
 public:
  using Exponents = std::vector<uint32_t>;

  explicit QPoly(size_t arity = 0) : arity_(arity) {}

  static QPoly constant(size_t arity, const Rational& c) {
    QPoly p(arity);
    if (!c.is_zero()) p.terms_[Exponents(arity, 0)] = c;
    return p;
  }
  static QPoly one(size_t arity) { return constant(arity, 1); }

  // t_index with 1-based index in 1..arity.
  static QPoly variable(size_t arity, size_t index) {
    require(index >= 1 && index <= arity, errc::arity_mismatch, "variable index out of range");
    QPoly p(arity);
    Exponents e(arity, 0);
    e[index - 1] = 1;
    p.terms_[e] = 1;
    return p;
  }

  size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  bool is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Exponents(arity_, 0);
  }
  Rational constant_value() const {
    require(is_constant(), errc::inconsistent, "polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  size_t total_degree() const {
    size_t d = 0;
    for (const auto& [e, c] : terms_) {
      size_t s = 0;
      for (uint32_t x : e) s += x;
      if (s > d) d = s;
    }
    return d;
  }

  void add_term(const Exponents& e, const Rational& c) {
    require(e.size() == arity_, errc::arity_mismatch, "exponent arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  QPoly operator-() const {
    QPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    require(a.arity_ == b.arity_, errc::arity_mismatch, "polynomial arity mismatch");
    QPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend QPoly operator-(const QPoly& a, const QPoly& b) {
    require(a.arity_ == b.arity_, errc::arity_mismatch, "polynomial arity mismatch");
    QPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    require(a.arity_ == b.arity_, errc::arity_mismatch, "polynomial arity mismatch");
    QPoly r(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.arity_);
        for (size_t i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend QPoly operator*(const Rational& c, const QPoly& a) {
    QPoly r(a.arity_);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : a.terms_) r.terms_[e] = c * x;
    return r;
  }
  friend QPoly operator*(const QPoly& a, const Rational& c) { return c * a; }

  QPoly pow(uint32_t k) const {
    QPoly r = one(arity_);
    QPoly base = *this;
    while (k) {
      if (k & 1) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }

  // d/dt_index, 1-based.
  QPoly partial(size_t index) const {
    require(index >= 1 && index <= arity_, errc::arity_mismatch, "derivative index out of range");
    QPoly r(arity_);
    for (const auto& [e, c] : terms_) {
      uint32_t k = e[index - 1];
      if (k == 0) continue;
      Exponents e2 = e;
      e2[index - 1] = k - 1;
      r.add_term(e2, Rational(static_cast<long>(k)) * c);
    }
    return r;
  }

  Rational eval(const std::vector<Rational>& point) const {
    require(point.size() == arity_, errc::arity_mismatch, "evaluation point arity mismatch");
    Rational acc;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (size_t i = 0; i < arity_; ++i)
        for (uint32_t k = 0; k < e[i]; ++k) t *= point[i];
      acc += t;
    }
    return acc;
  }

  // Substitute each variable by a polynomial of common arity.
  QPoly substitute(const std::vector<QPoly>& images, size_t new_arity) const {
    require(images.size() == arity_, errc::arity_mismatch, "substitution arity mismatch");
    QPoly acc(new_arity);
    for (const auto& [e, c] : terms_) {
      QPoly t = QPoly::constant(new_arity, c);
      for (size_t i = 0; i < arity_; ++i)
        if (e[i]) t = t * images[i].pow(e[i]);
      acc = acc + t;
    }
    return acc;
  }

  // Set t_slot (1-based) to the given constant and renumber the higher
  // variables down by one; the result has arity-1 variables.
  QPoly substitute_slot(size_t slot, const Rational& value) const {
    require(slot >= 1 && slot <= arity_, errc::arity_mismatch, "slot out of range");
    QPoly r(arity_ - 1);
    for (const auto& [e, c] : terms_) {
      Rational coeff = c;
      uint32_t k = e[slot - 1];
      if (k) {
        if (value.is_zero()) continue;
        for (uint32_t j = 0; j < k; ++j) coeff *= value;
      }
      Exponents e2;
      e2.reserve(arity_ - 1);
      for (size_t i = 0; i < arity_; ++i)
        if (i != slot - 1) e2.push_back(e[i]);
      r.add_term(e2, coeff);
    }
    return r;
  }

  // Reinterpret t_i as t_{i+shift} inside a larger variable set.
  QPoly shift_up(size_t shift, size_t new_arity) const {
    require(arity_ + shift <= new_arity, errc::arity_mismatch, "shift overflows arity");
    QPoly r(new_arity);
    for (const auto& [e, c] : terms_) {
      Exponents e2(new_arity, 0);
      for (size_t i = 0; i < arity_; ++i) e2[i + shift] = e[i];
      r.terms_[e2] = c;
    }
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string mono;
      for (size_t i = 0; i < arity_; ++i) {
        if (!e[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += "t" + std::to_string(i + 1);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      std::string coef = c.str();
      std::string term;
      if (mono.empty()) {
        term = coef;
      } else if (coef == "1") {
        term = mono;
      } else if (coef == "-1") {
        term = "-" + mono;
      } else {
        term = coef + "*" + mono;
      }
      if (!first && term[0] != '-') s += "+";
      s += term;
      first = false;
    }
    return s;
  }

 private:
  size_t arity_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace hullcoh

#endif
