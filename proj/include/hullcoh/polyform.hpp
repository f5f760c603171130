#ifndef HULLCOH_POLYFORM_HPP
#define HULLCOH_POLYFORM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "error.hpp"
#include "exterior.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace hullcoh {

// Differential form on t-space with polynomial coefficients and values in
// Q^d: sum over masks S of  a_S(t) dt_S,  a_S a vector of d polynomials.
// Bit b of a mask stands for dt_{b+1}.
class PolyForm {
 public:
  PolyForm() = default;
  // degree > arity is allowed; such a form is identically zero
  PolyForm(size_t arity, size_t degree, size_t value_dim)
      : arity_(arity), degree_(degree), value_dim_(value_dim) {}

  size_t arity() const { return arity_; }
  size_t degree() const { return degree_; }
  size_t value_dim() const { return value_dim_; }
  const std::map<uint32_t, std::vector<QPoly>>& comps() const { return comps_; }

  bool is_zero() const {
    for (auto& [m, v] : comps_)
      for (auto& p : v)
        if (!p.is_zero()) return false;
    return true;
  }

  std::vector<QPoly> coeff(uint32_t mask) const {
    auto it = comps_.find(mask);
    if (it != comps_.end()) return it->second;
    return std::vector<QPoly>(value_dim_, QPoly::constant(arity_, Rational(0)));
  }

  void add_term(uint32_t mask, size_t component, const QPoly& p) {
    require(static_cast<size_t>(popcount32(mask)) == degree_, errc::degree_mismatch,
            "mask size does not match form degree");
    require(component < value_dim_, errc::value_dim_mismatch, "component out of range");
    require(p.arity() == arity_, errc::arity_mismatch, "coefficient arity mismatch");
    auto it = comps_.find(mask);
    if (it == comps_.end()) {
      auto [jt, ok] = comps_.emplace(mask, std::vector<QPoly>(value_dim_, QPoly::constant(arity_, Rational(0))));
      it = jt;
      (void)ok;
    }
    it->second[component] = it->second[component] + p;
    prune_at_(it->first);
  }

  void set_coeff(uint32_t mask, const std::vector<QPoly>& v) {
    require(v.size() == value_dim_, errc::value_dim_mismatch, "coefficient vector size");
    require(static_cast<size_t>(popcount32(mask)) == degree_, errc::degree_mismatch,
            "mask size does not match form degree");
    comps_[mask] = v;
    prune_at_(mask);
  }

  bool operator==(const PolyForm& o) const {
    if (arity_ != o.arity_ || degree_ != o.degree_ || value_dim_ != o.value_dim_) return false;
    return (*this - o).is_zero();
  }
  bool operator!=(const PolyForm& o) const { return !(*this == o); }

  PolyForm operator-() const {
    PolyForm r(arity_, degree_, value_dim_);
    for (auto& [m, v] : comps_) {
      std::vector<QPoly> w;
      w.reserve(v.size());
      for (auto& p : v) w.push_back(-p);
      r.comps_[m] = std::move(w);
    }
    return r;
  }

  PolyForm operator+(const PolyForm& o) const {
    check_shape_(o);
    PolyForm r = *this;
    for (auto& [m, v] : o.comps_) {
      auto it = r.comps_.find(m);
      if (it == r.comps_.end()) {
        r.comps_[m] = v;
      } else {
        for (size_t i = 0; i < v.size(); ++i) it->second[i] = it->second[i] + v[i];
      }
      r.prune_at_(m);
    }
    return r;
  }
  PolyForm operator-(const PolyForm& o) const { return *this + (-o); }

  PolyForm operator*(const Rational& c) const {
    PolyForm r(arity_, degree_, value_dim_);
    for (auto& [m, v] : comps_) {
      std::vector<QPoly> w;
      w.reserve(v.size());
      for (auto& p : v) w.push_back(p * c);
      r.comps_[m] = std::move(w);
      r.prune_at_(m);
    }
    return r;
  }

  // Multiply every coefficient by a scalar polynomial.
  PolyForm scale_poly(const QPoly& q) const {
    require(q.arity() == arity_, errc::arity_mismatch, "scale_poly arity mismatch");
    PolyForm r(arity_, degree_, value_dim_);
    for (auto& [m, v] : comps_) {
      std::vector<QPoly> w;
      w.reserve(v.size());
      for (auto& p : v) w.push_back(p * q);
      r.comps_[m] = std::move(w);
      r.prune_at_(m);
    }
    return r;
  }

  // Apply a constant linear map to the value slot.
  PolyForm apply_matrix(const QMatrix& a) const {
    require(a.cols() == value_dim_, errc::value_dim_mismatch, "apply_matrix shape");
    PolyForm r(arity_, degree_, a.rows());
    for (auto& [m, v] : comps_) {
      std::vector<QPoly> w(a.rows(), QPoly::constant(arity_, Rational(0)));
      for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
          if (!a.at(i, j).is_zero()) w[i] = w[i] + v[j] * a.at(i, j);
      r.comps_[m] = std::move(w);
      r.prune_at_(m);
    }
    return r;
  }

  PolyForm d() const {
    PolyForm r(arity_, degree_ + 1, value_dim_);
    for (auto& [m, v] : comps_) {
      for (size_t var = 1; var <= arity_; ++var) {
        size_t bit = var - 1;
        if (m & (1u << bit)) continue;
        int sg = insertion_sign(m, bit);
        uint32_t nm = m | (1u << bit);
        for (size_t c = 0; c < value_dim_; ++c) {
          QPoly dp = v[c].partial(var);
          if (dp.is_zero()) continue;
          r.add_term(nm, c, sg > 0 ? dp : -dp);
        }
      }
    }
    return r;
  }

  // Wedge; at least one side must be scalar-valued.
  PolyForm wedge(const PolyForm& o) const {
    require(arity_ == o.arity_, errc::arity_mismatch, "wedge arity mismatch");
    require(value_dim_ == 1 || o.value_dim_ == 1, errc::value_dim_mismatch,
            "wedge needs a scalar-valued factor");
    size_t vd = value_dim_ == 1 ? o.value_dim_ : value_dim_;
    PolyForm r(arity_, degree_ + o.degree_, vd);
    for (auto& [ma, va] : comps_)
      for (auto& [mb, vb] : o.comps_) {
        int sg = shuffle_sign(ma, mb);
        if (!sg) continue;
        uint32_t nm = ma | mb;
        for (size_t c = 0; c < vd; ++c) {
          const QPoly& pa = value_dim_ == 1 ? va[0] : va[c];
          const QPoly& pb = o.value_dim_ == 1 ? vb[0] : vb[c];
          QPoly prod = pa * pb;
          if (prod.is_zero()) continue;
          r.add_term(nm, c, sg > 0 ? prod : -prod);
        }
      }
    return r;
  }

  // Pullback along t_j = images[j-1](s_1..s_q).
  PolyForm pullback(const std::vector<QPoly>& images, size_t new_arity) const {
    require(images.size() == arity_, errc::arity_mismatch, "pullback needs one image per variable");
    for (auto& im : images)
      require(im.arity() == new_arity, errc::arity_mismatch, "pullback image arity");
    // dt_j pulls back to sum_i (d images_j / d s_i) ds_i.
    std::vector<PolyForm> dt(arity_);
    for (size_t j = 0; j < arity_; ++j) {
      dt[j] = PolyForm(new_arity, 1, 1);
      for (size_t i = 1; i <= new_arity; ++i) {
        QPoly der = images[j].partial(i);
        if (!der.is_zero()) dt[j].add_term(1u << (i - 1), 0, der);
      }
    }
    PolyForm r(new_arity, degree_, value_dim_);
    for (auto& [m, v] : comps_) {
      PolyForm block(new_arity, 0, 1);
      block.add_term(0, 0, QPoly::one(new_arity));
      for (size_t bit : mask_bits(m)) block = block.wedge(dt[bit]);
      std::vector<QPoly> subbed;
      subbed.reserve(v.size());
      for (auto& p : v) subbed.push_back(p.substitute(images, new_arity));
      for (auto& [bm, bv] : block.comps_)
        for (size_t c = 0; c < value_dim_; ++c) {
          QPoly prod = bv[0] * subbed[c];
          if (!prod.is_zero()) r.add_term(bm, c, prod);
        }
    }
    return r;
  }

  // Face t_slot = value of the cube [0,1]^arity; drops dt_slot terms and
  // renumbers the higher variables down.
  PolyForm cube_face(size_t slot, const Rational& value) const {
    require(slot >= 1 && slot <= arity_, errc::arity_mismatch, "cube_face slot out of range");
    size_t bit = slot - 1;
    PolyForm r(arity_ - 1, degree_, value_dim_);
    for (auto& [m, v] : comps_) {
      if (m & (1u << bit)) continue;
      uint32_t low = m & ((1u << bit) - 1u);
      uint32_t high = m >> (bit + 1);
      uint32_t nm = low | (high << bit);
      for (size_t c = 0; c < value_dim_; ++c) {
        QPoly p = v[c].substitute_slot(slot, value);
        if (!p.is_zero()) r.add_term(nm, c, p);
      }
    }
    return r;
  }

  // Face maps of the standard simplex {t_i >= 0, sum t_i <= 1}, vertex
  // ordering v_0 = 0, v_i = e_i.  face(i) omits vertex i.
  PolyForm simplex_face(size_t i) const {
    require(i <= arity_, errc::arity_mismatch, "simplex face index out of range");
    if (i >= 1) {
      // t_i = 0, higher variables renumbered down.
      return cube_face(i, Rational(0));
    }
    // Opposite face: t_1 = 1 - s_1 - ... - s_{p-1}, t_{j+1} = s_j.
    size_t q = arity_ - 1;
    std::vector<QPoly> images;
    images.reserve(arity_);
    QPoly first = QPoly::one(q);
    for (size_t j = 1; j <= q; ++j) first = first - QPoly::variable(q, j);
    images.push_back(first);
    for (size_t j = 1; j <= q; ++j) images.push_back(QPoly::variable(q, j));
    return pullback(images, q);
  }

  // Integral of a top-degree form over the cube [0,1]^arity.
  std::vector<Rational> integrate_cube() const {
    require(degree_ == arity_, errc::degree_mismatch, "cube integral needs a top-degree form");
    std::vector<Rational> out(value_dim_, Rational(0));
    uint32_t full = arity_ == 0 ? 0u : ((1u << arity_) - 1u);
    auto it = comps_.find(full);
    if (it == comps_.end()) return out;
    for (size_t c = 0; c < value_dim_; ++c)
      for (auto& [exps, coef] : it->second[c].terms()) {
        Rational term = coef;
        for (uint32_t e : exps) term = term / Rational(static_cast<long>(e) + 1);
        out[c] += term;
      }
    return out;
  }

  // Integral of a top-degree form over the standard simplex, via
  // int t1^a1 ... tp^ap = (prod ai!) / (p + sum ai)!.
  std::vector<Rational> integrate_simplex() const {
    require(degree_ == arity_, errc::degree_mismatch, "simplex integral needs a top-degree form");
    std::vector<Rational> out(value_dim_, Rational(0));
    uint32_t full = arity_ == 0 ? 0u : ((1u << arity_) - 1u);
    auto it = comps_.find(full);
    if (it == comps_.end()) return out;
    for (size_t c = 0; c < value_dim_; ++c)
      for (auto& [exps, coef] : it->second[c].terms()) {
        Rational num(1);
        unsigned long total = arity_;
        for (uint32_t e : exps) {
          num = num * factorial(e);
          total += e;
        }
        out[c] += coef * num / factorial(total);
      }
    return out;
  }

  std::string str() const {
    std::string s;
    for (auto& [m, v] : comps_) {
      std::string mono;
      for (size_t bit : mask_bits(m)) {
        if (!mono.empty()) mono += "^";
        mono += "dt" + std::to_string(bit + 1);
      }
      for (size_t c = 0; c < value_dim_; ++c) {
        if (v[c].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + v[c].str() + ")";
        if (!mono.empty()) s += " " + mono;
        if (value_dim_ > 1) s += " @" + std::to_string(c);
      }
    }
    return s.empty() ? "0" : s;
  }

 private:
  void check_shape_(const PolyForm& o) const {
    require(arity_ == o.arity_, errc::arity_mismatch, "form arity mismatch");
    require(degree_ == o.degree_, errc::degree_mismatch, "form degree mismatch");
    require(value_dim_ == o.value_dim_, errc::value_dim_mismatch, "form value dim mismatch");
  }
  void prune_at_(uint32_t mask) {
    auto it = comps_.find(mask);
    if (it == comps_.end()) return;
    for (auto& p : it->second)
      if (!p.is_zero()) return;
    comps_.erase(it);
  }

  size_t arity_ = 0;
  size_t degree_ = 0;
  size_t value_dim_ = 1;
  std::map<uint32_t, std::vector<QPoly>> comps_;
};

}  // namespace hullcoh

#endif
