#ifndef HULLCOH_SIMPCLASS_HPP
#define HULLCOH_SIMPCLASS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "hull.hpp"
#include "liecomplex.hpp"
#include "matrix.hpp"
#include "polyform.hpp"

namespace hullcoh {

// V-valued function on (p+1)-tuples of group elements.
struct group_cochain {
  size_t degree = 0;
  size_t value_dim = 1;
  std::function<std::vector<Rational>(const std::vector<group_element>&)> eval;
};

inline group_cochain group_cochain_d(const group_cochain& f) {
  group_cochain d;
  d.degree = f.degree + 1;
  d.value_dim = f.value_dim;
  size_t vd = f.value_dim;
  auto inner = f.eval;
  d.eval = [inner, vd](const std::vector<group_element>& tuple) {
    std::vector<Rational> acc(vd, Rational(0));
    for (size_t i = 0; i < tuple.size(); ++i) {
      std::vector<group_element> face;
      for (size_t j = 0; j < tuple.size(); ++j)
        if (j != i) face.push_back(tuple[j]);
      std::vector<Rational> v = inner(face);
      if (i % 2)
        acc = vec_sub(acc, v);
      else
        acc = vec_add(acc, v);
    }
    return acc;
  };
  return d;
}

// Integration over the parameter cube with the orientation normalization
// that makes iota a cochain map; must see a top-degree form.
inline std::vector<Rational> iota(const PolyForm& f, size_t p) {
  require(f.degree() == p && f.arity() == p, errc::degree_mismatch,
          "iota needs a top-degree form on the tuple's simplex");
  std::vector<Rational> v = f.integrate_cube();
  if (p % 2)
    for (auto& x : v) x = -x;
  return v;
}

// Lazy evaluator for the forms psi(omega) on tuples, with per-normalized-
// tuple caching of sigma, its Maurer-Cartan coefficients and rho_V.
class simplicial_evaluator {
 public:
  explicit simplicial_evaluator(const hull& h) : h_(&h) {}

  struct tuple_data {
    PolyMatrix sigma;
    std::vector<PolyForm> mc;
    PolyMatrix rho;
  };

  // psi(omega) on the tuple, evaluated through the normalized translate
  PolyForm psi(const QVector& omega, size_t degree,
               const std::vector<group_element>& tuple) {
    require(!tuple.empty(), errc::arity_mismatch, "empty tuple");
    size_t p = tuple.size() - 1;
    group_element g0 = tuple[0];
    group_element inv0 = h_->inverse(g0);
    std::vector<group_element> norm;
    norm.push_back(h_->identity_element());
    for (size_t i = 1; i < tuple.size(); ++i) norm.push_back(h_->multiply(inv0, tuple[i]));
    const tuple_data& td = data_for(norm);
    PolyForm f = h_->pullback_assemble(omega, degree, td.mc, td.rho, p);
    return f.apply_matrix(g0.v_act);
  }

  // psi with no normalization; the soundness check compares the two paths
  PolyForm psi_direct(const QVector& omega, size_t degree,
                      const std::vector<group_element>& tuple) const {
    return h_->pullback_form(omega, degree, tuple);
  }

  const tuple_data& data_for(const std::vector<group_element>& tuple) {
    std::string key;
    for (const auto& g : tuple) key += g.s.str() + "|" + g.u.str() + ";";
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    tuple_data td{h_->sigma(tuple), {}, PolyMatrix()};
    size_t p = tuple.size() - 1;
    if (p > 0) td.mc = h_->maurer_cartan(td.sigma);
    td.rho = h_->rho_v_poly(td.sigma);
    return cache_.emplace(std::move(key), std::move(td)).first->second;
  }

  const hull& owner() const { return *h_; }
  size_t cache_size() const { return cache_.size(); }

 private:
  const hull* h_;
  std::map<std::string, tuple_data> cache_;
};

// iota(psi(omega)) as a group cochain (shares the evaluator's cache).
inline group_cochain iota_psi(simplicial_evaluator& ev, const QVector& omega, size_t degree) {
  group_cochain c;
  c.degree = degree;
  c.value_dim = ev.owner().dim_v();
  simplicial_evaluator* e = &ev;
  QVector om = omega;
  c.eval = [e, om, degree](const std::vector<group_element>& tuple) {
    return iota(e->psi(om, degree, tuple), tuple.size() - 1);
  };
  return c;
}

struct sampled_word {
  std::string word;
  group_element g;
};

// deterministic word sampler: letters are generators and their inverses,
// length 0..max_len
class word_sampler {
 public:
  word_sampler(const hull& h, uint64_t seed, size_t max_len = 6)
      : h_(&h), eng_(seed), max_len_(max_len) {
    for (const auto& [name, g] : h.generators()) {
      names_.push_back(name);
      gens_.push_back(g);
    }
  }

  sampled_word next() {
    size_t len = eng_() % (max_len_ + 1);
    group_element g = h_->identity_element();
    std::string w;
    for (size_t i = 0; i < len; ++i) {
      size_t pick = eng_() % (2 * gens_.size());
      bool inv = pick >= gens_.size();
      size_t idx = inv ? pick - gens_.size() : pick;
      g = h_->multiply(g, inv ? h_->inverse(gens_[idx]) : gens_[idx]);
      if (!w.empty()) w += "*";
      w += names_[idx] + (inv ? "^-1" : "");
    }
    if (w.empty()) w = "e";
    return {w, g};
  }

  std::mt19937_64& engine() { return eng_; }

 private:
  const hull* h_;
  std::mt19937_64 eng_;
  size_t max_len_;
  std::vector<std::string> names_;
  std::vector<group_element> gens_;
};

struct psi_degree_result {
  size_t degree = 0;
  size_t samples = 0;
  size_t checks = 0;
  bool ok = true;
  std::string failed_identity;  // empty when ok
  std::string counterexample;   // tuple words, verbatim
};

struct psi_report {
  bool ok = true;
  size_t total_checks = 0;
  std::vector<psi_degree_result> degrees;
};

// The master diagram check: for sampled tuples and invariant cochains omega,
//   (a) iota(psi(d omega)) = group-cochain differential of iota(psi(omega)),
//   (b) psi is equivariant and normalization is sound,
//   (c) parameter-slot faces of sigma and of psi(omega) match vertex deletion,
//   (d) iota(psi(omega)) agrees with the independently computed theta.
// All comparisons are exact.
inline psi_report verify_cochain_map(const hull& h, const ce_complex& cc, size_t max_degree,
                                     size_t samples, uint64_t seed) {
  psi_report rep;
  simplicial_evaluator ev(h);
  size_t n = h.n_u();
  for (size_t k = 0; k <= max_degree && k <= n; ++k) {
    psi_degree_result res;
    res.degree = k;
    word_sampler ws(h, seed ^ (0x9e3779b97f4a7c15ULL * (k + 1)));
    auto& eng = ws.engine();
    for (size_t s = 0; s < samples; ++s) {
      // random invariant cochain of degree k
      QVector inv_coords(cc.inv_dims[k], Rational(0));
      for (auto& x : inv_coords) x = Rational(static_cast<long>(eng() % 9) - 4);
      QVector omega = cc.inclusion[k].apply(inv_coords);
      QVector domega(cc.full_dims[k < n ? k + 1 : n], Rational(0));
      if (k < n) domega = cc.full_d[k].apply(omega);

      std::vector<group_element> tuple;
      std::vector<std::string> words;
      for (size_t i = 0; i < k + 2; ++i) {
        sampled_word sw = ws.next();
        tuple.push_back(sw.g);
        words.push_back(sw.word);
      }
      auto tuple_str = [&]() {
        std::string t = "(";
        for (size_t i = 0; i < words.size(); ++i) t += (i ? ", " : "") + words[i];
        return t + ")";
      };
      auto fail_with = [&](const std::string& which) {
        res.ok = false;
        res.failed_identity = which;
        res.counterexample = tuple_str();
      };

      size_t p = k + 1;  // dimension of the sampled simplex
      ++res.samples;

      // (a) cochain-map identity
      std::vector<Rational> lhs =
          k < n ? iota(ev.psi(domega, k + 1, tuple), p)
                : std::vector<Rational>(h.dim_v(), Rational(0));
      group_cochain low = iota_psi(ev, omega, k);
      std::vector<Rational> rhs = group_cochain_d(low).eval(tuple);
      ++res.checks;
      if (lhs != rhs) {
        fail_with("iota(psi(d omega)) = d iota(psi(omega))");
        break;
      }

      // (b) equivariance of the direct path + normalization soundness
      sampled_word gw = ws.next();
      std::vector<group_element> shifted;
      for (const auto& g : tuple) shifted.push_back(h.multiply(gw.g, g));
      PolyForm left = ev.psi_direct(omega, k, {tuple.begin(), tuple.begin() + (k + 1)});
      PolyForm left_shift =
          ev.psi_direct(omega, k, {shifted.begin(), shifted.begin() + (k + 1)});
      ++res.checks;
      if (left_shift != left.apply_matrix(gw.g.v_act)) {
        fail_with("psi(g*tuple) = rho_V(g) psi(tuple)");
        break;
      }
      ++res.checks;
      if (ev.psi(omega, k, {tuple.begin(), tuple.begin() + (k + 1)}) != left) {
        fail_with("normalized evaluation = direct evaluation");
        break;
      }

      // (c) face coherence on sigma and on psi(omega), for small p
      if (p <= 3) {
        const PolyMatrix& sg = ev.data_for(tuple).sigma;
        PolyForm psi_top = ev.psi(omega, k, tuple);
        bool face_ok = true;
        for (size_t i = 0; i <= p && face_ok; ++i) {
          std::vector<group_element> face;
          for (size_t j = 0; j < tuple.size(); ++j)
            if (j != i) face.push_back(tuple[j]);
          PolyMatrix restricted = i < p ? sg.substitute_slot(i + 1, Rational(0))
                                        : sg.substitute_slot(p, Rational(1));
          ++res.checks;
          if (restricted != ev.data_for(face).sigma) {
            fail_with("sigma face restriction = vertex deletion");
            face_ok = false;
            break;
          }
          PolyForm f_restricted = i < p ? psi_top.cube_face(i + 1, Rational(0))
                                        : psi_top.cube_face(p, Rational(1));
          ++res.checks;
          if (f_restricted != ev.psi(omega, k, face)) {
            fail_with("psi face restriction = vertex deletion");
            face_ok = false;
            break;
          }
        }
        if (!face_ok) break;
      }

      // (d) iota psi = theta on the k-dimensional faces
      for (size_t i = 0; i + 1 < tuple.size() && i < 2; ++i) {
        std::vector<group_element> face;
        for (size_t j = 0; j < tuple.size(); ++j)
          if (j != i) face.push_back(tuple[j]);
        ++res.checks;
        if (iota(ev.psi(omega, k, face), k) != h.theta(omega, k, face)) {
          fail_with("iota psi = theta");
          break;
        }
      }
      if (!res.ok) break;
    }
    rep.total_checks += res.checks;
    if (!res.ok) rep.ok = false;
    rep.degrees.push_back(std::move(res));
  }
  return rep;
}

}  // namespace hullcoh

#endif
