#ifndef HULLCOH_LIECOMPLEX_HPP
#define HULLCOH_LIECOMPLEX_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "error.hpp"
#include "exterior.hpp"
#include "hull.hpp"
#include "matrix.hpp"

namespace hullcoh {

// Nilpotent Lie algebra given by structure constants over a fixed basis.
class lie_algebra {
 public:
  static lie_algebra from_matrices(const std::vector<QMatrix>& u_basis) {
    lie_algebra L;
    L.n_ = u_basis.size();
    span_solver span;
    try {
      span = span_solver(u_basis);
    } catch (const error& e) {
      fail(errc::not_closed, e.what());
    }
    L.c_.assign(L.n_, std::vector<QVector>(L.n_, QVector(L.n_, Rational(0))));
    for (size_t i = 0; i < L.n_; ++i)
      for (size_t j = i + 1; j < L.n_; ++j) {
        QMatrix br = u_basis[i] * u_basis[j] - u_basis[j] * u_basis[i];
        QVector c;
        try {
          c = span.coords(br);
        } catch (const error&) {
          fail(errc::not_closed, "[X_" + std::to_string(i + 1) + ",X_" + std::to_string(j + 1) +
                                     "] is not in the span of the basis");
        }
        L.c_[i][j] = c;
        for (size_t k = 0; k < L.n_; ++k) L.c_[j][i][k] = -c[k];
      }
    L.check_jacobi_();
    L.compute_lcs_();
    return L;
  }

  size_t dim() const { return n_; }

  const QVector& bracket(size_t i, size_t j) const { return c_[i][j]; }

  // bracket of coordinate vectors
  QVector bracket_coords(const QVector& a, const QVector& b) const {
    QVector r(n_, Rational(0));
    for (size_t i = 0; i < n_; ++i) {
      if (a[i].is_zero()) continue;
      for (size_t j = 0; j < n_; ++j) {
        if (b[j].is_zero() || i == j) continue;
        Rational ab = a[i] * b[j];
        for (size_t k = 0; k < n_; ++k)
          if (!c_[i][j][k].is_zero()) r[k] += ab * c_[i][j][k];
      }
    }
    return r;
  }

  // lower-central-series depth of each basis vector: max m with e_k in U_m
  const std::vector<size_t>& lcs_depth() const { return depth_; }
  size_t lcs_length() const { return lcs_len_; }

 private:
  void check_jacobi_() const {
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = i + 1; j < n_; ++j)
        for (size_t k = j + 1; k < n_; ++k) {
          QVector ei(n_, Rational(0)), ej(n_, Rational(0)), ek(n_, Rational(0));
          ei[i] = Rational(1);
          ej[j] = Rational(1);
          ek[k] = Rational(1);
          QVector s = vec_add(bracket_coords(ei, bracket_coords(ej, ek)),
                              vec_add(bracket_coords(ej, bracket_coords(ek, ei)),
                                      bracket_coords(ek, bracket_coords(ei, ej))));
          require(vec_is_zero(s), errc::inconsistent, "Jacobi identity fails");
        }
  }

  void compute_lcs_() {
    depth_.assign(n_, 1);
    // U_1 = everything; U_{m+1} = [u, U_m]
    std::vector<QVector> cur;
    for (size_t i = 0; i < n_; ++i) {
      QVector e(n_, Rational(0));
      e[i] = Rational(1);
      cur.push_back(e);
    }
    size_t m = 1;
    while (!cur.empty()) {
      require(m <= n_ + 1, errc::not_nilpotent, "lower central series does not terminate");
      std::vector<QVector> next_gen;
      for (size_t i = 0; i < n_; ++i) {
        QVector e(n_, Rational(0));
        e[i] = Rational(1);
        for (const auto& u : cur) {
          QVector b = bracket_coords(e, u);
          if (!vec_is_zero(b)) next_gen.push_back(b);
        }
      }
      std::vector<QVector> next = column_space_basis_(next_gen);
      // members of U_{m+1} get depth at least m+1
      if (!next.empty()) {
        QMatrix span_m = QMatrix::from_columns(n_, next);
        size_t r = span_m.rank();
        for (size_t k = 0; k < n_; ++k) {
          QVector e(n_, Rational(0));
          e[k] = Rational(1);
          std::vector<QVector> aug = next;
          aug.push_back(e);
          if (QMatrix::from_columns(n_, aug).rank() == r) depth_[k] = m + 1;
        }
      }
      cur = next;
      ++m;
    }
    lcs_len_ = m - 1;
  }

  static std::vector<QVector> column_space_basis_(const std::vector<QVector>& vs) {
    std::vector<QVector> out;
    if (vs.empty()) return out;
    size_t dim = vs[0].size();
    size_t r = 0;
    for (const auto& v : vs) {
      std::vector<QVector> trial = out;
      trial.push_back(v);
      if (QMatrix::from_columns(dim, trial).rank() > r) {
        out.push_back(v);
        ++r;
      }
    }
    return out;
  }

  size_t n_ = 0;
  std::vector<std::vector<QVector>> c_;
  std::vector<size_t> depth_;
  size_t lcs_len_ = 0;
};

// Differential of the Lie algebra cochain complex with coefficients in the
// module, on the full exterior power in the bitmask basis; flat index of
// (mask S, value slot v) is index(S)*dim_V + v.
inline QMatrix ce_differential(const lie_algebra& L, const rational_module& mod, size_t k) {
  size_t n = L.dim(), dv = mod.dim;
  require(k <= n, errc::degree_mismatch, "cochain degree out of range");
  auto rows = subsets_of_size(n, k + 1);
  auto cols = subsets_of_size(n, k);
  QMatrix d(rows.size() * dv, cols.size() * dv);
  for (size_t ti = 0; ti < rows.size(); ++ti) {
    uint32_t t = rows[ti];
    auto bits = mask_bits(t);
    for (size_t a = 0; a < bits.size(); ++a) {
      size_t si = subset_index(cols, t & ~(1u << bits[a]));
      const QMatrix& r = mod.r_basis[bits[a]];
      bool neg = a % 2;
      for (size_t w = 0; w < dv; ++w)
        for (size_t v = 0; v < dv; ++v)
          if (!r.at(w, v).is_zero())
            d.at(ti * dv + w, si * dv + v) += neg ? -r.at(w, v) : r.at(w, v);
    }
    for (size_t a = 0; a < bits.size(); ++a)
      for (size_t b = a + 1; b < bits.size(); ++b) {
        uint32_t rest = t & ~(1u << bits[a]) & ~(1u << bits[b]);
        const QVector& cab = L.bracket(bits[a], bits[b]);
        bool neg_ab = (a + b) % 2;
        for (size_t m = 0; m < n; ++m) {
          if (cab[m].is_zero() || (rest & (1u << m))) continue;
          size_t si = subset_index(cols, rest | (1u << m));
          Rational coef = cab[m];
          if (insertion_sign(rest, m) < 0) coef = -coef;
          if (neg_ab) coef = -coef;
          for (size_t v = 0; v < dv; ++v) d.at(ti * dv + v, si * dv + v) += coef;
        }
      }
  }
  return d;
}

// Action induced on degree-k cochains by one t-generator: inverse-transpose
// exterior power on the Lambda factor tensored with the module action.
inline QMatrix t_action_on_cochains(const QMatrix& adjoint, const QMatrix& r_gen, size_t k) {
  return kronecker(exterior_power(adjoint.inverse().transpose(), k), r_gen);
}

struct ce_complex {
  size_t n = 0, dv = 0;
  std::vector<size_t> full_dims;   // 0..n
  std::vector<size_t> inv_dims;    // 0..n
  std::vector<QMatrix> full_d;     // 0..n-1, on the full complex
  std::vector<QMatrix> inclusion;  // 0..n, columns = invariant basis
  std::vector<QMatrix> d;          // 0..n-1, restricted to invariants
};

inline ce_complex invariant_subcomplex(const lie_algebra& L, const rational_module& mod,
                                       const std::vector<QMatrix>& adjoints) {
  size_t n = L.dim(), dv = mod.dim;
  require(adjoints.size() == mod.r_gens.size(), errc::invalid_presentation,
          "one adjoint matrix per t-generator required");
  ce_complex c;
  c.n = n;
  c.dv = dv;
  for (size_t k = 0; k <= n; ++k) {
    size_t full = subsets_of_size(n, k).size() * dv;
    c.full_dims.push_back(full);
    std::vector<QMatrix> ops;
    for (size_t j = 0; j < adjoints.size(); ++j)
      ops.push_back(t_action_on_cochains(adjoints[j], mod.r_gens[j], k));
    QMatrix p = joint_fixed_space(ops, full);
    c.inv_dims.push_back(p.cols());
    c.inclusion.push_back(p);
  }
  for (size_t k = 0; k < n; ++k) {
    c.full_d.push_back(ce_differential(L, mod, k));
    QMatrix dp = c.full_d[k] * c.inclusion[k];
    QMatrix dk(c.inv_dims[k + 1], c.inv_dims[k]);
    for (size_t col = 0; col < c.inv_dims[k]; ++col) {
      QVector x;
      try {
        x = c.inclusion[k + 1].solve(dp.column(col));
      } catch (const error&) {
        fail(errc::not_preserved,
             "differential of an invariant " + std::to_string(k) + "-cochain is not invariant");
      }
      for (size_t row = 0; row < c.inv_dims[k + 1]; ++row) dk.at(row, col) = x[row];
    }
    c.d.push_back(dk);
  }
  return c;
}

struct cohomology_entry {
  size_t degree = 0;
  size_t full_dim = 0;
  size_t invariant_dim = 0;
  size_t betti = 0;
  std::vector<QVector> reps_invariant;
  std::vector<QVector> reps_full;
  std::vector<std::string> reps_str;
};

struct cohomology_report {
  std::vector<cohomology_entry> entries;
  long long euler = 0;
};

inline std::string cochain_str(size_t n, size_t k, size_t dv, const QVector& full) {
  if (dv == 1) return multivector_str(n, k, full, "xi");
  auto basis = subsets_of_size(n, k);
  std::string s;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t v = 0; v < dv; ++v) {
      const Rational& c = full[i * dv + v];
      if (c.is_zero()) continue;
      std::string mono;
      for (size_t bit : mask_bits(basis[i])) {
        if (!mono.empty()) mono += "^";
        mono += "xi" + std::to_string(bit + 1);
      }
      if (!mono.empty()) mono += " ";
      mono += "v" + std::to_string(v + 1);
      std::string cs = c.str();
      std::string term = cs == "1" ? mono : (cs == "-1" ? "-" + mono : cs + " " + mono);
      if (!s.empty() && term[0] != '-')
        s += " + ";
      else if (!s.empty()) {
        s += " - ";
        term = term.substr(1);
      }
      s += term;
    }
  return s.empty() ? "0" : s;
}

inline cohomology_report cohomology(const ce_complex& c) {
  cohomology_report rep;
  long long euler = 0;
  std::vector<size_t> ranks(c.n + 1, 0);  // rank of d_k, d_n = 0
  for (size_t k = 0; k < c.n; ++k) ranks[k] = c.d[k].rank();
  for (size_t k = 0; k <= c.n; ++k) {
    cohomology_entry e;
    e.degree = k;
    e.full_dim = c.full_dims[k];
    e.invariant_dim = c.inv_dims[k];
    size_t ker = k < c.n ? c.inv_dims[k] - ranks[k] : c.inv_dims[k];
    size_t im = k == 0 ? 0 : ranks[k - 1];
    e.betti = ker - im;
    // representatives: kernel vectors extending past the image, in the
    // canonical kernel-basis order
    std::vector<QVector> kernel;
    if (k < c.n)
      kernel = c.d[k].kernel_basis();
    else
      for (size_t i = 0; i < c.inv_dims[k]; ++i) {
        QVector v(c.inv_dims[k], Rational(0));
        v[i] = Rational(1);
        kernel.push_back(v);
      }
    std::vector<QVector> chosen;
    if (c.inv_dims[k] > 0) {
      std::vector<QVector> pool;
      size_t base_rank = 0;
      if (k > 0) {
        for (size_t col = 0; col < c.d[k - 1].cols(); ++col) pool.push_back(c.d[k - 1].column(col));
        base_rank = ranks[k - 1];
        // keep only an independent image set
        std::vector<QVector> im_basis;
        for (const auto& v : pool) {
          std::vector<QVector> trial = im_basis;
          trial.push_back(v);
          if (QMatrix::from_columns(c.inv_dims[k], trial).rank() > im_basis.size())
            im_basis.push_back(v);
        }
        pool = im_basis;
      }
      size_t cur = base_rank;
      for (const auto& v : kernel) {
        if (chosen.size() == e.betti) break;
        std::vector<QVector> trial = pool;
        trial.push_back(v);
        if (QMatrix::from_columns(c.inv_dims[k], trial).rank() > cur) {
          pool.push_back(v);
          chosen.push_back(v);
          ++cur;
        }
      }
    }
    require(chosen.size() == e.betti, errc::inconsistent, "representative extraction failed");
    for (const auto& v : chosen) {
      e.reps_invariant.push_back(v);
      QVector full = c.inclusion[k].apply(v);
      e.reps_full.push_back(full);
      e.reps_str.push_back(cochain_str(c.n, k, c.dv, full));
    }
    euler += (k % 2 ? -1 : 1) * static_cast<long long>(e.betti);
    rep.entries.push_back(std::move(e));
  }
  rep.euler = euler;
  return rep;
}

inline std::vector<size_t> betti_numbers(const cohomology_report& r) {
  std::vector<size_t> b;
  for (const auto& e : r.entries) b.push_back(e.betti);
  return b;
}

// Convenience: the whole pipeline from a validated hull.
inline ce_complex invariant_subcomplex(const hull& h) {
  lie_algebra L = lie_algebra::from_matrices(h.pres().u_basis);
  std::vector<QMatrix> adj;
  for (size_t j = 0; j < h.pres().t_generators.size(); ++j) adj.push_back(h.adjoint_of_t(j));
  return invariant_subcomplex(L, h.module(), adj);
}

struct minimal_model {
  std::vector<size_t> order;       // generator indices in adapted order
  std::vector<size_t> depth;       // LCS depth per generator (original index)
  std::vector<std::string> differentials;  // per original index
  bool adapted = false;            // triangular in the emitted order
  bool d_squared_zero = false;
  std::vector<std::string> notes;
};

inline minimal_model minimal_model_report(const lie_algebra& L, size_t n_t_generators) {
  size_t n = L.dim();
  minimal_model m;
  m.depth = L.lcs_depth();

  // d xi_k = -sum_{i<j} c^k_{ij} xi_i ^ xi_j, rendered from the degree-1 CE
  // differential with trivial coefficients
  rational_module triv = rational_module::trivial(n, 0);
  QMatrix d1 = ce_differential(L, triv, 1);
  for (size_t k = 0; k < n; ++k) {
    QVector col = d1.column(k);
    m.differentials.push_back("d xi" + std::to_string(k + 1) + " = " +
                              multivector_str(n, 2, col, "xi"));
  }
  if (n >= 2) {
    QMatrix dd = ce_differential(L, triv, 2) * d1;
    m.d_squared_zero = dd.is_zero();
  } else {
    m.d_squared_zero = true;
  }

  auto triangular = [&](const std::vector<size_t>& order) {
    std::vector<size_t> pos(n);
    for (size_t idx = 0; idx < n; ++idx) pos[order[idx]] = idx;
    for (size_t k = 0; k < n; ++k)
      for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
          if (!L.bracket(i, j)[k].is_zero() && (pos[i] >= pos[k] || pos[j] >= pos[k]))
            return false;
    return true;
  };

  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return m.depth[a] < m.depth[b]; });
  if (triangular(order)) {
    m.adapted = true;
    m.notes.push_back("ordering adapted to the lower central series");
  } else {
    // topological sort on the dependency graph: i,j must precede k whenever
    // c^k_{ij} != 0
    std::vector<std::vector<size_t>> before(n);
    for (size_t k = 0; k < n; ++k)
      for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
          if (!L.bracket(i, j)[k].is_zero()) {
            before[k].push_back(i);
            before[k].push_back(j);
          }
    std::vector<bool> placed(n, false);
    order.clear();
    while (order.size() < n) {
      size_t pick = n;
      for (size_t k = 0; k < n && pick == n; ++k) {
        if (placed[k]) continue;
        bool ready = true;
        for (size_t dep : before[k]) ready = ready && (placed[dep] || dep == k);
        if (ready) pick = k;
      }
      if (pick == n) break;
      placed[pick] = true;
      order.push_back(pick);
    }
    if (order.size() == n && triangular(order)) {
      m.adapted = true;
      m.notes.push_back("ordering found by topological sort (depth order was not triangular)");
    } else {
      m.adapted = false;
      while (order.size() < n)
        for (size_t k = 0; k < n; ++k)
          if (!placed[k]) {
            placed[k] = true;
            order.push_back(k);
          }
      m.notes.push_back("no triangular ordering exists for this basis");
    }
  }
  m.order = order;
  m.notes.push_back("differential lands in words of length two: quadratic by construction");
  if (n_t_generators > 0)
    m.notes.push_back(
        "t-generators act on the model through coefficients; the generators above describe the "
        "unipotent direction only");
  return m;
}

}  // namespace hullcoh

#endif
