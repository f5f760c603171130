#ifndef HULLCOH_ORACLE_HPP
#define HULLCOH_ORACLE_HPP

#include <string>
#include <vector>

#include "error.hpp"
#include "exterior.hpp"
#include "hull.hpp"
#include "matrix.hpp"

namespace hullcoh {

inline QMatrix int_power(const QMatrix& m, long e) {
  QMatrix base = e < 0 ? m.inverse() : m;
  unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : e;
  QMatrix r = QMatrix::identity(m.rows());
  for (; k; --k) r = r * base;
  return r;
}

// Koszul-style differential for the cohomology of Z^m acting on V through
// the commuting invertible matrices rho[0..m-1]:
//   d[(S u {i}, w), (S, v)] = insertion_sign(S, i) * (rho_i - I)[w, v].
inline QMatrix koszul_differential(const std::vector<QMatrix>& rho, size_t dv, size_t k) {
  size_t m = rho.size();
  auto rows = subsets_of_size(m, k + 1);
  auto cols = subsets_of_size(m, k);
  QMatrix d(rows.size() * dv, cols.size() * dv);
  for (size_t si = 0; si < cols.size(); ++si) {
    uint32_t s = cols[si];
    for (size_t i = 0; i < m; ++i) {
      if (s & (1u << i)) continue;
      size_t ti = subset_index(rows, s | (1u << i));
      int sgn = insertion_sign(s, i);
      for (size_t w = 0; w < dv; ++w)
        for (size_t v = 0; v < dv; ++v) {
          Rational phi = rho[i].at(w, v) - Rational(w == v ? 1 : 0);
          if (phi.is_zero()) continue;
          d.at(ti * dv + w, si * dv + v) += sgn > 0 ? phi : -phi;
        }
    }
  }
  return d;
}

inline void check_commuting(const std::vector<QMatrix>& rho) {
  for (size_t i = 0; i < rho.size(); ++i) {
    require(!rho[i].det().is_zero(), errc::invalid_presentation,
            "lattice action matrix is singular");
    for (size_t j = i + 1; j < rho.size(); ++j)
      require(rho[i] * rho[j] == rho[j] * rho[i], errc::non_commuting,
              "lattice action matrices do not commute");
  }
}

inline std::vector<size_t> koszul_betti(const std::vector<QMatrix>& rho, size_t dv) {
  size_t m = rho.size();
  check_commuting(rho);
  std::vector<QMatrix> d;
  for (size_t k = 0; k < m; ++k) d.push_back(koszul_differential(rho, dv, k));
  for (size_t k = 0; k + 1 < m; ++k)
    require((d[k + 1] * d[k]).is_zero(), errc::inconsistent, "koszul d^2 != 0");
  std::vector<size_t> b;
  for (size_t k = 0; k <= m; ++k) {
    size_t dim = subsets_of_size(m, k).size() * dv;
    size_t rk = k < m ? d[k].rank() : 0;
    size_t rk_prev = k > 0 ? d[k - 1].rank() : 0;
    b.push_back(dim - rk - rk_prev);
  }
  return b;
}

// Cohomology of Z^m x|_A Z through the mapping cone of (T* - id) on the
// Koszul complex; A is the conjugation matrix (columns are the images of the
// lattice generators), rho_z the action of the extra generator on V.
inline std::vector<size_t> wang_betti(const QMatrix& A, const std::vector<QMatrix>& rho_lat,
                                      const QMatrix& rho_z, size_t dv) {
  size_t m = rho_lat.size();
  require(A.rows() == m && A.cols() == m, errc::invalid_presentation,
          "monodromy size must match the number of lattice generators");
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      require(A.at(i, j).is_integer(), errc::invalid_presentation,
              "monodromy entries must be integers");
  Rational det = A.det();
  require(det == Rational(1) || det == Rational(-1), errc::invalid_presentation,
          "monodromy must be invertible over the integers");
  check_commuting(rho_lat);
  require(!rho_z.det().is_zero(), errc::invalid_presentation, "z action matrix is singular");

  // module-level mirror of the conjugation relation
  QMatrix rz_inv = rho_z.inverse();
  for (size_t j = 0; j < m; ++j) {
    QMatrix lhs = rho_z * rho_lat[j] * rz_inv;
    QMatrix rhs = QMatrix::identity(dv);
    for (size_t i = 0; i < m; ++i)
      rhs = rhs * int_power(rho_lat[i], A.at(i, j).to_long());
    require(lhs == rhs, errc::not_equivariant,
            "z action does not intertwine the lattice action through the monodromy");
  }

  QMatrix ainv_t = A.inverse().transpose();
  std::vector<QMatrix> d, t_star;
  std::vector<size_t> kdim;
  for (size_t k = 0; k <= m; ++k) {
    kdim.push_back(subsets_of_size(m, k).size() * dv);
    t_star.push_back(kronecker(exterior_power(ainv_t, k), rho_z));
    if (k < m) d.push_back(koszul_differential(rho_lat, dv, k));
  }
  for (size_t k = 0; k < m; ++k)
    require(t_star[k + 1] * d[k] == d[k] * t_star[k], errc::not_equivariant,
            "monodromy action does not commute with the koszul differential");

  // Cone^k = K^k + K^{k-1}, D(a,b) = (da, (T*-id)a - db)
  std::vector<size_t> cdim(m + 2);
  std::vector<QMatrix> cd(m + 1);
  for (size_t k = 0; k <= m + 1; ++k)
    cdim[k] = (k <= m ? kdim[k] : 0) + (k >= 1 && k - 1 <= m ? kdim[k - 1] : 0);
  for (size_t k = 0; k <= m; ++k) {
    QMatrix blk(cdim[k + 1], cdim[k]);
    if (k < m)
      for (size_t i = 0; i < d[k].rows(); ++i)
        for (size_t j = 0; j < d[k].cols(); ++j) blk.at(i, j) = d[k].at(i, j);
    size_t row_off = k + 1 <= m ? kdim[k + 1] : 0;
    for (size_t i = 0; i < kdim[k]; ++i)
      for (size_t j = 0; j < kdim[k]; ++j)
        blk.at(row_off + i, j) = t_star[k].at(i, j) - Rational(i == j ? 1 : 0);
    if (k >= 1)
      for (size_t i = 0; i < d[k - 1].rows(); ++i)
        for (size_t j = 0; j < d[k - 1].cols(); ++j)
          blk.at(row_off + i, kdim[k] + j) = -d[k - 1].at(i, j);
    cd[k] = blk;
  }
  for (size_t k = 0; k < m; ++k)
    require((cd[k + 1] * cd[k]).is_zero(), errc::inconsistent, "cone d^2 != 0");

  std::vector<size_t> b;
  for (size_t k = 0; k <= m + 1; ++k) {
    size_t rk = k <= m ? cd[k].rank() : 0;
    size_t rk_prev = k > 0 ? cd[k - 1].rank() : 0;
    b.push_back(cdim[k] - rk - rk_prev);
  }
  return b;
}

struct oracle_result {
  std::string kind;
  std::vector<size_t> betti;
  std::vector<check_item> checks;
};

// Cross-checks the tag against the group presentation, then runs the
// matching cohomology computation on the module actions of the named
// generators.
inline oracle_result run_oracle(const hull& h, const oracle_tag& tag) {
  oracle_result out;
  out.kind = tag.kind;
  std::vector<group_element> lat;
  std::vector<QMatrix> rho_lat;
  for (const auto& nm : tag.lattice_generators) {
    lat.push_back(h.generator(nm));
    rho_lat.push_back(lat.back().v_act);
  }
  size_t m = lat.size();
  bool comm = true;
  for (size_t i = 0; i < m && comm; ++i)
    for (size_t j = i + 1; j < m && comm; ++j)
      comm = h.element_equal(h.multiply(lat[i], lat[j]), h.multiply(lat[j], lat[i]));
  out.checks.push_back({"lattice_commutes", comm,
                        comm ? "listed lattice generators commute in the group"
                             : "listed lattice generators do not commute"});
  require(comm, errc::non_commuting, "oracle lattice generators do not commute");

  if (tag.kind == "koszul") {
    out.betti = koszul_betti(rho_lat, h.dim_v());
    return out;
  }

  group_element z = h.generator(tag.z_generator);
  group_element zi = h.inverse(z);
  bool conj_ok = true;
  for (size_t j = 0; j < m && conj_ok; ++j) {
    group_element lhs = h.multiply(h.multiply(z, lat[j]), zi);
    group_element rhs = h.identity_element();
    for (size_t i = 0; i < m; ++i) {
      long e = tag.monodromy.at(i, j).to_long();
      group_element p = e < 0 ? h.inverse(lat[i]) : lat[i];
      for (long c = e < 0 ? -e : e; c > 0; --c) rhs = h.multiply(rhs, p);
    }
    conj_ok = h.element_equal(lhs, rhs);
  }
  out.checks.push_back({"monodromy_matches", conj_ok,
                        conj_ok ? "conjugation by the z generator realizes the monodromy matrix"
                                : "monodromy matrix does not match conjugation in the group"});
  require(conj_ok, errc::not_equivariant, "oracle monodromy does not match the group");

  out.betti = wang_betti(tag.monodromy, rho_lat, z.v_act, h.dim_v());
  return out;
}

}  // namespace hullcoh

#endif
