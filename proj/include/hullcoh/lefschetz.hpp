#ifndef HULLCOH_LEFSCHETZ_HPP
#define HULLCOH_LEFSCHETZ_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "error.hpp"
#include "exterior.hpp"
#include "liecomplex.hpp"
#include "matrix.hpp"

namespace hullcoh {

struct closed_two_forms {
  std::vector<QVector> invariant;  // coords in the invariant degree-2 basis
  std::vector<QVector> full;       // coords in the bitmask Lambda^2 basis
};

// Basis of the closed invariant 2-forms: kernel of the restricted
// differential, expanded back to full coordinates.
inline closed_two_forms closed_invariant_two_forms(const ce_complex& c) {
  require(c.dv == 1, errc::value_dim_mismatch,
          "symplectic search needs trivial coefficients");
  closed_two_forms out;
  if (c.n < 2) return out;
  std::vector<QVector> ker;
  if (2 < c.n)
    ker = c.d[2].kernel_basis();
  else
    for (size_t i = 0; i < c.inv_dims[2]; ++i) {
      QVector v(c.inv_dims[2], Rational(0));
      v[i] = Rational(1);
      ker.push_back(v);
    }
  for (const auto& v : ker) {
    out.invariant.push_back(v);
    out.full.push_back(c.inclusion[2].apply(v));
  }
  return out;
}

// omega^n in Lambda^{2n}; the form is nondegenerate iff the single top
// coefficient is nonzero.
inline Rational top_wedge_coefficient(const QVector& omega_full, size_t dim) {
  require(dim % 2 == 0, errc::odd_dimension, "no symplectic form in odd dimension");
  size_t n = dim / 2;
  QVector acc = omega_full;
  size_t deg = 2;
  for (size_t j = 1; j < n; ++j) {
    acc = multivector_wedge(dim, deg, acc, 2, omega_full);
    deg += 2;
  }
  if (n == 0) return Rational(0);
  return acc[0];
}

inline bool is_nondegenerate(const QVector& omega_full, size_t dim) {
  return !top_wedge_coefficient(omega_full, dim).is_zero();
}

struct lefschetz_level {
  size_t k = 0;
  size_t domain_degree = 0, codomain_degree = 0;
  size_t domain_dim = 0, codomain_dim = 0;
  QMatrix matrix;  // codomain_dim x domain_dim, in the representative bases
  size_t rank = 0;
  bool square = false;
  bool iso = false;
};

struct symplectic_certificate {
  bool found = false;
  std::string provenance;
  QVector omega_invariant, omega_full;
  std::string omega_str;
  size_t half_dim = 0;
  Rational top_coefficient;
  Rational denominator_lcm;  // integer rescaling witness
  std::vector<lefschetz_level> levels;
  bool hlp = false;
  std::string note;
};

// class coordinates of a full-coordinate cocycle in the representative basis
// of degree deg, working modulo coboundaries of invariant cochains
inline QVector class_coordinates(const ce_complex& c, const cohomology_report& coh,
                                 const QVector& cocycle, size_t deg) {
  const auto& entry = coh.entries[deg];
  std::vector<QVector> cols;
  for (const auto& r : entry.reps_full) cols.push_back(r);
  size_t nreps = cols.size();
  if (deg > 0) {
    QMatrix img = c.inclusion[deg] * c.d[deg - 1];  // coboundaries in full coords
    std::vector<QVector> keep = cols;
    for (size_t j = 0; j < img.cols(); ++j) {
      QVector v = img.column(j);
      std::vector<QVector> trial = keep;
      trial.push_back(v);
      if (QMatrix::from_columns(c.full_dims[deg], trial).rank() > keep.size()) {
        keep.push_back(v);
        cols.push_back(v);
      }
    }
  }
  if (cols.empty()) {
    require(vec_is_zero(cocycle), errc::inconsistent, "nonzero cocycle in a zero group");
    return {};
  }
  QMatrix a = QMatrix::from_columns(c.full_dims[deg], cols);
  QVector x = a.solve(cocycle);  // Inconsistent would mean a non-cocycle input
  return QVector(x.begin(), x.begin() + nreps);
}

// Lefschetz maps [omega]^k ^ - : H^{n-k} -> H^{n+k} for k = 0..n, with the
// cup product realized as wedge of representatives.
inline std::vector<lefschetz_level> hard_lefschetz_levels(const ce_complex& c,
                                                          const cohomology_report& coh,
                                                          const QVector& omega_full) {
  require(c.dv == 1, errc::value_dim_mismatch, "lefschetz needs trivial coefficients");
  require(c.n % 2 == 0, errc::odd_dimension, "no symplectic form in odd dimension");
  size_t dim = c.n, n = dim / 2;
  // certificate validity: closed and nondegenerate
  if (2 < c.n) {
    QVector d_omega = c.full_d[2].apply(omega_full);
    require(vec_is_zero(d_omega), errc::not_symplectic, "form is not closed");
  }
  require(is_nondegenerate(omega_full, dim), errc::not_symplectic, "form is degenerate");

  std::vector<lefschetz_level> levels;
  for (size_t k = 0; k <= n; ++k) {
    lefschetz_level lv;
    lv.k = k;
    lv.domain_degree = n - k;
    lv.codomain_degree = n + k;
    lv.domain_dim = coh.entries[n - k].betti;
    lv.codomain_dim = coh.entries[n + k].betti;
    QMatrix L(lv.codomain_dim, lv.domain_dim);
    for (size_t j = 0; j < lv.domain_dim; ++j) {
      QVector w = coh.entries[n - k].reps_full[j];
      size_t deg = n - k;
      for (size_t s = 0; s < k; ++s) {
        w = multivector_wedge(dim, deg, w, 2, omega_full);
        deg += 2;
      }
      QVector cls = class_coordinates(c, coh, w, n + k);
      for (size_t i = 0; i < lv.codomain_dim; ++i) L.at(i, j) = cls[i];
    }
    lv.matrix = L;
    lv.rank = L.rank();
    lv.square = lv.domain_dim == lv.codomain_dim;
    lv.iso = lv.square && lv.rank == lv.domain_dim;
    levels.push_back(std::move(lv));
  }
  return levels;
}

inline symplectic_certificate certify(const ce_complex& c, const cohomology_report& coh,
                                      const QVector& omega_inv, const QVector& omega_full,
                                      const std::string& provenance) {
  symplectic_certificate cert;
  cert.found = true;
  cert.provenance = provenance;
  cert.omega_invariant = omega_inv;
  cert.omega_full = omega_full;
  cert.omega_str = multivector_str(c.n, 2, omega_full, "e");
  cert.half_dim = c.n / 2;
  cert.top_coefficient = top_wedge_coefficient(omega_full, c.n);
  cert.denominator_lcm = denominator_lcm(omega_full.begin(), omega_full.end());
  cert.levels = hard_lefschetz_levels(c, coh, omega_full);
  cert.hlp = true;
  for (const auto& lv : cert.levels) cert.hlp = cert.hlp && lv.iso;
  return cert;
}

// Search the closed invariant 2-form space: all {-1,0,1} combinations with
// at most 3 nonzero coefficients (by support size, then support position,
// then sign pattern with all-plus first), then seeded random draws of
// bounded height. Failure to find is not a nonexistence proof.
inline symplectic_certificate find_symplectic(const ce_complex& c, const cohomology_report& coh,
                                              uint64_t seed, unsigned height, size_t draws) {
  require(c.dv == 1, errc::value_dim_mismatch,
          "symplectic search needs trivial coefficients");
  require(c.n % 2 == 0, errc::odd_dimension, "no symplectic form in odd dimension");
  require(height >= 1 && draws >= 1, errc::invalid_presentation,
          "search bounds must be positive");
  closed_two_forms basis = closed_invariant_two_forms(c);
  size_t nb = basis.full.size();
  symplectic_certificate cert;
  cert.note = "search exhausted; this does not prove nonexistence";
  if (nb == 0) return cert;

  auto assemble = [&](const std::vector<Rational>& coeffs) {
    QVector inv(c.inv_dims[2], Rational(0));
    QVector full(c.full_dims[2], Rational(0));
    for (size_t i = 0; i < nb; ++i) {
      if (coeffs[i].is_zero()) continue;
      inv = vec_add(inv, vec_scale(coeffs[i], basis.invariant[i]));
      full = vec_add(full, vec_scale(coeffs[i], basis.full[i]));
    }
    return std::make_pair(inv, full);
  };

  size_t max_support = nb < 3 ? nb : 3;
  for (size_t s = 1; s <= max_support; ++s) {
    for (uint32_t mask : subsets_of_size(nb, s)) {
      auto bits = mask_bits(mask);
      for (uint32_t pattern = 0; pattern < (1u << s); ++pattern) {
        std::vector<Rational> coeffs(nb, Rational(0));
        for (size_t b = 0; b < s; ++b)
          coeffs[bits[b]] = (pattern >> b) & 1 ? Rational(-1) : Rational(1);
        auto [inv, full] = assemble(coeffs);
        if (is_nondegenerate(full, c.n))
          return certify(c, coh, inv, full, "enumeration of unit combinations");
      }
    }
  }

  std::mt19937_64 eng(seed);
  for (size_t d = 0; d < draws; ++d) {
    std::vector<Rational> coeffs(nb, Rational(0));
    for (size_t i = 0; i < nb; ++i) {
      long num = static_cast<long>(eng() % (2 * height + 1)) - static_cast<long>(height);
      unsigned long den = 1 + eng() % height;
      coeffs[i] = Rational(num) / Rational(static_cast<long>(den));
    }
    auto [inv, full] = assemble(coeffs);
    if (is_nondegenerate(full, c.n))
      return certify(c, coh, inv, full, "random draw " + std::to_string(d + 1));
  }
  return cert;
}

}  // namespace hullcoh

#endif
