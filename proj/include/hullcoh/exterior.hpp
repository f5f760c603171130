#ifndef HULLCOH_EXTERIOR_HPP
#define HULLCOH_EXTERIOR_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"

namespace hullcoh {

// Basis bookkeeping for exterior powers.  A k-subset of {0..n-1} is a
// bitmask; bases are enumerated in increasing mask value.

inline int popcount32(uint32_t m) { return std::popcount(m); }

inline std::vector<uint32_t> subsets_of_size(size_t n, size_t k) {
  require(n < 31, errc::inconsistent, "exterior basis dimension too large");
  std::vector<uint32_t> out;
  for (uint32_t m = 0; m < (1u << n); ++m)
    if (static_cast<size_t>(popcount32(m)) == k) out.push_back(m);
  return out;
}

inline size_t subset_index(const std::vector<uint32_t>& basis, uint32_t mask) {
  size_t lo = 0, hi = basis.size();
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (basis[mid] < mask)
      lo = mid + 1;
    else
      hi = mid;
  }
  require(lo < basis.size() && basis[lo] == mask, errc::inconsistent, "subset not in basis");
  return lo;
}

inline std::vector<size_t> mask_bits(uint32_t mask) {
  std::vector<size_t> bits;
  for (size_t b = 0; mask; ++b, mask >>= 1)
    if (mask & 1u) bits.push_back(b);
  return bits;
}

// Sign (-1)^{#bits of mask below bit}: the cost of inserting e_bit in front
// of the ordered product e_mask.
inline int insertion_sign(uint32_t mask, size_t bit) {
  return popcount32(mask & ((1u << bit) - 1u)) % 2 ? -1 : 1;
}

// Sign of sorting the concatenation (A ascending, B ascending) into one
// ascending product; 0 when the masks overlap.
inline int shuffle_sign(uint32_t a, uint32_t b) {
  if (a & b) return 0;
  int inv = 0;
  uint32_t bb = b;
  for (size_t bit = 0; bb; ++bit, bb >>= 1)
    if (bb & 1u) inv += popcount32(a >> (bit + 1));
  return inv % 2 ? -1 : 1;
}

inline Rational minor_det(const QMatrix& m, uint32_t row_mask, uint32_t col_mask) {
  auto rows = mask_bits(row_mask);
  auto cols = mask_bits(col_mask);
  require(rows.size() == cols.size(), errc::inconsistent, "minor is not square");
  QMatrix sub(rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) sub.at(i, j) = m.at(rows[i], cols[j]);
  return sub.det();
}

// k-th exterior power in the subset basis: column S holds the coordinates of
// (wedge^k B)(e_S), i.e. entry [T][S] = det of the (T,S) minor of B.
inline QMatrix exterior_power(const QMatrix& b, size_t k) {
  require(b.square(), errc::inconsistent, "exterior power of non-square matrix");
  auto basis = subsets_of_size(b.rows(), k);
  QMatrix r(basis.size(), basis.size());
  for (size_t sj = 0; sj < basis.size(); ++sj)
    for (size_t ti = 0; ti < basis.size(); ++ti)
      r.at(ti, sj) = minor_det(b, basis[ti], basis[sj]);
  return r;
}

inline QMatrix kronecker(const QMatrix& a, const QMatrix& b) {
  QMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (size_t w = 0; w < b.rows(); ++w)
        for (size_t v = 0; v < b.cols(); ++v)
          r.at(i * b.rows() + w, j * b.cols() + v) = a.at(i, j) * b.at(w, v);
    }
  return r;
}

// Multivectors with trivial coefficients: coordinate vectors over
// subsets_of_size(n, k).  Wedge of coordinate vectors.
inline QVector multivector_wedge(size_t n, size_t ka, const QVector& a, size_t kb,
                                 const QVector& b) {
  auto basis_a = subsets_of_size(n, ka);
  auto basis_b = subsets_of_size(n, kb);
  auto basis_r = subsets_of_size(n, ka + kb);
  require(a.size() == basis_a.size() && b.size() == basis_b.size(), errc::degree_mismatch,
          "multivector coordinate size mismatch");
  QVector r(basis_r.size());
  for (size_t i = 0; i < basis_a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < basis_b.size(); ++j) {
      if (b[j].is_zero()) continue;
      int sg = shuffle_sign(basis_a[i], basis_b[j]);
      if (!sg) continue;
      size_t idx = subset_index(basis_r, basis_a[i] | basis_b[j]);
      r[idx] += Rational(sg) * a[i] * b[j];
    }
  }
  return r;
}

// Pretty-printer for multivector coordinates, e.g. "e1^e2 - 2 e3^e4".
inline std::string multivector_str(size_t n, size_t k, const QVector& coords,
                                   const std::string& letter = "e") {
  auto basis = subsets_of_size(n, k);
  std::string s;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (coords[i].is_zero()) continue;
    std::string mono;
    for (size_t bit : mask_bits(basis[i])) {
      if (!mono.empty()) mono += "^";
      mono += letter + std::to_string(bit + 1);
    }
    if (mono.empty()) mono = "1";
    std::string c = coords[i].str();
    std::string term;
    if (c == "1")
      term = mono;
    else if (c == "-1")
      term = "-" + mono;
    else
      term = c + " " + mono;
    if (!s.empty() && term[0] != '-') s += " + ";
    else if (!s.empty()) { s += " - "; term = term.substr(1); }
    s += term;
  }
  return s.empty() ? "0" : s;
}

}  // namespace hullcoh

#endif
