#pragma once

// Shared helpers for the test suite: fixture paths, seeded random data, and
// an iterated-univariate-integration oracle kept independent from the
// closed-form integrals in the library.

#include <random>
#include <string>
#include <vector>

#include "hullcoh/hullcoh.hpp"

namespace testsup {

using hullcoh::PolyForm;
using hullcoh::PolyMatrix;
using hullcoh::QMatrix;
using hullcoh::QPoly;
using hullcoh::Rational;

inline std::string fixture_path(const std::string& name) {
#ifdef HULLCOH_FIXTURES
  return std::string(HULLCOH_FIXTURES) + "/" + name + ".json";
#else
  return "fixtures/" + name + ".json";
#endif
}

inline Rational small_rational(std::mt19937_64& eng, long height = 6) {
  long num = static_cast<long>(eng() % (2 * height + 1)) - height;
  long den = 1 + static_cast<long>(eng() % height);
  return Rational(num, den);
}

inline QPoly random_poly(std::mt19937_64& eng, size_t arity, uint32_t max_exp, size_t n_terms) {
  QPoly p(arity);
  for (size_t t = 0; t < n_terms; ++t) {
    std::vector<uint32_t> e(arity);
    for (size_t i = 0; i < arity; ++i) e[i] = static_cast<uint32_t>(eng() % (max_exp + 1));
    p.add_term(e, small_rational(eng));
  }
  return p;
}

// antiderivative in the given slot (1-based)
inline QPoly antiderivative(const QPoly& p, size_t slot) {
  QPoly r(p.arity());
  for (auto& [e, c] : p.terms()) {
    std::vector<uint32_t> f = e;
    f[slot - 1] += 1;
    r.add_term(f, c / Rational(static_cast<long>(f[slot - 1])));
  }
  return r;
}

// substitute slot := bound (a polynomial in the remaining variables) and drop
// the slot, keeping lower-numbered variables in place
inline QPoly substitute_last(const QPoly& p, const QPoly& bound) {
  size_t arity = p.arity();
  size_t q = arity - 1;
  std::vector<QPoly> images;
  for (size_t i = 1; i < arity; ++i) images.push_back(QPoly::variable(q, i));
  images.push_back(bound);
  return p.substitute(images, q);
}

// integrate over the cube [0,1]^p one variable at a time, innermost last
inline Rational iterated_cube_integral(QPoly p) {
  while (p.arity() > 0) {
    size_t slot = p.arity();
    QPoly anti = antiderivative(p, slot);
    p = substitute_last(anti, QPoly::one(slot - 1));
  }
  return p.constant_value();
}

// integrate over the simplex {t_i >= 0, sum t_i <= 1}: the innermost variable
// runs from 0 to 1 - t_1 - ... - t_{p-1}
inline Rational iterated_simplex_integral(QPoly p) {
  while (p.arity() > 0) {
    size_t slot = p.arity();
    QPoly anti = antiderivative(p, slot);
    QPoly bound = QPoly::one(slot - 1);
    for (size_t i = 1; i < slot; ++i) bound = bound - QPoly::variable(slot - 1, i);
    p = substitute_last(anti, bound);
  }
  return p.constant_value();
}

// scalar-valued random form of the given degree with dense random coefficients
inline PolyForm random_form(std::mt19937_64& eng, size_t arity, size_t degree, uint32_t max_exp,
                            size_t n_terms) {
  PolyForm f(arity, degree, 1);
  for (uint32_t mask = 0; mask < (1u << arity); ++mask) {
    if (static_cast<size_t>(__builtin_popcount(mask)) != degree) continue;
    f.add_term(mask, 0, random_poly(eng, arity, max_exp, n_terms));
  }
  return f;
}

// signed sum of face integrals: the simplex boundary in the vertex-deletion
// convention
inline Rational simplex_boundary_integral(const PolyForm& f) {
  Rational acc;
  for (size_t i = 0; i <= f.arity(); ++i) {
    Rational v = f.simplex_face(i).integrate_simplex()[0];
    acc += (i % 2 == 0) ? v : -v;
  }
  return acc;
}

inline PolyMatrix random_unipotent(std::mt19937_64& eng, size_t n, size_t arity, uint32_t max_exp,
                                   size_t n_terms) {
  PolyMatrix m = PolyMatrix::identity(n, arity);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) m.at(i, j) = random_poly(eng, arity, max_exp, n_terms);
  return m;
}

}  // namespace testsup
