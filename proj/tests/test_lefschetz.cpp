#include <catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace hullcoh;
using testsup::fixture_path;

namespace {

struct complex_bundle {
  hull h;
  ce_complex c;
  cohomology_report coh;
  explicit complex_bundle(const std::string& fixture)
      : h(load_presentation(fixture_path(fixture))),
        c(invariant_subcomplex(h)),
        coh(cohomology(c)) {}
};

size_t two_form_index(size_t n, uint32_t mask) {
  return subset_index(subsets_of_size(n, 2), mask);
}

}  // namespace

TEST_CASE("nondegeneracy via the top wedge coefficient") {
  // dim 4: e1^e2 + e3^e4 squares to 2 e1^e2^e3^e4
  QVector omega(6, Rational(0));
  omega[two_form_index(4, 0b0011u)] = Rational(1);
  omega[two_form_index(4, 0b1100u)] = Rational(1);
  CHECK(top_wedge_coefficient(omega, 4) == Rational(2));
  CHECK(is_nondegenerate(omega, 4));

  QVector deg(6, Rational(0));
  deg[two_form_index(4, 0b0011u)] = Rational(1);
  CHECK(top_wedge_coefficient(deg, 4) == Rational(0));
  CHECK_FALSE(is_nondegenerate(deg, 4));

  // dim 6: standard form cubes to 3! times the volume form
  QVector std6(15, Rational(0));
  std6[two_form_index(6, 0b000011u)] = Rational(1);
  std6[two_form_index(6, 0b001100u)] = Rational(1);
  std6[two_form_index(6, 0b110000u)] = Rational(1);
  CHECK(top_wedge_coefficient(std6, 6) == Rational(6));

  CHECK_THROWS_AS(top_wedge_coefficient(QVector(3, Rational(1)), 3), error);
}

TEST_CASE("closed invariant two-form spaces") {
  complex_bundle t4("torus4");
  CHECK(closed_invariant_two_forms(t4.c).full.size() == 6);

  complex_bundle kt("kodaira_thurston");
  closed_two_forms b = closed_invariant_two_forms(kt.c);
  REQUIRE(b.full.size() == 5);
  // the basis misses exactly the non-closed direction e3^e4
  size_t bad = two_form_index(4, 0b1100u);
  for (const auto& v : b.full) CHECK(v[bad].is_zero());
  for (const auto& v : b.full) CHECK(vec_is_zero(kt.c.full_d[2].apply(v)));
  QVector e34(kt.c.full_dims[2], Rational(0));
  e34[bad] = Rational(1);
  CHECK_FALSE(vec_is_zero(kt.c.full_d[2].apply(e34)));
}

TEST_CASE("torus search finds the standard form immediately") {
  complex_bundle t2("torus2");
  symplectic_certificate cert = find_symplectic(t2.c, t2.coh, 1, 8, 10);
  REQUIRE(cert.found);
  CHECK(cert.provenance == "enumeration of unit combinations");
  CHECK(cert.omega_str == "e1^e2");
  CHECK(cert.half_dim == 1);
  CHECK(cert.top_coefficient == Rational(1));
  CHECK(cert.denominator_lcm == Rational(1));
  REQUIRE(cert.levels.size() == 2);
  CHECK(cert.levels[0].matrix == QMatrix::identity(2));
  CHECK(cert.levels[1].matrix == QMatrix::identity(1));
  CHECK(cert.hlp);
}

TEST_CASE("certificate for the rank-four fibered fixture") {
  complex_bundle kb("fibered4");
  symplectic_certificate cert = find_symplectic(kb.c, kb.coh, 12345, 8, 100);
  REQUIRE(cert.found);
  CHECK(cert.provenance == "enumeration of unit combinations");
  CHECK(cert.omega_str == "e1^e2 + e3^e4");
  CHECK(cert.half_dim == 2);
  CHECK(cert.top_coefficient == Rational(2));
  REQUIRE(cert.levels.size() == 3);
  CHECK(cert.levels[0].matrix == QMatrix::identity(2));
  for (const auto& lv : cert.levels) {
    CHECK(lv.square);
    CHECK(lv.iso);
    CHECK(lv.domain_degree == 2 - lv.k);
    CHECK(lv.codomain_degree == 2 + lv.k);
    CHECK(lv.rank == lv.matrix.transpose().rank());
  }
  CHECK(cert.hlp);

  // certification is stable under rescaling the form
  QVector inv3 = vec_scale(Rational(3), cert.omega_invariant);
  QVector full3 = vec_scale(Rational(3), cert.omega_full);
  symplectic_certificate scaled = certify(kb.c, kb.coh, inv3, full3, "scaled");
  CHECK(scaled.top_coefficient == Rational(18));
  CHECK(scaled.hlp);

  QVector invh = vec_scale(Rational(1, 2), cert.omega_invariant);
  QVector fullh = vec_scale(Rational(1, 2), cert.omega_full);
  symplectic_certificate halved = certify(kb.c, kb.coh, invh, fullh, "scaled");
  CHECK(halved.denominator_lcm == Rational(2));
  CHECK(halved.hlp);
}

TEST_CASE("kodaira-thurston form exists but the middle level drops rank") {
  complex_bundle kt("kodaira_thurston");
  symplectic_certificate cert = find_symplectic(kt.c, kt.coh, 12345, 8, 100);
  REQUIRE(cert.found);
  CHECK(cert.omega_str == "e2^e3 + e1^e4");
  CHECK_FALSE(cert.hlp);
  REQUIRE(cert.levels.size() == 3);
  CHECK(cert.levels[0].iso);
  CHECK(cert.levels[2].iso);
  const lefschetz_level& mid = cert.levels[1];
  CHECK(mid.square);
  CHECK(mid.domain_dim == 3);
  CHECK(mid.rank == 2);
  CHECK_FALSE(mid.iso);
  CHECK(mid.rank == mid.matrix.transpose().rank());
}

TEST_CASE("six-dimensional fixture satisfies hard lefschetz") {
  complex_bundle kb("fibered6");
  symplectic_certificate cert = find_symplectic(kb.c, kb.coh, 12345, 8, 100);
  REQUIRE(cert.found);
  CHECK(cert.omega_str == "e1^e2 + e3^e4 + e5^e6");
  CHECK(cert.half_dim == 3);
  CHECK(cert.top_coefficient == Rational(6));
  CHECK(cert.levels.size() == 4);
  CHECK(cert.hlp);
}

TEST_CASE("certify rejects non-symplectic input") {
  complex_bundle kb("fibered4");
  // degenerate: a single decomposable term
  QVector degen(kb.c.full_dims[2], Rational(0));
  degen[two_form_index(4, 0b0011u)] = Rational(1);
  QVector inv(kb.c.inv_dims[2], Rational(0));
  CHECK_THROWS_AS(certify(kb.c, kb.coh, inv, degen, "test"), error);

  // not closed: e3^e4 on the kodaira-thurston fixture
  complex_bundle kt("kodaira_thurston");
  QVector open_form(kt.c.full_dims[2], Rational(0));
  open_form[two_form_index(4, 0b1100u)] = Rational(1);
  QVector inv_kt(kt.c.inv_dims[2], Rational(0));
  CHECK_THROWS_AS(certify(kt.c, kt.coh, inv_kt, open_form, "test"), error);
}

TEST_CASE("odd ambient dimension is rejected") {
  complex_bundle sol("sol");
  CHECK_THROWS_AS(find_symplectic(sol.c, sol.coh, 1, 8, 10), error);
}

TEST_CASE("search bound validation") {
  complex_bundle t2("torus2");
  CHECK_THROWS_AS(find_symplectic(t2.c, t2.coh, 1, 0, 10), error);
  CHECK_THROWS_AS(find_symplectic(t2.c, t2.coh, 1, 8, 0), error);
}
