#include <catch_amalgamated.hpp>

#include <random>

#include "test_support.hpp"

using namespace hullcoh;

namespace {

QMatrix e3(size_t i, size_t j) {
  QMatrix m(3, 3);
  m.at(i, j) = Rational(1);
  return m;
}

hull_presentation heis_presentation() {
  hull_presentation p;
  p.name = "heis";
  p.ambient_dim = 3;
  p.u_basis = {e3(0, 1), e3(1, 2), e3(0, 2)};
  p.gamma_generators = {{"x", QMatrix::identity(3), QMatrix::identity(3) + e3(0, 1)},
                        {"y", QMatrix::identity(3), QMatrix::identity(3) + e3(1, 2)},
                        {"z", QMatrix::identity(3), QMatrix::identity(3) + e3(0, 2)}};
  return p;
}

std::vector<group_element> random_tuple(const hull& h, std::mt19937_64& eng, size_t count) {
  std::vector<group_element> tuple;
  auto& gens = h.generators();
  for (size_t i = 0; i < count; ++i) {
    group_element g = h.identity_element();
    size_t len = eng() % 5;
    for (size_t k = 0; k < len; ++k) {
      const group_element& pick = gens[eng() % gens.size()].second;
      g = h.multiply(g, eng() % 2 ? pick : h.inverse(pick));
    }
    tuple.push_back(g);
  }
  return tuple;
}

}  // namespace

TEST_CASE("the simplicial coboundary squares to zero", "[property]") {
  hull h(heis_presentation());
  std::mt19937_64 eng(41);
  // an arbitrary nonlinear cochain: no cocycle structure is assumed
  group_cochain f;
  f.degree = 1;
  f.value_dim = 1;
  f.eval = [&](const std::vector<group_element>& t) {
    Rational v = t[0].u.at(0, 1) * t[1].u.at(1, 2) + t[1].u.at(0, 2);
    return std::vector<Rational>{v};
  };
  group_cochain df = group_cochain_d(f);
  group_cochain ddf = group_cochain_d(df);
  for (int trial = 0; trial < 15; ++trial) {
    auto tuple = random_tuple(h, eng, 4);
    for (Rational& v : ddf.eval(tuple)) CHECK(v == Rational(0));
  }
}

TEST_CASE("iota integrates over the oriented cube") {
  PolyForm f(1, 1, 1);
  f.add_term(1u, 0, QPoly::constant(1, Rational(-5)));
  CHECK(iota(f, 1) == std::vector<Rational>{Rational(5)});
  PolyForm g(2, 2, 1);
  g.add_term(0b11u, 0, QPoly::one(2));
  CHECK(iota(g, 2) == std::vector<Rational>{Rational(1)});
  CHECK_THROWS_AS(iota(f, 2), error);
}

TEST_CASE("normalized and direct evaluation agree", "[property]") {
  hull h(heis_presentation());
  simplicial_evaluator ev(h);
  std::mt19937_64 eng(42);
  QVector xstar = {Rational(1), Rational(0), Rational(0)};
  QVector zstar = {Rational(0), Rational(0), Rational(1)};
  for (int trial = 0; trial < 10; ++trial) {
    auto t2 = random_tuple(h, eng, 2);
    CHECK(ev.psi(xstar, 1, t2) == ev.psi_direct(xstar, 1, t2));
    auto t3 = random_tuple(h, eng, 3);
    QVector om2 = {Rational(0), Rational(0), Rational(1)};  // xi2^xi3 coefficient slot
    CHECK(ev.psi(om2, 2, t3) == ev.psi_direct(om2, 2, t3));
    CHECK(ev.psi(zstar, 1, t2) == ev.psi_direct(zstar, 1, t2));
  }
}

TEST_CASE("iota of psi matches theta") {
  hull h(heis_presentation());
  simplicial_evaluator ev(h);
  std::mt19937_64 eng(43);
  QVector zstar = {Rational(0), Rational(0), Rational(1)};
  for (int trial = 0; trial < 10; ++trial) {
    auto t2 = random_tuple(h, eng, 2);
    CHECK(iota(ev.psi(zstar, 1, t2), 1) == h.theta(zstar, 1, t2));
  }
}

TEST_CASE("the cochain map identity on an explicit instance") {
  hull h(heis_presentation());
  simplicial_evaluator ev(h);
  QVector zstar = {Rational(0), Rational(0), Rational(1)};
  QVector dz = {Rational(-1), Rational(0), Rational(0)};  // -xi1^xi2
  group_cochain lhs = iota_psi(ev, dz, 2);
  group_cochain rhs = group_cochain_d(iota_psi(ev, zstar, 1));
  std::mt19937_64 eng(44);
  for (int trial = 0; trial < 10; ++trial) {
    auto t = random_tuple(h, eng, 3);
    CHECK(lhs.eval(t) == rhs.eval(t));
  }
}

TEST_CASE("dropping the orientation sign breaks the cochain map identity") {
  // the plain cube integral (no (-1)^p factor) fails delta theta = theta d on
  // a concrete tuple: this guards the sign against accidental flips
  hull h(heis_presentation());
  group_element gx = h.generator("x"), gy = h.generator("y"), gz = h.generator("z");
  QVector zstar = {Rational(0), Rational(0), Rational(1)};
  QVector dz = {Rational(-1), Rational(0), Rational(0)};
  auto theta_plain = [&](const QVector& om, size_t deg,
                         const std::vector<group_element>& t) {
    return h.pullback_form(om, deg, t).integrate_cube();
  };
  std::vector<std::vector<group_element>> tuples = {
      {gx, gy, gz},
      {h.multiply(gx, gy), gy, h.multiply(gz, gx)},
      {h.identity_element(), h.multiply(gy, gx), h.multiply(gx, gz)},
  };
  size_t plain_breaks = 0;
  for (auto& t : tuples) {
    Rational lhs = theta_plain(dz, 2, t)[0];
    Rational rhs = theta_plain(zstar, 1, {t[1], t[2]})[0] -
                   theta_plain(zstar, 1, {t[0], t[2]})[0] +
                   theta_plain(zstar, 1, {t[0], t[1]})[0];
    if (lhs != rhs) ++plain_breaks;
    // while the signed integral satisfies the identity everywhere
    Rational slhs = h.theta(dz, 2, t)[0];
    Rational srhs = h.theta(zstar, 1, {t[1], t[2]})[0] - h.theta(zstar, 1, {t[0], t[2]})[0] +
                    h.theta(zstar, 1, {t[0], t[1]})[0];
    CHECK(slhs == srhs);
  }
  CHECK(plain_breaks > 0);
}

TEST_CASE("psi restricts to faces by vertex deletion", "[property]") {
  hull h(heis_presentation());
  simplicial_evaluator ev(h);
  std::mt19937_64 eng(45);
  QVector zstar = {Rational(0), Rational(0), Rational(1)};
  for (int trial = 0; trial < 8; ++trial) {
    auto t = random_tuple(h, eng, 3);
    PolyForm f = ev.psi(zstar, 1, t);
    for (size_t i = 0; i <= 2; ++i) {
      std::vector<group_element> face;
      for (size_t j = 0; j <= 2; ++j)
        if (j != i) face.push_back(t[j]);
      PolyForm restricted =
          i < 2 ? f.cube_face(i + 1, Rational(0)) : f.cube_face(2, Rational(1));
      CHECK(restricted == ev.psi(zstar, 1, face));
    }
  }
}

TEST_CASE("the evaluator caches normalized tuples") {
  hull h(heis_presentation());
  simplicial_evaluator ev(h);
  std::mt19937_64 eng(46);
  auto t = random_tuple(h, eng, 2);
  QVector xstar = {Rational(1), Rational(0), Rational(0)};
  (void)ev.psi(xstar, 1, t);
  size_t after_first = ev.cache_size();
  (void)ev.psi(xstar, 1, t);
  CHECK(ev.cache_size() == after_first);
  // a translate of the tuple normalizes to the same cached entry
  group_element g = h.generator("y");
  std::vector<group_element> moved = {h.multiply(g, t[0]), h.multiply(g, t[1])};
  (void)ev.psi(xstar, 1, moved);
  CHECK(ev.cache_size() == after_first);
}

TEST_CASE("word sampler is deterministic") {
  hull h(heis_presentation());
  word_sampler a(h, 777), b(h, 777);
  for (int i = 0; i < 20; ++i) {
    sampled_word wa = a.next(), wb = b.next();
    CHECK(wa.word == wb.word);
    CHECK(h.element_equal(wa.g, wb.g));
  }
}

TEST_CASE("verify_cochain_map passes and reports deterministically") {
  hull h(heis_presentation());
  ce_complex cc = invariant_subcomplex(h);
  psi_report r1 = verify_cochain_map(h, cc, 3, 5, 999);
  psi_report r2 = verify_cochain_map(h, cc, 3, 5, 999);
  CHECK(r1.ok);
  CHECK(r1.total_checks == r2.total_checks);
  REQUIRE(r1.degrees.size() == r2.degrees.size());
  for (size_t i = 0; i < r1.degrees.size(); ++i) {
    CHECK(r1.degrees[i].checks == r2.degrees[i].checks);
    CHECK(r1.degrees[i].ok);
  }
}
