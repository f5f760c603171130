#include <catch_amalgamated.hpp>

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

oracle_tag heis_tag() {
  oracle_tag t;
  t.kind = "wang";
  t.z_generator = "x";
  t.lattice_generators = {"y", "z"};
  t.monodromy = QMatrix{{1, 0}, {1, 1}};
  return t;
}

}  // namespace

TEST_CASE("integer matrix powers") {
  QMatrix a{{1, 1}, {0, 1}};
  CHECK(int_power(a, 3) == QMatrix{{1, 3}, {0, 1}});
  CHECK(int_power(a, 0) == QMatrix::identity(2));
  CHECK(int_power(a, -2) == QMatrix{{1, -2}, {0, 1}});
}

TEST_CASE("koszul cohomology of free abelian groups") {
  QMatrix one = QMatrix::identity(1);
  CHECK(koszul_betti({one}, 1) == std::vector<size_t>{1, 1});
  CHECK(koszul_betti({one, one}, 1) == std::vector<size_t>{1, 2, 1});
  CHECK(koszul_betti({one, one, one, one}, 1) ==
        std::vector<size_t>{1, 4, 6, 4, 1});
}

TEST_CASE("koszul cohomology with a nontrivial character vanishes") {
  QMatrix two(1, 1);
  two.at(0, 0) = Rational(2);
  CHECK(koszul_betti({two}, 1) == std::vector<size_t>{0, 0});
}

TEST_CASE("koszul rejects non-commuting actions") {
  QMatrix a{{1, 1}, {0, 1}}, b{{1, 0}, {1, 1}};
  CHECK_THROWS_AS(koszul_betti({a, b}, 2), error);
}

TEST_CASE("wang cone with identity monodromy matches the free abelian answer") {
  QMatrix one = QMatrix::identity(1);
  std::vector<QMatrix> triv3(3, one);
  CHECK(wang_betti(QMatrix::identity(3), triv3, one, 1) == koszul_betti({one, one, one, one}, 1));
}

TEST_CASE("wang cone for the Klein bottle group") {
  QMatrix minus(1, 1);
  minus.at(0, 0) = Rational(-1);
  QMatrix one = QMatrix::identity(1);
  CHECK(wang_betti(minus, {one}, one, 1) == std::vector<size_t>{1, 1, 0});
}

TEST_CASE("wang requires a unimodular integer monodromy") {
  QMatrix bad(1, 1);
  bad.at(0, 0) = Rational(2);
  QMatrix one = QMatrix::identity(1);
  CHECK_THROWS_AS(wang_betti(bad, {one}, one, 1), error);
  QMatrix half(1, 1);
  half.at(0, 0) = Rational(1, 2);
  CHECK_THROWS_AS(wang_betti(half, {one}, one, 1), error);
}

TEST_CASE("wang rejects module actions that break equivariance") {
  QMatrix rz{{1, 1}, {0, 1}}, r1{{1, 0}, {1, 1}};
  CHECK_THROWS_AS(wang_betti(QMatrix::identity(1), {r1}, rz, 2), error);
}

TEST_CASE("oracle on the heisenberg presentation") {
  hull_presentation p = heis_presentation();
  hull h(p);
  oracle_result r = run_oracle(h, heis_tag());
  CHECK(r.kind == "wang");
  CHECK(r.betti == std::vector<size_t>{1, 2, 2, 1});
  for (auto& c : r.checks) CHECK(c.ok);
}

TEST_CASE("oracle catches a wrong monodromy matrix") {
  hull h(heis_presentation());
  oracle_tag t = heis_tag();
  t.monodromy = QMatrix::identity(2);  // x y x^-1 is y z, not y
  CHECK_THROWS_AS(run_oracle(h, t), error);
}

TEST_CASE("oracle catches a non-commuting lattice") {
  hull h(heis_presentation());
  oracle_tag t;
  t.kind = "wang";
  t.z_generator = "z";
  t.lattice_generators = {"x", "y"};  // [x, y] = z in the group
  t.monodromy = QMatrix::identity(2);
  CHECK_THROWS_AS(run_oracle(h, t), error);
}

TEST_CASE("oracle with the standard three-dimensional module") {
  hull_presentation p = heis_presentation();
  rational_module m;
  m.dim = 3;
  m.r_basis = {e3(0, 1), e3(1, 2), e3(0, 2)};
  p.module = m;
  hull h(p);
  oracle_result r = run_oracle(h, heis_tag());
  CHECK(r.betti == std::vector<size_t>{1, 2, 2, 1});
}
