#ifndef HULLCOH_HULL_HPP
#define HULLCOH_HULL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "exterior.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "polyform.hpp"
#include "polymatrix.hpp"

namespace hullcoh {

// Exact expansion in the span of a fixed list of matrices: a left-solve
// matrix is prepared once from the rref of the flattened basis.
class span_solver {
 public:
  span_solver() = default;
  explicit span_solver(const std::vector<QMatrix>& basis) {
    require(!basis.empty(), errc::invalid_presentation, "empty matrix basis");
    rows_ = basis[0].rows();
    cols_ = basis[0].cols();
    n_ = basis.size();
    flat_ = QMatrix(rows_ * cols_, n_);
    for (size_t j = 0; j < n_; ++j) {
      require(basis[j].rows() == rows_ && basis[j].cols() == cols_, errc::invalid_presentation,
              "basis matrices differ in shape");
      QVector f = basis[j].flatten();
      for (size_t i = 0; i < f.size(); ++i) flat_.at(i, j) = f[i];
    }
    require(flat_.rank() == n_, errc::invalid_presentation, "matrix basis is linearly dependent");
    // rref of [flat | I] yields E with E*flat = [I; 0]; the first n rows of E
    // form a left inverse.
    size_t m = rows_ * cols_;
    QMatrix aug(m, n_ + m);
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < n_; ++j) aug.at(i, j) = flat_.at(i, j);
      aug.at(i, n_ + i) = Rational(1);
    }
    QMatrix r = aug.rref().first;
    left_ = QMatrix(n_, m);
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < m; ++j) left_.at(i, j) = r.at(i, n_ + j);
    basis_ = basis;
  }

  size_t size() const { return n_; }
  const std::vector<QMatrix>& basis() const { return basis_; }

  bool contains(const QMatrix& x) const {
    QVector c = left_.apply(x.flatten());
    return recombine_(c) == x;
  }

  QVector coords(const QMatrix& x) const {
    require(x.rows() == rows_ && x.cols() == cols_, errc::not_in_span, "shape mismatch");
    QVector c = left_.apply(x.flatten());
    require(recombine_(c) == x, errc::not_in_span, "matrix is not in the span of the basis");
    return c;
  }

  // Polynomial-entry variant; the verification keeps the exactness promise.
  std::vector<QPoly> coords(const PolyMatrix& x) const {
    require(x.rows() == rows_ && x.cols() == cols_, errc::not_in_span, "shape mismatch");
    std::vector<QPoly> f = x.flatten();
    std::vector<QPoly> c(n_, QPoly::constant(x.arity(), Rational(0)));
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < f.size(); ++j)
        if (!left_.at(i, j).is_zero()) c[i] = c[i] + f[j] * left_.at(i, j);
    PolyMatrix back(rows_, cols_, x.arity());
    for (size_t i = 0; i < n_; ++i)
      back = back + PolyMatrix::from_constant(basis_[i], x.arity()).scale_poly(c[i]);
    require(back == x, errc::not_in_span, "polynomial matrix is not in the span of the basis");
    return c;
  }

 private:
  QMatrix recombine_(const QVector& c) const {
    QMatrix m(rows_, cols_);
    for (size_t i = 0; i < n_; ++i)
      for (size_t a = 0; a < rows_; ++a)
        for (size_t b = 0; b < cols_; ++b) m.at(a, b) += c[i] * basis_[i].at(a, b);
    return m;
  }

  size_t rows_ = 0, cols_ = 0, n_ = 0;
  QMatrix flat_, left_;
  std::vector<QMatrix> basis_;
};

struct rational_module {
  size_t dim = 1;
  std::vector<QMatrix> r_gens;   // action of each t-generator on V
  std::vector<QMatrix> r_basis;  // Lie algebra action r(X_1)..r(X_n)

  static rational_module trivial(size_t n_u, size_t n_t) {
    rational_module m;
    m.dim = 1;
    m.r_gens.assign(n_t, QMatrix::identity(1));
    m.r_basis.assign(n_u, QMatrix(1, 1));
    return m;
  }
};

// Element of G = T ltimes U stored split; the ambient matrix is u*s.  v_act
// carries the V-action, tracked through products so that words in the
// generators stay evaluable.
struct group_element {
  QMatrix s, u, v_act;
};

struct named_generator {
  std::string name;
  QMatrix s, u;
};

struct oracle_tag {
  std::string kind;  // "koszul" or "wang"
  QMatrix monodromy;
  std::string z_generator;
  std::vector<std::string> lattice_generators;
};

struct hull_presentation {
  std::string name;
  size_t ambient_dim = 0;
  std::vector<QMatrix> u_basis;
  std::vector<std::string> t_names;
  std::vector<QMatrix> t_generators;
  std::vector<named_generator> gamma_generators;
  std::optional<size_t> declared_rank;
  std::optional<rational_module> module;
  std::optional<oracle_tag> oracle;

  rational_module module_or_trivial() const {
    return module ? *module : rational_module::trivial(u_basis.size(), t_generators.size());
  }
};

struct check_item {
  std::string name;
  bool ok;
  std::string detail;
};

inline std::vector<check_item> validate_presentation(const hull_presentation& p) {
  std::vector<check_item> out;
  auto push = [&](const std::string& name, bool ok, const std::string& detail) {
    out.push_back({name, ok, detail});
    return ok;
  };
  size_t n = p.u_basis.size();
  size_t big_n = p.ambient_dim;
  bool shapes = big_n > 0 && n > 0;
  for (const auto& x : p.u_basis) shapes = shapes && x.rows() == big_n && x.cols() == big_n;
  for (const auto& s : p.t_generators) shapes = shapes && s.rows() == big_n && s.cols() == big_n;
  for (const auto& g : p.gamma_generators)
    shapes = shapes && g.s.rows() == big_n && g.s.cols() == big_n && g.u.rows() == big_n &&
             g.u.cols() == big_n;
  if (!push("shapes", shapes, shapes ? "all matrices are ambient_dim x ambient_dim"
                                     : "matrix shape or empty basis problem"))
    return out;

  bool nilp = true;
  std::string nd = "every u_basis element is nilpotent";
  for (size_t i = 0; i < n && nilp; ++i)
    if (!p.u_basis[i].is_nilpotent()) {
      nilp = false;
      nd = "u_basis[" + std::to_string(i) + "] is not nilpotent";
    }
  if (!push("u_basis_nilpotent", nilp, nd)) return out;

  std::optional<span_solver> span;
  try {
    span.emplace(p.u_basis);
    push("u_basis_independent", true, "u_basis is linearly independent");
  } catch (const error& e) {
    push("u_basis_independent", false, e.what());
    return out;
  }

  bool closed = true;
  std::string cd = "span(u_basis) is closed under commutator";
  for (size_t i = 0; i < n && closed; ++i)
    for (size_t j = i + 1; j < n && closed; ++j) {
      QMatrix br = p.u_basis[i] * p.u_basis[j] - p.u_basis[j] * p.u_basis[i];
      if (!span->contains(br)) {
        closed = false;
        cd = "[X_" + std::to_string(i + 1) + ",X_" + std::to_string(j + 1) + "] leaves the span";
      }
    }
  if (!push("bracket_closure", closed, cd)) return out;

  bool tnorm = true;
  std::string td = "every t_generator normalizes span(u_basis)";
  for (size_t j = 0; j < p.t_generators.size() && tnorm; ++j) {
    const QMatrix& s = p.t_generators[j];
    if (s.det().is_zero()) {
      tnorm = false;
      td = "t_generator " + p.t_names[j] + " is singular";
      break;
    }
    QMatrix si = s.inverse();
    for (size_t i = 0; i < n; ++i)
      if (!span->contains(s * p.u_basis[i] * si)) {
        tnorm = false;
        td = "conjugation by " + p.t_names[j] + " moves X_" + std::to_string(i + 1) +
             " out of the span";
        break;
      }
  }
  if (!push("t_normalizes_u", tnorm, td)) return out;

  if (p.declared_rank) {
    bool ok = *p.declared_rank == n;
    push("declared_rank", ok,
         ok ? "dim U equals declared rank " + std::to_string(n)
            : "declared_rank " + std::to_string(*p.declared_rank) + " != dim U " +
                  std::to_string(n));
    if (!ok) return out;
  }

  rational_module mod = p.module_or_trivial();
  {
    bool ok = mod.dim > 0 && mod.r_gens.size() == p.t_generators.size() &&
              mod.r_basis.size() == n;
    for (const auto& m : mod.r_gens) ok = ok && m.rows() == mod.dim && m.cols() == mod.dim;
    for (const auto& m : mod.r_basis) ok = ok && m.rows() == mod.dim && m.cols() == mod.dim;
    if (!push("module_shapes", ok, ok ? "module matrices sized and counted correctly"
                                      : "module matrix shape/count mismatch"))
      return out;
  }
  {
    bool ok = true;
    std::string d = "every r(X_i) is nilpotent";
    for (size_t i = 0; i < n && ok; ++i)
      if (!mod.r_basis[i].is_nilpotent()) {
        ok = false;
        d = "r(X_" + std::to_string(i + 1) + ") is not nilpotent";
      }
    if (!push("module_r_nilpotent", ok, d)) return out;
  }
  {
    bool ok = true;
    std::string d = "r respects brackets";
    for (size_t i = 0; i < n && ok; ++i)
      for (size_t j = i + 1; j < n && ok; ++j) {
        QVector c = span->coords(p.u_basis[i] * p.u_basis[j] - p.u_basis[j] * p.u_basis[i]);
        QMatrix want(mod.dim, mod.dim);
        for (size_t k = 0; k < n; ++k)
          if (!c[k].is_zero()) want = want + c[k] * mod.r_basis[k];
        QMatrix got = mod.r_basis[i] * mod.r_basis[j] - mod.r_basis[j] * mod.r_basis[i];
        if (got != want) {
          ok = false;
          d = "r([X_" + std::to_string(i + 1) + ",X_" + std::to_string(j + 1) +
              "]) != [r(X_i),r(X_j)]";
        }
      }
    if (!push("module_r_bracket", ok, d)) return out;
  }
  {
    bool ok = true;
    std::string d = "R_j r(X_i) R_j^-1 = r(S_j X_i S_j^-1) for all i,j";
    for (size_t j = 0; j < p.t_generators.size() && ok; ++j) {
      if (mod.r_gens[j].det().is_zero()) {
        ok = false;
        d = "module generator for " + p.t_names[j] + " is singular";
        break;
      }
      QMatrix si = p.t_generators[j].inverse();
      QMatrix ri = mod.r_gens[j].inverse();
      for (size_t i = 0; i < n && ok; ++i) {
        QVector c = span->coords(p.t_generators[j] * p.u_basis[i] * si);
        QMatrix want(mod.dim, mod.dim);
        for (size_t k = 0; k < n; ++k)
          if (!c[k].is_zero()) want = want + c[k] * mod.r_basis[k];
        if (mod.r_gens[j] * mod.r_basis[i] * ri != want) {
          ok = false;
          d = "module action incompatible with conjugation by " + p.t_names[j];
        }
      }
    }
    if (!push("module_compatible", ok, d)) return out;
  }

  {
    bool ok = !p.gamma_generators.empty();
    std::string d = ok ? "gamma generators present" : "no gamma_generators given";
    for (const auto& g : p.gamma_generators) {
      if (!ok) break;
      if (g.s.det().is_zero()) {
        ok = false;
        d = "gamma generator " + g.name + " has singular s-part";
      } else if (!g.u.is_unipotent()) {
        ok = false;
        d = "gamma generator " + g.name + " has non-unipotent u-part";
      } else if (!span->contains(PolyMatrix::from_constant(g.u, 0).log_unipotent().eval({}))) {
        ok = false;
        d = "gamma generator " + g.name + " has u-part outside exp(span(u_basis))";
      } else {
        bool matched = g.s.is_identity();
        for (const auto& t : p.t_generators) matched = matched || g.s == t;
        if (!matched) {
          ok = false;
          d = "gamma generator " + g.name +
              " has s-part that is neither the identity nor a declared t_generator";
        }
      }
    }
    if (!push("gamma_generators", ok, d)) return out;
  }

  if (p.oracle) {
    bool ok = true;
    std::string d = "oracle tag well-formed";
    if (p.oracle->kind != "koszul" && p.oracle->kind != "wang") {
      ok = false;
      d = "oracle kind must be koszul or wang";
    }
    auto find_gen = [&](const std::string& nm) {
      for (const auto& g : p.gamma_generators)
        if (g.name == nm) return true;
      return false;
    };
    if (ok)
      for (const auto& nm : p.oracle->lattice_generators)
        if (!find_gen(nm)) {
          ok = false;
          d = "oracle lattice generator " + nm + " is not a gamma generator";
        }
    if (ok && p.oracle->lattice_generators.empty()) {
      ok = false;
      d = "oracle tag lists no lattice generators";
    }
    if (ok && p.oracle->kind == "wang") {
      size_t m = p.oracle->lattice_generators.size();
      if (!find_gen(p.oracle->z_generator)) {
        ok = false;
        d = "oracle z generator " + p.oracle->z_generator + " is not a gamma generator";
      } else if (p.oracle->monodromy.rows() != m || p.oracle->monodromy.cols() != m) {
        ok = false;
        d = "oracle monodromy must be square of size = number of lattice generators";
      } else {
        for (size_t i = 0; i < m && ok; ++i)
          for (size_t j = 0; j < m && ok; ++j)
            if (!p.oracle->monodromy.at(i, j).is_integer()) {
              ok = false;
              d = "oracle monodromy entries must be integers";
            }
      }
    }
    if (!push("oracle_tag", ok, d)) return out;
  }

  return out;
}

class hull {
 public:
  explicit hull(hull_presentation pres) : p_(std::move(pres)) {
    checks_ = validate_presentation(p_);
    for (const auto& c : checks_)
      require(c.ok, errc::invalid_presentation, c.name + ": " + c.detail);
    span_ = span_solver(p_.u_basis);
    mod_ = p_.module_or_trivial();
    for (const auto& g : p_.gamma_generators)
      gens_.push_back({g.name, make_element(g.s, g.u)});
  }

  const hull_presentation& pres() const { return p_; }
  const std::vector<check_item>& checks() const { return checks_; }
  const span_solver& span() const { return span_; }
  const rational_module& module() const { return mod_; }
  size_t n_u() const { return p_.u_basis.size(); }
  size_t dim_v() const { return mod_.dim; }
  size_t ambient() const { return p_.ambient_dim; }

  group_element identity_element() const {
    return {QMatrix::identity(ambient()), QMatrix::identity(ambient()),
            QMatrix::identity(dim_v())};
  }

  const std::vector<std::pair<std::string, group_element>>& generators() const { return gens_; }

  group_element generator(const std::string& name) const {
    for (const auto& [nm, g] : gens_)
      if (nm == name) return g;
    fail(errc::invalid_presentation, "unknown generator " + name);
  }

  // Builds the split element and its V-action; the s-part must be the
  // identity or one of the declared t_generators so the V-action is defined.
  group_element make_element(const QMatrix& s, const QMatrix& u) const {
    QMatrix va = rho_v_unipotent(u);
    if (!s.is_identity()) {
      bool matched = false;
      for (size_t j = 0; j < p_.t_generators.size(); ++j)
        if (s == p_.t_generators[j]) {
          va = va * mod_.r_gens[j];
          matched = true;
          break;
        }
      require(matched, errc::invalid_presentation,
              "element s-part is neither identity nor a declared t_generator");
    }
    return {s, u, va};
  }

  QMatrix ambient_matrix(const group_element& g) const { return g.u * g.s; }

  // (u_a s_a)(u_b s_b) = [u_a (s_a u_b s_a^-1)] (s_a s_b)
  group_element multiply(const group_element& a, const group_element& b) const {
    QMatrix conj = a.s * b.u * a.s.inverse();
    QMatrix u = a.u * conj;
    require(u.is_unipotent() && span_.contains(log_unipotent_q(u)), errc::not_in_u,
            "product u-component leaves U");
    return {a.s * b.s, u, a.v_act * b.v_act};
  }

  group_element inverse(const group_element& g) const {
    QMatrix si = g.s.inverse();
    QMatrix u = si * unipotent_inverse_q(g.u) * g.s;  // (u s)^-1 = (s^-1 u^-1 s) s^-1
    require(u.is_unipotent() && span_.contains(log_unipotent_q(u)), errc::not_in_u,
            "inverse u-component leaves U");
    return {si, u, g.v_act.inverse()};
  }

  bool element_equal(const group_element& a, const group_element& b) const {
    return a.s == b.s && a.u == b.u;
  }

  static QMatrix log_unipotent_q(const QMatrix& m) {
    return PolyMatrix::from_constant(m, 0).log_unipotent().eval({});
  }
  static QMatrix exp_nilpotent_q(const QMatrix& m) {
    return PolyMatrix::from_constant(m, 0).exp_nilpotent().eval({});
  }
  static QMatrix unipotent_inverse_q(const QMatrix& m) {
    return PolyMatrix::from_constant(m, 0).inverse_unipotent().eval({});
  }

  QVector log_coords(const QMatrix& u) const { return span_.coords(log_unipotent_q(u)); }

  // rho_V on U: exp(r(log u)); exact because the r(X_i) are nilpotent.
  QMatrix rho_v_unipotent(const QMatrix& u) const {
    QVector c = span_.coords(log_unipotent_q(u));
    QMatrix rx(dim_v(), dim_v());
    for (size_t i = 0; i < n_u(); ++i)
      if (!c[i].is_zero()) rx = rx + c[i] * mod_.r_basis[i];
    return exp_nilpotent_q(rx);
  }

  PolyMatrix rho_v_poly(const PolyMatrix& m) const {
    std::vector<QPoly> c = span_.coords(m.log_unipotent());
    PolyMatrix rx(dim_v(), dim_v(), m.arity());
    for (size_t i = 0; i < n_u(); ++i)
      rx = rx + PolyMatrix::from_constant(mod_.r_basis[i], m.arity()).scale_poly(c[i]);
    return rx.exp_nilpotent();
  }

  // alpha(g) x = u_g (s_g x s_g^-1), a homomorphism G -> Aut(U) ltimes U.
  PolyMatrix alpha_apply(const group_element& g, const PolyMatrix& x) const {
    size_t a = x.arity();
    return PolyMatrix::from_constant(g.u, a) *
           (PolyMatrix::from_constant(g.s, a) * x * PolyMatrix::from_constant(g.s.inverse(), a));
  }

  // sigma^p(g_0..g_p)(t_1..t_p) = alpha(g_0) exp((1-t_1) log sigma^{p-1}(
  //   g_0^-1 g_1, .., g_0^-1 g_p)(t_2..t_p)); sigma^0(g) = u_g.
  // Parameter domain is the unit cube; faces t_{i+1}=0 delete gamma_i and
  // t_p=1 deletes gamma_p, the remaining t_i=1 faces are degenerate.
  PolyMatrix sigma(const std::vector<group_element>& tuple) const {
    require(!tuple.empty(), errc::arity_mismatch, "sigma needs at least one element");
    size_t p = tuple.size() - 1;
    if (p == 0) return PolyMatrix::from_constant(tuple[0].u, 0);
    group_element inv0 = inverse(tuple[0]);
    std::vector<group_element> inner;
    inner.reserve(p);
    for (size_t i = 1; i <= p; ++i) inner.push_back(multiply(inv0, tuple[i]));
    PolyMatrix prev = sigma(inner).shift_up(1, p);
    QPoly coef = QPoly::one(p) - QPoly::variable(p, 1);
    PolyMatrix ex = prev.log_unipotent().scale_poly(coef).exp_nilpotent();
    return alpha_apply(tuple[0], ex);
  }

  // M^-1 dM = sum c_i (x) X_i with scalar degree-1 coefficient forms c_i.
  std::vector<PolyForm> maurer_cartan(const PolyMatrix& m) const {
    size_t p = m.arity();
    PolyMatrix minv = m.inverse_unipotent();
    std::vector<PolyForm> c(n_u(), PolyForm(p, 1, 1));
    for (size_t var = 1; var <= p; ++var) {
      PolyMatrix e = minv * m.partial(var);
      std::vector<QPoly> coords = span_.coords(e);  // NotInSpan on failure
      for (size_t i = 0; i < n_u(); ++i)
        if (!coords[i].is_zero()) c[i].add_term(1u << (var - 1), 0, coords[i]);
    }
    return c;
  }

  // sigma^* of the invariant extension of omega: rho_V(M(t)) applied to the
  // multilinear evaluation of omega on the Maurer-Cartan coefficients.
  PolyForm pullback_form(const QVector& omega, size_t degree,
                         const std::vector<group_element>& tuple) const {
    size_t p = tuple.size() - 1;
    auto masks = subsets_of_size(n_u(), degree);
    require(omega.size() == masks.size() * dim_v(), errc::degree_mismatch,
            "cochain coordinate size does not match its degree");
    PolyMatrix m = sigma(tuple);
    return pullback_form_with(omega, degree, m, p);
  }

  PolyForm pullback_form_with(const QVector& omega, size_t degree, const PolyMatrix& m,
                              size_t p) const {
    std::vector<PolyForm> mc;
    if (degree > 0) mc = maurer_cartan(m);
    return pullback_assemble(omega, degree, mc, rho_v_poly(m), p);
  }

  // assembly step given precomputed Maurer-Cartan coefficients and rho_V(M)
  PolyForm pullback_assemble(const QVector& omega, size_t degree, const std::vector<PolyForm>& mc,
                             const PolyMatrix& rho, size_t p) const {
    auto masks = subsets_of_size(n_u(), degree);
    require(omega.size() == masks.size() * dim_v(), errc::degree_mismatch,
            "cochain coordinate size does not match its degree");
    PolyForm out(p, degree, dim_v());
    for (size_t si = 0; si < masks.size(); ++si) {
      // wedge of the Maurer-Cartan forms named by the mask, ascending
      PolyForm w(p, 0, 1);
      bool needed = false;
      for (size_t v = 0; v < dim_v(); ++v) needed = needed || !omega[si * dim_v() + v].is_zero();
      if (!needed) continue;
      w.add_term(0, 0, QPoly::one(p));
      for (size_t bit : mask_bits(masks[si])) w = w.wedge(mc[bit]);
      if (w.is_zero()) continue;
      for (size_t v = 0; v < dim_v(); ++v) {
        const Rational& a = omega[si * dim_v() + v];
        if (a.is_zero()) continue;
        for (size_t wrow = 0; wrow < dim_v(); ++wrow) {
          QPoly entry = rho.at(wrow, v) * a;
          if (entry.is_zero()) continue;
          PolyForm scaled = w.scale_poly(entry);
          for (const auto& [mask, vals] : scaled.comps())
            out.add_term(mask, wrow, vals[0]);
        }
      }
    }
    return out;
  }

  // theta(omega)(g_0..g_p): cube integral of the pullback, with the
  // orientation factor (-1)^p that makes theta a cochain map.
  std::vector<Rational> theta(const QVector& omega, size_t degree,
                              const std::vector<group_element>& tuple) const {
    size_t p = tuple.size() - 1;
    require(degree == p, errc::degree_mismatch,
            "theta needs deg omega = simplex dimension");
    PolyForm f = pullback_form(omega, degree, tuple);
    std::vector<Rational> v = f.integrate_cube();
    if (p % 2)
      for (auto& x : v) x = -x;
    return v;
  }

  // Adjoint action of t_generator j on u-coordinates: column i holds the
  // coordinates of S_j X_i S_j^-1.
  QMatrix adjoint_of_t(size_t j) const {
    const QMatrix& s = p_.t_generators[j];
    QMatrix si = s.inverse();
    QMatrix a(n_u(), n_u());
    for (size_t i = 0; i < n_u(); ++i) {
      QVector c = span_.coords(s * p_.u_basis[i] * si);
      for (size_t k = 0; k < n_u(); ++k) a.at(k, i) = c[k];
    }
    return a;
  }

 private:
  hull_presentation p_;
  std::vector<check_item> checks_;
  span_solver span_;
  rational_module mod_;
  std::vector<std::pair<std::string, group_element>> gens_;
};

}  // namespace hullcoh

#endif
