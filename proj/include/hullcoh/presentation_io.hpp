#pragma once

// JSON serialization of hull presentations.  The on-disk format is strict:
// unknown keys are rejected and every rational is a decimal-free "p/q" string.

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hullcoh/error.hpp"
#include "hullcoh/hull.hpp"

namespace hullcoh {

namespace io_detail {

using njson = nlohmann::json;

[[noreturn]] inline void bad(const std::string& where, const std::string& what) {
  fail(errc::invalid_presentation, where + ": " + what);
}

inline void expect_object(const njson& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
}

inline void expect_array(const njson& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
}

inline std::string expect_string(const njson& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

inline size_t expect_uint(const njson& j, const std::string& where) {
  if (!j.is_number_unsigned()) bad(where, "expected a nonnegative integer");
  return j.get<size_t>();
}

inline void check_keys(const njson& j, const std::string& where,
                       std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        ok = true;
        break;
      }
    if (!ok) bad(where, "unknown key \"" + it.key() + "\"");
  }
}

inline const njson& field(const njson& j, const std::string& where, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing required key \"") + key + "\"");
  return *it;
}

inline Rational parse_rational(const njson& j, const std::string& where) {
  if (!j.is_string()) bad(where, "rationals must be \"p/q\" strings");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const error& e) {
    bad(where, e.what());
  }
}

inline QMatrix parse_matrix(const njson& j, const std::string& where) {
  expect_array(j, where);
  if (j.empty()) bad(where, "matrix must have at least one row");
  size_t rows = j.size();
  const njson& first = j[0];
  expect_array(first, where + "[0]");
  size_t cols = first.size();
  if (cols == 0) bad(where, "matrix rows must be nonempty");
  QMatrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    std::string wi = where + "[" + std::to_string(i) + "]";
    expect_array(j[i], wi);
    if (j[i].size() != cols) bad(wi, "ragged matrix");
    for (size_t c = 0; c < cols; ++c)
      m.at(i, c) = parse_rational(j[i][c], wi + "[" + std::to_string(c) + "]");
  }
  return m;
}

inline njson matrix_to_json(const QMatrix& m) {
  njson rows = njson::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    njson row = njson::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).str());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace io_detail

inline hull_presentation presentation_from_json(const nlohmann::json& j) {
  using namespace io_detail;
  expect_object(j, "presentation");
  check_keys(j, "presentation",
             {"name", "ambient_dim", "u_basis", "t_generators", "gamma_generators",
              "declared_rank", "module", "oracle"});

  hull_presentation p;
  if (j.contains("name")) p.name = expect_string(j["name"], "name");

  p.ambient_dim = expect_uint(field(j, "presentation", "ambient_dim"), "ambient_dim");
  if (p.ambient_dim == 0) bad("ambient_dim", "must be positive");

  const njson& ub = field(j, "presentation", "u_basis");
  expect_array(ub, "u_basis");
  if (ub.empty()) bad("u_basis", "must be nonempty");
  for (size_t i = 0; i < ub.size(); ++i)
    p.u_basis.push_back(parse_matrix(ub[i], "u_basis[" + std::to_string(i) + "]"));

  // names must be unique within each list; a gamma generator may share the
  // name of the torus generator it projects to
  std::vector<std::string> seen_t, seen_gamma;
  auto claim_name = [&](std::vector<std::string>& seen, const std::string& nm,
                        const std::string& where) {
    if (nm.empty()) bad(where, "generator name must be nonempty");
    for (auto& s : seen)
      if (s == nm) bad(where, "duplicate generator name \"" + nm + "\"");
    seen.push_back(nm);
  };

  if (j.contains("t_generators")) {
    const njson& tg = j["t_generators"];
    expect_array(tg, "t_generators");
    for (size_t i = 0; i < tg.size(); ++i) {
      std::string wi = "t_generators[" + std::to_string(i) + "]";
      expect_object(tg[i], wi);
      check_keys(tg[i], wi, {"name", "matrix"});
      std::string nm = expect_string(field(tg[i], wi, "name"), wi + ".name");
      claim_name(seen_t, nm, wi + ".name");
      p.t_names.push_back(nm);
      p.t_generators.push_back(parse_matrix(field(tg[i], wi, "matrix"), wi + ".matrix"));
    }
  }

  if (j.contains("gamma_generators")) {
    const njson& gg = j["gamma_generators"];
    expect_array(gg, "gamma_generators");
    for (size_t i = 0; i < gg.size(); ++i) {
      std::string wi = "gamma_generators[" + std::to_string(i) + "]";
      expect_object(gg[i], wi);
      check_keys(gg[i], wi, {"name", "s", "u"});
      named_generator g;
      g.name = expect_string(field(gg[i], wi, "name"), wi + ".name");
      claim_name(seen_gamma, g.name, wi + ".name");
      g.s = parse_matrix(field(gg[i], wi, "s"), wi + ".s");
      g.u = parse_matrix(field(gg[i], wi, "u"), wi + ".u");
      p.gamma_generators.push_back(g);
    }
  }

  if (j.contains("declared_rank"))
    p.declared_rank = expect_uint(j["declared_rank"], "declared_rank");

  if (j.contains("module")) {
    const njson& mj = j["module"];
    expect_object(mj, "module");
    check_keys(mj, "module", {"dim", "R_gens", "r_basis"});
    rational_module mod;
    mod.dim = expect_uint(field(mj, "module", "dim"), "module.dim");
    if (mod.dim == 0) bad("module.dim", "must be positive");
    const njson& rg = field(mj, "module", "R_gens");
    expect_array(rg, "module.R_gens");
    for (size_t i = 0; i < rg.size(); ++i)
      mod.r_gens.push_back(parse_matrix(rg[i], "module.R_gens[" + std::to_string(i) + "]"));
    const njson& rb = field(mj, "module", "r_basis");
    expect_array(rb, "module.r_basis");
    for (size_t i = 0; i < rb.size(); ++i)
      mod.r_basis.push_back(parse_matrix(rb[i], "module.r_basis[" + std::to_string(i) + "]"));
    p.module = mod;
  }

  if (j.contains("oracle")) {
    const njson& oj = j["oracle"];
    expect_object(oj, "oracle");
    check_keys(oj, "oracle", {"kind", "monodromy", "z_generator", "lattice_generators"});
    oracle_tag tag;
    tag.kind = expect_string(field(oj, "oracle", "kind"), "oracle.kind");
    if (tag.kind != "koszul" && tag.kind != "wang")
      bad("oracle.kind", "must be \"koszul\" or \"wang\"");
    const njson& lg = field(oj, "oracle", "lattice_generators");
    expect_array(lg, "oracle.lattice_generators");
    for (size_t i = 0; i < lg.size(); ++i)
      tag.lattice_generators.push_back(
          expect_string(lg[i], "oracle.lattice_generators[" + std::to_string(i) + "]"));
    if (tag.kind == "wang") {
      tag.z_generator = expect_string(field(oj, "oracle", "z_generator"), "oracle.z_generator");
      tag.monodromy = parse_matrix(field(oj, "oracle", "monodromy"), "oracle.monodromy");
    } else {
      if (oj.contains("z_generator") || oj.contains("monodromy"))
        bad("oracle", "koszul oracle takes no z_generator or monodromy");
    }
    p.oracle = tag;
  }

  return p;
}

inline nlohmann::json presentation_to_json(const hull_presentation& p) {
  using io_detail::matrix_to_json;
  using io_detail::njson;
  njson j;
  if (!p.name.empty()) j["name"] = p.name;
  j["ambient_dim"] = p.ambient_dim;
  j["u_basis"] = njson::array();
  for (auto& m : p.u_basis) j["u_basis"].push_back(matrix_to_json(m));
  j["t_generators"] = njson::array();
  for (size_t i = 0; i < p.t_generators.size(); ++i)
    j["t_generators"].push_back(
        njson{{"name", p.t_names[i]}, {"matrix", matrix_to_json(p.t_generators[i])}});
  j["gamma_generators"] = njson::array();
  for (auto& g : p.gamma_generators)
    j["gamma_generators"].push_back(
        njson{{"name", g.name}, {"s", matrix_to_json(g.s)}, {"u", matrix_to_json(g.u)}});
  if (p.declared_rank) j["declared_rank"] = *p.declared_rank;
  if (p.module) {
    njson mj;
    mj["dim"] = p.module->dim;
    mj["R_gens"] = njson::array();
    for (auto& m : p.module->r_gens) mj["R_gens"].push_back(matrix_to_json(m));
    mj["r_basis"] = njson::array();
    for (auto& m : p.module->r_basis) mj["r_basis"].push_back(matrix_to_json(m));
    j["module"] = mj;
  }
  if (p.oracle) {
    njson oj;
    oj["kind"] = p.oracle->kind;
    oj["lattice_generators"] = p.oracle->lattice_generators;
    if (p.oracle->kind == "wang") {
      oj["z_generator"] = p.oracle->z_generator;
      oj["monodromy"] = matrix_to_json(p.oracle->monodromy);
    }
    j["oracle"] = oj;
  }
  return j;
}

inline hull_presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in.is_open()) fail(errc::invalid_presentation, "cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(errc::invalid_presentation, path + ": " + e.what());
  }
  try {
    return presentation_from_json(j);
  } catch (const error& e) {
    if (e.code() == errc::invalid_presentation) {
      std::string msg = e.what();
      std::string pfx = std::string(errc_name(errc::invalid_presentation)) + ": ";
      if (msg.rfind(pfx, 0) == 0) msg = msg.substr(pfx.size());
      fail(errc::invalid_presentation, path + ": " + msg);
    }
    throw;
  }
}

}  // namespace hullcoh
