#pragma once

// Report assembly for the five CLI commands.  Every report exists in two
// renderings, JSON (schema_version "1", keys sorted, two-space indent) and
// markdown; both are deterministic functions of the inputs.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hullcoh/hull.hpp"
#include "hullcoh/lefschetz.hpp"
#include "hullcoh/liecomplex.hpp"
#include "hullcoh/oracle.hpp"
#include "hullcoh/presentation_io.hpp"
#include "hullcoh/simpclass.hpp"

namespace hullcoh {

inline std::string display_name(const hull_presentation& p) {
  return p.name.empty() ? std::string("(unnamed)") : p.name;
}

namespace report_detail {

using njson = nlohmann::json;

inline njson checks_json(const std::vector<check_item>& cs) {
  njson a = njson::array();
  for (auto& c : cs) a.push_back(njson{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return a;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string checks_table(const std::vector<check_item>& cs) {
  std::string s = "| check | ok | detail |\n|---|---|---|\n";
  for (auto& c : cs) s += "| " + c.name + " | " + yes_no(c.ok) + " | " + c.detail + " |\n";
  return s;
}

inline std::string betti_line(const std::vector<size_t>& b) {
  std::string s = "(";
  for (size_t i = 0; i < b.size(); ++i) s += (i ? ", " : "") + std::to_string(b[i]);
  return s + ")";
}

inline njson betti_json(const std::vector<size_t>& b) {
  njson a = njson::array();
  for (size_t x : b) a.push_back(x);
  return a;
}

inline njson vector_strings(const QVector& v) {
  njson a = njson::array();
  for (auto& r : v) a.push_back(r.str());
  return a;
}

inline std::string matrix_block(const QMatrix& m) { return "```\n" + m.str() + "\n```\n"; }

}  // namespace report_detail

// ---- check ----------------------------------------------------------------

struct check_run {
  hull_presentation pres;
  std::vector<check_item> checks;
  bool ok = false;
};

inline check_run run_check(const hull_presentation& p) {
  check_run r;
  r.pres = p;
  r.checks = validate_presentation(p);
  r.ok = true;
  for (auto& c : r.checks) r.ok = r.ok && c.ok;
  return r;
}

inline nlohmann::json to_json(const check_run& r) {
  using namespace report_detail;
  njson j;
  j["schema_version"] = "1";
  j["command"] = "check";
  j["fixture"] = display_name(r.pres);
  j["ambient_dim"] = r.pres.ambient_dim;
  j["u_dim"] = r.pres.u_basis.size();
  j["t_generators"] = r.pres.t_names;
  njson gam = njson::array();
  for (auto& g : r.pres.gamma_generators) gam.push_back(g.name);
  j["gamma_generators"] = gam;
  j["checks"] = checks_json(r.checks);
  j["ok"] = r.ok;
  return j;
}

inline std::string to_markdown(const check_run& r) {
  using namespace report_detail;
  std::string s = "# check — " + display_name(r.pres) + "\n\n";
  s += "ambient dimension " + std::to_string(r.pres.ambient_dim) + ", unipotent dimension " +
       std::to_string(r.pres.u_basis.size()) + ", " + std::to_string(r.pres.t_names.size()) +
       " t-generator(s), " + std::to_string(r.pres.gamma_generators.size()) +
       " gamma generator(s)\n\n";
  s += checks_table(r.checks);
  s += "\nverdict: " + std::string(r.ok ? "pass" : "fail") + "\n";
  return s;
}

// ---- betti ----------------------------------------------------------------

struct betti_run {
  std::string fixture;
  size_t n = 0, dv = 0;
  cohomology_report coh;
  std::vector<size_t> betti;
  std::optional<oracle_result> oracle;
  std::string verdict;  // AGREE | DISAGREE | NO_ORACLE
};

inline betti_run run_betti(const hull& h) {
  betti_run r;
  r.fixture = display_name(h.pres());
  ce_complex cc = invariant_subcomplex(h);
  r.n = cc.n;
  r.dv = cc.dv;
  r.coh = cohomology(cc);
  r.betti = betti_numbers(r.coh);
  if (h.pres().oracle) {
    r.oracle = run_oracle(h, *h.pres().oracle);
    r.verdict = r.oracle->betti == r.betti ? "AGREE" : "DISAGREE";
  } else {
    r.verdict = "NO_ORACLE";
  }
  return r;
}

inline nlohmann::json to_json(const betti_run& r) {
  using namespace report_detail;
  njson j;
  j["schema_version"] = "1";
  j["command"] = "betti";
  j["fixture"] = r.fixture;
  j["lie_dim"] = r.n;
  j["module_dim"] = r.dv;
  njson degs = njson::array();
  for (auto& e : r.coh.entries) {
    njson d;
    d["degree"] = e.degree;
    d["full_dim"] = e.full_dim;
    d["invariant_dim"] = e.invariant_dim;
    d["betti"] = e.betti;
    d["representatives"] = e.reps_str;
    degs.push_back(d);
  }
  j["degrees"] = degs;
  j["betti"] = betti_json(r.betti);
  j["euler"] = r.coh.euler;
  if (r.oracle) {
    njson oj;
    oj["kind"] = r.oracle->kind;
    oj["betti"] = betti_json(r.oracle->betti);
    oj["checks"] = checks_json(r.oracle->checks);
    j["oracle"] = oj;
  }
  j["verdict"] = r.verdict;
  return j;
}

inline std::string to_markdown(const betti_run& r) {
  using namespace report_detail;
  std::string s = "# betti — " + r.fixture + "\n\n";
  s += "Lie algebra dimension " + std::to_string(r.n) + ", coefficient dimension " +
       std::to_string(r.dv) + "\n\n";
  s += "| degree | full dim | invariant dim | betti | representatives |\n|---|---|---|---|---|\n";
  for (auto& e : r.coh.entries) {
    std::string reps;
    for (size_t i = 0; i < e.reps_str.size(); ++i) reps += (i ? ", " : "") + e.reps_str[i];
    s += "| " + std::to_string(e.degree) + " | " + std::to_string(e.full_dim) + " | " +
         std::to_string(e.invariant_dim) + " | " + std::to_string(e.betti) + " | " + reps +
         " |\n";
  }
  s += "\nbetti: " + betti_line(r.betti) + "\n";
  s += "euler characteristic: " + std::to_string(r.coh.euler) + "\n";
  if (r.oracle) {
    s += "\n## oracle (" + r.oracle->kind + ")\n\n";
    s += checks_table(r.oracle->checks);
    s += "\noracle betti: " + betti_line(r.oracle->betti) + "\n";
  }
  s += "\nverdict: " + r.verdict + "\n";
  return s;
}

// ---- minimal-model ---------------------------------------------------------

struct minimal_model_run {
  std::string fixture;
  size_t n = 0;
  minimal_model mm;
};

inline minimal_model_run run_minimal_model(const hull& h) {
  require(h.dim_v() == 1, errc::invalid_presentation,
          "minimal-model requires trivial coefficients");
  minimal_model_run r;
  r.fixture = display_name(h.pres());
  lie_algebra L = lie_algebra::from_matrices(h.pres().u_basis);
  r.n = L.dim();
  r.mm = minimal_model_report(L, h.pres().t_generators.size());
  return r;
}

inline nlohmann::json to_json(const minimal_model_run& r) {
  using namespace report_detail;
  njson j;
  j["schema_version"] = "1";
  j["command"] = "minimal-model";
  j["fixture"] = r.fixture;
  njson gens = njson::array();
  for (size_t idx : r.mm.order) {
    njson g;
    g["name"] = "xi" + std::to_string(idx + 1);
    g["depth"] = r.mm.depth[idx];
    g["differential"] = r.mm.differentials[idx];
    gens.push_back(g);
  }
  j["generators"] = gens;
  j["adapted"] = r.mm.adapted;
  j["d_squared_zero"] = r.mm.d_squared_zero;
  j["notes"] = r.mm.notes;
  return j;
}

inline std::string to_markdown(const minimal_model_run& r) {
  using namespace report_detail;
  std::string s = "# minimal-model — " + r.fixture + "\n\n";
  s += "| generator | depth | differential |\n|---|---|---|\n";
  for (size_t idx : r.mm.order)
    s += "| xi" + std::to_string(idx + 1) + " | " + std::to_string(r.mm.depth[idx]) + " | " +
         r.mm.differentials[idx] + " |\n";
  s += "\nadapted ordering: " + yes_no(r.mm.adapted) + "\n";
  s += "d squared is zero: " + yes_no(r.mm.d_squared_zero) + "\n\nnotes:\n";
  for (auto& nline : r.mm.notes) s += "- " + nline + "\n";
  return s;
}

// ---- psi-test ---------------------------------------------------------------

struct psi_run {
  std::string fixture;
  size_t max_degree = 0, samples = 0;
  unsigned long long seed = 0;
  psi_report rep;
};

inline psi_run run_psi_test(const hull& h, size_t max_degree, size_t samples,
                            unsigned long long seed) {
  psi_run r;
  r.fixture = display_name(h.pres());
  r.max_degree = max_degree;
  r.samples = samples;
  r.seed = seed;
  ce_complex cc = invariant_subcomplex(h);
  r.rep = verify_cochain_map(h, cc, max_degree, samples, seed);
  return r;
}

inline nlohmann::json to_json(const psi_run& r) {
  using namespace report_detail;
  njson j;
  j["schema_version"] = "1";
  j["command"] = "psi-test";
  j["fixture"] = r.fixture;
  j["max_degree"] = r.max_degree;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  njson degs = njson::array();
  for (auto& d : r.rep.degrees) {
    njson e;
    e["degree"] = d.degree;
    e["samples"] = d.samples;
    e["checks"] = d.checks;
    e["ok"] = d.ok;
    if (!d.ok) {
      e["failed_identity"] = d.failed_identity;
      e["counterexample"] = d.counterexample;
    }
    degs.push_back(e);
  }
  j["degrees"] = degs;
  j["total_checks"] = r.rep.total_checks;
  j["ok"] = r.rep.ok;
  return j;
}

inline std::string to_markdown(const psi_run& r) {
  using namespace report_detail;
  std::string s = "# psi-test — " + r.fixture + "\n\n";
  s += "max degree " + std::to_string(r.max_degree) + ", samples " + std::to_string(r.samples) +
       ", seed " + std::to_string(r.seed) + "\n\n";
  s += "| degree | samples | checks | ok |\n|---|---|---|---|\n";
  for (auto& d : r.rep.degrees)
    s += "| " + std::to_string(d.degree) + " | " + std::to_string(d.samples) + " | " +
         std::to_string(d.checks) + " | " + yes_no(d.ok) + " |\n";
  s += "\ntotal checks: " + std::to_string(r.rep.total_checks) + "\n";
  if (r.rep.ok) {
    s += "verdict: pass (no counterexamples)\n";
  } else {
    s += "verdict: FAIL\n";
    for (auto& d : r.rep.degrees)
      if (!d.ok)
        s += "- degree " + std::to_string(d.degree) + ": identity \"" + d.failed_identity +
             "\" fails on tuple " + d.counterexample + "\n";
  }
  return s;
}

// ---- lefschetz ---------------------------------------------------------------

struct lefschetz_run {
  std::string fixture;
  unsigned long long seed = 0;
  size_t height = 0, draws = 0;
  std::vector<size_t> betti;
  symplectic_certificate cert;
};

inline lefschetz_run run_lefschetz(const hull& h, unsigned long long seed, size_t height,
                                   size_t draws) {
  lefschetz_run r;
  r.fixture = display_name(h.pres());
  r.seed = seed;
  r.height = height;
  r.draws = draws;
  ce_complex cc = invariant_subcomplex(h);
  cohomology_report coh = cohomology(cc);
  r.betti = betti_numbers(coh);
  r.cert = find_symplectic(cc, coh, seed, height, draws);
  return r;
}

inline nlohmann::json to_json(const lefschetz_run& r) {
  using namespace report_detail;
  njson j;
  j["schema_version"] = "1";
  j["command"] = "lefschetz";
  j["fixture"] = r.fixture;
  j["seed"] = r.seed;
  j["height"] = r.height;
  j["draws"] = r.draws;
  j["betti"] = betti_json(r.betti);
  j["found"] = r.cert.found;
  j["note"] = r.cert.note;
  if (r.cert.found) {
    j["provenance"] = r.cert.provenance;
    j["omega"] = r.cert.omega_str;
    j["omega_coordinates"] = vector_strings(r.cert.omega_full);
    j["half_dim"] = r.cert.half_dim;
    j["top_coefficient"] = r.cert.top_coefficient.str();
    j["denominator_lcm"] = r.cert.denominator_lcm.str();
    njson lv = njson::array();
    for (auto& l : r.cert.levels) {
      njson e;
      e["k"] = l.k;
      e["domain_degree"] = l.domain_degree;
      e["codomain_degree"] = l.codomain_degree;
      e["domain_dim"] = l.domain_dim;
      e["codomain_dim"] = l.codomain_dim;
      e["matrix"] = io_detail::matrix_to_json(l.matrix);
      e["rank"] = l.rank;
      e["square"] = l.square;
      e["iso"] = l.iso;
      lv.push_back(e);
    }
    j["levels"] = lv;
    j["hlp"] = r.cert.hlp;
  }
  return j;
}

inline std::string to_markdown(const lefschetz_run& r) {
  using namespace report_detail;
  std::string s = "# lefschetz — " + r.fixture + "\n\n";
  s += "seed " + std::to_string(r.seed) + ", height " + std::to_string(r.height) + ", draws " +
       std::to_string(r.draws) + "\n";
  s += "betti: " + betti_line(r.betti) + "\n\n";
  if (!r.cert.found) {
    s += "no nondegenerate invariant closed 2-form found\n";
    if (!r.cert.note.empty()) s += "note: " + r.cert.note + "\n";
    return s;
  }
  s += "omega = " + r.cert.omega_str + "  (" + r.cert.provenance + ")\n";
  s += "top wedge coefficient: " + r.cert.top_coefficient.str() + "\n";
  s += "denominator lcm: " + r.cert.denominator_lcm.str() + "\n\n## levels\n\n";
  s += "| k | map | domain dim | codomain dim | rank | square | iso |\n";
  s += "|---|---|---|---|---|---|---|\n";
  for (auto& l : r.cert.levels)
    s += "| " + std::to_string(l.k) + " | H^" + std::to_string(l.domain_degree) + " -> H^" +
         std::to_string(l.codomain_degree) + " | " + std::to_string(l.domain_dim) + " | " +
         std::to_string(l.codomain_dim) + " | " + std::to_string(l.rank) + " | " +
         yes_no(l.square) + " | " + yes_no(l.iso) + " |\n";
  for (auto& l : r.cert.levels) {
    s += "\nmatrix of L_" + std::to_string(l.k) + ":\n\n" + matrix_block(l.matrix);
  }
  if (!r.cert.note.empty()) s += "\nnote: " + r.cert.note + "\n";
  s += "\nverdict: " + std::string(r.cert.hlp ? "hard Lefschetz holds" : "hard Lefschetz FAILS") +
       "\n";
  return s;
}

inline std::string render(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace hullcoh
