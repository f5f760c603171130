// End-to-end acceptance checks: one PASS/FAIL line per criterion, exit 0 only
// if every criterion passes.  Run with
//   acceptance --cli <path-to-hullcoh> --fixtures <fixtures-dir>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"

using namespace hullcoh;
using clock_type = std::chrono::steady_clock;

namespace {

std::string g_cli;
std::string g_fixtures;

std::string fx(const std::string& name) { return g_fixtures + "/" + name + ".json"; }

long long ms_since(clock_type::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(clock_type::now() - t0).count();
}

struct criterion_failure {
  std::string detail;
};

void demand(bool ok, const std::string& detail) {
  if (!ok) throw criterion_failure{detail};
}

bool report(int number, const std::function<std::string()>& body) {
  try {
    std::string detail = body();
    std::cout << "PASS: criterion " << number << " — " << detail << "\n";
    return true;
  } catch (const criterion_failure& f) {
    std::cout << "FAIL: criterion " << number << " — " << f.detail << "\n";
  } catch (const std::exception& e) {
    std::cout << "FAIL: criterion " << number << " — unexpected error: " << e.what() << "\n";
  }
  return false;
}

struct betti_outcome {
  std::vector<size_t> betti;
  std::vector<size_t> oracle;
  long long elapsed_ms = 0;
};

betti_outcome betti_both_routes(const std::string& fixture) {
  auto t0 = clock_type::now();
  hull h(load_presentation(fx(fixture)));
  betti_run r = run_betti(h);
  betti_outcome out;
  out.betti = r.betti;
  demand(r.oracle.has_value(), fixture + " has no oracle tag");
  out.oracle = r.oracle->betti;
  out.elapsed_ms = ms_since(t0);
  return out;
}

std::string fmt_betti(const std::vector<size_t>& b) { return report_detail::betti_line(b); }

struct cli_outcome {
  int rc = -1;
  std::string out, err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

cli_outcome run_cli(const std::string& args, int which) {
  auto dir = std::filesystem::temp_directory_path();
  auto out_path = dir / ("hullcoh_acc_out_" + std::to_string(which) + ".txt");
  auto err_path = dir / ("hullcoh_acc_err_" + std::to_string(which) + ".txt");
  std::string cmd = "\"" + g_cli + "\" " + args + " > \"" + out_path.string() + "\" 2> \"" +
                    err_path.string() + "\"";
  int st = std::system(cmd.c_str());
  cli_outcome r;
  r.rc = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::filesystem::remove(out_path);
  std::filesystem::remove(err_path);
  return r;
}

const char* kFixtures[] = {"heisenberg", "heisenberg_v3", "sol",    "sol_v3",
                           "fibered4",   "fibered6",      "torus2", "torus4",
                           "kodaira_thurston"};

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string a = argv[i];
    if (a == "--cli")
      g_cli = argv[i + 1];
    else if (a == "--fixtures")
      g_fixtures = argv[i + 1];
  }
  if (g_cli.empty() || g_fixtures.empty()) {
    std::cerr << "usage: acceptance --cli <hullcoh> --fixtures <dir>\n";
    return 2;
  }

  bool all = true;

  all &= report(1, [] {
    betti_outcome r = betti_both_routes("sol");
    std::vector<size_t> want{1, 1, 1, 1};
    demand(r.betti == want, "sol betti is " + fmt_betti(r.betti));
    demand(r.oracle == want, "sol oracle betti is " + fmt_betti(r.oracle));
    demand(r.elapsed_ms < 1000, "took " + std::to_string(r.elapsed_ms) + " ms");
    return "sol betti " + fmt_betti(r.betti) + " from both routes in " +
           std::to_string(r.elapsed_ms) + " ms (limit 1000)";
  });

  all &= report(2, [] {
    betti_outcome r = betti_both_routes("heisenberg");
    std::vector<size_t> want{1, 2, 2, 1};
    demand(r.betti == want, "heisenberg betti is " + fmt_betti(r.betti));
    demand(r.oracle == want, "heisenberg oracle betti is " + fmt_betti(r.oracle));
    demand(r.elapsed_ms < 1000, "took " + std::to_string(r.elapsed_ms) + " ms");
    return "heisenberg betti " + fmt_betti(r.betti) + " from both routes in " +
           std::to_string(r.elapsed_ms) + " ms (limit 1000)";
  });

  all &= report(3, [] {
    auto t0 = clock_type::now();
    hull h(load_presentation(fx("fibered4")));
    betti_run b = run_betti(h);
    std::vector<size_t> want{1, 2, 2, 2, 1};
    demand(b.betti == want, "fibered4 betti is " + fmt_betti(b.betti));
    demand(b.verdict == "AGREE", "oracle verdict " + b.verdict);
    lefschetz_run l = run_lefschetz(h, 12345, 8, 1000);
    demand(l.cert.found, "no symplectic form found");
    demand(l.cert.hlp, "lefschetz levels are not all isomorphisms");
    long long el = ms_since(t0);
    demand(el < 5000, "took " + std::to_string(el) + " ms");
    return "fibered4 betti " + fmt_betti(b.betti) + ", form " + l.cert.omega_str +
           ", full lefschetz in " + std::to_string(el) + " ms (limit 5000)";
  });

  all &= report(4, [] {
    auto t0 = clock_type::now();
    hull h(load_presentation(fx("fibered6")));
    betti_run b = run_betti(h);
    demand(b.verdict == "AGREE", "oracle verdict " + b.verdict);
    lefschetz_run l = run_lefschetz(h, 12345, 8, 1000);
    demand(l.cert.found, "no symplectic form found");
    demand(l.cert.hlp, "lefschetz levels are not all isomorphisms");
    long long el = ms_since(t0);
    demand(el < 30000, "took " + std::to_string(el) + " ms");
    return "fibered6 betti " + fmt_betti(b.betti) + ", form " + l.cert.omega_str +
           ", full lefschetz in " + std::to_string(el) + " ms (limit 30000)";
  });

  all &= report(5, [] {
    hull h(load_presentation(fx("sol_v3")));
    betti_run r = run_betti(h);
    demand(r.oracle.has_value(), "sol_v3 has no oracle tag");
    demand(r.betti.size() == r.oracle->betti.size(), "length mismatch");
    for (size_t k = 0; k < r.betti.size(); ++k)
      demand(r.betti[k] == r.oracle->betti[k],
             "degree " + std::to_string(k) + ": " + std::to_string(r.betti[k]) + " vs " +
                 std::to_string(r.oracle->betti[k]));
    return "sol_v3 module betti " + fmt_betti(r.betti) + " matches the oracle in every degree";
  });

  all &= report(6, [] {
    size_t total = 0;
    for (const char* name : kFixtures) {
      hull h(load_presentation(fx(name)));
      ce_complex cc = invariant_subcomplex(h);
      psi_report rep = verify_cochain_map(h, cc, 3, 100, 12345);
      demand(rep.ok, std::string(name) + " produced a counterexample");
      for (const auto& d : rep.degrees)
        demand(d.samples >= 100,
               std::string(name) + " degree " + std::to_string(d.degree) + " only sampled " +
                   std::to_string(d.samples) + " tuples");
      total += rep.total_checks;
    }
    return "cochain-map identities hold on all 9 fixtures, degrees <= 3, 100 tuples each (" +
           std::to_string(total) + " checks, 0 counterexamples)";
  });

  all &= report(7, [] {
    std::mt19937_64 eng(2024);
    for (int i = 0; i < 100; ++i) {
      size_t arity = 1 + eng() % 3;
      PolyForm f = testsup::random_form(eng, arity, arity - 1, 4, 3);
      Rational lhs = f.d().integrate_simplex()[0];
      Rational rhs = testsup::simplex_boundary_integral(f);
      demand(lhs == rhs, "stokes mismatch at sample " + std::to_string(i));
    }
    for (int i = 0; i < 100; ++i) {
      size_t arity = 1 + eng() % 3;
      QPoly p = testsup::random_poly(eng, arity, 4, 4);
      PolyForm top(arity, arity, 1);
      top.add_term((1u << arity) - 1, 0, p);
      demand(top.integrate_cube()[0] == testsup::iterated_cube_integral(p),
             "cube integral mismatch at sample " + std::to_string(i));
      demand(top.integrate_simplex()[0] == testsup::iterated_simplex_integral(p),
             "simplex integral mismatch at sample " + std::to_string(i));
    }
    return "100 simplex stokes identities and 100 closed-form integrals match the "
           "iterated-integration oracle exactly";
  });

  all &= report(8, [] {
    std::mt19937_64 eng(4096);
    for (int i = 0; i < 100; ++i) {
      size_t n = 2 + eng() % 4;
      size_t arity = eng() % 3;
      PolyMatrix m = testsup::random_unipotent(eng, n, arity, 2, 2);
      demand(m.log_unipotent().exp_nilpotent() == m,
             "exp(log(m)) != m at sample " + std::to_string(i));
    }
    return "100 unipotent log/exp round-trips (size <= 5, entry degree <= 2) are exact";
  });

  all &= report(9, [] {
    hull h(load_presentation(fx("kodaira_thurston")));
    lefschetz_run r = run_lefschetz(h, 12345, 8, 1000);
    demand(r.cert.found, "no symplectic form found");
    demand(!r.cert.hlp, "kodaira_thurston unexpectedly satisfies hard lefschetz");
    size_t bad = r.cert.levels.size();
    for (size_t i = 0; i < r.cert.levels.size(); ++i) {
      const auto& lv = r.cert.levels[i];
      if (lv.square && lv.rank < lv.domain_dim) bad = i;
    }
    demand(bad < r.cert.levels.size(), "no square rank-deficient level");
    nlohmann::json j = to_json(r);
    const auto& jl = j["levels"][bad];
    demand(jl.contains("matrix") && jl["matrix"].size() == r.cert.levels[bad].codomain_dim,
           "report omits the failing matrix");
    demand(jl["rank"] < jl["domain_dim"], "report rank is not deficient");
    const auto& lv = r.cert.levels[bad];
    return "kodaira_thurston form " + r.cert.omega_str + " fails at level k=" +
           std::to_string(lv.k) + " (rank " + std::to_string(lv.rank) + " of " +
           std::to_string(lv.domain_dim) + "), matrix included in the report";
  });

  all &= report(10, [] {
    std::vector<std::string> commands;
    for (const char* name : kFixtures) {
      std::string in = " --input \"" + fx(name) + "\"";
      commands.push_back("check" + in);
      commands.push_back("betti" + in);
      commands.push_back("betti" + in + " --format markdown");
      commands.push_back("minimal-model" + in);
      commands.push_back("psi-test" + in + " --max-degree 2 --samples 2 --seed 777");
      commands.push_back("lefschetz" + in + " --seed 777 --height 4 --draws 50");
    }
    for (const auto& c : commands) {
      cli_outcome a = run_cli(c, 1);
      cli_outcome b = run_cli(c, 2);
      demand(a.rc == b.rc, "exit codes differ for: " + c);
      demand(a.out == b.out, "stdout differs for: " + c);
      demand(a.err == b.err, "stderr differs for: " + c);
    }
    return std::to_string(commands.size()) +
           " CLI command pairs produce byte-identical output and exit codes";
  });

  std::cout << (all ? "acceptance: all criteria passed\n" : "acceptance: FAILURES above\n");
  return all ? 0 : 1;
}
