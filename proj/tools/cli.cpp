#include "cli.hpp"

#include <fstream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "hwgraph/covariant.hpp"
#include "hwgraph/graph.hpp"
#include "hwgraph/json_io.hpp"
#include "hwgraph/report.hpp"
#include "hwgraph/weyl.hpp"

namespace hwg::cli {
namespace {

constexpr int kMaxN = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int n_min = 0;
  int n_max = 0;
  double tol = 1e-10;
  std::string out_path;
  std::string what;
  std::optional<int> s;
  std::optional<int> k;
  bool timing = false;
};

void require_n(int n) {
  if (n < 2 || n > kMaxN) throw UsageError("--n must lie in [2, " + std::to_string(kMaxN) + "]");
}

void require_tol(double tol) {
  if (!(tol > 0.0)) throw UsageError("--tol must be positive");
}

int require_index(const std::optional<int>& v, const char* flag, int n) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  if (*v < 0 || *v >= n) throw UsageError(std::string(flag) + " must lie in [0, " + std::to_string(n - 1) + "]");
  return *v;
}

int emit(const Json& j, const Options& opt, std::ostream& out, std::ostream& err) {
  const std::string text = dump(j) + "\n";
  if (opt.out_path.empty()) {
    out << text;
    return kPass;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << opt.out_path << " for writing\n";
    return kIoError;
  }
  file << text;
  file.flush();
  if (!file) {
    err << "error: failed writing " << opt.out_path << "\n";
    return kIoError;
  }
  return kPass;
}

Json matrices_json(const std::vector<Matrix>& ms) {
  Json arr = Json::array();
  for (const auto& m : ms) arr.push_back(to_json(m));
  return arr;
}

Json export_object(const Options& opt) {
  const int n = opt.n;
  const std::string& w = opt.what;
  if (w == "S") return to_json(shift_clock(n).shift);
  if (w == "M") return to_json(shift_clock(n).clock);
  if (w == "piS") return to_json(rep_generators(n).shift);
  if (w == "piM") return to_json(rep_generators(n).clock);
  if (w == "Q") return to_json(q_projection(n, require_index(opt.s, "--s", n)));
  if (w == "P") return to_json(anticlique_projector(n, require_index(opt.k, "--k", n)));
  if (w == "h-generators") return matrices_json(h_generators(n));
  if (w == "basis") {
    Json arr = Json::array();
    if (opt.k) {
      for (const auto& v : code_subspace(n, require_index(opt.k, "--k", n))) arr.push_back(to_json(v));
      return arr;
    }
    const EntangledBasis basis(n);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        const auto h = basis(k, j);
        arr.push_back(to_json(Vector(h.begin(), h.end())));
      }
    return arr;
  }
  if (w == "z-generators") {
    // --s selects the grid for that j; without it, the reduced family.
    if (opt.s) return matrices_json(z_generators(n, require_index(opt.s, "--s", n)).grid.cells);
    return matrices_json(z_generators(n, 0).reduced);
  }
  throw UsageError("unknown --what '" + w + "'");
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  require_n(opt.n);
  require_tol(opt.tol);
  const VerificationReport report = build_report(opt.n, opt.tol, {.timing = opt.timing});
  const int io = emit(to_json(report), opt, out, err);
  if (io != kPass) return io;
  return report.all_pass() ? kPass : kCheckFailed;
}

int cmd_scan(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.n_min < 2 || opt.n_min > opt.n_max || opt.n_max > kMaxN)
    throw UsageError("require 2 <= --n-min <= --n-max <= " + std::to_string(kMaxN));
  require_tol(opt.tol);
  Json arr = Json::array();
  bool pass = true;
  for (int n = opt.n_min; n <= opt.n_max; ++n) {
    const VerificationReport report = build_report(n, opt.tol, {.timing = opt.timing});
    pass = pass && report.all_pass();
    arr.push_back(to_json(report));
  }
  const int io = emit(arr, opt, out, err);
  if (io != kPass) return io;
  return pass ? kPass : kCheckFailed;
}

int cmd_export(const Options& opt, std::ostream& out, std::ostream& err) {
  require_n(opt.n);
  return emit(export_object(opt), opt, out, err);
}

int cmd_kl_check(const Options& opt, std::ostream& out, std::ostream& err) {
  require_n(opt.n);
  require_tol(opt.tol);
  const int k = require_index(opt.k, "--k", opt.n);
  const int s = require_index(opt.s, "--s", opt.n);
  const WeylRepresentation rep(opt.n);
  const auto gens = orbit_generators(rep, q_projection(opt.n, s));
  AnticliqueReport report = check_knill_laflamme(gens, anticlique_projector(rep.basis(), k), opt.tol);
  report.n = opt.n;
  report.k = k;
  report.s = s;
  const int io = emit(to_json(report), opt, out, err);
  if (io != kPass) return io;
  return report.is_anticlique ? kPass : kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heisenberg-Weyl operator graph verifier", "hwgraph"};
  app.require_subcommand(1);
  Options opt;

  auto add_output = [&](CLI::App* sub) {
    auto* json = sub->add_option("--json", opt.out_path, "Write JSON to this file instead of stdout");
    sub->add_option("--out", opt.out_path, "Alias for --json")->excludes(json);
  };
  auto add_tol = [&](CLI::App* sub) { sub->add_option("--tol", opt.tol, "Residual tolerance")->capture_default_str(); };

  auto* verify = app.add_subcommand("verify", "Run every check for one n");
  verify->add_option("--n", opt.n, "Modulus")->required();
  add_tol(verify);
  add_output(verify);
  verify->add_flag("--timing", opt.timing, "Record wall-clock time in timing_ms");

  auto* scan = app.add_subcommand("scan", "Run every check for a range of n");
  scan->add_option("--n-min", opt.n_min, "Smallest modulus")->required();
  scan->add_option("--n-max", opt.n_max, "Largest modulus")->required();
  add_tol(scan);
  add_output(scan);
  scan->add_flag("--timing", opt.timing, "Record wall-clock time in timing_ms");

  auto* exp = app.add_subcommand("export", "Write a constructed object as JSON");
  exp->add_option("--n", opt.n, "Modulus")->required();
  exp->add_option("--what", opt.what, "S, M, piS, piM, basis, Q, P, h-generators, z-generators")->required();
  exp->add_option("--s", opt.s, "Index s (Q) or j (z-generators grid)");
  exp->add_option("--k", opt.k, "Index k (P, basis)");
  add_output(exp);

  auto* kl = app.add_subcommand("kl-check", "Knill-Laflamme check of P_k against the orbit graph of Q_s");
  kl->add_option("--n", opt.n, "Modulus")->required();
  kl->add_option("--k", opt.k, "Anticlique index")->required();
  kl->add_option("--s", opt.s, "Graph index")->required();
  add_tol(kl);
  add_output(kl);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(opt, out, err);
    if (scan->parsed()) return cmd_scan(opt, out, err);
    if (exp->parsed()) return cmd_export(opt, out, err);
    return cmd_kl_check(opt, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
}

}  // namespace hwg::cli
