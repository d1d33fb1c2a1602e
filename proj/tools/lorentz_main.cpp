// lorentz: compute Lorentz / grand Lorentz norms, run the inequality
// verification suites, and emit sweep tables.
//
// exit codes: 0 ok; 1 known-constant check failed; 2 input/config error;
//             3 divergent norm (infinity sentinel)

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lorentz/grand.hpp"
#include "lorentz/hardy.hpp"
#include "lorentz/kfun.hpp"
#include "lorentz/norms.hpp"
#include "lorentz/report.hpp"
#include "lorentz/verify.hpp"

namespace {

using namespace lorentz;

// scalar token: "1.5" or "re,im"
Complex parse_scalar(const std::string& tok) {
  auto comma = tok.find(',');
  if (comma == std::string::npos) {
    std::size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad scalar: " + tok);
    return v;
  }
  return {std::stod(tok.substr(0, comma)), std::stod(tok.substr(comma + 1))};
}

Sequence read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::vector<Complex> v;
  std::string tok;
  while (in >> tok) v.push_back(parse_scalar(tok));
  return Sequence(std::move(v));
}

DyadicStepFunction read_step_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::string tag;
  int level = -1;
  if (!(in >> tag >> level) || tag != "L")
    throw std::invalid_argument("step file must start with 'L <level>'");
  std::vector<Complex> v;
  std::string tok;
  while (in >> tok) v.push_back(parse_scalar(tok));
  return DyadicStepFunction(level, std::move(v));
}

std::string out_dir_default() {
  if (const char* env = std::getenv("LORENTZ_OUTPUT_DIR")) return env;
  return "reports";
}

int workers_default() {
  if (const char* env = std::getenv("LORENTZ_WORKERS")) return std::atoi(env);
  return 0;
}

double parse_maybe_inf(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "INF") return kInf;
  return std::stod(s);
}

std::vector<double> parse_grid(const std::string& s) {
  std::vector<double> g;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) g.push_back(parse_maybe_inf(item));
  return g;
}

void print_value(const Interval& v) {
  std::cout << format_g17(v.mid()) << " ± " << format_g17(0.5 * v.width())
            << "\n";
}

int cmd_norm(const std::string& kind, const std::string& input,
             const NormParams& base, double theta, int eps_grid) {
  GrandParams gp;
  gp.theta = theta;
  gp.base = base;
  if (eps_grid > 0) gp.eps_grid = eps_grid;

  Interval result;
  if (kind == "lorentz-seq") {
    result = Interval::exact(lorentz_seq_norm(read_sequence_file(input), base));
  } else if (kind == "lorentz-star") {
    result = lorentz_seq_star_norm(read_sequence_file(input), base);
  } else if (kind == "lambda") {
    result = lambda_norm(read_sequence_file(input), base);
  } else if (kind == "grand-seq-star") {
    GrandResult r = grand_seq_star_norm(read_sequence_file(input), gp);
    if (!r.note.empty()) std::cerr << r.note << "\n";
    result = r.value;
  } else if (kind == "lorentz-fun") {
    result = Interval::exact(lorentz_fun_norm(read_step_file(input), base));
  } else if (kind == "lpqtau") {
    result = Interval::exact(lpqtau_fun_norm(read_step_file(input), base));
  } else if (kind == "grand-fun") {
    GrandResult r = grand_fun_norm(read_step_file(input), gp);
    if (!r.note.empty()) std::cerr << r.note << "\n";
    result = r.value;
  } else {
    std::cerr << "unknown norm kind: " << kind << "\n";
    return 2;
  }
  if (!result.is_finite()) {
    std::cerr << "norm diverges for these parameters\n";
    return 3;
  }
  print_value(result);
  return 0;
}

int cmd_coeffs(const std::string& system, const std::string& input,
               std::uint64_t K, const std::string& matrix) {
  DyadicStepFunction f = read_step_file(input);
  OrthonormalSystem sys = OrthonormalSystem::walsh();
  if (system == "trig")
    sys = OrthonormalSystem::trig(K);
  else if (system == "custom")
    sys = OrthonormalSystem::custom_from_file(matrix, f.cells());
  else if (system != "walsh") {
    std::cerr << "unknown system: " << system << "\n";
    return 2;
  }
  Sequence a = ons_coefficients(f, sys);
  for (const auto& c : a.entries())
    std::cout << format_g17(c.real()) << ',' << format_g17(c.imag()) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, const SuiteConfig& cfg,
               const std::string& out_dir) {
  bool known = suite == "all";
  for (const auto& n : suite_names()) known |= suite == n;
  if (!known) {
    std::cerr << "unknown suite: " << suite << "\n";
    return 2;
  }
  SuiteResult res = run_suite(suite, cfg);
  std::string stem = suite;
  if (!write_reports(out_dir, stem, res.reports)) {
    std::cerr << "cannot write reports under " << out_dir << "\n";
    return 2;
  }
  std::size_t fails = 0, passes = 0, report_only = 0;
  for (const auto& r : res.reports) {
    if (r.status == CheckStatus::Fail) ++fails;
    if (r.status == CheckStatus::Pass || r.status == CheckStatus::Trivial)
      ++passes;
    if (r.status == CheckStatus::ReportOnly) ++report_only;
  }
  std::cout << "suite " << suite << ": " << res.reports.size() << " records, "
            << passes << " pass, " << fails << " fail, " << report_only
            << " report-only\n";
  std::cout << "reports: " << out_dir << "/" << stem << ".jsonl, .csv\n";
  return res.known_constant_failures ? 1 : 0;
}

int cmd_sweep_blowup(const std::string& grid, double q,
                     const std::string& fam, int level,
                     const std::string& out_dir) {
  std::vector<double> ps = parse_grid(grid);
  if (ps.empty()) {
    std::cerr << "empty p grid\n";
    return 2;
  }
  BlowupFamily bf =
      fam == "flat" ? BlowupFamily::Flat : BlowupFamily::Power;
  BlowupResult res = blowup_sweep(bf, ps, q, level);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  std::ofstream out(std::filesystem::path(out_dir) / "sweep_blowup.csv");
  out << "p,c_emp,scaled\n";
  for (const auto& r : res.rows)
    out << format_g17(r.p) << ',' << format_g17(r.c_emp) << ','
        << format_g17(r.scaled) << '\n';
  out << "slope," << format_g17(res.slope) << ",\n";
  std::cout << "family " << fam << " q " << format_g17(q) << " slope "
            << format_g17(res.slope) << " max_scaled "
            << format_g17(res.max_scaled) << "\n";
  return 0;
}

int cmd_sweep_eps(const std::string& input, const std::string& fam, int level,
                  const std::string& norm, const NormParams& base,
                  double theta, int eps_grid, const std::string& out_dir) {
  GrandParams gp;
  gp.theta = theta;
  gp.base = base;
  if (eps_grid > 0) gp.eps_grid = eps_grid;

  GrandResult res;
  if (norm == "grand-seq-star") {
    Sequence a = input.empty()
                     ? walsh_coefficients(fam == "flat" ? family::flat(level)
                                                        : family::spike(level))
                     : read_sequence_file(input);
    res = grand_seq_star_norm(a, gp);
  } else {
    DyadicStepFunction f =
        input.empty()
            ? (fam == "flat" ? family::flat(level) : family::spike(level))
            : read_step_file(input);
    res = grand_fun_norm(f, gp);
  }
  if (!res.value.is_finite()) {
    std::cerr << "profile diverges: " << res.note << "\n";
    return 3;
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  std::ofstream out(std::filesystem::path(out_dir) / "sweep_eps_profile.csv");
  out << "eps,phi\n";
  for (std::size_t i = 0; i < res.profile.eps.size(); ++i)
    out << format_g17(res.profile.eps[i]) << ','
        << format_g17(res.profile.phi[i]) << '\n';
  std::cout << "sup " << format_g17(res.value.mid()) << " at eps "
            << format_g17(res.profile.argmax)
            << (res.profile.at_lower || res.profile.at_upper ? " (boundary)"
                                                             : "")
            << "\n";
  return 0;
}

int cmd_sweep_kprofile(const std::string& input, double p, double q0,
                       const std::string& q1s, const std::string& out_dir) {
  if (input.empty()) {
    std::cerr << "k-profile needs --input\n";
    return 2;
  }
  Sequence a = read_sequence_file(input);
  KCouple c{p, q0, parse_maybe_inf(q1s)};
  c.validate();
  GrandParams gp;
  gp.eps_grid = 129;
  DecompositionFamily fam = build_decomposition_family(a, c, gp);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  std::ofstream out(std::filesystem::path(out_dir) / "sweep_k_profile.csv");
  out << "t,k_upper\n";
  double b = c.b();
  double t = std::pow(b, -8.0);
  for (int k = -8; k <= 24; ++k) {
    out << format_g17(t) << ',' << format_g17(k_upper(t, fam)) << '\n';
    t *= b;
  }
  std::cout << "k-profile written (couple p=" << format_g17(p)
            << " q0=" << format_g17(q0) << " q1=" << q1s << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lorentz / grand Lorentz norm toolkit and inequality harness"};
  app.require_subcommand(1);

  // ---- norm ----------------------------------------------------------------
  auto* norm = app.add_subcommand("norm", "evaluate a quasi-norm of a file");
  std::string kind, input;
  std::string p_s = "2", q_s = "2", tau_s = "inf";
  double theta = 0.0, alpha = 2.0;
  int eps_grid = 0;
  norm->add_option("--kind", kind, "norm kind")->required();
  norm->add_option("--input", input, "input file")->required();
  norm->add_option("--p", p_s, "first index");
  norm->add_option("--q", q_s, "second index");
  norm->add_option("--tau", tau_s, "third index");
  norm->add_option("--theta", theta, "grand exponent");
  norm->add_option("--alpha", alpha, "inner Cesaro exponent");
  norm->add_option("--eps-grid", eps_grid, "eps grid size");

  // ---- coeffs ---------------------------------------------------------------
  auto* coeffs = app.add_subcommand(
      "coeffs", "coefficients of a step function against an orthonormal "
                "system; one 're,im' per line");
  std::string co_system = "walsh", co_input, co_matrix;
  std::uint64_t co_K = 64;
  coeffs->add_option("--system", co_system, "trig | walsh | custom");
  coeffs->add_option("--input", co_input, "step function file")->required();
  coeffs->add_option("--K", co_K, "max trig frequency");
  coeffs->add_option("--matrix", co_matrix,
                     "N x N plain-text numeric matrix, row-major, rows "
                     "orthonormal in (1/N) sum u conj(v)");

  // ---- verify ---------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all", out_dir = out_dir_default(), q_grid_s;
  SuiteConfig cfg;
  cfg.workers = workers_default();
  verify->add_option("--suite", suite, "suite name or 'all'");
  verify->add_option("--seed", cfg.seed, "corpus seed");
  verify->add_option("--count", cfg.count, "corpus size (0 = error)");
  verify->add_option("--level", cfg.level, "step function level");
  verify->add_option("--workers", cfg.workers, "worker threads");
  verify->add_option("--eps-grid", cfg.eps_grid, "eps grid size");
  verify->add_option("--q", q_grid_s, "override q grid, comma separated");
  verify->add_option("--out", out_dir, "output directory");

  // ---- sweep ----------------------------------------------------------------
  auto* sweep = app.add_subcommand("sweep", "parameter sweeps and plot data");
  std::string sweep_kind, p_grid_s = "1.9,1.95,1.99,1.999", sweep_fam = "power";
  std::string sweep_norm = "grand-fun", sweep_input, q1_s = "inf";
  double sweep_p = 2.0, sweep_q0 = 3.0, sweep_theta = 0.0;
  double sweep_alpha = 2.0;
  std::string sweep_qs = "2", sweep_tau = "inf";
  int sweep_level = 8, sweep_grid = 0;
  sweep->add_option("--kind", sweep_kind, "blowup | eps-profile | k-profile")
      ->required();
  sweep->add_option("--p", p_grid_s, "p grid (blowup) or p (k-profile)");
  sweep->add_option("--q", sweep_qs, "q parameter");
  sweep->add_option("--tau", sweep_tau, "tau parameter");
  sweep->add_option("--family", sweep_fam, "power | flat | spike");
  sweep->add_option("--level", sweep_level, "step function level");
  sweep->add_option("--input", sweep_input, "input file");
  sweep->add_option("--norm", sweep_norm, "grand-fun | grand-seq-star");
  sweep->add_option("--theta", sweep_theta, "grand exponent");
  sweep->add_option("--alpha", sweep_alpha, "inner Cesaro exponent");
  sweep->add_option("--eps-grid", sweep_grid, "eps grid size");
  sweep->add_option("--q0", sweep_q0, "couple q0 (k-profile)");
  sweep->add_option("--q1", q1_s, "couple q1 (k-profile)");
  sweep->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (norm->parsed()) {
      NormParams base;
      base.p = parse_maybe_inf(p_s);
      base.q = parse_maybe_inf(q_s);
      base.tau = parse_maybe_inf(tau_s);
      base.inner_alpha = alpha;
      return cmd_norm(kind, input, base, theta, eps_grid);
    }
    if (coeffs->parsed()) return cmd_coeffs(co_system, co_input, co_K, co_matrix);
    if (verify->parsed()) {
      if (!q_grid_s.empty()) cfg.q_grid = parse_grid(q_grid_s);
      return cmd_verify(suite, cfg, out_dir);
    }
    if (sweep->parsed()) {
      if (sweep_kind == "blowup")
        return cmd_sweep_blowup(p_grid_s, parse_maybe_inf(sweep_qs), sweep_fam,
                                sweep_level, out_dir);
      if (sweep_kind == "eps-profile") {
        NormParams base;
        base.p = sweep_p;
        base.q = parse_maybe_inf(sweep_qs);
        base.tau = parse_maybe_inf(sweep_tau);
        base.inner_alpha = sweep_alpha;
        try {
          base.p = std::stod(p_grid_s);  // single p for profiles
        } catch (...) {
        }
        return cmd_sweep_eps(sweep_input, sweep_fam, sweep_level, sweep_norm,
                             base, sweep_theta, sweep_grid, out_dir);
      }
      if (sweep_kind == "k-profile") {
        double p = 2.0;
        try {
          p = std::stod(p_grid_s);
        } catch (...) {
        }
        return cmd_sweep_kprofile(sweep_input, p, sweep_q0, q1_s, out_dir);
      }
      std::cerr << "unknown sweep kind: " << sweep_kind << "\n";
      return 2;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
