#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "lorentz/hardy.hpp"
#include "lorentz/verify.hpp"

namespace lorentz {

namespace {

using Job = std::function<std::vector<CheckReport>()>;

std::vector<std::vector<CheckReport>> run_jobs(
    const std::vector<Job>& jobs, int workers) {
  std::vector<std::vector<CheckReport>> out(jobs.size());
  if (workers <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    workers = static_cast<int>(hw ? std::min(hw, 8u) : 2u);
  }
  workers = std::min<int>(workers, static_cast<int>(jobs.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i]();
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) break;
      out[i] = jobs[i]();
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

struct Sized {
  int count;
  int level;
};

Sized suite_defaults(const std::string& name) {
  if (name == "hardy") return {100, 6};
  if (name == "bochkarev") return {1000, 0};
  if (name == "imboch") return {500, 0};
  if (name == "remark38") return {500, 0};
  if (name == "hy") return {100, 8};
  if (name == "grand-hy") return {50, 6};
  if (name == "theorem16") return {50, 6};
  if (name == "kfun") return {20, 0};
  throw std::invalid_argument("unknown suite: " + name);
}

GrandParams suite_grand(const SuiteConfig& cfg) {
  GrandParams gp;
  gp.eps_grid = cfg.eps_grid;
  return gp;
}

void stamp(std::vector<CheckReport>& reps, std::uint64_t seed) {
  for (auto& r : reps) r.seed = seed;
}

// corpus of step functions: a few named family members, then random
std::vector<DyadicStepFunction> step_corpus(std::uint64_t seed, int count,
                                            int level) {
  std::vector<DyadicStepFunction> fs;
  Rng rng(seed);
  fs.push_back(family::flat(level));
  fs.push_back(family::spike(level));
  fs.push_back(family::power(level, 0.6));
  fs.push_back(family::power(level, 0.3));
  while (static_cast<int>(fs.size()) < count)
    fs.push_back(family::random_step(rng, level));
  fs.resize(static_cast<std::size_t>(count), family::flat(level));
  return fs;
}

std::vector<Sequence> seq_corpus(std::uint64_t seed, int count,
                                 std::size_t min_len, std::size_t max_len) {
  std::vector<Sequence> as;
  Rng rng(seed);
  as.push_back(family::spike_seq(std::max<std::size_t>(min_len, 8)));
  as.push_back(family::flat_seq(std::max<std::size_t>(min_len, 16)));
  as.push_back(family::lacunary_seq(0.7, 5));
  while (static_cast<int>(as.size()) < count) {
    std::size_t len =
        min_len + rng.uniform_index(max_len - min_len + 1);
    as.push_back(family::random_seq(rng, len));
  }
  as.resize(static_cast<std::size_t>(count),
            family::spike_seq(std::max<std::size_t>(min_len, 8)));
  return as;
}

// summary row for a ratio corpus: band = max ratio / min nonzero ratio
CheckReport band_summary(const std::string& name,
                         const std::vector<CheckReport>& ratios) {
  CheckReport rep;
  rep.check = name;
  double lo = kInf, hi = 0.0;
  int counted = 0;
  for (const auto& r : ratios) {
    if (!r.has_ratio || !(r.ratio > 0.0) || !std::isfinite(r.ratio)) continue;
    lo = std::min(lo, r.ratio);
    hi = std::max(hi, r.ratio);
    ++counted;
  }
  rep.param("count", static_cast<std::uint64_t>(counted));
  rep.lhs = hi;
  rep.rhs = lo;
  rep.has_ratio = true;
  rep.ratio = (counted && lo > 0.0) ? hi / lo : 0.0;
  rep.notes = "band = max ratio / min nonzero ratio";
  rep.status = CheckStatus::ReportOnly;
  return rep;
}

// ---- individual suites -----------------------------------------------------

SuiteResult run_hardy_suite(const SuiteConfig& cfg, int count, int level) {
  auto fs = step_corpus(cfg.seed, count, level);
  const double rs[] = {0.5, 1.0, 2.0};
  const double alphas_head[] = {0.1, 0.25, 0.4};
  const double alphas_tail[] = {0.1, 0.25, 0.5, 1.0};

  std::vector<Job> jobs;
  for (int i = 0; i < count; ++i) {
    const DyadicStepFunction& f = fs[static_cast<std::size_t>(i)];
    jobs.push_back([&f, &rs, &alphas_head, &alphas_tail, i]() {
      std::vector<CheckReport> reps;
      for (double r : rs) {
        std::vector<double> qs = {r, 2.0, 4.0};
        for (double alpha : alphas_head)
          for (double q : qs) {
            if (q < r) continue;
            reps.push_back(hardy_head_check(f, {alpha, r, q}));
          }
        for (double alpha : alphas_tail)
          for (double q : qs) {
            if (q < r) continue;
            reps.push_back(hardy_tail_check(f, {alpha, r, q}));
          }
        if (i % 4 == 0)
          reps.push_back(hardy_tail_check(f, {1.0, r, kInf}));
      }
      return reps;
    });
  }
  // equality instance and the closed-form examples on f = 1
  jobs.push_back([level]() {
    std::vector<CheckReport> reps;
    DyadicStepFunction one = family::flat(level);
    reps.push_back(hardy_tail_check(one, {1.0, 1.0, 1.0}));
    reps.push_back(hardy_head_check(one, {0.5, 1.0, 1.0}));
    return reps;
  });
  // grand corollaries on a sub-corpus
  int grand_n = std::min(count, 50);
  const std::pair<double, double> rq[] = {{0.5, 1.0}, {1.0, 2.0}, {2.0, 4.0}};
  for (int i = 0; i < grand_n; ++i) {
    const DyadicStepFunction& f = fs[static_cast<std::size_t>(i)];
    jobs.push_back([&f, &rq]() {
      std::vector<CheckReport> reps;
      for (auto [r, q] : rq)
        for (double theta : {0.0, 0.5}) {
          reps.push_back(hardy_grand_head_check(f, r, q, theta));
          reps.push_back(hardy_grand_tail_check(f, r, q, theta));
        }
      return reps;
    });
  }

  SuiteResult res;
  for (auto& chunk : run_jobs(jobs, cfg.workers))
    for (auto& r : chunk) res.reports.push_back(std::move(r));
  return res;
}

SuiteResult run_bochkarev_suite(const SuiteConfig& cfg, int count) {
  auto as = seq_corpus(cfg.seed, count, 4, 128);
  std::vector<double> qs =
      cfg.q_grid.empty() ? std::vector<double>{3.0, 4.0, kInf} : cfg.q_grid;
  GrandParams gp = suite_grand(cfg);

  std::vector<Job> jobs;
  for (int i = 0; i < count; ++i) {
    const Sequence& a = as[static_cast<std::size_t>(i)];
    jobs.push_back([&a, qs, gp, i]() {
      std::vector<CheckReport> reps;
      for (double q : qs) {
        GrandParams g = gp;
        g.theta = 0.5;
        g.base.p = 2.0;
        g.base.q = q;
        g.base.inner_alpha = 2.0;
        GrandResult hint = grand_seq_star_norm(a, g);
        CheckReport agg;
        bool first = true;
        bool all_pass = true;
        for (std::uint64_t n = 1; n <= a.size(); ++n) {
          CheckReport r = bochkarev_chain_check(a, q, n, gp, &hint);
          if (r.status == CheckStatus::Fail) {
            all_pass = false;
            reps.push_back(r);  // keep every failure verbatim
          }
          if (first || (r.has_margin && r.margin < agg.margin)) {
            agg = r;
            first = false;
          }
        }
        agg.param("seq", static_cast<std::uint64_t>(i));
        agg.notes = "worst margin over n = 1..len" +
                    (agg.notes.empty() ? "" : "; " + agg.notes);
        agg.status = all_pass
                         ? (agg.status == CheckStatus::Trivial
                                ? CheckStatus::Trivial
                                : CheckStatus::Pass)
                         : CheckStatus::Fail;
        reps.push_back(std::move(agg));
      }
      return reps;
    });
  }
  SuiteResult res;
  for (auto& chunk : run_jobs(jobs, cfg.workers))
    for (auto& r : chunk) res.reports.push_back(std::move(r));
  return res;
}

SuiteResult run_imboch_suite(const SuiteConfig& cfg, int count) {
  auto as = seq_corpus(cfg.seed, count, 16, 128);
  const std::pair<double, double> pq[] = {{1.0, 2.0}, {2.0, 3.0}, {2.0, 4.0}};
  const std::uint64_t ns[] = {1, 4, 16};
  GrandParams gp = suite_grand(cfg);

  std::vector<Job> jobs;
  for (int i = 0; i < count; ++i) {
    const Sequence& a = as[static_cast<std::size_t>(i)];
    jobs.push_back([&a, &pq, &ns, gp, i]() {
      std::vector<CheckReport> reps;
      for (auto [p, q] : pq) {
        GrandParams g = gp;
        g.theta = 1.0 / p;
        g.base.p = p;
        g.base.q = q;
        g.base.inner_alpha = p;
        GrandResult hint = grand_seq_star_norm(a, g);
        for (std::uint64_t n : ns) {
          CheckReport r = imboch_check(a, p, q, n, gp, &hint);
          r.param("seq", static_cast<std::uint64_t>(i));
          reps.push_back(std::move(r));
        }
      }
      return reps;
    });
  }
  SuiteResult res;
  for (auto& chunk : run_jobs(jobs, cfg.workers))
    for (auto& r : chunk) res.reports.push_back(std::move(r));
  return res;
}

SuiteResult run_remark38_suite(const SuiteConfig& cfg, int count) {
  auto as = seq_corpus(cfg.seed, count, 4, 128);
  std::vector<double> qs =
      cfg.q_grid.empty() ? std::vector<double>{3.0, 4.0} : cfg.q_grid;
  std::vector<Job> jobs;
  for (int i = 0; i < count; ++i) {
    const Sequence& a = as[static_cast<std::size_t>(i)];
    jobs.push_back([&a, qs, i]() {
      std::vector<CheckReport> reps;
      for (double q : qs) {
        CheckReport r = remark38_check(a, q);
        r.param("seq", static_cast<std::uint64_t>(i));
        reps.push_back(std::move(r));
      }
      return reps;
    });
  }
  SuiteResult res;
  for (auto& chunk : run_jobs(jobs, cfg.workers))
    for (auto& r : chunk) res.reports.push_back(std::move(r));
  return res;
}

SuiteResult run_hy_suite(const SuiteConfig& cfg, int count, int level) {
  auto fs = step_corpus(cfg.seed, count, level);
  std::vector<Job> jobs;
  for (int i = 0; i < count; ++i) {
    const DyadicStepFunction& f = fs[static_cast<std::size_t>(i)];
    jobs.push_back([&f, i]() {
      std::vector<CheckReport> reps;
      for (double p : {1.25, 1.5, 2.0}) {
        CheckReport r = hy_classical_check(f, p);
        r.param("seq", static_cast<std::uint64_t>(i));
        reps.push_back(std::move(r));
      }
      OrthonormalSystem walsh = OrthonormalSystem::walsh();
      for (double p : {1.25, 1.6, 1.9})
        for (double q : {1.0, 2.0, 4.0}) {
          CheckReport r = hy_lorentz_ratio(f, p, q, walsh);
          r.param("seq", static_cast<std::uint64_t>(i));
          reps.push_back(std::move(r));
        }
      if (i < 5) {
        OrthonormalSystem trig =
            OrthonormalSystem::trig(std::uint64_t{1} << 16);
        CheckReport r = hy_lorentz_ratio(f, 1.6, 2.0, trig);
        r.param("seq", static_cast<std::uint64_t>(i));
        reps.push_back(std::move(r));
      }
      return reps;
    });
  }
  SuiteResult res;
  for (auto& chunk : run_jobs(jobs, cfg.workers))
    for (auto& r : chunk) res.reports.push_back(std::move(r));
  return res;
}

SuiteResult run_grand_hy_suite(const SuiteConfig& cfg, int count, int level) {
  auto fs = step_corpus(cfg.seed, count, level);
  GrandParams gp = suite_grand(cfg);
  std::vector<double> qs = cfg.q_grid.empty()
                               ? std::vector<double>{1.0, 2.0, 4.0, kInf}
                               : cfg.q_grid;
  std::vector<Job> jobs;
  for (int i = 0; i < count; ++i) {
    const DyadicStepFunction& f = fs[static_cast<std::size_t>(i)];
    jobs.push_back([&f, qs, gp, i]() {
      std::vector<CheckReport> reps;
      for (double theta : {0.0, 0.5})
        for (double q : qs) {
          CheckReport r = grand_hy_check(f, theta, q, gp);
          r.param("seq", static_cast<std::uint64_t>(i));
          reps.push_back(std::move(r));
        }
      return reps;
    });
  }
  SuiteResult res;
  for (auto& chunk : run_jobs(jobs, cfg.workers))
    for (auto& r : chunk) res.reports.push_back(std::move(r));
  res.reports.push_back(band_summary("grand_hy_band", res.reports));
  return res;
}

SuiteResult run_theorem16_suite(const SuiteConfig& cfg, int count, int level) {
  auto fs = step_corpus(cfg.seed, count, level);
  std::vector<double> qs =
      cfg.q_grid.empty() ? std::vector<double>{3.0, 4.0, kInf} : cfg.q_grid;
  std::vector<Job> jobs;
  for (int i = 0; i < count; ++i) {
    const DyadicStepFunction& f = fs[static_cast<std::size_t>(i)];
    jobs.push_back([&f, qs, i]() {
      std::vector<CheckReport> reps;
      OrthonormalSystem walsh = OrthonormalSystem::walsh();
      for (double q : qs)
        for (double tau : {2.0, 4.0, q}) {
          CheckReport r = theorem16_check(f, q, tau, walsh);
          r.param("seq", static_cast<std::uint64_t>(i));
          reps.push_back(std::move(r));
        }
      return reps;
    });
  }
  SuiteResult res;
  for (auto& chunk : run_jobs(jobs, cfg.workers))
    for (auto& r : chunk) res.reports.push_back(std::move(r));
  res.reports.push_back(band_summary("theorem16_band", res.reports));
  return res;
}

CheckReport k_envelope_check(const Sequence& a, const KCouple& c,
                             const GrandParams& gp, int idx) {
  CheckReport rep;
  rep.check = "k_envelope";
  rep.param("p", c.p);
  rep.param("q0", c.q0);
  rep.param("q1", std::isinf(c.q1) ? "inf" : format_g17(c.q1));
  rep.param("seq", static_cast<std::uint64_t>(idx));
  rep.param("len", static_cast<std::uint64_t>(a.size()));
  if (a.zero()) {
    rep.status = CheckStatus::Trivial;
    return rep;
  }
  DecompositionFamily fam = build_decomposition_family(a, c, gp);
  double b = c.b();
  bool ok = true;
  double prev_k = 0.0, prev_ratio = kInf, t = std::pow(b, -8.0);
  for (int j = 0; j < 16; ++j) {
    double k = k_upper(t, fam);
    // the two trivial splits are in the family
    if (k > std::min(fam.a_x0, t * fam.a_x1) * (1.0 + 1e-12)) ok = false;
    for (const auto& m : fam.members)
      if (k > (m.x0 + t * m.x1) * (1.0 + 1e-12)) ok = false;
    if (k + 1e-12 * std::abs(k) < prev_k) ok = false;          // nondecreasing
    if (k / t > prev_ratio * (1.0 + 1e-12)) ok = false;        // K(t)/t down
    prev_k = k;
    prev_ratio = k / t;
    t *= b;
  }
  rep.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  return rep;
}

SuiteResult run_kfun_suite(const SuiteConfig& cfg, int count) {
  auto as = seq_corpus(cfg.seed, count, 8, 48);
  GrandParams gp = suite_grand(cfg);
  gp.eps_grid = std::min(cfg.eps_grid, 129);  // family norms dominate cost

  struct CoupleCase {
    KCouple c;
    double eta;
  };
  const CoupleCase cases[] = {{{2.0, 3.0, kInf}, 1.0 / 3.0},
                              {{1.0, 2.0, 4.0}, 0.5}};

  std::vector<Job> jobs;
  for (int i = 0; i < count; ++i) {
    const Sequence& a = as[static_cast<std::size_t>(i)];
    jobs.push_back([&a, &cases, gp, i]() {
      std::vector<CheckReport> reps;
      for (const auto& cc : cases) {
        reps.push_back(k_envelope_check(a, cc.c, gp, i));
        double q = 1.0 / ((1.0 - cc.eta) / cc.c.q0 + cc.eta / cc.c.q1);
        for (double tau : {q, 2.0}) {
          CheckReport r = gor_chain_check(a, cc.c, cc.eta, tau, gp);
          r.param("seq", static_cast<std::uint64_t>(i));
          reps.push_back(std::move(r));
        }
      }
      return reps;
    });
  }
  SuiteResult res;
  for (auto& chunk : run_jobs(jobs, cfg.workers))
    for (auto& r : chunk) res.reports.push_back(std::move(r));
  res.reports.push_back(band_summary("gor_chain_band", res.reports));
  return res;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "hardy", "bochkarev", "imboch",    "remark38",
      "hy",    "grand-hy",  "theorem16", "kfun"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (cfg.count == 0) throw std::invalid_argument("empty corpus (count = 0)");
  if (name == "all") {
    SuiteResult all;
    for (const auto& n : suite_names()) {
      SuiteResult one = run_suite(n, cfg);
      for (auto& r : one.reports) all.reports.push_back(std::move(r));
      all.known_constant_failures |= one.known_constant_failures;
    }
    sort_reports(all.reports);
    return all;
  }

  Sized d = suite_defaults(name);
  int count = cfg.count > 0 ? cfg.count : d.count;
  int level = cfg.level > 0 ? cfg.level : d.level;

  SuiteResult res;
  if (name == "hardy")
    res = run_hardy_suite(cfg, count, level);
  else if (name == "bochkarev")
    res = run_bochkarev_suite(cfg, count);
  else if (name == "imboch")
    res = run_imboch_suite(cfg, count);
  else if (name == "remark38")
    res = run_remark38_suite(cfg, count);
  else if (name == "hy")
    res = run_hy_suite(cfg, count, level);
  else if (name == "grand-hy")
    res = run_grand_hy_suite(cfg, count, level);
  else if (name == "theorem16")
    res = run_theorem16_suite(cfg, count, level);
  else if (name == "kfun")
    res = run_kfun_suite(cfg, count);

  stamp(res.reports, cfg.seed);
  sort_reports(res.reports);
  for (const auto& r : res.reports)
    if (r.status == CheckStatus::Fail) res.known_constant_failures = true;
  return res;
}

}  // namespace lorentz
