#include "gauss_hodge/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "gauss_hodge/synth.hpp"

namespace gauss_hodge {

void validate(const RunConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("--n must be at least 1");
  if (cfg.degree < 2) throw std::invalid_argument("--degree must be at least 2");
  if (cfg.trials < 1) throw std::invalid_argument("--trials must be at least 1");
  if (cfg.mode == Mode::floating && !(cfg.tolerance > 0.0))
    throw std::invalid_argument("--tolerance must be positive");
}

int worker_count() {
  int cap = static_cast<int>(std::thread::hardware_concurrency());
  if (cap < 1) cap = 1;
  if (const char* env = std::getenv("GAUSS_HODGE_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) cap = v;
  }
  return cap;
}

void parallel_for(int count, const std::function<void(int)>& fn) {
  const int workers = std::min(worker_count(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

template <class R>
double mag(const R& x) {
  return std::abs(to_double(x));
}

// Pass test for a scalar equality: exact for rationals, relative for doubles.
template <class R>
bool equal_within(const R& lhs, const R& rhs, double scale, double tol, double& rel) {
  rel = relative_error(to_double(R(lhs - rhs)), scale);
  if constexpr (std::is_same_v<R, Rational>)
    return lhs == rhs;
  else
    return rel <= tol;
}

template <class R>
bool zero_within(const R& value_sq, const R& scale_sq, double tol) {
  if constexpr (std::is_same_v<R, Rational>) {
    (void)scale_sq;
    (void)tol;
    return sgn(value_sq) == 0;
  } else {
    return std::sqrt(value_sq) <= tol * std::sqrt(scale_sq);
  }
}

template <class R>
Json error_json(double rel) {
  if constexpr (std::is_same_v<R, Rational>) {
    (void)rel;
    return 0;
  } else {
    return rel;
  }
}

class TrialRunner {
 public:
  TrialRunner(const RunConfig& cfg, int trial) : cfg_(cfg), trial_(trial) {}

  template <class R>
  std::vector<Json> run() {
    for (int p = 0; p < cfg_.n; ++p) real_checks<R>(p);
    complex_checks<R>();
    return std::move(records_);
  }

 private:
  Json base(const char* check) const {
    return Json{{"trial", trial_}, {"check", check}, {"n", cfg_.n}};
  }

  Rng rng(int stream) const {
    return trial_rng(cfg_.seed, static_cast<std::uint64_t>(trial_),
                     static_cast<std::uint64_t>(stream));
  }

  void push(Json r) { records_.push_back(std::move(r)); }

  // Runs body(record); any exception marks the record failed.
  template <class Body>
  void guarded(Json r, Body&& body) {
    try {
      body(r);
    } catch (const std::exception& e) {
      r["pass"] = false;
      r["error"] = e.what();
    }
    push(std::move(r));
  }

  template <class R>
  void real_checks(int p) {
    const int n = cfg_.n;
    const int N = cfg_.degree;
    const double tol = cfg_.tolerance;
    const Weight w(n);
    const int s = 100 * (p + 1);

    guarded(with_p(base("d_squared_zero"), p), [&](Json& r) {
      auto g = rng(s + 1);
      const auto u = random_form<R>(g, n, p, N, N);
      const R dd = norm_sq(exterior_d(exterior_d(u)));
      r["lhs"] = real_to_json(dd);
      r["pass"] = zero_within(dd, norm_sq(u), tol);
    });

    guarded(with_p(base("adjoint_duality"), p), [&](Json& r) {
      auto g = rng(s + 2);
      const auto u = random_form<R>(g, n, p, N, N);
      const auto a = random_form<R>(g, n, p + 1, N - 1, N);
      const auto du = exterior_d(u);
      const auto ta = codifferential(a, w);
      const R lhs = inner(du, a);
      const R rhs = inner(u, ta);
      const double scale = std::max(std::sqrt(to_double(norm_sq(du)) * to_double(norm_sq(a))),
                                    std::sqrt(to_double(norm_sq(u)) * to_double(norm_sq(ta))));
      double rel = 0.0;
      r["lhs"] = real_to_json(lhs);
      r["rhs"] = real_to_json(rhs);
      r["pass"] = equal_within(lhs, rhs, scale, tol, rel);
      r["rel_error"] = error_json<R>(rel);
    });

    guarded(with_p(base("d_norm_expansion"), p), [&](Json& r) {
      auto g = rng(s + 3);
      const auto a = random_form<R>(g, n, p + 1, N - 1, N);
      const auto rep = d_norm_expansion_report(a, tol);
      r["lhs"] = real_to_json(rep.lhs);
      r["rhs"] = real_to_json(rep.rhs);
      r["pass"] = rep.holds;
      r["rel_error"] = error_json<R>(rep.rel_error);
    });

    guarded(with_p(base("bochner_identity"), p), [&](Json& r) {
      auto g = rng(s + 4);
      const auto a = random_form<R>(g, n, p + 1, N - 1, N);
      const auto rep = bochner_identity_report(a, w, tol);
      r["lhs_adjoint"] = real_to_json(rep.lhs_adjoint);
      r["lhs_d"] = real_to_json(rep.lhs_d);
      r["rhs_hessian"] = real_to_json(rep.rhs_hessian);
      r["rhs_gradient"] = real_to_json(rep.rhs_gradient);
      r["coercivity_margin"] = real_to_json(rep.coercivity_margin);
      const double scale = mag(R(rep.lhs_adjoint + rep.lhs_d));
      bool coercive = false;
      if constexpr (std::is_same_v<R, Rational>)
        coercive = sgn(rep.coercivity_margin) >= 0;
      else
        coercive = rep.coercivity_margin >= -tol * scale;
      r["pass"] = rep.identity_holds && coercive;
      r["rel_error"] = error_json<R>(rep.rel_error);
    });

    guarded(with_p(base("poincare_bound"), p), [&](Json& r) {
      auto g = rng(s + 5);
      const auto f = exterior_d(random_form<R>(g, n, p, N - 1, N));
      const auto sol = solve_d_min_norm(f, w, SolveOptions{tol});
      r["report"] = report_to_json(sol.report);
      r["pass"] = sol.report.bound_satisfied &&
                  zero_within(sol.report.residual_sq, sol.report.input_norm_sq, tol);
    });
  }

  template <class R>
  void complex_checks() {
    const int n = cfg_.n;
    const int m = 2 * n;
    const int N = cfg_.degree;
    const double tol = cfg_.tolerance;
    const Weight w(m);
    const int s = 1000;
    using C = Complex<R>;

    guarded(base("dbar_duality"), [&](Json& r) {
      auto g = rng(s + 1);
      const auto u = random_field<C>(g, m, N, N);
      const auto h = random_complex_form<R>(g, n, 0, 1, N - 1, N);
      const auto du = dbar_function(u);
      const auto th = dbar_adjoint(h, w);
      const C lhs = inner(du, h);
      const C rhs = weighted_inner(u, th);
      const double scale = std::max(std::sqrt(to_double(norm_sq(du)) * to_double(norm_sq(h))),
                                    std::sqrt(to_double(norm_sq(u)) * to_double(norm_sq(th))));
      double rel_re = 0.0, rel_im = 0.0;
      const bool ok = equal_within(lhs.re, rhs.re, scale, tol, rel_re) &&
                      equal_within(lhs.im, rhs.im, scale, tol, rel_im);
      r["lhs"] = {real_to_json(lhs.re), real_to_json(lhs.im)};
      r["rhs"] = {real_to_json(rhs.re), real_to_json(rhs.im)};
      r["pass"] = ok;
      r["rel_error"] = error_json<R>(std::max(rel_re, rel_im));
    });

    guarded(base("hormander_bound"), [&](Json& r) {
      auto g = rng(s + 2);
      const auto h = dbar_function(random_field<C>(g, m, N - 1, N));
      const auto sol = solve_dbar_min_norm(h, w, SolveOptions{tol});
      r["report"] = report_to_json(sol.report);
      r["pass"] = sol.report.bound_satisfied &&
                  zero_within(sol.report.residual_sq, sol.report.input_norm_sq, tol);
    });

    guarded(base("conjugation_identities"), [&](Json& r) {
      auto g = rng(s + 3);
      const auto u = random_field<C>(g, m, N, N);
      const auto flags = conjugation_identities_check(u, tol);
      r["partial_of_conjugate"] = flags.partial_of_conjugate;
      r["dbar_partial_anticommute"] = flags.dbar_partial_anticommutes;
      r["ddbar_is_partial_of_dbar"] = flags.ddbar_is_partial_of_dbar;
      r["pass"] = flags.all();
    });

    guarded(base("frame_consistency"), [&](Json& r) {
      auto g = rng(s + 4);
      r["pass"] = frame_consistency_check(random_field<C>(g, m, N, N), tol);
    });

    guarded(base("decomposition_norms"), [&](Json& r) {
      auto g = rng(s + 5);
      const auto f = random_complex_form<R>(g, n, 1, 1, N, N);
      const auto pts = random_points<R>(g, m, 100);
      const auto rep = decomposition_norm_report(f, pts, tol);
      r["polynomial"] = rep.polynomial_identity;
      r["sampled"] = rep.sampled_identity;
      r["lhs"] = real_to_json(rep.integrated.lhs);
      r["rhs"] = real_to_json(rep.integrated.rhs);
      r["pass"] = rep.polynomial_identity && rep.sampled_identity && rep.integrated.holds;
    });

    guarded(base("split_norms"), [&](Json& r) {
      auto g = rng(s + 6);
      const auto v = random_form<R>(g, m, 1, N, N);
      const auto pts = random_points<R>(g, m, 100);
      const auto rep = split_norm_report(v, pts, tol);
      r["polynomial"] = rep.polynomial_identity;
      r["sampled"] = rep.sampled_identity;
      r["lhs"] = real_to_json(rep.integrated.lhs);
      r["rhs"] = real_to_json(rep.integrated.rhs);
      r["pass"] = rep.polynomial_identity && rep.sampled_identity && rep.integrated.holds;
    });

    guarded(base("lelong_pipeline"), [&](Json& r) {
      auto g = rng(s + 7);
      const auto f = ddbar(random_field<C>(g, m, N, N));
      const auto sol = solve_poincare_lelong(f, SolveOptions{tol});
      r["report"] = lelong_report_to_json(sol.report);
      bool stages = true;
      for (const auto& st : sol.report.stages) stages = stages && st.pass;
      r["pass"] = stages && sol.report.summary.bound_satisfied;
    });

    guarded(base("ddbar_adjoint_identity"), [&](Json& r) {
      auto g = rng(s + 8);
      const auto a = random_complex_form<R>(g, n, 1, 1, N - 2, N);
      const auto rep = ddbar_adjoint_identity_report(a, tol);
      r["lhs"] = real_to_json(rep.lhs);
      r["rhs"] = {real_to_json(rep.rhs.re), real_to_json(rep.rhs.im)};
      r["discrepancy"] = {real_to_json(rep.discrepancy.re), real_to_json(rep.discrepancy.im)};
      r["discrepancy_asserted"] = false;
      r["adjoint_consistent"] = rep.adjoint_consistent;
      r["pass"] = rep.adjoint_consistent;
    });
  }

  static Json with_p(Json r, int p) {
    r["p"] = p;
    return r;
  }

  const RunConfig& cfg_;
  int trial_;
  std::vector<Json> records_;
};

}  // namespace

SuiteResult run_verify(const RunConfig& cfg) {
  validate(cfg);
  std::vector<std::vector<Json>> per_trial(static_cast<std::size_t>(cfg.trials));
  parallel_for(cfg.trials, [&](int t) {
    TrialRunner runner(cfg, t);
    per_trial[t] = cfg.mode == Mode::exact ? runner.run<Rational>() : runner.run<double>();
  });

  SuiteResult out;
  out.first_failure = nullptr;
  long failures = 0;
  for (auto& batch : per_trial)
    for (auto& r : batch) {
      if (!r.value("pass", false)) {
        ++failures;
        if (out.first_failure.is_null()) out.first_failure = r;
      }
      out.records.push_back(std::move(r));
    }
  out.all_pass = failures == 0;
  out.summary = Json{{"summary", true},
                     {"mode", cfg.mode == Mode::exact ? "exact" : "float"},
                     {"n", cfg.n},
                     {"max_total_degree", cfg.degree},
                     {"trials", cfg.trials},
                     {"seed", cfg.seed},
                     {"tolerance", cfg.mode == Mode::exact ? Json(nullptr) : Json(cfg.tolerance)},
                     {"measure", "normalized Gaussian pi^(-m/2) exp(-|x|^2) dx"},
                     {"records", static_cast<long>(out.records.size())},
                     {"failures", failures},
                     {"pass", out.all_pass}};
  return out;
}

}  // namespace gauss_hodge
