#include <doctest.h>

#include <cstdlib>
#include <set>

#include "gauss_hodge/suite.hpp"

using namespace gauss_hodge;

namespace {

std::string render(const SuiteResult& r) {
  std::string s;
  for (const auto& rec : r.records) s += rec.dump() + "\n";
  return s + r.summary.dump() + "\n";
}

}  // namespace

TEST_CASE("configuration validation") {
  RunConfig cfg;
  CHECK_NOTHROW(validate(cfg));
  cfg.degree = 1;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg = RunConfig{};
  cfg.trials = 0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg = RunConfig{};
  cfg.n = 0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg = RunConfig{};
  cfg.mode = Mode::floating;
  cfg.tolerance = -1;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
}

TEST_CASE("exact suite passes and covers every check") {
  RunConfig cfg;
  cfg.n = 2;
  cfg.degree = 5;
  cfg.trials = 3;
  cfg.seed = 7;
  const auto r = run_verify(cfg);
  CHECK(r.all_pass);
  CHECK(r.first_failure.is_null());
  std::set<std::string> checks;
  for (const auto& rec : r.records) {
    checks.insert(rec.at("check").get<std::string>());
    CHECK(rec.at("pass") == true);
  }
  for (const char* name :
       {"d_squared_zero", "adjoint_duality", "d_norm_expansion", "bochner_identity",
        "poincare_bound", "dbar_duality", "hormander_bound", "conjugation_identities",
        "frame_consistency", "decomposition_norms", "split_norms", "lelong_pipeline",
        "ddbar_adjoint_identity"})
    CHECK(checks.count(name) == 1);
  CHECK(r.summary.at("pass") == true);
}

TEST_CASE("float suite passes within tolerance") {
  RunConfig cfg;
  cfg.mode = Mode::floating;
  cfg.n = 2;
  cfg.degree = 5;
  cfg.trials = 3;
  const auto r = run_verify(cfg);
  CHECK(r.all_pass);
}

TEST_CASE("reports do not depend on the thread count") {
  RunConfig cfg;
  cfg.trials = 4;
  cfg.degree = 4;
  setenv("GAUSS_HODGE_THREADS", "1", 1);
  const auto one = render(run_verify(cfg));
  setenv("GAUSS_HODGE_THREADS", "4", 1);
  const auto four = render(run_verify(cfg));
  unsetenv("GAUSS_HODGE_THREADS");
  CHECK(one == four);
  CHECK(worker_count() >= 1);
}

TEST_CASE("parallel_for visits every index and propagates exceptions") {
  std::vector<int> seen(50, 0);
  parallel_for(50, [&](int i) { seen[i] += 1; });
  for (int v : seen) CHECK(v == 1);
  CHECK_THROWS_AS(parallel_for(10,
                               [](int i) {
                                 if (i == 7) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
}
