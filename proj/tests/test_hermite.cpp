#include <doctest.h>

#include <cmath>

#include "gauss_hodge/errors.hpp"
#include "gauss_hodge/hermite.hpp"
#include "oracle.hpp"

using namespace gauss_hodge;
using H = HermiteSeries<Rational>;

namespace {

H series(std::vector<Rational> c, int cap = 10) { return H(cap, std::move(c)); }

// Power-basis coefficients of a series.
std::vector<Rational> to_power(const H& s) {
  std::vector<Rational> out(s.capacity() + 2, Rational(0));
  for (int k = 0; k <= s.degree(); ++k) {
    const auto hk = oracle::hermite_power(k);
    for (std::size_t i = 0; i < hk.size(); ++i) out[i] += s.coefficient(k) * hk[i];
  }
  return out;
}

std::vector<Rational> power_diff(const std::vector<Rational>& p) {
  std::vector<Rational> out(p.size(), Rational(0));
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * static_cast<long>(i);
  return out;
}

std::vector<Rational> power_times_x(const std::vector<Rational>& p) {
  std::vector<Rational> out(p.size() + 1, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i) out[i + 1] = p[i];
  out.pop_back();
  return out;
}

}  // namespace

TEST_CASE("hermite power coefficients match the closed forms") {
  CHECK(oracle::hermite_power(2) == std::vector<Rational>{-2, 0, 4});
  CHECK(oracle::hermite_power(3) == std::vector<Rational>{0, -12, 0, 8});
}

TEST_CASE("ladder examples") {
  CHECK(differentiate(H::basis(2, 4)) == series({0, 4}));
  CHECK(differentiate(H::basis(0, 4)).is_zero());
  CHECK(differentiate(H::basis(1, 4)) == series({2}));

  CHECK(apply_delta(H::basis(0, 4)) == series({0, -1}));
  CHECK(apply_delta(H::basis(1, 4)) == series({0, 0, -1}));
  CHECK(apply_delta(series({2, 1}, 4)) == series({0, -2, -1}, 4));

  CHECK(multiply_by_coordinate(H::basis(0, 4)) == series({0, Rational(1, 2)}, 4));
  CHECK(multiply_by_coordinate(H::basis(1, 4)) == series({1, 0, Rational(1, 2)}, 4));
  CHECK(multiply_by_coordinate(H(4)).is_zero());
}

TEST_CASE("ladders agree with power-basis calculus for every degree up to 12") {
  for (int k = 0; k <= 12; ++k) {
    const auto b = H::basis(k, 13);
    const auto p = to_power(b);
    auto dp = to_power(differentiate(b));
    auto xp = to_power(multiply_by_coordinate(b));
    auto delta = to_power(apply_delta(b));
    auto expect_d = power_diff(p);
    auto expect_x = power_times_x(p);
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(dp[i] == expect_d[i]);
      CHECK(xp[i] == expect_x[i]);
      CHECK(delta[i] == expect_d[i] - 2 * expect_x[i]);
    }
  }
}

TEST_CASE("degree-raising operations fail loudly at capacity") {
  CHECK_THROWS_AS(apply_delta(H::basis(3, 3)), DegreeOverflow);
  CHECK_THROWS_AS(multiply_by_coordinate(H::basis(3, 3)), DegreeOverflow);
  try {
    apply_delta(H::basis(3, 3));
  } catch (const DegreeOverflow& e) {
    CHECK(e.required_capacity() == 4);
  }
}

TEST_CASE("inner products equal Gaussian moment integrals") {
  for (int j = 0; j <= 8; ++j)
    for (int k = 0; k <= 8; ++k) {
      const auto pj = oracle::hermite_power(j);
      const auto pk = oracle::hermite_power(k);
      Rational expect(0);
      for (std::size_t a = 0; a < pj.size(); ++a)
        for (std::size_t b = 0; b < pk.size(); ++b)
          expect += pj[a] * pk[b] * oracle::moment(static_cast<int>(a + b));
      CHECK(inner_product_1d(H::basis(j, 8), H::basis(k, 8)) == expect);
    }
  CHECK(ladder::norm_sq<Rational>(5) == 32 * 120);
}

TEST_CASE("Gaussian moments follow (2m-1)!!/2^m") {
  CHECK(oracle::moment(2) == Rational(1, 2));
  CHECK(oracle::moment(4) == Rational(3, 4));
  CHECK(oracle::moment(6) == Rational(15, 8));
  CHECK(oracle::moment(3) == 0);
  // E[x^2] as <x, x>: x = H_1 / 2.
  const auto x = series({0, Rational(1, 2)}, 2);
  CHECK(inner_product_1d(x, x) == Rational(1, 2));
}

TEST_CASE("evaluation examples and agreement with the recurrence") {
  HermiteSeries<double> h1(3, {0.0, 1.0});
  CHECK(evaluate(h1, 0.5) == doctest::Approx(1.0));
  HermiteSeries<double> h0(3, {1.0});
  CHECK(evaluate(h0, 17.25) == 1.0);
  CHECK(evaluate(HermiteSeries<double>::basis(2, 3), 0.0) == -2.0);
  CHECK(evaluate(H::basis(2, 3), Rational(0)) == -2);

  for (int k = 0; k <= 10; ++k) {
    const Rational x(3, 7);
    const auto pw = oracle::hermite_power(k);
    Rational expect(0), xi(1);
    for (const auto& c : pw) {
      expect += c * xi;
      xi *= x;
    }
    CHECK(evaluate(H::basis(k, 10), x) == expect);
  }
}

TEST_CASE("complex series conjugate the second argument") {
  using C = Complex<Rational>;
  HermiteSeries<C> a(2, {C(Rational(0), Rational(1))});
  HermiteSeries<C> b(2, {C(1)});
  CHECK(inner_product_1d(a, b) == C(Rational(0), Rational(1)));
  CHECK(inner_product_1d(b, a) == C(Rational(0), Rational(-1)));
}
