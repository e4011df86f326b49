#include <doctest.h>

#include "gauss_hodge/bridge.hpp"
#include "gauss_hodge/errors.hpp"
#include "gauss_hodge/synth.hpp"
#include "oracle.hpp"

using namespace gauss_hodge;
using C = Complex<Rational>;
using CF = ComplexField<Rational>;
using F = ScalarField<Rational>;

namespace {

ComplexForm<Rational> dz_dzbar(const C& c, int cap = 4) {
  ComplexForm<Rational> f(1, 1, 1, cap);
  f.set_entry(1, 1, CF::constant(2, cap, c));
  return f;
}

}  // namespace

TEST_CASE("decomposition examples") {
  auto [f1, f2] = decompose_11(dz_dzbar(C(1)));
  CHECK(f1.is_zero());
  CHECK(f2.component(MultiIndex(2, {1, 2})) == F::constant(2, 4, Rational(-2)));

  auto [g1, g2] = decompose_11(dz_dzbar(C::i()));
  CHECK(g1.component(MultiIndex(2, {1, 2})) == F::constant(2, 4, Rational(2)));
  CHECK(g2.is_zero());

  auto [h1, h2] = decompose_11(ComplexForm<Rational>(2, 1, 1, 3));
  CHECK(h1.is_zero());
  CHECK(h2.is_zero());
}

TEST_CASE("decomposition equals the real and imaginary parts of the real frame") {
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 6; ++t) {
      auto rng = trial_rng(43, t, n);
      const auto f = random_complex_form<Rational>(rng, n, 1, 1, 3, 4);
      const auto [f1, f2] = decompose_11(f);
      const auto real = to_real_frame(f);
      CHECK(f1 == real_part(real));
      CHECK(f2 == imag_part(real));
      CHECK(recompose_11(f1, f2) == f);
      CHECK(norm_sq(f1) + norm_sq(f2) == 4 * norm_sq(f));
    }
}

TEST_CASE("split examples") {
  PForm<C> dx(2, 1, 2), dy(2, 1, 2);
  dx.set_component(MultiIndex(2, {1}), CF::constant(2, 2, C(1)));
  dy.set_component(MultiIndex(2, {2}), CF::constant(2, 2, C(1)));
  const C half(Rational(1, 2)), ihalf(Rational(0), Rational(1, 2));

  auto [a10, a01] = split_bidegree(dx);
  CHECK(a10.coefficient(1) == CF::constant(2, 2, half));
  CHECK(a01.coefficient(1) == CF::constant(2, 2, half));

  auto [b10, b01] = split_bidegree(dy);
  CHECK(b10.coefficient(1) == CF::constant(2, 2, C(0) - ihalf));
  CHECK(b01.coefficient(1) == CF::constant(2, 2, ihalf));

  auto [z10, z01] = split_bidegree(PForm<C>(2, 1, 2));
  CHECK(z10.is_zero());
  CHECK(z01.is_zero());
}

TEST_CASE("split parts reassemble and carry a quarter of the norm each") {
  for (int t = 0; t < 10; ++t) {
    auto rng = trial_rng(47, t, 0);
    const auto v = random_form<Rational>(rng, 4, 1, 4, 4);
    const auto vc = to_complex(v);
    const auto [v10, v01] = split_bidegree(vc);
    CHECK(to_real_frame(v10) + to_real_frame(v01) == vc);
    CHECK(norm_sq(v10) * 4 == norm_sq(v));
    CHECK(norm_sq(v01) * 4 == norm_sq(v));
  }
}

TEST_CASE("pipeline on dz ^ dzbar") {
  const auto f = dz_dzbar(C(1));
  const auto sol = solve_poincare_lelong(f);
  CHECK(ddbar(sol.u) == f);
  CHECK(sol.report.summary.residual_sq == 0);
  CHECK(norm_sq(as_function_form(sol.u)) <= 2 * norm_sq(f));
  CHECK(sol.report.summary.bound_constant == 2);
  CHECK(sol.report.closedness_sq == 0);
  CHECK(sol.report.type_defect_sq == 0);
  for (const auto& s : sol.report.stages) {
    CHECK(s.pass);
    CHECK(s.value <= s.constant * s.reference);
  }
}

TEST_CASE("pipeline on ddbar(z^2 zbar^2) and on zero") {
  const auto z = oracle::z(1, 1), zb = oracle::zbar(1, 1);
  auto w = CF::constant(2, 6, C(1));
  w = multiply_by_z(multiply_by_z(multiply_by_zbar(multiply_by_zbar(w, 1), 1), 1), 1);
  CHECK(oracle::from_field(w) == z * z * zb * zb);
  const auto f = ddbar(w);
  const auto sol = solve_poincare_lelong(f);
  CHECK(ddbar(sol.u) == f);
  CHECK(sol.report.summary.ratio <= 2);

  const auto zero = solve_poincare_lelong(ComplexForm<Rational>(2, 1, 1, 4));
  CHECK(zero.u.is_zero());
  CHECK(zero.report.summary.ratio == 0);
}

TEST_CASE("pipeline stage constants") {
  auto rng = trial_rng(53, 0, 0);
  const auto f = ddbar(random_field<C>(rng, 4, 4, 6, 6));
  const auto sol = solve_poincare_lelong(f);
  CHECK(ddbar(sol.u) == f);
  std::map<std::string, Rational> constants;
  for (const auto& s : sol.report.stages) constants[s.stage] = s.constant;
  CHECK(constants.at("d_solve_1") == Rational(1, 4));
  CHECK(constants.at("d_solve_2") == Rational(1, 4));
  CHECK(constants.at("dbar_solve_1") == 2);
  CHECK(constants.at("antisymmetrize_1") == 4);
  CHECK(constants.at("final") == 2);
}

TEST_CASE("pipeline rejects non-closed data and missing head-room") {
  // z1 dz2 ^ dzbar2 has d = dz1 ^ dz2 ^ dzbar2 != 0.
  ComplexForm<Rational> f(2, 1, 1, 4);
  f.set_entry(2, 2, multiply_by_z(CF::constant(4, 4, C(1)), 1));
  CHECK_THROWS_AS(solve_poincare_lelong(f), PreconditionError);

  auto closed = ddbar(multiply_by_zbar(multiply_by_z(multiply_by_z(CF::constant(2, 3, C(1)), 1), 1), 1));
  ComplexForm<Rational> snug(1, 1, 1, 1);
  snug.set_entry(1, 1, closed.entry(1, 1).with_capacity(1));
  CHECK_THROWS_AS(solve_poincare_lelong(snug), DegreeOverflow);
}

TEST_CASE("float pipeline") {
  auto r1 = trial_rng(59, 0, 0);
  auto r2 = r1;
  const auto f = ddbar(random_field<C>(r1, 4, 4, 6, 6));
  const auto ff = ddbar(random_field<Complex<double>>(r2, 4, 4, 6, 6));
  const auto a = solve_poincare_lelong(f);
  const auto b = solve_poincare_lelong(ff);
  CHECK(b.report.summary.residual_sq <= 1e-20 * norm_sq(ff));
  CHECK(b.report.summary.ratio == doctest::Approx(a.report.summary.ratio.get_d()).epsilon(1e-12));
}
