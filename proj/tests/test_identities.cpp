#include <doctest.h>

#include "gauss_hodge/identities.hpp"
#include "gauss_hodge/synth.hpp"
#include "oracle.hpp"

using namespace gauss_hodge;
using F = ScalarField<Rational>;
using Form = PForm<Rational>;
using C = Complex<Rational>;
using CF = ComplexField<Rational>;
using oracle::CPoly;

namespace {

Form one_form(int n, int j, const F& f) {
  Form a(n, 1, f.capacity());
  a.set_component(MultiIndex(n, {j}), f);
  return a;
}

// T* alpha = sum_{i,j} (zbar_j - d/dz_j)(z_i - d/dzbar_i) alpha_{i jbar}, in monomials.
CPoly adjoint_oracle(const ComplexForm<Rational>& a) {
  const int n = a.n();
  CPoly out(2 * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const auto p = oracle::from_field(a.entry(i, j));
      const auto inner = oracle::z(n, i) * p - oracle::dzbar(p, i);
      out += oracle::zbar(n, j) * inner - oracle::dz(inner, j);
    }
  return out;
}

}  // namespace

TEST_CASE("norm expansion examples") {
  auto r = d_norm_expansion_report(one_form(2, 1, F::coordinate(2, 3, 2)));
  CHECK(r.lhs == 1);
  CHECK(r.rhs == 1);
  CHECK(r.holds);
  r = d_norm_expansion_report(one_form(2, 1, F::coordinate(2, 3, 1)));
  CHECK(r.lhs == 0);
  CHECK(r.rhs == 0);
  r = d_norm_expansion_report(one_form(2, 1, F::constant(2, 3, Rational(1))));
  CHECK(r.lhs == 0);
  CHECK(r.rhs == 0);
}

TEST_CASE("Bochner identity examples") {
  const Weight w(1);
  auto b = bochner_identity_report(one_form(1, 1, F::constant(1, 3, Rational(1))), w);
  CHECK(b.lhs_adjoint == 2);
  CHECK(b.lhs_d == 0);
  CHECK(b.rhs_hessian == 2);
  CHECK(b.rhs_gradient == 0);
  CHECK(b.coercivity_margin == 0);
  CHECK(b.identity_holds);

  b = bochner_identity_report(one_form(1, 1, F::coordinate(1, 3, 1)), w);
  CHECK(b.lhs_adjoint == 2);
  CHECK(b.lhs_d == 0);
  CHECK(b.rhs_hessian == 1);
  CHECK(b.rhs_gradient == 1);
  CHECK(b.coercivity_margin == 1);

  b = bochner_identity_report(Form(2, 1, 3), Weight(2));
  CHECK(b.lhs_adjoint == 0);
  CHECK(b.coercivity_margin == 0);
  CHECK(b.identity_holds);
}

TEST_CASE("both sides of the Bochner identity agree with independent integrals") {
  for (int n = 1; n <= 3; ++n) {
    const Weight w(n);
    for (int q = 1; q <= n; ++q)
      for (int t = 0; t < 5; ++t) {
        auto rng = trial_rng(61, t, 10 * n + q);
        const auto a = random_form<Rational>(rng, n, q, 4, 5, 5);
        const auto oa = oracle::from_form(a);
        const auto b = bochner_identity_report(a, w);
        const auto ta = oracle::codiff(oa, n);
        const auto da = oracle::d(oa, n);
        CHECK(b.lhs_adjoint == oracle::inner(ta, ta));
        CHECK(b.lhs_d == oracle::inner(da, da));
        // Hessian term: 2 sum_I sum_j |alpha_{jI}|^2 = 2 q |alpha|^2.
        CHECK(b.rhs_hessian == 2 * q * oracle::inner(oa, oa));
        Rational grad(0);
        for (const auto& [J, p] : oa)
          for (int j = 1; j <= n; ++j) grad += oracle::inner(p.diff(j), p.diff(j));
        CHECK(b.rhs_gradient == grad);
        CHECK(b.coercivity_margin == b.lhs_adjoint + b.lhs_d - 2 * q * oracle::inner(oa, oa));
        CHECK(b.coercivity_margin >= 0);
        const auto e = d_norm_expansion_report(a);
        CHECK(e.lhs == oracle::inner(da, da));
        CHECK(e.lhs == e.rhs);
      }
  }
}

TEST_CASE("float identity checks report small relative errors") {
  auto rng = trial_rng(67, 0, 0);
  const auto a = random_form<double>(rng, 3, 2, 6, 7, 6);
  const auto b = bochner_identity_report(a, Weight(3));
  CHECK(b.identity_holds);
  CHECK(b.rel_error <= 1e-12);
  CHECK(relative_error(0.0, 0.0) == 0.0);
  CHECK(relative_error(1.0, 4.0) == 0.25);
}

TEST_CASE("ddbar adjoint: direct formula, duality probe and monomial oracle agree") {
  for (int n = 1; n <= 2; ++n)
    for (int t = 0; t < 6; ++t) {
      auto rng = trial_rng(71, t, n);
      const auto a = random_complex_form<Rational>(rng, n, 1, 1, 3, 5);
      const auto direct = ddbar_adjoint(a);
      CHECK(oracle::from_field(direct) == adjoint_oracle(a));
      CHECK(ddbar_adjoint_by_duality(a) == direct);
    }
}

TEST_CASE("adjoint identity report examples") {
  auto r = ddbar_adjoint_identity_report(ComplexForm<Rational>(1, 1, 1, 4));
  CHECK(r.lhs == 0);
  CHECK(r.rhs == C(0));
  CHECK(r.adjoint_consistent);

  ComplexForm<Rational> a(1, 1, 1, 4);
  a.set_entry(1, 1, CF::constant(2, 4, C(1)));
  r = ddbar_adjoint_identity_report(a);
  CHECK(r.rhs == C(1));
  CHECK(r.lhs == 1);  // |T* a|^2 = E| |z|^2 - 1 |^2
  CHECK(r.terms.size() == 8);
  CHECK(r.adjoint_consistent);

  a.set_entry(1, 1, multiply_by_z(CF::constant(2, 4, C(1)), 1));
  r = ddbar_adjoint_identity_report(a);
  const auto t = adjoint_oracle(a);
  CHECK(r.lhs == oracle::inner(t, t).re);
  CHECK(r.discrepancy == C(r.lhs) - r.rhs);
  CHECK(r.adjoint_consistent);
}

TEST_CASE("conjugation identity examples") {
  auto one = CF::constant(2, 6, C(1));
  const auto z = multiply_by_z(one, 1);
  const auto zzb = multiply_by_zbar(z, 1);
  const auto z2zb = multiply_by_z(zzb, 1);
  for (const auto& u : {z, zzb, z2zb}) {
    CHECK(conjugation_identities_check(u).all());
    CHECK(frame_consistency_check(u));
  }
  // partial(conj(z zbar)) = zbar dz = conj(z dzbar)
  const auto lhs = partial_function(conj(zzb));
  CHECK(oracle::from_field(lhs.coefficient(1)) == oracle::zbar(1, 1));
  CHECK(dbar(partial_function(zzb)) + ddbar(zzb) == ComplexForm<Rational>(1, 1, 1, 6));
}

TEST_CASE("conversion norm reports") {
  for (int n = 1; n <= 2; ++n)
    for (int t = 0; t < 4; ++t) {
      auto rng = trial_rng(73, t, n);
      const auto f = random_complex_form<Rational>(rng, n, 1, 1, 3, 3);
      const auto v = random_form<Rational>(rng, 2 * n, 1, 3, 3);
      const auto pts = random_points<Rational>(rng, 2 * n, 20);
      const auto d = decomposition_norm_report(f, pts);
      CHECK(d.polynomial_identity);
      CHECK(d.sampled_identity);
      CHECK(d.integrated.lhs == 4 * norm_sq(f));
      CHECK(d.integrated.holds);
      const auto s = split_norm_report(v, pts);
      CHECK(s.polynomial_identity);
      CHECK(s.sampled_identity);
      CHECK(s.integrated.holds);
    }
}
