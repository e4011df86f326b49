#include "gauss_hodge/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gauss_hodge {

double relative_error(double diff, double scale) {
  diff = std::abs(diff);
  if (scale == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return diff / scale;
}

namespace {

template <class R>
double magnitude(const R& x) {
  return std::abs(to_double(x));
}

template <class R>
double magnitude(const Complex<R>& z) {
  return std::sqrt(to_double(abs2(z)));
}

template <class R>
bool agrees(const R& lhs, const R& rhs, double scale, double tol, double& rel) {
  rel = relative_error(to_double(R(lhs - rhs)), scale);
  if constexpr (std::is_same_v<R, Rational>) return lhs == rhs;
  return rel <= tol;
}

// Difference test for two values whose squared distance and squared sizes
// are known: exact zero for rationals, relative tolerance otherwise.
template <class R>
bool close_sq(const R& diff_sq, const R& a_sq, const R& b_sq, double tol) {
  if constexpr (std::is_same_v<R, Rational>) {
    (void)a_sq;
    (void)b_sq;
    (void)tol;
    return sgn(diff_sq) == 0;
  } else {
    const double scale = std::sqrt(std::max(a_sq, b_sq));
    return std::sqrt(diff_sq) <= tol * scale;
  }
}

template <class R>
bool forms_close(const ComplexForm<R>& a, const ComplexForm<R>& b, double tol) {
  return close_sq(norm_sq(a - b), norm_sq(a), norm_sq(b), tol);
}

template <class S>
bool fields_close(const ScalarField<S>& a, const ScalarField<S>& b, double tol) {
  return close_sq(norm_sq(a - b), norm_sq(a), norm_sq(b), tol);
}

template <class R>
R complex_form_norm_at(const ComplexForm<R>& f, std::span<const R> point) {
  R acc(0);
  for (const auto& [key, c] : f.components()) acc += abs2(evaluate_field(c, point));
  return acc;
}

}  // namespace

template <class R>
IdentityCheck<R> d_norm_expansion_report(const PForm<R>& alpha, double tol) {
  if (alpha.degree() < 1) throw std::invalid_argument("the expansion needs a form of degree >= 1");
  const int n = alpha.dim();
  IdentityCheck<R> out;
  out.lhs = norm_sq(exterior_d(alpha));

  R gradient(0);
  for (const auto& [J, f] : alpha.components())
    for (int j = 1; j <= n; ++j) gradient += norm_sq(partial_derivative(f, j));

  R cross(0);
  if (alpha.degree() <= n) {
    for (const auto& I : enumerate_indices(n, alpha.degree() - 1)) {
      // grads[k][j] = d_j alpha_{kI}
      std::vector<std::vector<ScalarField<R>>> grads(static_cast<std::size_t>(n + 1));
      for (int k = 1; k <= n; ++k) {
        const auto akI = alpha.signed_component(k, I);
        grads[k].resize(static_cast<std::size_t>(n + 1));
        for (int j = 1; j <= n; ++j) grads[k][j] = partial_derivative(akI, j);
      }
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) cross += weighted_inner(grads[k][j], grads[j][k]);
    }
  }
  out.rhs = gradient - cross;
  const double scale =
      std::max({magnitude(out.lhs), magnitude(gradient), magnitude(cross)});
  out.holds = agrees(out.lhs, out.rhs, scale, tol, out.rel_error);
  return out;
}

template <class R>
BochnerReport<R> bochner_identity_report(const PForm<R>& alpha, const Weight& w, double tol) {
  if (alpha.degree() < 1) throw std::invalid_argument("the identity needs a form of degree >= 1");
  const int n = alpha.dim();
  BochnerReport<R> out;
  out.lhs_adjoint = norm_sq(codifferential(alpha, w));
  out.lhs_d = norm_sq(exterior_d(alpha));

  for (const auto& [J, f] : alpha.components())
    for (int j = 1; j <= n; ++j) out.rhs_gradient += norm_sq(partial_derivative(f, j));

  if (alpha.degree() <= n) {
    for (const auto& I : enumerate_indices(n, alpha.degree() - 1)) {
      std::vector<ScalarField<R>> a(static_cast<std::size_t>(n + 1));
      for (int j = 1; j <= n; ++j) a[j] = alpha.signed_component(j, I);
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
          const int h = w.hessian(j, k);
          if (h != 0) out.rhs_hessian += R(h) * weighted_inner(a[j], a[k]);
        }
    }
  }

  const R lhs = out.lhs_adjoint + out.lhs_d;
  const R rhs = out.rhs_hessian + out.rhs_gradient;
  out.coercivity_margin = lhs - R(w.convexity_constant() * alpha.degree()) * norm_sq(alpha);
  const double scale = std::max({magnitude(out.lhs_adjoint), magnitude(out.lhs_d),
                                 magnitude(out.rhs_hessian), magnitude(out.rhs_gradient)});
  out.identity_holds = agrees(lhs, rhs, scale, tol, out.rel_error);
  return out;
}

template <class R>
ComplexField<R> ddbar_adjoint(const ComplexForm<R>& alpha) {
  if (alpha.p() != 1 || alpha.q() != 1) throw std::invalid_argument("ddbar_adjoint needs a (1,1)-form");
  const int n = alpha.n();
  ComplexField<R> out(2 * n, alpha.capacity());
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const auto a = alpha.entry(i, j);
      if (a.is_zero()) continue;
      const auto t = multiply_by_z(a, i) - wirtinger_zbar(a, i);
      out += multiply_by_zbar(t, j) - wirtinger_z(t, j);
    }
  }
  return out;
}

template <class R>
ComplexField<R> ddbar_adjoint_by_duality(const ComplexForm<R>& alpha) {
  if (alpha.p() != 1 || alpha.q() != 1)
    throw std::invalid_argument("ddbar_adjoint_by_duality needs a (1,1)-form");
  const int m = alpha.real_dim();
  ComplexField<R> out(m, alpha.capacity());
  if (alpha.is_zero()) return out;
  const int top = alpha.total_degree() + 2;
  for (int t = 0; t <= top; ++t) {
    for (const auto& b : degrees_of_total(m, t)) {
      const auto probe = ddbar(ComplexField<R>::basis(m, top, b));
      if (probe.is_zero()) continue;
      const Complex<R> pairing = inner(probe, alpha);
      if (is_zero(pairing)) continue;
      out.add_term(b, conj(pairing) / Complex<R>(basis_norm_sq<R>(b)));
    }
  }
  return out;
}

template <class R>
AdjointIdentityReport<R> ddbar_adjoint_identity_report(const ComplexForm<R>& alpha, double tol) {
  using C = Complex<R>;
  if (alpha.p() != 1 || alpha.q() != 1)
    throw std::invalid_argument("the adjoint identity needs a (1,1)-form");
  const int n = alpha.n();
  AdjointIdentityReport<R> out;

  const auto direct = ddbar_adjoint(alpha);
  const auto oracle = ddbar_adjoint_by_duality(alpha);
  out.adjoint_consistent = fields_close(direct, oracle, tol);
  out.lhs = norm_sq(direct);

  // mixed[i][j][k][l] = d^2 alpha_{i jbar} / dz_k dzbar_l, 1-based.
  auto at = [n](int i, int j, int k, int l) {
    return (((i - 1) * n + (j - 1)) * n + (k - 1)) * n + (l - 1);
  };
  std::vector<ComplexField<R>> mixed(static_cast<std::size_t>(n * n * n * n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const auto a = alpha.entry(i, j);
      for (int l = 1; l <= n; ++l) {
        const auto al = wirtinger_zbar(a, l);
        for (int k = 1; k <= n; ++k) mixed[at(i, j, k, l)] = wirtinger_z(al, k);
      }
    }

  C t5(0), t6(0), t7(0), t8(0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          const auto& d = mixed[at(i, j, k, l)];
          t5 -= C(norm_sq(d));
          t6 += weighted_inner(d, mixed[at(i, l, k, j)] + mixed[at(k, j, i, l)]);
        }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const auto a = alpha.entry(i, j);
      for (int k = 1; k <= n; ++k) {
        t7 += C(norm_sq(wirtinger_z(a, k)));
        t8 += C(norm_sq(wirtinger_zbar(a, k)));
      }
    }

  out.terms = {C(norm_sq(alpha)),         C(norm_sq(partial(dbar(alpha)))),
               C(-norm_sq(partial(alpha))), C(-norm_sq(dbar(alpha))),
               t5, t6, t7, t8};
  for (const auto& t : out.terms) out.rhs += t;
  out.discrepancy = C(out.lhs) - out.rhs;
  return out;
}

template <class R>
ConjugationFlags conjugation_identities_check(const ComplexField<R>& u, double tol) {
  ConjugationFlags flags;
  const auto du = dbar_function(u);
  const auto dd = ddbar(u);
  flags.partial_of_conjugate = forms_close(partial_function(conj(u)), conj(du), tol);
  flags.dbar_partial_anticommutes =
      forms_close(dbar(partial_function(u)), dd * Complex<R>(R(-1)), tol);
  flags.ddbar_is_partial_of_dbar = forms_close(dd, partial(du), tol);
  return flags;
}

template <class R>
bool frame_consistency_check(const ComplexField<R>& u, double tol) {
  using C = Complex<R>;
  PForm<C> as_form(u.dim(), 0, u.capacity());
  as_form.add_to_component(MultiIndex(u.dim(), {}), u);
  const auto real_d = exterior_d(as_form);
  const auto split = to_real_frame(partial_function(u)) + to_real_frame(dbar_function(u));
  return close_sq(norm_sq(real_d - split), norm_sq(real_d), norm_sq(split), tol);
}

template <class R>
ConversionReport<R> decomposition_norm_report(const ComplexForm<R>& f,
                                              const std::vector<std::vector<R>>& points,
                                              double tol) {
  using C = Complex<R>;
  ConversionReport<R> out;
  const auto [f1, f2] = decompose_11(f);

  const auto lhs_poly = to_complex(pointwise_norm_sq(f1) + pointwise_norm_sq(f2));
  const auto rhs_poly = pointwise_norm_sq(f) * C(R(4));
  out.polynomial_identity = fields_close(lhs_poly, rhs_poly, tol);

  for (const auto& x : points) {
    const R lhs = evaluate_norm_sq(f1, std::span<const R>(x)) +
                  evaluate_norm_sq(f2, std::span<const R>(x));
    const R rhs = R(4) * complex_form_norm_at(f, std::span<const R>(x));
    double rel = 0.0;
    const bool ok = agrees(lhs, rhs, std::max(magnitude(lhs), magnitude(rhs)), tol, rel);
    out.sampled_identity = out.sampled_identity && ok;
    out.worst_sample_error = std::max(out.worst_sample_error, rel);
  }

  out.integrated.lhs = norm_sq(f1) + norm_sq(f2);
  out.integrated.rhs = R(4) * norm_sq(f);
  out.integrated.holds =
      agrees(out.integrated.lhs, out.integrated.rhs,
             std::max(magnitude(out.integrated.lhs), magnitude(out.integrated.rhs)), tol,
             out.integrated.rel_error);
  return out;
}

template <class R>
ConversionReport<R> split_norm_report(const PForm<R>& v, const std::vector<std::vector<R>>& points,
                                      double tol) {
  using C = Complex<R>;
  ConversionReport<R> out;
  const auto [v10, v01] = split_bidegree(to_complex(v));

  const auto quarter = to_complex(pointwise_norm_sq(v)) * C(ratio<R>(1, 4));
  out.polynomial_identity = fields_close(pointwise_norm_sq(v10), quarter, tol) &&
                            fields_close(pointwise_norm_sq(v01), quarter, tol);

  for (const auto& x : points) {
    const std::span<const R> pt(x);
    const R rhs = evaluate_norm_sq(v, pt) * ratio<R>(1, 4);
    const R a = complex_form_norm_at(v10, pt);
    const R b = complex_form_norm_at(v01, pt);
    double rel_a = 0.0, rel_b = 0.0;
    const double scale = std::max({magnitude(a), magnitude(b), magnitude(rhs)});
    const bool ok = agrees(a, rhs, scale, tol, rel_a) && agrees(b, rhs, scale, tol, rel_b);
    out.sampled_identity = out.sampled_identity && ok;
    out.worst_sample_error = std::max({out.worst_sample_error, rel_a, rel_b});
  }

  out.integrated.lhs = norm_sq(v10) + norm_sq(v01);
  out.integrated.rhs = norm_sq(v) * ratio<R>(1, 2);
  out.integrated.holds =
      agrees(out.integrated.lhs, out.integrated.rhs,
             std::max(magnitude(out.integrated.lhs), magnitude(out.integrated.rhs)), tol,
             out.integrated.rel_error);
  return out;
}

#define GAUSS_HODGE_INSTANTIATE(R)                                                               \
  template IdentityCheck<R> d_norm_expansion_report(const PForm<R>&, double);                    \
  template BochnerReport<R> bochner_identity_report(const PForm<R>&, const Weight&, double);     \
  template ComplexField<R> ddbar_adjoint(const ComplexForm<R>&);                                 \
  template ComplexField<R> ddbar_adjoint_by_duality(const ComplexForm<R>&);                      \
  template AdjointIdentityReport<R> ddbar_adjoint_identity_report(const ComplexForm<R>&, double); \
  template ConjugationFlags conjugation_identities_check(const ComplexField<R>&, double);        \
  template bool frame_consistency_check(const ComplexField<R>&, double);                         \
  template ConversionReport<R> decomposition_norm_report(                                        \
      const ComplexForm<R>&, const std::vector<std::vector<R>>&, double);                        \
  template ConversionReport<R> split_norm_report(const PForm<R>&,                                \
                                                 const std::vector<std::vector<R>>&, double);

GAUSS_HODGE_INSTANTIATE(Rational)
GAUSS_HODGE_INSTANTIATE(double)

#undef GAUSS_HODGE_INSTANTIATE

}  // namespace gauss_hodge
