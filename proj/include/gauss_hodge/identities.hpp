#pragma once

// Verifiers for the norm identities behind the solvers.  Each returns both
// sides so reports can print them; `holds` is exact equality for rationals
// and a relative-error test for doubles.

#include <span>
#include <string>
#include <vector>

#include "gauss_hodge/bridge.hpp"
#include "gauss_hodge/calculus.hpp"

namespace gauss_hodge {

// Relative error |lhs - rhs| / scale, scale being the largest magnitude of
// lhs, rhs and every summed term.  Zero when all of them vanish.
double relative_error(double diff, double scale);

template <class R>
struct IdentityCheck {
  R lhs{0};
  R rhs{0};
  double rel_error = 0.0;
  bool holds = true;
};

// ||d alpha||^2 against
//   sum_J sum_j ||d_j alpha_J||^2 - sum_I sum_{j,k} <d_j alpha_{kI}, d_k alpha_{jI}>.
template <class R>
IdentityCheck<R> d_norm_expansion_report(const PForm<R>& alpha, double tol = 1e-12);

template <class R>
struct BochnerReport {
  R lhs_adjoint{0};   // ||T* alpha||^2
  R lhs_d{0};         // ||d alpha||^2
  R rhs_hessian{0};   // sum_I sum_{j,k} <phi_jk alpha_jI, alpha_kI>
  R rhs_gradient{0};  // sum_J sum_j ||d_j alpha_J||^2
  R coercivity_margin{0};  // lhs - c (p+1) ||alpha||^2
  double rel_error = 0.0;
  bool identity_holds = true;
};

template <class R>
BochnerReport<R> bochner_identity_report(const PForm<R>& alpha, const Weight& w,
                                         double tol = 1e-12);

// The formal adjoint of u -> ddbar u under e^{-|z|^2}:
//   T* alpha = sum_{i,j} (zbar_j - d/dz_j)(z_i - d/dzbar_i) alpha_{i jbar}.
template <class R>
ComplexField<R> ddbar_adjoint(const ComplexForm<R>& alpha);

// T* alpha recovered coefficient by coefficient from the defining duality,
// c_b = conj(<ddbar H_b, alpha>) / ||H_b||^2 over every basis function up to
// the degree of alpha plus two.
template <class R>
ComplexField<R> ddbar_adjoint_by_duality(const ComplexForm<R>& alpha);

template <class R>
struct AdjointIdentityReport {
  R lhs{0};                  // ||T* alpha||^2
  Complex<R> rhs{0};         // the eight-term expansion
  Complex<R> discrepancy{0}; // lhs - rhs
  std::vector<Complex<R>> terms;  // the eight terms, in order
  bool adjoint_consistent = true; // direct and duality adjoints agree
};

// Reported, never asserted: compares ||T* alpha||^2 with
//   ||a||^2 + ||ddbar a||^2 - ||d a||^2 - ||dbar a||^2
//   - sum ||d^2 a_ij / dz_k dzbar_l||^2
//   + sum <d^2 a_ij / dz_k dzbar_l, d^2 a_il / dz_k dzbar_j + d^2 a_kj / dz_i dzbar_l>
//   + sum ||d a_il / dz_k||^2 + sum ||d a_kj / dzbar_l||^2.
template <class R>
AdjointIdentityReport<R> ddbar_adjoint_identity_report(const ComplexForm<R>& alpha,
                                                       double tol = 1e-12);

struct ConjugationFlags {
  bool partial_of_conjugate = true;  // partial(conj u) = conj(dbar u)
  bool dbar_partial_anticommutes = true;  // dbar(partial u) = -ddbar u
  bool ddbar_is_partial_of_dbar = true;   // ddbar u = partial(dbar u)
  bool all() const {
    return partial_of_conjugate && dbar_partial_anticommutes && ddbar_is_partial_of_dbar;
  }
};

template <class R>
ConjugationFlags conjugation_identities_check(const ComplexField<R>& u, double tol = 1e-12);

// d u on R^{2n} equals partial u + dbar u after frame conversion.
template <class R>
bool frame_consistency_check(const ComplexField<R>& u, double tol = 1e-12);

template <class R>
struct ConversionReport {
  bool polynomial_identity = true;  // coefficient-exact (relative in float mode)
  bool sampled_identity = true;     // at every supplied point
  IdentityCheck<R> integrated;      // ||f1||^2 + ||f2||^2 against 4 ||f||^2
  double worst_sample_error = 0.0;
};

// |f1|^2 + |f2|^2 = 4 |f|^2 for f = f1 + i f2.
template <class R>
ConversionReport<R> decomposition_norm_report(const ComplexForm<R>& f,
                                              const std::vector<std::vector<R>>& points,
                                              double tol = 1e-12);

// |v10|^2 = |v01|^2 = |v|^2 / 4 for a real 1-form v on R^{2n}.
template <class R>
ConversionReport<R> split_norm_report(const PForm<R>& v, const std::vector<std::vector<R>>& points,
                                      double tol = 1e-12);

}  // namespace gauss_hodge
