#pragma once

// Minimum-norm solves of du = f on R^n and dbar u = g on C^n.
//
// Both go through the normal equations: find beta with N beta = f where N
// is d T* (resp. dbar dbar*), then return u = T* beta.  N commutes with the
// per-axis (resp. per-coordinate-pair) Hermite weight, so it splits into
// small independent blocks.  Exact mode eliminates each block over the
// rationals; float mode runs conjugate gradients in the weighted inner
// product.

#include <map>
#include <utility>
#include <vector>

#include "gauss_hodge/calculus.hpp"

namespace gauss_hodge {

template <class R>
struct SolveReport {
  R residual_sq{0};  // ||du - f||^2
  R input_norm_sq{0};
  R output_norm_sq{0};
  R bound_constant{0};
  R ratio{0};
  bool bound_satisfied = true;
  int blocks_solved = 0;
};

struct SolveOptions {
  // Relative tolerance for closedness and residual checks in float mode.
  double tolerance = 1e-10;
  // Float-mode CG stopping tolerance, relative to the block right-hand side.
  double cg_tolerance = 1e-13;
};

template <class R>
struct DSolution {
  PForm<R> u;
  PForm<R> beta;
  SolveReport<R> report;
};

template <class R>
struct DbarSolution {
  ComplexField<R> u;
  ComplexForm<R> beta;
  SolveReport<R> report;
};

// Solves du = f for a closed (p+1)-form f, p >= 0.  Throws
// PreconditionError if f is not closed, DegreeOverflow if the capacity of f
// leaves no room for u, NumericalFailure if a float block stalls.
template <class R>
DSolution<R> solve_d_min_norm(const PForm<R>& f, const Weight& w,
                              const SolveOptions& opts = {});

// Solves dbar u = g for a dbar-closed (0,1)-form g.
template <class R>
DbarSolution<R> solve_dbar_min_norm(const ComplexForm<R>& g, const Weight& w,
                                    const SolveOptions& opts = {});

// Bound test used by every report: exact comparison for rationals,
// ratio <= bound (1 + 1e-12) for doubles.
bool within_bound(const Rational& ratio, const Rational& bound);
bool within_bound(double ratio, double bound);

// Leakage of the normal operators out of a total-degree level: applies the
// operator to every basis element of total degree `level` and counts output
// coefficients at any other total degree.
struct LeakageReport {
  long basis_elements = 0;
  long leaked_terms = 0;
  long weight_leaked_terms = 0;  // outputs leaving the finer weight block
};

LeakageReport d_normal_leakage(int n, int form_degree, int level);
LeakageReport dbar_normal_leakage(int n, int level);

}  // namespace gauss_hodge
