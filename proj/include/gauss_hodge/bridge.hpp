#pragma once

// Conversions between complex (1,1)-forms on C^n and real forms on R^{2n},
// and the ddbar u = f pipeline built on the two minimum-norm solvers.
//
// Coordinates pair as z_i = x_i + i y_i with x_i the axis 2i-1 and y_i the
// axis 2i of R^{2n}.

#include <string>
#include <utility>
#include <vector>

#include "gauss_hodge/calculus.hpp"
#include "gauss_hodge/solver.hpp"

namespace gauss_hodge {

// f = f1 + i f2 with f1, f2 real 2-forms on R^{2n}:
//   f1 = sum_{i<j} (A_ij - A_ji)(dx_i^dx_j + dy_i^dy_j) + sum_{i,j} (B_ij + B_ji) dx_i^dy_j
//   f2 = sum_{i<j} (B_ij - B_ji)(dx_i^dx_j + dy_i^dy_j) - sum_{i,j} (A_ij + A_ji) dx_i^dy_j
// where f_{i jbar} = A_ij + i B_ij.
template <class R>
std::pair<PForm<R>, PForm<R>> decompose_11(const ComplexForm<R>& f);

// The (1,1) part of f1 + i f2.  Inverts decompose_11 on (1,1)-forms.
template <class R>
ComplexForm<R> recompose_11(const PForm<R>& f1, const PForm<R>& f2);

// v = v10 + v01 with v10_j = (v_x - i v_y)/2 and v01_j = (v_x + i v_y)/2.
template <class R>
std::pair<ComplexForm<R>, ComplexForm<R>> split_bidegree(const PForm<Complex<R>>& v);

// One inequality of the pipeline: value <= constant * reference.
template <class R>
struct StageCheck {
  std::string stage;
  R value{0};
  R reference{0};
  R constant{0};
  bool pass = true;
};

template <class R>
struct LelongReport {
  SolveReport<R> summary;  // residual is ||ddbar u - f||^2, bound 2
  SolveReport<R> d_solves[2];
  SolveReport<R> dbar_solves[2];
  std::vector<StageCheck<R>> stages;
  R closedness_sq{0};   // ||d f1||^2 + ||d f2||^2
  R type_defect_sq{0};  // ||partial v10||^2 + ||dbar v01||^2, both branches
};

template <class R>
struct LelongSolution {
  ComplexField<R> u;
  LelongReport<R> report;
};

// Solves ddbar u = f for a d-closed (1,1)-form f.  Throws PreconditionError
// when f is not closed, DegreeOverflow without two degrees of head-room,
// and InvariantViolation if any stage bound or type check fails.
template <class R>
LelongSolution<R> solve_poincare_lelong(const ComplexForm<R>& f, const SolveOptions& opts = {});

}  // namespace gauss_hodge
