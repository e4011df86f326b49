#include "gauss_hodge/bridge.hpp"

#include <cmath>
#include <stdexcept>

#include "gauss_hodge/errors.hpp"

namespace gauss_hodge {

namespace {

int x_axis(int i) { return 2 * i - 1; }
int y_axis(int i) { return 2 * i; }

// Adds c dx_a ^ dx_b for distinct axes a, b in either order.
template <class R>
void add_wedge(PForm<R>& out, int a, int b, const ScalarField<R>& c) {
  if (c.is_zero()) return;
  const int n = out.dim();
  if (a < b)
    out.add_to_component(MultiIndex(n, {a, b}), c);
  else
    out.add_to_component(MultiIndex(n, {b, a}), -c);
}

template <class R>
bool negligible(const R& value_sq, const R& scale_sq, double tol) {
  if constexpr (std::is_same_v<R, Rational>) {
    (void)scale_sq;
    (void)tol;
    return sgn(value_sq) == 0;
  } else {
    return std::sqrt(value_sq) <= tol * std::sqrt(scale_sq);
  }
}

template <class R>
StageCheck<R> check_stage(std::string stage, R value, R reference, R constant) {
  StageCheck<R> s{std::move(stage), std::move(value), std::move(reference), std::move(constant),
                  true};
  s.pass = within_bound(s.value, s.constant * s.reference);
  if (!s.pass)
    throw InvariantViolation(s.stage, "||.||^2 = " + format_real(s.value) + " exceeds " +
                                          format_real(s.constant) + " * " +
                                          format_real(s.reference));
  return s;
}

}  // namespace

template <class R>
std::pair<PForm<R>, PForm<R>> decompose_11(const ComplexForm<R>& f) {
  if (f.p() != 1 || f.q() != 1) throw std::invalid_argument("decompose_11 needs a (1,1)-form");
  const int n = f.n();
  const int m = 2 * n;
  PForm<R> f1(m, 2, f.capacity()), f2(m, 2, f.capacity());
  auto A = [&](int i, int j) { return real_part(f.entry(i, j)); };
  auto B = [&](int i, int j) { return imag_part(f.entry(i, j)); };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const auto a = A(i, j) - A(j, i);
      const auto b = B(i, j) - B(j, i);
      add_wedge(f1, x_axis(i), x_axis(j), a);
      add_wedge(f1, y_axis(i), y_axis(j), a);
      add_wedge(f2, x_axis(i), x_axis(j), b);
      add_wedge(f2, y_axis(i), y_axis(j), b);
    }
    for (int j = 1; j <= n; ++j) {
      add_wedge(f1, x_axis(i), y_axis(j), B(i, j) + B(j, i));
      add_wedge(f2, x_axis(i), y_axis(j), -(A(i, j) + A(j, i)));
    }
  }
  return {std::move(f1), std::move(f2)};
}

template <class R>
ComplexForm<R> recompose_11(const PForm<R>& f1, const PForm<R>& f2) {
  auto whole = to_complex(f1) + to_complex(f2) * Complex<R>::i();
  return from_real_frame(whole, 1, 1);
}

template <class R>
std::pair<ComplexForm<R>, ComplexForm<R>> split_bidegree(const PForm<Complex<R>>& v) {
  if (v.degree() != 1) throw std::invalid_argument("split_bidegree needs a 1-form");
  if (v.dim() % 2 != 0) throw std::invalid_argument("split_bidegree needs an even dimension");
  using C = Complex<R>;
  const int n = v.dim() / 2;
  const int m = v.dim();
  ComplexForm<R> v10(n, 1, 0, v.capacity()), v01(n, 0, 1, v.capacity());
  const C half(ratio<R>(1, 2));
  const C half_i(R(0), ratio<R>(1, 2));
  for (int j = 1; j <= n; ++j) {
    const auto vx = v.component(MultiIndex(m, {x_axis(j)}));
    const auto vy = v.component(MultiIndex(m, {y_axis(j)}));
    v10.set_coefficient(j, vx * half - vy * half_i);
    v01.set_coefficient(j, vx * half + vy * half_i);
  }
  return {std::move(v10), std::move(v01)};
}

template <class R>
LelongSolution<R> solve_poincare_lelong(const ComplexForm<R>& f, const SolveOptions& opts) {
  if (f.p() != 1 || f.q() != 1) throw std::invalid_argument("the pipeline needs a (1,1)-form");
  const int n = f.n();
  const int cap = f.capacity();
  LelongSolution<R> out{ComplexField<R>(2 * n, cap), {}};
  auto& rep = out.report;
  rep.summary.bound_constant = R(2);
  for (auto& s : rep.d_solves) s.bound_constant = ratio<R>(1, 4);
  for (auto& s : rep.dbar_solves) s.bound_constant = R(2);
  if (f.is_zero()) return out;

  const int deg = f.total_degree();
  if (deg + 2 > cap) throw DegreeOverflow(deg + 2, cap);

  rep.summary.input_norm_sq = norm_sq(f);
  const auto [f1, f2] = decompose_11(f);
  rep.closedness_sq = norm_sq(exterior_d(f1)) + norm_sq(exterior_d(f2));
  if (!negligible(rep.closedness_sq, rep.summary.input_norm_sq, opts.tolerance))
    throw PreconditionError("input (1,1)-form is not closed: ||d f1||^2 + ||d f2||^2 = " +
                                format_real(rep.closedness_sq),
                            format_real(rep.closedness_sq));

  const Weight real_weight(2 * n);
  const PForm<R>* parts[2] = {&f1, &f2};
  ComplexField<R> branch[2];
  for (int k = 0; k < 2; ++k) {
    const std::string tag = std::to_string(k + 1);
    const PForm<R>& fk = *parts[k];
    branch[k] = ComplexField<R>(2 * n, cap);
    if (fk.is_zero()) continue;
    const R fk_sq = norm_sq(fk);

    auto dsol = solve_d_min_norm(fk, real_weight, opts);
    rep.d_solves[k] = dsol.report;
    rep.stages.push_back(
        check_stage("d_solve_" + tag, dsol.report.output_norm_sq, fk_sq, ratio<R>(1, 4)));

    auto [v10, v01] = split_bidegree(to_complex(dsol.u));
    const R defect = norm_sq(partial(v10)) + norm_sq(dbar(v01));
    rep.type_defect_sq += defect;
    if (!negligible(defect, dsol.report.output_norm_sq, opts.tolerance))
      throw InvariantViolation("type_split_" + tag,
                               "v10 or v01 is not of pure type: " + format_real(defect));

    auto usol = solve_dbar_min_norm(v01, real_weight, opts);
    rep.dbar_solves[k] = usol.report;
    const R v01_sq = norm_sq(v01);
    rep.stages.push_back(
        check_stage("dbar_solve_" + tag, usol.report.output_norm_sq, v01_sq, R(2)));

    branch[k] = usol.u - conj(usol.u);
    const R w_sq = norm_sq(branch[k]);
    rep.stages.push_back(
        check_stage("antisymmetrize_" + tag, w_sq, usol.report.output_norm_sq, R(4)));
    rep.stages.push_back(check_stage("branch_" + tag, w_sq, fk_sq, ratio<R>(1, 2)));
  }

  out.u = branch[0] + branch[1] * Complex<R>::i();
  rep.summary.output_norm_sq = norm_sq(out.u);
  rep.summary.residual_sq = norm_sq(ddbar(out.u) - f);
  rep.summary.blocks_solved = rep.d_solves[0].blocks_solved + rep.d_solves[1].blocks_solved +
                              rep.dbar_solves[0].blocks_solved + rep.dbar_solves[1].blocks_solved;
  if (!negligible(rep.summary.residual_sq, rep.summary.input_norm_sq, opts.tolerance))
    throw InvariantViolation("final_residual",
                             "ddbar u differs from f by " + format_real(rep.summary.residual_sq));
  rep.summary.ratio = rep.summary.output_norm_sq / rep.summary.input_norm_sq;
  rep.stages.push_back(
      check_stage("final", rep.summary.output_norm_sq, rep.summary.input_norm_sq, R(2)));
  rep.summary.bound_satisfied = true;
  return out;
}

#define GAUSS_HODGE_INSTANTIATE(R)                                                         \
  template std::pair<PForm<R>, PForm<R>> decompose_11(const ComplexForm<R>&);              \
  template ComplexForm<R> recompose_11(const PForm<R>&, const PForm<R>&);                  \
  template std::pair<ComplexForm<R>, ComplexForm<R>> split_bidegree(const PForm<Complex<R>>&); \
  template LelongSolution<R> solve_poincare_lelong(const ComplexForm<R>&, const SolveOptions&);

GAUSS_HODGE_INSTANTIATE(Rational)
GAUSS_HODGE_INSTANTIATE(double)

#undef GAUSS_HODGE_INSTANTIATE

}  // namespace gauss_hodge
