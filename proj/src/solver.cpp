#include "gauss_hodge/solver.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "gauss_hodge/errors.hpp"

namespace gauss_hodge {

bool within_bound(const Rational& ratio, const Rational& bound) { return ratio <= bound; }
bool within_bound(double ratio, double bound) { return ratio <= bound * (1.0 + 1e-12); }

namespace {

using Weights = std::vector<int>;

template <class S, class Key>
struct BlockProblem {
  std::function<Weights(const Key&)> weight_of;
  std::function<std::vector<Key>(const Weights&)> members;
  std::function<std::map<Key, S>(const Key&)> apply;
  std::function<RealOf<S>(const Key&)> gram;
  std::function<int(const Key&)> level;  // total degree, for error messages
};

// Reduced row echelon solve of a square system; free variables are set to
// zero.  Empty result when b is outside the column space.
template <class S>
std::optional<std::vector<S>> eliminate(std::vector<std::vector<S>> a, std::vector<S> b) {
  const int n = static_cast<int>(b.size());
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (!is_zero(a[r][col])) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[row], a[piv]);
    std::swap(b[row], b[piv]);
    const S inv = S(1) / a[row][col];
    for (int c = col; c < n; ++c) a[row][c] *= inv;
    b[row] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == row || is_zero(a[r][col])) continue;
      const S factor = a[r][col];
      for (int c = col; c < n; ++c) a[r][c] -= factor * a[row][c];
      b[r] -= factor * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int r = row; r < n; ++r)
    if (!is_zero(b[r])) return std::nullopt;
  std::vector<S> x(static_cast<std::size_t>(n), S(0));
  for (int r = 0; r < row; ++r) x[pivot_col[r]] = b[r];
  return x;
}

template <class S>
double gram_dot(const std::vector<S>& x, const std::vector<S>& y, const std::vector<double>& g) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += g[i] * real_part(x[i] * conj(y[i]));
  return acc;
}

// CG for A x = b where A is self-adjoint and positive semidefinite in the
// inner product <x, y> = sum g_i x_i conj(y_i).
template <class S>
std::vector<S> conjugate_gradient(const std::vector<std::vector<S>>& a, const std::vector<S>& b,
                                  const std::vector<double>& g, const SolveOptions& opts,
                                  int level) {
  const std::size_t n = b.size();
  std::vector<S> x(n, S(0)), r = b, p = b, ap(n);
  double rr = gram_dot(r, r, g);
  const double bnorm = std::sqrt(rr);
  if (bnorm == 0.0) return x;
  const int cap = 10 * static_cast<int>(n);
  for (int it = 0; it < cap && std::sqrt(rr) > opts.cg_tolerance * bnorm; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      S acc(0);
      for (std::size_t j = 0; j < n; ++j) acc += a[i][j] * p[j];
      ap[i] = acc;
    }
    const double pap = gram_dot(ap, p, g);
    if (!(pap > 0.0)) break;
    const double alpha = rr / pap;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += S(alpha) * p[i];
      r[i] -= S(alpha) * ap[i];
    }
    const double rr_next = gram_dot(r, r, g);
    const double beta = rr_next / rr;
    rr = rr_next;
    for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + S(beta) * p[i];
  }
  if (std::sqrt(rr) > opts.tolerance * bnorm)
    throw NumericalFailure(level, "conjugate gradients stalled at relative residual " +
                                      std::to_string(std::sqrt(rr) / bnorm));
  return x;
}

template <class S, class Key>
std::map<Key, S> solve_blocks(const std::map<Key, S>& rhs, const BlockProblem<S, Key>& prob,
                              const SolveOptions& opts, int& blocks) {
  std::map<Weights, std::vector<std::pair<Key, S>>> grouped;
  for (const auto& [key, value] : rhs) grouped[prob.weight_of(key)].emplace_back(key, value);

  std::map<Key, S> solution;
  for (const auto& [weights, entries] : grouped) {
    const auto keys = prob.members(weights);
    const int level = prob.level(keys.front());
    std::map<Key, int> slot;
    for (std::size_t i = 0; i < keys.size(); ++i) slot.emplace(keys[i], static_cast<int>(i));
    const std::size_t dim = keys.size();

    std::vector<std::vector<S>> a(dim, std::vector<S>(dim, S(0)));
    for (std::size_t col = 0; col < dim; ++col) {
      for (const auto& [key, value] : prob.apply(keys[col])) {
        auto it = slot.find(key);
        if (it == slot.end())
          throw InvariantViolation("normal operator", "image leaves its weight block at level " +
                                                          std::to_string(level));
        a[it->second][col] = value;
      }
    }
    std::vector<S> b(dim, S(0));
    for (const auto& [key, value] : entries) {
      auto it = slot.find(key);
      if (it == slot.end())
        throw InvariantViolation("normal equations", "right-hand side term outside its block");
      b[it->second] = value;
    }

    std::vector<S> x;
    if constexpr (is_exact_v<S>) {
      auto sol = eliminate(std::move(a), std::move(b));
      if (!sol)
        throw InvariantViolation("normal equations", "closed input has no block solution at level " +
                                                         std::to_string(level));
      x = std::move(*sol);
    } else {
      std::vector<double> g(dim);
      for (std::size_t i = 0; i < dim; ++i) g[i] = to_double(prob.gram(keys[i]));
      x = conjugate_gradient(a, b, g, opts, level);
    }
    for (std::size_t i = 0; i < dim; ++i)
      if (!is_zero(x[i])) solution.emplace(keys[i], x[i]);
    ++blocks;
  }
  return solution;
}

template <class R>
bool small_relative(const R& num_sq, const R& den_sq, double tol) {
  if constexpr (std::is_same_v<R, Rational>) {
    (void)den_sq;
    (void)tol;
    return sgn(num_sq) == 0;
  } else {
    return std::sqrt(num_sq) <= tol * std::sqrt(den_sq);
  }
}

template <class R>
void finish_report(SolveReport<R>& rep) {
  if (is_zero(rep.input_norm_sq))
    rep.ratio = R(0);
  else
    rep.ratio = rep.output_norm_sq / rep.input_norm_sq;
  rep.bound_satisfied = within_bound(rep.ratio, rep.bound_constant);
}

// --- real solve ----------------------------------------------------------

using FormKey = std::pair<MultiIndex, Degree>;

Weights form_weight(const FormKey& key) {
  Weights w = key.second;
  for (int j : key.first.axes()) ++w[j - 1];
  return w;
}

std::vector<FormKey> form_block(int n, int q, const Weights& w) {
  std::vector<FormKey> out;
  for (const auto& J : enumerate_indices(n, q)) {
    Degree k = w;
    bool ok = true;
    for (int j : J.axes()) ok = ok && --k[j - 1] >= 0;
    if (ok) out.emplace_back(J, std::move(k));
  }
  return out;
}

template <class S>
std::map<FormKey, S> flatten(const PForm<S>& f) {
  std::map<FormKey, S> out;
  for (const auto& [I, field] : f.components())
    for (const auto& [k, c] : field.coeffs()) out.emplace(FormKey(I, k), c);
  return out;
}

template <class S>
PForm<S> d_normal_apply(const FormKey& key, int n, const Weight& w) {
  const int cap = total_degree(key.second) + 1;
  auto beta = PForm<S>::basis(n, cap, key.first, key.second);
  return exterior_d(codifferential(beta, w));
}

// --- complex solve -------------------------------------------------------

using SlotKey = std::pair<int, Degree>;

Weights pair_weight(const SlotKey& key) {
  const int n = static_cast<int>(key.second.size()) / 2;
  Weights w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[i] = key.second[2 * i] + key.second[2 * i + 1];
  ++w[key.first - 1];
  return w;
}

std::vector<SlotKey> pair_block(const Weights& w) {
  const int n = static_cast<int>(w.size());
  std::vector<SlotKey> out;
  for (int j = 1; j <= n; ++j) {
    if (w[j - 1] < 1) continue;
    Weights s = w;
    --s[j - 1];
    Degree k(static_cast<std::size_t>(2 * n), 0);
    auto rec = [&](auto&& self, int pair) -> void {
      if (pair == n) {
        out.emplace_back(j, k);
        return;
      }
      for (int a = 0; a <= s[pair]; ++a) {
        k[2 * pair] = a;
        k[2 * pair + 1] = s[pair] - a;
        self(self, pair + 1);
      }
    };
    rec(rec, 0);
  }
  return out;
}

template <class R>
std::map<SlotKey, Complex<R>> flatten01(const ComplexForm<R>& g) {
  std::map<SlotKey, Complex<R>> out;
  for (int j = 1; j <= g.n(); ++j) {
    const auto gj = g.coefficient(j);
    for (const auto& [k, c] : gj.coeffs()) out.emplace(SlotKey(j, k), c);
  }
  return out;
}

template <class R>
ComplexForm<R> dbar_normal_apply(const SlotKey& key, int n, const Weight& w) {
  const int cap = total_degree(key.second) + 1;
  ComplexForm<R> beta(n, 0, 1, cap);
  beta.set_coefficient(key.first, ComplexField<R>::basis(2 * n, cap, key.second));
  return dbar_function(dbar_adjoint(beta, w));
}

}  // namespace

template <class R>
DSolution<R> solve_d_min_norm(const PForm<R>& f, const Weight& w, const SolveOptions& opts) {
  const int n = f.dim();
  const int q = f.degree();
  if (q < 1) throw std::invalid_argument("d-solve needs a form of degree >= 1");
  if (w.dim() != n) throw std::invalid_argument("weight and form dimensions differ");

  DSolution<R> out{PForm<R>(n, q - 1, f.capacity()), PForm<R>(n, q, f.capacity()), {}};
  auto& rep = out.report;
  rep.bound_constant = R(1) / R(w.convexity_constant() * q);
  if (f.is_zero()) return out;

  const int deg = f.total_degree();
  if (deg + 1 > f.capacity()) throw DegreeOverflow(deg + 1, f.capacity());

  rep.input_norm_sq = norm_sq(f);
  const auto df = exterior_d(f);
  const R df_sq = norm_sq(df);
  if (!small_relative(df_sq, rep.input_norm_sq, opts.tolerance))
    throw PreconditionError("input form is not closed: ||df||^2 = " + format_real(df_sq),
                            format_real(df_sq));

  BlockProblem<R, FormKey> prob;
  prob.weight_of = form_weight;
  prob.members = [n, q](const Weights& wt) { return form_block(n, q, wt); };
  prob.apply = [n, &w](const FormKey& key) { return flatten(d_normal_apply<R>(key, n, w)); };
  prob.gram = [](const FormKey& key) { return basis_norm_sq<R>(key.second); };
  prob.level = [](const FormKey& key) { return total_degree(key.second); };

  for (const auto& [key, c] : solve_blocks(flatten(f), prob, opts, rep.blocks_solved))
    out.beta.add_to_component(key.first, ScalarField<R>::basis(n, f.capacity(), key.second, c));

  out.u = codifferential(out.beta, w);
  rep.output_norm_sq = norm_sq(out.u);
  rep.residual_sq = norm_sq(exterior_d(out.u) - f);
  if constexpr (std::is_same_v<R, Rational>) {
    if (sgn(rep.residual_sq) != 0)
      throw InvariantViolation("d-solve", "nonzero exact residual " + format_real(rep.residual_sq));
  }
  finish_report(rep);
  return out;
}

template <class R>
DbarSolution<R> solve_dbar_min_norm(const ComplexForm<R>& g, const Weight& w,
                                    const SolveOptions& opts) {
  if (g.p() != 0 || g.q() != 1) throw std::invalid_argument("dbar-solve needs a (0,1)-form");
  const int n = g.n();
  if (w.dim() != 2 * n) throw std::invalid_argument("weight must live on R^{2n}");

  DbarSolution<R> out{ComplexField<R>(2 * n, g.capacity()), ComplexForm<R>(n, 0, 1, g.capacity()),
                      {}};
  auto& rep = out.report;
  rep.bound_constant = R(2);
  if (g.is_zero()) return out;

  const int deg = g.total_degree();
  if (deg + 1 > g.capacity()) throw DegreeOverflow(deg + 1, g.capacity());

  rep.input_norm_sq = norm_sq(g);
  if (n >= 2) {
    const R dg_sq = norm_sq(dbar(g));
    if (!small_relative(dg_sq, rep.input_norm_sq, opts.tolerance))
      throw PreconditionError("input form is not dbar-closed: ||dbar g||^2 = " + format_real(dg_sq),
                              format_real(dg_sq));
  }

  using C = Complex<R>;
  BlockProblem<C, SlotKey> prob;
  prob.weight_of = pair_weight;
  prob.members = pair_block;
  prob.apply = [n, &w](const SlotKey& key) { return flatten01(dbar_normal_apply<R>(key, n, w)); };
  prob.gram = [](const SlotKey& key) { return basis_norm_sq<R>(key.second); };
  prob.level = [](const SlotKey& key) { return total_degree(key.second); };

  for (const auto& [key, c] : solve_blocks(flatten01(g), prob, opts, rep.blocks_solved)) {
    auto f = out.beta.coefficient(key.first);
    f.add_term(key.second, c);
    out.beta.set_coefficient(key.first, f);
  }

  out.u = dbar_adjoint(out.beta, w);
  rep.output_norm_sq = norm_sq(out.u);
  rep.residual_sq = norm_sq(dbar_function(out.u) - g);
  if constexpr (std::is_same_v<R, Rational>) {
    if (sgn(rep.residual_sq) != 0)
      throw InvariantViolation("dbar-solve", "nonzero exact residual " + format_real(rep.residual_sq));
  }
  finish_report(rep);
  return out;
}

LeakageReport d_normal_leakage(int n, int form_degree, int level) {
  LeakageReport rep;
  const Weight w(n);
  for (const auto& J : enumerate_indices(n, form_degree)) {
    for (const auto& k : degrees_of_total(n, level)) {
      const FormKey key(J, k);
      const auto wt = form_weight(key);
      ++rep.basis_elements;
      for (const auto& [out_key, c] : flatten(d_normal_apply<Rational>(key, n, w))) {
        if (total_degree(out_key.second) != level) ++rep.leaked_terms;
        if (form_weight(out_key) != wt) ++rep.weight_leaked_terms;
      }
    }
  }
  return rep;
}

LeakageReport dbar_normal_leakage(int n, int level) {
  LeakageReport rep;
  const Weight w(2 * n);
  for (int j = 1; j <= n; ++j) {
    for (const auto& k : degrees_of_total(2 * n, level)) {
      const SlotKey key(j, k);
      const auto wt = pair_weight(key);
      ++rep.basis_elements;
      for (const auto& [out_key, c] : flatten01(dbar_normal_apply<Rational>(key, n, w))) {
        if (total_degree(out_key.second) != level) ++rep.leaked_terms;
        if (pair_weight(out_key) != wt) ++rep.weight_leaked_terms;
      }
    }
  }
  return rep;
}

template DSolution<Rational> solve_d_min_norm(const PForm<Rational>&, const Weight&,
                                              const SolveOptions&);
template DSolution<double> solve_d_min_norm(const PForm<double>&, const Weight&,
                                            const SolveOptions&);
template DbarSolution<Rational> solve_dbar_min_norm(const ComplexForm<Rational>&, const Weight&,
                                                    const SolveOptions&);
template DbarSolution<double> solve_dbar_min_norm(const ComplexForm<double>&, const Weight&,
                                                  const SolveOptions&);

}  // namespace gauss_hodge
