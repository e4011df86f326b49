#pragma once

// Scalar fields on R^m stored as sparse tensor-product Hermite expansions
//   F = sum_k c_k H_{k_1}(x_1) ... H_{k_m}(x_m),   |k| <= capacity.
//
// Axes are 1-based.  Inner products use the normalized Gaussian measure
// pi^{-m/2} e^{-|x|^2} dx, which rescales every quantity in an identity or
// a norm bound by the same factor pi^{m/2} and keeps all moments rational.

#include <map>
#include <span>
#include <vector>

#include "gauss_hodge/hermite.hpp"
#include "gauss_hodge/scalar.hpp"

namespace gauss_hodge {

// Per-axis Hermite degrees (k_1, ..., k_m).
using Degree = std::vector<int>;

int total_degree(const Degree& k);

// All degree vectors of length m with the given total, lexicographic.
std::vector<Degree> degrees_of_total(int m, int total);

// Product of 1-D Hermite norms 2^k k!, the weighted norm^2 of H_k.
template <class R>
R basis_norm_sq(const Degree& k);

template <class S>
class ScalarField {
 public:
  using Scalar = S;
  using Real = RealOf<S>;
  using Coeffs = std::map<Degree, S>;

  ScalarField() = default;
  ScalarField(int dim, int capacity);

  static ScalarField constant(int dim, int capacity, const S& value);
  static ScalarField basis(int dim, int capacity, const Degree& k, const S& value = S(1));
  // The coordinate function x_axis = 1/2 H_1(x_axis).
  static ScalarField coordinate(int dim, int capacity, int axis);

  int dim() const { return dim_; }
  int capacity() const { return capacity_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Largest stored |k|, or -1 for the zero field.
  int total_degree() const;
  const Coeffs& coeffs() const { return coeffs_; }
  S coefficient(const Degree& k) const;

  // Accumulates value * H_k; throws DegreeOverflow if |k| > capacity.
  void add_term(const Degree& k, const S& value);

  // Same field with another capacity; throws DegreeOverflow if it no
  // longer fits.
  ScalarField with_capacity(int capacity) const;

  ScalarField& operator+=(const ScalarField& other);
  ScalarField& operator-=(const ScalarField& other);
  ScalarField& operator*=(const S& factor);
  friend ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
  friend ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
  friend ScalarField operator*(ScalarField a, const S& f) { return a *= f; }
  friend ScalarField operator*(const S& f, ScalarField a) { return a *= f; }
  friend ScalarField operator-(ScalarField a) { return a *= S(-1); }
  friend bool operator==(const ScalarField& a, const ScalarField& b) {
    return a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_compatible(const ScalarField& other) const;

  int dim_ = 0;
  int capacity_ = 0;
  Coeffs coeffs_;
};

// The convexity data of phi(x) = |x|^2: gradient 2x, Hessian 2 Id, c = 2.
class Weight {
 public:
  explicit Weight(int dim);

  int dim() const { return dim_; }
  int hessian(int j, int k) const;
  int convexity_constant() const { return 2; }

  template <class R>
  R value(std::span<const R> x) const {
    R acc(0);
    for (const auto& xi : x) acc += xi * xi;
    return acc;
  }

  // (d phi / d x_axis) * F = 2 x_axis F.
  template <class S>
  ScalarField<S> gradient_times(const ScalarField<S>& f, int axis) const;

 private:
  int dim_;
};

template <class S>
ScalarField<S> partial_derivative(const ScalarField<S>& f, int axis);

// delta_j F = dF/dx_j - 2 x_j F, raising the degree along axis j.
template <class S>
ScalarField<S> apply_delta_axis(const ScalarField<S>& f, int axis, const Weight& w);

template <class S>
ScalarField<S> multiply_by_coordinate(const ScalarField<S>& f, int axis);

// <F, G> = integral of F conj(G) under the normalized Gaussian measure.
template <class S>
S weighted_inner(const ScalarField<S>& f, const ScalarField<S>& g);

template <class S>
RealOf<S> norm_sq(const ScalarField<S>& f);

template <class S>
S evaluate_field(const ScalarField<S>& f, std::span<const RealOf<S>> point);

// Pointwise product; the result capacity is the sum of the capacities.
template <class S>
ScalarField<S> multiply(const ScalarField<S>& f, const ScalarField<S>& g);

template <class S>
ScalarField<S> conj(const ScalarField<S>& f);

template <class R>
ScalarField<R> real_part(const ScalarField<Complex<R>>& f);

template <class R>
ScalarField<R> imag_part(const ScalarField<Complex<R>>& f);

template <class R>
ScalarField<Complex<R>> to_complex(const ScalarField<R>& f);

}  // namespace gauss_hodge
