#pragma once

// Differential forms with Hermite-expanded coefficients.
//
// PForm<S> is a real-frame p-form sum' f_I dx^I on R^n.  ComplexForm<R> is a
// (p,q)-form sum f_{K L} dz_K ^ dzbar_L on C^n whose coefficients live on
// R^{2n} under z_j = x_{2j-1} + i x_{2j}.  Norms are plain coefficient
// square-sums in both frames.

#include <map>
#include <span>
#include <utility>

#include "gauss_hodge/field.hpp"
#include "gauss_hodge/multiindex.hpp"

namespace gauss_hodge {

template <class S>
class PForm {
 public:
  using Scalar = S;
  using Field = ScalarField<S>;
  using Components = std::map<MultiIndex, Field>;

  PForm() = default;
  // A degree above dim is allowed and denotes the zero space.
  PForm(int dim, int degree, int capacity);

  static PForm basis(int dim, int capacity, const MultiIndex& index, const Degree& k,
                     const S& value = S(1));

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  int capacity() const { return capacity_; }
  bool is_zero() const { return components_.empty(); }
  int total_degree() const;
  const Components& components() const { return components_; }

  Field component(const MultiIndex& index) const;
  // alpha_{jI}: the signed component at (jI)', zero when j is in I.
  Field signed_component(int axis, const MultiIndex& index) const;

  void add_to_component(const MultiIndex& index, const Field& f);
  void set_component(const MultiIndex& index, const Field& f);

  PForm& operator+=(const PForm& other);
  PForm& operator-=(const PForm& other);
  PForm& operator*=(const S& factor);
  friend PForm operator+(PForm a, const PForm& b) { return a += b; }
  friend PForm operator-(PForm a, const PForm& b) { return a -= b; }
  friend PForm operator*(PForm a, const S& f) { return a *= f; }
  friend PForm operator*(const S& f, PForm a) { return a *= f; }
  friend bool operator==(const PForm& a, const PForm& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.components_ == b.components_;
  }

 private:
  void check_index(const MultiIndex& index) const;
  void check_same_space(const PForm& other) const;

  int dim_ = 0;
  int degree_ = 0;
  int capacity_ = 0;
  Components components_;
};

template <class S>
PForm<S> exterior_d(const PForm<S>& u);

// Weighted formal adjoint of d: A_I = -sum_j delta_j alpha_{jI}.
template <class S>
PForm<S> codifferential(const PForm<S>& alpha, const Weight& w);

template <class S>
S inner(const PForm<S>& a, const PForm<S>& b);

template <class S>
RealOf<S> norm_sq(const PForm<S>& a);

// |alpha|^2 as a polynomial field (capacity doubles).
template <class S>
ScalarField<S> pointwise_norm_sq(const PForm<S>& a);

template <class S>
RealOf<S> evaluate_norm_sq(const PForm<S>& a, std::span<const RealOf<S>> point);

template <class S>
PForm<S> conj(const PForm<S>& a);

template <class R>
PForm<R> real_part(const PForm<Complex<R>>& a);

template <class R>
PForm<R> imag_part(const PForm<Complex<R>>& a);

template <class R>
PForm<Complex<R>> to_complex(const PForm<R>& a);

// --- complex frame -------------------------------------------------------

template <class R>
class ComplexForm {
 public:
  using Scalar = Complex<R>;
  using Field = ScalarField<Complex<R>>;
  using Key = std::pair<MultiIndex, MultiIndex>;
  using Components = std::map<Key, Field>;

  ComplexForm() = default;
  ComplexForm(int n, int p, int q, int capacity);

  int n() const { return n_; }
  int p() const { return p_; }
  int q() const { return q_; }
  int capacity() const { return capacity_; }
  int real_dim() const { return 2 * n_; }
  bool is_zero() const { return components_.empty(); }
  int total_degree() const;
  const Components& components() const { return components_; }

  Field component(const MultiIndex& holo, const MultiIndex& anti) const;
  void add_to_component(const MultiIndex& holo, const MultiIndex& anti, const Field& f);

  // (1,1) entries f_{i jbar}; 1-based.
  Field entry(int i, int j) const;
  void set_entry(int i, int j, const Field& f);

  // (1,0) or (0,1) coefficient of dz_j or dzbar_j.
  Field coefficient(int j) const;
  void set_coefficient(int j, const Field& f);

  ComplexForm& operator+=(const ComplexForm& other);
  ComplexForm& operator-=(const ComplexForm& other);
  ComplexForm& operator*=(const Scalar& factor);
  friend ComplexForm operator+(ComplexForm a, const ComplexForm& b) { return a += b; }
  friend ComplexForm operator-(ComplexForm a, const ComplexForm& b) { return a -= b; }
  friend ComplexForm operator*(ComplexForm a, const Scalar& f) { return a *= f; }
  friend ComplexForm operator*(const Scalar& f, ComplexForm a) { return a *= f; }
  friend bool operator==(const ComplexForm& a, const ComplexForm& b) {
    return a.n_ == b.n_ && a.p_ == b.p_ && a.q_ == b.q_ && a.components_ == b.components_;
  }

 private:
  void check_same_space(const ComplexForm& other) const;

  int n_ = 0;
  int p_ = 0;
  int q_ = 0;
  int capacity_ = 0;
  Components components_;
};

template <class R>
using ComplexField = ScalarField<Complex<R>>;

// d/dz_j = 1/2 (d/dx_{2j-1} - i d/dx_{2j}).
template <class R>
ComplexField<R> wirtinger_z(const ComplexField<R>& u, int j);

// d/dzbar_j = 1/2 (d/dx_{2j-1} + i d/dx_{2j}).
template <class R>
ComplexField<R> wirtinger_zbar(const ComplexField<R>& u, int j);

// Multiplication by z_j or zbar_j.
template <class R>
ComplexField<R> multiply_by_z(const ComplexField<R>& u, int j);
template <class R>
ComplexField<R> multiply_by_zbar(const ComplexField<R>& u, int j);

// A function viewed as a (0,0)-form on C^n (the field lives on R^{2n}).
template <class R>
ComplexForm<R> as_function_form(const ComplexField<R>& u);

template <class R>
ComplexForm<R> dbar_function(const ComplexField<R>& u);

template <class R>
ComplexForm<R> partial_function(const ComplexField<R>& u);

// Entry (i, j) = d^2 u / dz_i dzbar_j.
template <class R>
ComplexForm<R> ddbar(const ComplexField<R>& u);

// (p,q) -> (p+1,q): sum_k d/dz_k f dz_k ^ (...).
template <class R>
ComplexForm<R> partial(const ComplexForm<R>& f);

// (p,q) -> (p,q+1): sum_l d/dzbar_l f dzbar_l ^ (...).
template <class R>
ComplexForm<R> dbar(const ComplexForm<R>& f);

// dbar* g = -sum_j (d g_j / dz_j - zbar_j g_j) for a (0,1)-form g.
template <class R>
ComplexField<R> dbar_adjoint(const ComplexForm<R>& g, const Weight& w);

// (p,q) -> (q,p).
template <class R>
ComplexForm<R> conj(const ComplexForm<R>& f);

template <class R>
Complex<R> inner(const ComplexForm<R>& a, const ComplexForm<R>& b);

template <class R>
R norm_sq(const ComplexForm<R>& f);

template <class R>
ScalarField<Complex<R>> pointwise_norm_sq(const ComplexForm<R>& f);

// Expands dz_k = dx_{2k-1} + i dx_{2k}, dzbar_k = dx_{2k-1} - i dx_{2k}.
template <class R>
PForm<Complex<R>> to_real_frame(const ComplexForm<R>& f);

// The (p,q) part of a real-frame (p+q)-form, read off by evaluating it on
// the frame vectors d/dz_K, d/dzbar_L.
template <class R>
ComplexForm<R> from_real_frame(const PForm<Complex<R>>& form, int p, int q);

}  // namespace gauss_hodge
