#include "gauss_hodge/calculus.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gauss_hodge/errors.hpp"

namespace gauss_hodge {

// --- PForm ---------------------------------------------------------------

template <class S>
PForm<S>::PForm(int dim, int degree, int capacity)
    : dim_(dim), degree_(degree), capacity_(capacity) {
  if (dim < 1) throw std::invalid_argument("form dimension must be positive");
  if (degree < 0) throw std::invalid_argument("form degree must be non-negative");
}

template <class S>
PForm<S> PForm<S>::basis(int dim, int capacity, const MultiIndex& index, const Degree& k,
                         const S& value) {
  PForm f(dim, index.size(), capacity);
  f.add_to_component(index, Field::basis(dim, capacity, k, value));
  return f;
}

template <class S>
int PForm<S>::total_degree() const {
  int top = -1;
  for (const auto& [I, f] : components_) top = std::max(top, f.total_degree());
  return top;
}

template <class S>
void PForm<S>::check_index(const MultiIndex& index) const {
  if (index.dim() != dim_ || index.size() != degree_)
    throw std::invalid_argument("index " + index.to_string() + " does not fit a " +
                                std::to_string(degree_) + "-form on R^" + std::to_string(dim_));
}

template <class S>
void PForm<S>::check_same_space(const PForm& other) const {
  if (dim_ != other.dim_ || degree_ != other.degree_)
    throw std::invalid_argument("forms live in different spaces");
}

template <class S>
typename PForm<S>::Field PForm<S>::component(const MultiIndex& index) const {
  auto it = components_.find(index);
  return it == components_.end() ? Field(dim_, capacity_) : it->second;
}

template <class S>
typename PForm<S>::Field PForm<S>::signed_component(int axis, const MultiIndex& index) const {
  auto ins = insert_axis(axis, index);
  if (!ins) return Field(dim_, capacity_);
  return component(ins->index) * S(ins->sign);
}

template <class S>
void PForm<S>::add_to_component(const MultiIndex& index, const Field& f) {
  check_index(index);
  if (f.dim() != dim_) throw std::invalid_argument("component field has the wrong dimension");
  if (f.is_zero()) return;
  auto it = components_.find(index);
  if (it == components_.end()) {
    components_.emplace(index, f.with_capacity(capacity_));
    return;
  }
  it->second += f;
  it->second = it->second.with_capacity(capacity_);
  if (it->second.is_zero()) components_.erase(it);
}

template <class S>
void PForm<S>::set_component(const MultiIndex& index, const Field& f) {
  check_index(index);
  components_.erase(index);
  add_to_component(index, f);
}

template <class S>
PForm<S>& PForm<S>::operator+=(const PForm& other) {
  check_same_space(other);
  capacity_ = std::max(capacity_, other.capacity_);
  for (const auto& [I, f] : other.components_) add_to_component(I, f);
  return *this;
}

template <class S>
PForm<S>& PForm<S>::operator-=(const PForm& other) {
  check_same_space(other);
  capacity_ = std::max(capacity_, other.capacity_);
  for (const auto& [I, f] : other.components_) add_to_component(I, -f);
  return *this;
}

template <class S>
PForm<S>& PForm<S>::operator*=(const S& factor) {
  for (auto it = components_.begin(); it != components_.end();) {
    it->second *= factor;
    if (it->second.is_zero())
      it = components_.erase(it);
    else
      ++it;
  }
  return *this;
}

template <class S>
PForm<S> exterior_d(const PForm<S>& u) {
  const int n = u.dim();
  PForm<S> out(n, u.degree() + 1, u.capacity());
  if (u.degree() >= n) return out;
  // Component M collects sum_{j in M} eps(j M^j -> M) du_{M^j}/dx_j; we
  // scatter from each stored I instead, which visits the same terms.
  for (const auto& [I, f] : u.components()) {
    for (int j = 1; j <= n; ++j) {
      auto ins = insert_axis(j, I);
      if (!ins) continue;
      auto df = partial_derivative(f, j);
      if (df.is_zero()) continue;
      out.add_to_component(ins->index, df * S(ins->sign));
    }
  }
  return out;
}

template <class S>
PForm<S> codifferential(const PForm<S>& alpha, const Weight& w) {
  if (alpha.degree() < 1) throw std::invalid_argument("codifferential needs a form of degree >= 1");
  if (w.dim() != alpha.dim()) throw std::invalid_argument("weight and form dimensions differ");
  PForm<S> out(alpha.dim(), alpha.degree() - 1, alpha.capacity());
  for (const auto& [J, f] : alpha.components()) {
    for (int j : J.axes()) {
      // alpha_{jI} = eps(jI -> J) alpha_J with I = J^j.
      auto rem = remove_axis(j, J);
      out.add_to_component(rem.index, apply_delta_axis(f, j, w) * S(-rem.sign));
    }
  }
  return out;
}

template <class S>
S inner(const PForm<S>& a, const PForm<S>& b) {
  if (a.dim() != b.dim() || a.degree() != b.degree())
    throw std::invalid_argument("inner product of forms from different spaces");
  S acc(0);
  for (const auto& [I, f] : a.components()) {
    auto it = b.components().find(I);
    if (it != b.components().end()) acc += weighted_inner(f, it->second);
  }
  return acc;
}

template <class S>
RealOf<S> norm_sq(const PForm<S>& a) {
  return real_part(inner(a, a));
}

template <class S>
ScalarField<S> pointwise_norm_sq(const PForm<S>& a) {
  ScalarField<S> out(a.dim(), 2 * a.capacity());
  for (const auto& [I, f] : a.components()) out += multiply(f, conj(f));
  return out;
}

template <class S>
RealOf<S> evaluate_norm_sq(const PForm<S>& a, std::span<const RealOf<S>> point) {
  RealOf<S> acc(0);
  for (const auto& [I, f] : a.components()) acc += abs2(evaluate_field(f, point));
  return acc;
}

template <class S>
PForm<S> conj(const PForm<S>& a) {
  PForm<S> out(a.dim(), a.degree(), a.capacity());
  for (const auto& [I, f] : a.components()) out.add_to_component(I, conj(f));
  return out;
}

template <class R>
PForm<R> real_part(const PForm<Complex<R>>& a) {
  PForm<R> out(a.dim(), a.degree(), a.capacity());
  for (const auto& [I, f] : a.components()) out.add_to_component(I, real_part(f));
  return out;
}

template <class R>
PForm<R> imag_part(const PForm<Complex<R>>& a) {
  PForm<R> out(a.dim(), a.degree(), a.capacity());
  for (const auto& [I, f] : a.components()) out.add_to_component(I, imag_part(f));
  return out;
}

template <class R>
PForm<Complex<R>> to_complex(const PForm<R>& a) {
  PForm<Complex<R>> out(a.dim(), a.degree(), a.capacity());
  for (const auto& [I, f] : a.components()) out.add_to_component(I, to_complex(f));
  return out;
}

// --- ComplexForm ---------------------------------------------------------

template <class R>
ComplexForm<R>::ComplexForm(int n, int p, int q, int capacity)
    : n_(n), p_(p), q_(q), capacity_(capacity) {
  if (n < 1) throw std::invalid_argument("complex dimension must be positive");
  if (p < 0 || q < 0) throw std::invalid_argument("bidegree must be non-negative");
}

template <class R>
int ComplexForm<R>::total_degree() const {
  int top = -1;
  for (const auto& [key, f] : components_) top = std::max(top, f.total_degree());
  return top;
}

template <class R>
typename ComplexForm<R>::Field ComplexForm<R>::component(const MultiIndex& holo,
                                                         const MultiIndex& anti) const {
  auto it = components_.find(Key(holo, anti));
  return it == components_.end() ? Field(real_dim(), capacity_) : it->second;
}

template <class R>
void ComplexForm<R>::add_to_component(const MultiIndex& holo, const MultiIndex& anti,
                                      const Field& f) {
  if (holo.size() != p_ || anti.size() != q_ || holo.dim() != n_ || anti.dim() != n_)
    throw std::invalid_argument("index pair does not fit the bidegree");
  if (f.dim() != real_dim()) throw std::invalid_argument("coefficient must live on R^{2n}");
  if (f.is_zero()) return;
  Key key(holo, anti);
  auto it = components_.find(key);
  if (it == components_.end()) {
    components_.emplace(std::move(key), f.with_capacity(capacity_));
    return;
  }
  it->second += f;
  it->second = it->second.with_capacity(capacity_);
  if (it->second.is_zero()) components_.erase(it);
}

template <class R>
typename ComplexForm<R>::Field ComplexForm<R>::entry(int i, int j) const {
  if (p_ != 1 || q_ != 1) throw std::logic_error("entry() needs a (1,1)-form");
  return component(MultiIndex(n_, {i}), MultiIndex(n_, {j}));
}

template <class R>
void ComplexForm<R>::set_entry(int i, int j, const Field& f) {
  if (p_ != 1 || q_ != 1) throw std::logic_error("set_entry() needs a (1,1)-form");
  Key key(MultiIndex(n_, {i}), MultiIndex(n_, {j}));
  components_.erase(key);
  add_to_component(key.first, key.second, f);
}

template <class R>
typename ComplexForm<R>::Field ComplexForm<R>::coefficient(int j) const {
  if (p_ + q_ != 1) throw std::logic_error("coefficient() needs a (1,0)- or (0,1)-form");
  MultiIndex one(n_, {j}), none(n_, {});
  return p_ == 1 ? component(one, none) : component(none, one);
}

template <class R>
void ComplexForm<R>::set_coefficient(int j, const Field& f) {
  if (p_ + q_ != 1) throw std::logic_error("set_coefficient() needs a (1,0)- or (0,1)-form");
  MultiIndex one(n_, {j}), none(n_, {});
  Key key = p_ == 1 ? Key(one, none) : Key(none, one);
  components_.erase(key);
  add_to_component(key.first, key.second, f);
}

template <class R>
void ComplexForm<R>::check_same_space(const ComplexForm& other) const {
  if (n_ != other.n_ || p_ != other.p_ || q_ != other.q_)
    throw std::invalid_argument("complex forms of different bidegree");
}

template <class R>
ComplexForm<R>& ComplexForm<R>::operator+=(const ComplexForm& other) {
  check_same_space(other);
  capacity_ = std::max(capacity_, other.capacity_);
  for (const auto& [key, f] : other.components_) add_to_component(key.first, key.second, f);
  return *this;
}

template <class R>
ComplexForm<R>& ComplexForm<R>::operator-=(const ComplexForm& other) {
  check_same_space(other);
  capacity_ = std::max(capacity_, other.capacity_);
  for (const auto& [key, f] : other.components_) add_to_component(key.first, key.second, -f);
  return *this;
}

template <class R>
ComplexForm<R>& ComplexForm<R>::operator*=(const Scalar& factor) {
  for (auto it = components_.begin(); it != components_.end();) {
    it->second *= factor;
    if (it->second.is_zero())
      it = components_.erase(it);
    else
      ++it;
  }
  return *this;
}

template <class R>
ComplexField<R> wirtinger_z(const ComplexField<R>& u, int j) {
  using C = Complex<R>;
  const C half(ratio<R>(1, 2));
  const C minus_half_i(R(0), ratio<R>(-1, 2));
  return partial_derivative(u, 2 * j - 1) * half + partial_derivative(u, 2 * j) * minus_half_i;
}

template <class R>
ComplexField<R> wirtinger_zbar(const ComplexField<R>& u, int j) {
  using C = Complex<R>;
  const C half(ratio<R>(1, 2));
  const C half_i(R(0), ratio<R>(1, 2));
  return partial_derivative(u, 2 * j - 1) * half + partial_derivative(u, 2 * j) * half_i;
}

template <class R>
ComplexField<R> multiply_by_z(const ComplexField<R>& u, int j) {
  return multiply_by_coordinate(u, 2 * j - 1) + multiply_by_coordinate(u, 2 * j) * Complex<R>::i();
}

template <class R>
ComplexField<R> multiply_by_zbar(const ComplexField<R>& u, int j) {
  return multiply_by_coordinate(u, 2 * j - 1) - multiply_by_coordinate(u, 2 * j) * Complex<R>::i();
}

namespace {

int complex_dim_of(int real_dim) {
  if (real_dim % 2 != 0)
    throw std::invalid_argument("complex functions live on an even-dimensional R^{2n}");
  return real_dim / 2;
}

}  // namespace

template <class R>
ComplexForm<R> as_function_form(const ComplexField<R>& u) {
  const int n = complex_dim_of(u.dim());
  ComplexForm<R> out(n, 0, 0, u.capacity());
  out.add_to_component(MultiIndex(n, {}), MultiIndex(n, {}), u);
  return out;
}

template <class R>
ComplexForm<R> dbar_function(const ComplexField<R>& u) {
  const int n = complex_dim_of(u.dim());
  ComplexForm<R> out(n, 0, 1, u.capacity());
  for (int j = 1; j <= n; ++j) out.set_coefficient(j, wirtinger_zbar(u, j));
  return out;
}

template <class R>
ComplexForm<R> partial_function(const ComplexField<R>& u) {
  const int n = complex_dim_of(u.dim());
  ComplexForm<R> out(n, 1, 0, u.capacity());
  for (int j = 1; j <= n; ++j) out.set_coefficient(j, wirtinger_z(u, j));
  return out;
}

template <class R>
ComplexForm<R> ddbar(const ComplexField<R>& u) {
  const int n = complex_dim_of(u.dim());
  ComplexForm<R> out(n, 1, 1, u.capacity());
  for (int j = 1; j <= n; ++j) {
    auto vj = wirtinger_zbar(u, j);
    for (int i = 1; i <= n; ++i) out.set_entry(i, j, wirtinger_z(vj, i));
  }
  return out;
}

template <class R>
ComplexForm<R> partial(const ComplexForm<R>& f) {
  const int n = f.n();
  ComplexForm<R> out(n, f.p() + 1, f.q(), f.capacity());
  if (f.p() >= n) return out;
  for (const auto& [key, c] : f.components()) {
    for (int k = 1; k <= n; ++k) {
      auto ins = insert_axis(k, key.first);
      if (!ins) continue;
      auto dc = wirtinger_z(c, k);
      if (dc.is_zero()) continue;
      out.add_to_component(ins->index, key.second, dc * Complex<R>(R(ins->sign)));
    }
  }
  return out;
}

template <class R>
ComplexForm<R> dbar(const ComplexForm<R>& f) {
  const int n = f.n();
  ComplexForm<R> out(n, f.p(), f.q() + 1, f.capacity());
  if (f.q() >= n) return out;
  // dzbar_l ^ dz_K ^ dzbar_L = (-1)^{|K|} dz_K ^ dzbar_l ^ dzbar_L.
  const int pass_sign = f.p() % 2 == 0 ? 1 : -1;
  for (const auto& [key, c] : f.components()) {
    for (int l = 1; l <= n; ++l) {
      auto ins = insert_axis(l, key.second);
      if (!ins) continue;
      auto dc = wirtinger_zbar(c, l);
      if (dc.is_zero()) continue;
      out.add_to_component(key.first, ins->index, dc * Complex<R>(R(pass_sign * ins->sign)));
    }
  }
  return out;
}

template <class R>
ComplexField<R> dbar_adjoint(const ComplexForm<R>& g, const Weight& w) {
  if (g.p() != 0 || g.q() != 1) throw std::invalid_argument("dbar_adjoint needs a (0,1)-form");
  if (w.dim() != g.real_dim()) throw std::invalid_argument("weight must live on R^{2n}");
  ComplexField<R> out(g.real_dim(), g.capacity());
  for (int j = 1; j <= g.n(); ++j) {
    auto gj = g.coefficient(j);
    if (gj.is_zero()) continue;
    out += multiply_by_zbar(gj, j);
    out -= wirtinger_z(gj, j);
  }
  return out;
}

template <class R>
ComplexForm<R> conj(const ComplexForm<R>& f) {
  ComplexForm<R> out(f.n(), f.q(), f.p(), f.capacity());
  // conj(c dz_K ^ dzbar_L) = conj(c) dzbar_K ^ dz_L = (-1)^{pq} conj(c) dz_L ^ dzbar_K.
  const int sign = (f.p() * f.q()) % 2 == 0 ? 1 : -1;
  for (const auto& [key, c] : f.components())
    out.add_to_component(key.second, key.first, conj(c) * Complex<R>(R(sign)));
  return out;
}

template <class R>
Complex<R> inner(const ComplexForm<R>& a, const ComplexForm<R>& b) {
  if (a.n() != b.n() || a.p() != b.p() || a.q() != b.q())
    throw std::invalid_argument("inner product of complex forms of different bidegree");
  Complex<R> acc(0);
  for (const auto& [key, f] : a.components()) {
    auto it = b.components().find(key);
    if (it != b.components().end()) acc += weighted_inner(f, it->second);
  }
  return acc;
}

template <class R>
R norm_sq(const ComplexForm<R>& f) {
  return inner(f, f).re;
}

template <class R>
ScalarField<Complex<R>> pointwise_norm_sq(const ComplexForm<R>& f) {
  ScalarField<Complex<R>> out(f.real_dim(), 2 * f.capacity());
  for (const auto& [key, c] : f.components()) out += multiply(c, conj(c));
  return out;
}

namespace {

// Sorts axes in place and returns the permutation sign, or 0 on a repeat.
int sort_with_sign(std::vector<int>& axes) {
  int sign = 1;
  for (std::size_t i = 1; i < axes.size(); ++i) {
    for (std::size_t j = i; j > 0 && axes[j - 1] >= axes[j]; --j) {
      if (axes[j - 1] == axes[j]) return 0;
      std::swap(axes[j - 1], axes[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < axes.size(); ++i)
    if (axes[i - 1] == axes[i]) return 0;
  return sign;
}

}  // namespace

template <class R>
PForm<Complex<R>> to_real_frame(const ComplexForm<R>& f) {
  using C = Complex<R>;
  const int d = f.p() + f.q();
  PForm<C> out(f.real_dim(), d, f.capacity());
  for (const auto& [key, c] : f.components()) {
    // Slot s is either dz_k or dzbar_l; choice bit 0 picks dx, 1 picks dy.
    std::vector<int> base;
    std::vector<bool> is_anti;
    for (int k : key.first.axes()) {
      base.push_back(k);
      is_anti.push_back(false);
    }
    for (int l : key.second.axes()) {
      base.push_back(l);
      is_anti.push_back(true);
    }
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      std::vector<int> axes(d);
      C factor(1);
      for (int s = 0; s < d; ++s) {
        const bool y = (mask >> s) & 1u;
        axes[s] = y ? 2 * base[s] : 2 * base[s] - 1;
        if (y) factor *= is_anti[s] ? C(R(0), R(-1)) : C::i();
      }
      const int sign = sort_with_sign(axes);
      if (sign == 0) continue;
      out.add_to_component(MultiIndex(f.real_dim(), axes), c * (factor * C(R(sign))));
    }
  }
  return out;
}

template <class R>
ComplexForm<R> from_real_frame(const PForm<Complex<R>>& form, int p, int q) {
  using C = Complex<R>;
  if (form.degree() != p + q) throw std::invalid_argument("bidegree does not match form degree");
  const int n = complex_dim_of(form.dim());
  const int d = p + q;
  ComplexForm<R> out(n, p, q, form.capacity());
  // Frame vector components: d/dz_k = (1/2, -i/2), d/dzbar_k = (1/2, i/2)
  // on the axes (2k-1, 2k).
  auto frame = [&](int k, bool anti, int axis) -> C {
    if (axis == 2 * k - 1) return C(ratio<R>(1, 2));
    if (axis == 2 * k) return C(R(0), ratio<R>(anti ? 1 : -1, 2));
    return C(0);
  };
  // Permutations of d slots for the determinant expansion.
  std::vector<int> perm(d);
  for (int i = 0; i < d; ++i) perm[i] = i;
  std::vector<std::pair<std::vector<int>, int>> perms;
  do {
    std::vector<int> tmp = perm;
    int sign = sort_with_sign(tmp);
    perms.emplace_back(perm, sign);
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (const auto& K : enumerate_indices(n, p)) {
    for (const auto& L : enumerate_indices(n, q)) {
      std::vector<std::pair<int, bool>> vectors;
      for (int k : K.axes()) vectors.emplace_back(k, false);
      for (int l : L.axes()) vectors.emplace_back(l, true);
      ScalarField<C> acc(form.dim(), form.capacity());
      for (const auto& [A, fA] : form.components()) {
        // det[ dx_{A_i}(v_j) ]
        C det(0);
        for (const auto& [pm, sign] : perms) {
          C term{R(sign)};
          for (int i = 0; i < d && !is_zero(term); ++i)
            term *= frame(vectors[pm[i]].first, vectors[pm[i]].second, A[i]);
          det += term;
        }
        if (!is_zero(det)) acc += fA * det;
      }
      out.add_to_component(K, L, acc);
    }
  }
  return out;
}

#define GAUSS_HODGE_INSTANTIATE(S)                                               \
  template class PForm<S>;                                                       \
  template PForm<S> exterior_d(const PForm<S>&);                                 \
  template PForm<S> codifferential(const PForm<S>&, const Weight&);              \
  template S inner(const PForm<S>&, const PForm<S>&);                            \
  template RealOf<S> norm_sq(const PForm<S>&);                                   \
  template ScalarField<S> pointwise_norm_sq(const PForm<S>&);                    \
  template RealOf<S> evaluate_norm_sq(const PForm<S>&, std::span<const RealOf<S>>); \
  template PForm<S> conj(const PForm<S>&);

GAUSS_HODGE_INSTANTIATE(Rational)
GAUSS_HODGE_INSTANTIATE(double)
GAUSS_HODGE_INSTANTIATE(Complex<Rational>)
GAUSS_HODGE_INSTANTIATE(Complex<double>)

#undef GAUSS_HODGE_INSTANTIATE

#define GAUSS_HODGE_INSTANTIATE(R)                                                   \
  template PForm<R> real_part(const PForm<Complex<R>>&);                             \
  template PForm<R> imag_part(const PForm<Complex<R>>&);                             \
  template PForm<Complex<R>> to_complex(const PForm<R>&);                            \
  template class ComplexForm<R>;                                                     \
  template ComplexField<R> wirtinger_z(const ComplexField<R>&, int);                 \
  template ComplexField<R> wirtinger_zbar(const ComplexField<R>&, int);              \
  template ComplexField<R> multiply_by_z(const ComplexField<R>&, int);               \
  template ComplexField<R> multiply_by_zbar(const ComplexField<R>&, int);            \
  template ComplexForm<R> as_function_form(const ComplexField<R>&);                  \
  template ComplexForm<R> dbar_function(const ComplexField<R>&);                     \
  template ComplexForm<R> partial_function(const ComplexField<R>&);                  \
  template ComplexForm<R> ddbar(const ComplexField<R>&);                             \
  template ComplexForm<R> partial(const ComplexForm<R>&);                            \
  template ComplexForm<R> dbar(const ComplexForm<R>&);                               \
  template ComplexField<R> dbar_adjoint(const ComplexForm<R>&, const Weight&);       \
  template ComplexForm<R> conj(const ComplexForm<R>&);                               \
  template Complex<R> inner(const ComplexForm<R>&, const ComplexForm<R>&);           \
  template R norm_sq(const ComplexForm<R>&);                                         \
  template ScalarField<Complex<R>> pointwise_norm_sq(const ComplexForm<R>&);         \
  template PForm<Complex<R>> to_real_frame(const ComplexForm<R>&);                   \
  template ComplexForm<R> from_real_frame(const PForm<Complex<R>>&, int, int);

GAUSS_HODGE_INSTANTIATE(Rational)
GAUSS_HODGE_INSTANTIATE(double)

#undef GAUSS_HODGE_INSTANTIATE

}  // namespace gauss_hodge
