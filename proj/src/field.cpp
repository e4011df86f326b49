#include "gauss_hodge/field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gauss_hodge/errors.hpp"

namespace gauss_hodge {

int total_degree(const Degree& k) { return std::accumulate(k.begin(), k.end(), 0); }

std::vector<Degree> degrees_of_total(int m, int total) {
  std::vector<Degree> out;
  if (m < 1 || total < 0) return out;
  Degree k(static_cast<std::size_t>(m), 0);
  // Fill axes left to right; the last axis takes whatever remains.
  auto rec = [&](auto&& self, int axis, int left) -> void {
    if (axis == m - 1) {
      k[axis] = left;
      out.push_back(k);
      return;
    }
    for (int v = left; v >= 0; --v) {
      k[axis] = v;
      self(self, axis + 1, left - v);
    }
  };
  rec(rec, 0, total);
  std::reverse(out.begin(), out.end());
  return out;
}

template <class R>
R basis_norm_sq(const Degree& k) {
  R acc(1);
  for (int ki : k) acc *= ladder::norm_sq<R>(ki);
  return acc;
}

template Rational basis_norm_sq<Rational>(const Degree&);
template double basis_norm_sq<double>(const Degree&);

namespace {

void check_axis(int axis, int dim) {
  if (axis < 1 || axis > dim)
    throw std::out_of_range("axis " + std::to_string(axis) + " outside [1, " +
                            std::to_string(dim) + "]");
}

// Applies a 1-D ladder rule along one axis of every stored coefficient.
template <class S>
ScalarField<S> apply_axis(const ScalarField<S>& f, int axis, ladder::Image (*rule)(int)) {
  using R = RealOf<S>;
  check_axis(axis, f.dim());
  ScalarField<S> out(f.dim(), f.capacity());
  for (const auto& [k, c] : f.coeffs()) {
    auto img = rule(k[axis - 1]);
    for (int t = 0; t < img.count; ++t) {
      Degree kk = k;
      kk[axis - 1] = img.terms[t].k;
      out.add_term(kk, c * S(ratio<R>(img.terms[t].num, img.terms[t].den)));
    }
  }
  return out;
}

// H_a H_b = sum_r C(a,r) C(b,r) 2^r r! H_{a+b-2r}.
template <class R>
std::vector<std::pair<int, R>> linearize(int a, int b) {
  std::vector<std::pair<int, R>> out;
  for (int r = 0; r <= std::min(a, b); ++r) {
    mpz_class ca, cb, fr;
    mpz_bin_uiui(ca.get_mpz_t(), a, r);
    mpz_bin_uiui(cb.get_mpz_t(), b, r);
    mpz_fac_ui(fr.get_mpz_t(), r);
    mpz_class v = ca * cb * fr;
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), r);
    if constexpr (std::is_same_v<R, Rational>) {
      out.emplace_back(a + b - 2 * r, Rational(v));
    } else {
      out.emplace_back(a + b - 2 * r, v.get_d());
    }
  }
  return out;
}

}  // namespace

template <class S>
ScalarField<S>::ScalarField(int dim, int capacity) : dim_(dim), capacity_(capacity) {
  if (dim < 1) throw std::invalid_argument("field dimension must be positive");
  if (capacity < 0) throw std::invalid_argument("field capacity must be non-negative");
}

template <class S>
ScalarField<S> ScalarField<S>::constant(int dim, int capacity, const S& value) {
  ScalarField f(dim, capacity);
  f.add_term(Degree(dim, 0), value);
  return f;
}

template <class S>
ScalarField<S> ScalarField<S>::basis(int dim, int capacity, const Degree& k, const S& value) {
  ScalarField f(dim, capacity);
  f.add_term(k, value);
  return f;
}

template <class S>
ScalarField<S> ScalarField<S>::coordinate(int dim, int capacity, int axis) {
  check_axis(axis, dim);
  Degree k(dim, 0);
  k[axis - 1] = 1;
  return basis(dim, capacity, k, S(ratio<RealOf<S>>(1, 2)));
}

template <class S>
int ScalarField<S>::total_degree() const {
  int top = -1;
  for (const auto& [k, c] : coeffs_) top = std::max(top, gauss_hodge::total_degree(k));
  return top;
}

template <class S>
S ScalarField<S>::coefficient(const Degree& k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? S(0) : it->second;
}

template <class S>
void ScalarField<S>::add_term(const Degree& k, const S& value) {
  if (static_cast<int>(k.size()) != dim_)
    throw std::invalid_argument("degree vector length does not match field dimension");
  if (gauss_hodge::is_zero(value)) return;
  const int deg = gauss_hodge::total_degree(k);
  if (deg > capacity_) throw DegreeOverflow(deg, capacity_);
  auto [it, inserted] = coeffs_.try_emplace(k, value);
  if (!inserted) {
    it->second += value;
    if (gauss_hodge::is_zero(it->second)) coeffs_.erase(it);
  }
}

template <class S>
ScalarField<S> ScalarField<S>::with_capacity(int capacity) const {
  const int deg = total_degree();
  if (deg > capacity) throw DegreeOverflow(deg, capacity);
  ScalarField out = *this;
  out.capacity_ = capacity;
  return out;
}

template <class S>
void ScalarField<S>::check_compatible(const ScalarField& other) const {
  if (dim_ != other.dim_)
    throw std::invalid_argument("field dimension mismatch: " + std::to_string(dim_) + " vs " +
                                std::to_string(other.dim_));
}

template <class S>
ScalarField<S>& ScalarField<S>::operator+=(const ScalarField& other) {
  check_compatible(other);
  capacity_ = std::max(capacity_, other.capacity_);
  for (const auto& [k, c] : other.coeffs_) add_term(k, c);
  return *this;
}

template <class S>
ScalarField<S>& ScalarField<S>::operator-=(const ScalarField& other) {
  check_compatible(other);
  capacity_ = std::max(capacity_, other.capacity_);
  for (const auto& [k, c] : other.coeffs_) add_term(k, S(-c));
  return *this;
}

template <class S>
ScalarField<S>& ScalarField<S>::operator*=(const S& factor) {
  if (gauss_hodge::is_zero(factor)) {
    coeffs_.clear();
    return *this;
  }
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    it->second *= factor;
    // Float products can underflow to zero.
    if (gauss_hodge::is_zero(it->second))
      it = coeffs_.erase(it);
    else
      ++it;
  }
  return *this;
}

Weight::Weight(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("weight dimension must be positive");
}

int Weight::hessian(int j, int k) const {
  check_axis(j, dim_);
  check_axis(k, dim_);
  return j == k ? 2 : 0;
}

template <class S>
ScalarField<S> Weight::gradient_times(const ScalarField<S>& f, int axis) const {
  return multiply_by_coordinate(f, axis) * S(2);
}

template <class S>
ScalarField<S> partial_derivative(const ScalarField<S>& f, int axis) {
  return apply_axis(f, axis, &ladder::derivative);
}

template <class S>
ScalarField<S> apply_delta_axis(const ScalarField<S>& f, int axis, const Weight& w) {
  if (w.dim() != f.dim()) throw std::invalid_argument("weight and field dimensions differ");
  return apply_axis(f, axis, &ladder::delta);
}

template <class S>
ScalarField<S> multiply_by_coordinate(const ScalarField<S>& f, int axis) {
  return apply_axis(f, axis, &ladder::coordinate);
}

template <class S>
S weighted_inner(const ScalarField<S>& f, const ScalarField<S>& g) {
  using R = RealOf<S>;
  if (f.dim() != g.dim()) throw std::invalid_argument("field dimension mismatch in inner product");
  S acc(0);
  const auto& small = f.coeffs().size() <= g.coeffs().size() ? f.coeffs() : g.coeffs();
  const bool f_small = &small == &f.coeffs();
  for (const auto& [k, c] : small) {
    const auto& other = f_small ? g.coeffs() : f.coeffs();
    auto it = other.find(k);
    if (it == other.end()) continue;
    R weight(1);
    for (int kj : k) weight *= ladder::norm_sq<R>(kj);
    const S& fc = f_small ? c : it->second;
    const S& gc = f_small ? it->second : c;
    acc += fc * conj(gc) * S(weight);
  }
  return acc;
}

template <class S>
RealOf<S> norm_sq(const ScalarField<S>& f) {
  return real_part(weighted_inner(f, f));
}

template <class S>
S evaluate_field(const ScalarField<S>& f, std::span<const RealOf<S>> point) {
  using R = RealOf<S>;
  if (static_cast<int>(point.size()) != f.dim())
    throw std::invalid_argument("evaluation point has the wrong dimension");
  const int top = std::max(f.total_degree(), 0);
  // table[j][k] = H_k(x_j) by the three-term recurrence.
  std::vector<std::vector<R>> table(point.size());
  for (std::size_t j = 0; j < point.size(); ++j) {
    auto& row = table[j];
    row.resize(static_cast<std::size_t>(top + 1));
    row[0] = R(1);
    if (top >= 1) row[1] = R(2 * point[j]);
    for (int k = 1; k < top; ++k) row[k + 1] = R(2 * point[j] * row[k] - R(2 * k) * row[k - 1]);
  }
  S acc(0);
  for (const auto& [k, c] : f.coeffs()) {
    R prod(1);
    for (std::size_t j = 0; j < k.size(); ++j) prod *= table[j][k[j]];
    acc += c * S(prod);
  }
  return acc;
}

template <class S>
ScalarField<S> multiply(const ScalarField<S>& f, const ScalarField<S>& g) {
  using R = RealOf<S>;
  if (f.dim() != g.dim()) throw std::invalid_argument("field dimension mismatch in product");
  const int m = f.dim();
  ScalarField<S> out(m, f.capacity() + g.capacity());
  for (const auto& [a, ca] : f.coeffs()) {
    for (const auto& [b, cb] : g.coeffs()) {
      std::vector<std::vector<std::pair<int, R>>> axes(m);
      for (int j = 0; j < m; ++j) axes[j] = linearize<R>(a[j], b[j]);
      const S base = ca * cb;
      // Odometer over the per-axis expansions.
      std::vector<std::size_t> pos(m, 0);
      while (true) {
        Degree k(m);
        R w(1);
        for (int j = 0; j < m; ++j) {
          k[j] = axes[j][pos[j]].first;
          w *= axes[j][pos[j]].second;
        }
        out.add_term(k, base * S(w));
        int j = 0;
        while (j < m && ++pos[j] == axes[j].size()) pos[j++] = 0;
        if (j == m) break;
      }
    }
  }
  return out;
}

template <class S>
ScalarField<S> conj(const ScalarField<S>& f) {
  if constexpr (!is_complex_v<S>) {
    return f;
  } else {
    ScalarField<S> out(f.dim(), f.capacity());
    for (const auto& [k, c] : f.coeffs()) out.add_term(k, conj(c));
    return out;
  }
}

template <class R>
ScalarField<R> real_part(const ScalarField<Complex<R>>& f) {
  ScalarField<R> out(f.dim(), f.capacity());
  for (const auto& [k, c] : f.coeffs()) out.add_term(k, c.re);
  return out;
}

template <class R>
ScalarField<R> imag_part(const ScalarField<Complex<R>>& f) {
  ScalarField<R> out(f.dim(), f.capacity());
  for (const auto& [k, c] : f.coeffs()) out.add_term(k, c.im);
  return out;
}

template <class R>
ScalarField<Complex<R>> to_complex(const ScalarField<R>& f) {
  ScalarField<Complex<R>> out(f.dim(), f.capacity());
  for (const auto& [k, c] : f.coeffs()) out.add_term(k, Complex<R>(c));
  return out;
}

#define GAUSS_HODGE_INSTANTIATE(S)                                                      \
  template class ScalarField<S>;                                                        \
  template ScalarField<S> Weight::gradient_times(const ScalarField<S>&, int) const;     \
  template ScalarField<S> partial_derivative(const ScalarField<S>&, int);               \
  template ScalarField<S> apply_delta_axis(const ScalarField<S>&, int, const Weight&);  \
  template ScalarField<S> multiply_by_coordinate(const ScalarField<S>&, int);           \
  template S weighted_inner(const ScalarField<S>&, const ScalarField<S>&);              \
  template RealOf<S> norm_sq(const ScalarField<S>&);                                    \
  template S evaluate_field(const ScalarField<S>&, std::span<const RealOf<S>>);         \
  template ScalarField<S> multiply(const ScalarField<S>&, const ScalarField<S>&);       \
  template ScalarField<S> conj(const ScalarField<S>&);

GAUSS_HODGE_INSTANTIATE(Rational)
GAUSS_HODGE_INSTANTIATE(double)
GAUSS_HODGE_INSTANTIATE(Complex<Rational>)
GAUSS_HODGE_INSTANTIATE(Complex<double>)

#undef GAUSS_HODGE_INSTANTIATE

template ScalarField<Rational> real_part(const ScalarField<Complex<Rational>>&);
template ScalarField<double> real_part(const ScalarField<Complex<double>>&);
template ScalarField<Rational> imag_part(const ScalarField<Complex<Rational>>&);
template ScalarField<double> imag_part(const ScalarField<Complex<double>>&);
template ScalarField<Complex<Rational>> to_complex(const ScalarField<Rational>&);
template ScalarField<Complex<double>> to_complex(const ScalarField<double>&);

}  // namespace gauss_hodge
