#include "gauss_hodge/hermite.hpp"

#include <algorithm>

#include "gauss_hodge/errors.hpp"

namespace gauss_hodge {

namespace ladder {

template <>
Rational norm_sq<Rational>(int k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  mpz_class p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  return Rational(f * p);
}

template <>
double norm_sq<double>(int k) {
  double v = 1.0;
  for (int i = 1; i <= k; ++i) v *= 2.0 * i;
  return v;
}

}  // namespace ladder

namespace {

template <class S>
HermiteSeries<S> apply_image(const HermiteSeries<S>& s, ladder::Image (*rule)(int)) {
  using R = RealOf<S>;
  std::vector<S> out;
  int top = -1;
  for (int k = 0; k <= s.degree(); ++k) {
    if (is_zero(s.coeffs()[k])) continue;
    auto img = rule(k);
    for (int t = 0; t < img.count; ++t) top = std::max(top, img.terms[t].k);
  }
  if (top > s.capacity()) throw DegreeOverflow(top, s.capacity());
  out.assign(static_cast<std::size_t>(top + 1), S(0));
  for (int k = 0; k <= s.degree(); ++k) {
    const S& c = s.coeffs()[k];
    if (is_zero(c)) continue;
    auto img = rule(k);
    for (int t = 0; t < img.count; ++t) {
      const auto& term = img.terms[t];
      out[term.k] += c * S(ratio<R>(term.num, term.den));
    }
  }
  return HermiteSeries<S>(s.capacity(), std::move(out));
}

}  // namespace

template <class S>
HermiteSeries<S>::HermiteSeries(int capacity, std::vector<S> coeffs)
    : capacity_(capacity), coeffs_(std::move(coeffs)) {
  canonicalize();
  if (degree() > capacity_) throw DegreeOverflow(degree(), capacity_);
}

template <class S>
HermiteSeries<S> HermiteSeries<S>::basis(int k, int capacity) {
  std::vector<S> c(static_cast<std::size_t>(k + 1), S(0));
  c[k] = S(1);
  return HermiteSeries(capacity, std::move(c));
}

template <class S>
S HermiteSeries<S>::coefficient(int k) const {
  if (k < 0 || k > degree()) return S(0);
  return coeffs_[k];
}

template <class S>
void HermiteSeries<S>::canonicalize() {
  while (!coeffs_.empty() && gauss_hodge::is_zero(coeffs_.back())) coeffs_.pop_back();
}

template <class S>
HermiteSeries<S>& HermiteSeries<S>::operator+=(const HermiteSeries& other) {
  capacity_ = std::max(capacity_, other.capacity_);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), S(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  canonicalize();
  return *this;
}

template <class S>
HermiteSeries<S>& HermiteSeries<S>::operator-=(const HermiteSeries& other) {
  capacity_ = std::max(capacity_, other.capacity_);
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), S(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  canonicalize();
  return *this;
}

template <class S>
HermiteSeries<S>& HermiteSeries<S>::operator*=(const S& factor) {
  for (auto& c : coeffs_) c *= factor;
  canonicalize();
  return *this;
}

template <class S>
HermiteSeries<S> differentiate(const HermiteSeries<S>& s) {
  return apply_image(s, &ladder::derivative);
}

template <class S>
HermiteSeries<S> apply_delta(const HermiteSeries<S>& s) {
  return apply_image(s, &ladder::delta);
}

template <class S>
HermiteSeries<S> multiply_by_coordinate(const HermiteSeries<S>& s) {
  return apply_image(s, &ladder::coordinate);
}

template <class S>
S inner_product_1d(const HermiteSeries<S>& s, const HermiteSeries<S>& t) {
  using R = RealOf<S>;
  S acc(0);
  const int top = std::min(s.degree(), t.degree());
  for (int k = 0; k <= top; ++k)
    acc += s.coeffs()[k] * conj(t.coeffs()[k]) * S(ladder::norm_sq<R>(k));
  return acc;
}

template <class S>
S evaluate(const HermiteSeries<S>& s, const RealOf<S>& x) {
  using R = RealOf<S>;
  // b_k = c_k + 2x b_{k+1} - 2(k+1) b_{k+2}; the sum is b_0.
  S b1(0), b2(0);
  const S two_x(R(2 * x));
  for (int k = s.degree(); k >= 0; --k) {
    S b0 = s.coeffs()[k] + two_x * b1 - S(R(2 * (k + 1))) * b2;
    b2 = std::move(b1);
    b1 = std::move(b0);
  }
  return b1;
}

#define GAUSS_HODGE_INSTANTIATE(S)                                               \
  template class HermiteSeries<S>;                                               \
  template HermiteSeries<S> differentiate(const HermiteSeries<S>&);              \
  template HermiteSeries<S> apply_delta(const HermiteSeries<S>&);                \
  template HermiteSeries<S> multiply_by_coordinate(const HermiteSeries<S>&);     \
  template S inner_product_1d(const HermiteSeries<S>&, const HermiteSeries<S>&); \
  template S evaluate(const HermiteSeries<S>&, const RealOf<S>&);

GAUSS_HODGE_INSTANTIATE(Rational)
GAUSS_HODGE_INSTANTIATE(double)
GAUSS_HODGE_INSTANTIATE(Complex<Rational>)
GAUSS_HODGE_INSTANTIATE(Complex<double>)

#undef GAUSS_HODGE_INSTANTIATE

}  // namespace gauss_hodge
