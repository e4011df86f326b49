#pragma once

// Scalar types shared by every module.
//
// Two arithmetic modes exist: exact (GMP rationals) and float (double).
// Complex scalars are a plain (re, im) pair over either real type; the
// standard std::complex is only specified for floating-point types.

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

namespace gauss_hodge {

using Rational = mpq_class;

template <class R>
struct Complex {
  R re{0};
  R im{0};

  Complex() = default;
  Complex(R real) : re(std::move(real)), im(0) {}  // NOLINT(implicit)
  Complex(R real, R imag) : re(std::move(real)), im(std::move(imag)) {}
  Complex(int real) : re(real), im(0) {}  // NOLINT(implicit)

  static Complex i() { return Complex(R(0), R(1)); }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    R r = re * o.re - im * o.im;
    R s = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(s);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    R den = o.re * o.re + o.im * o.im;
    R r = (re * o.re + im * o.im) / den;
    R s = (im * o.re - re * o.im) / den;
    re = std::move(r);
    im = std::move(s);
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return Complex(R(-a.re), R(-a.im)); }
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  using Real = Rational;
  static constexpr bool is_complex = false;
  static constexpr bool is_exact = true;
};

template <>
struct ScalarTraits<double> {
  using Real = double;
  static constexpr bool is_complex = false;
  static constexpr bool is_exact = false;
};

template <class R>
struct ScalarTraits<Complex<R>> {
  using Real = R;
  static constexpr bool is_complex = true;
  static constexpr bool is_exact = ScalarTraits<R>::is_exact;
};

template <class S>
using RealOf = typename ScalarTraits<S>::Real;

template <class S>
inline constexpr bool is_complex_v = ScalarTraits<S>::is_complex;

template <class S>
inline constexpr bool is_exact_v = ScalarTraits<S>::is_exact;

inline const Rational& conj(const Rational& x) { return x; }
inline double conj(double x) { return x; }
template <class R>
Complex<R> conj(const Complex<R>& z) {
  return Complex<R>(z.re, R(-z.im));
}

inline Rational abs2(const Rational& x) { return x * x; }
inline double abs2(double x) { return x * x; }
template <class R>
R abs2(const Complex<R>& z) {
  return R(z.re * z.re + z.im * z.im);
}

inline const Rational& real_part(const Rational& x) { return x; }
inline double real_part(double x) { return x; }
template <class R>
const R& real_part(const Complex<R>& z) {
  return z.re;
}

inline Rational imag_part(const Rational&) { return Rational(0); }
inline double imag_part(double) { return 0.0; }
template <class R>
const R& imag_part(const Complex<R>& z) {
  return z.im;
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(double x) { return x == 0.0; }
template <class R>
bool is_zero(const Complex<R>& z) {
  return is_zero(z.re) && is_zero(z.im);
}

inline double to_double(const Rational& x) { return x.get_d(); }
inline double to_double(double x) { return x; }

// Builds a scalar of type S from a real part and an imaginary part.  For
// real S the imaginary part must be zero.
template <class S>
S make_scalar(const RealOf<S>& re, const RealOf<S>& im);

template <>
inline Rational make_scalar<Rational>(const Rational& re, const Rational&) {
  return re;
}
template <>
inline double make_scalar<double>(const double& re, const double&) {
  return re;
}
template <>
inline Complex<Rational> make_scalar<Complex<Rational>>(const Rational& re,
                                                        const Rational& im) {
  return Complex<Rational>(re, im);
}
template <>
inline Complex<double> make_scalar<Complex<double>>(const double& re,
                                                    const double& im) {
  return Complex<double>(re, im);
}

// Small exact ratio num/den in either real type.
template <class R>
R ratio(long num, long den) {
  if constexpr (std::is_same_v<R, Rational>) {
    Rational q(num, den);
    q.canonicalize();
    return q;
  } else {
    return static_cast<double>(num) / static_cast<double>(den);
  }
}

// Text form of a real scalar: "p/q" (or "p") for rationals, shortest
// round-trip decimal for doubles.
std::string format_real(const Rational& x);
std::string format_real(double x);

// Parses "p/q", integers, and decimals such as "-1.25e-3".
template <class R>
R parse_real(std::string_view text);

// Square root of a real magnitude, in double precision.
inline double sqrt_of(const Rational& x) { return std::sqrt(x.get_d()); }
inline double sqrt_of(double x) { return std::sqrt(x); }

}  // namespace gauss_hodge
