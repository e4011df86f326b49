#pragma once

// One-dimensional physicists' Hermite algebra under the weight e^{-x^2}.
//
// Series are sums c_k H_k.  The three ladder actions are exact:
//   d/dx        H_k = 2k H_{k-1}
//   delta = d/dx - 2x : H_k = -H_{k+1}
//   x           H_k = 1/2 H_{k+1} + k H_{k-1}
// Inner products use the normalized measure pi^{-1/2} e^{-x^2} dx, so
// <H_j, H_k> = 2^k k! [j == k] is an integer.

#include <array>
#include <vector>

#include "gauss_hodge/scalar.hpp"

namespace gauss_hodge {

namespace ladder {

// One term c * H_k of a ladder image, with c = num / den.
struct Term {
  int k;
  long num;
  long den;
};

// Image of a single basis polynomial: at most two terms.
struct Image {
  std::array<Term, 2> terms{};
  int count = 0;

  void push(int k, long num, long den = 1) {
    if (k >= 0 && num != 0) terms[count++] = Term{k, num, den};
  }
};

inline Image derivative(int k) {
  Image img;
  img.push(k - 1, 2L * k);
  return img;
}

inline Image delta(int k) {
  Image img;
  img.push(k + 1, -1);
  return img;
}

inline Image coordinate(int k) {
  Image img;
  img.push(k + 1, 1, 2);
  img.push(k - 1, k);
  return img;
}

// 2^k k!, the squared norm of H_k under the normalized measure.
template <class R>
R norm_sq(int k);

}  // namespace ladder

template <class S>
class HermiteSeries {
 public:
  using Scalar = S;
  using Real = RealOf<S>;

  explicit HermiteSeries(int capacity, std::vector<S> coeffs = {});

  static HermiteSeries basis(int k, int capacity);

  int capacity() const { return capacity_; }
  // Largest k with c_k != 0, or -1 for the zero series.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<S>& coeffs() const { return coeffs_; }
  S coefficient(int k) const;

  HermiteSeries& operator+=(const HermiteSeries& other);
  HermiteSeries& operator-=(const HermiteSeries& other);
  HermiteSeries& operator*=(const S& factor);
  friend HermiteSeries operator+(HermiteSeries a, const HermiteSeries& b) { return a += b; }
  friend HermiteSeries operator-(HermiteSeries a, const HermiteSeries& b) { return a -= b; }
  friend HermiteSeries operator*(HermiteSeries a, const S& f) { return a *= f; }
  friend bool operator==(const HermiteSeries& a, const HermiteSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void canonicalize();

  int capacity_;
  std::vector<S> coeffs_;
};

template <class S>
HermiteSeries<S> differentiate(const HermiteSeries<S>& s);

// Throws DegreeOverflow when the result leaves the capacity.
template <class S>
HermiteSeries<S> apply_delta(const HermiteSeries<S>& s);

template <class S>
HermiteSeries<S> multiply_by_coordinate(const HermiteSeries<S>& s);

// Sum_k c_k conj(d_k) 2^k k!.
template <class S>
S inner_product_1d(const HermiteSeries<S>& s, const HermiteSeries<S>& t);

// Clenshaw summation of the three-term recurrence.
template <class S>
S evaluate(const HermiteSeries<S>& s, const RealOf<S>& x);

}  // namespace gauss_hodge
