#pragma once

// Independent reference arithmetic for the tests: polynomials in the plain
// monomial basis, Gaussian moments from the double-factorial formula, and
// wedge signs from brute-force inversion counts.  Nothing here uses the
// library's Hermite ladders.

#include <algorithm>
#include <map>
#include <vector>

#include "gauss_hodge/calculus.hpp"
#include "gauss_hodge/field.hpp"

namespace oracle {

using gauss_hodge::Complex;
using gauss_hodge::Rational;
using Exponent = std::vector<int>;

template <class S>
struct Poly {
  int m = 0;
  std::map<Exponent, S> c;

  explicit Poly(int dim = 0) : m(dim) {}

  static Poly constant(int dim, const S& v) {
    Poly p(dim);
    p.add(Exponent(dim, 0), v);
    return p;
  }
  static Poly var(int dim, int axis) {  // x_axis, 1-based
    Poly p(dim);
    Exponent e(dim, 0);
    e[axis - 1] = 1;
    p.add(e, S(1));
    return p;
  }

  void add(const Exponent& e, const S& v) {
    auto& slot = c[e];
    slot += v;
    if (gauss_hodge::is_zero(slot)) c.erase(e);
  }
  bool zero() const { return c.empty(); }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, v] : o.c) add(e, v);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, v] : o.c) add(e, S(-1) * v);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const S& s, const Poly& a) {
    Poly out(a.m);
    for (const auto& [e, v] : a.c) out.add(e, s * v);
    return out;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out(a.m);
    for (const auto& [ea, va] : a.c)
      for (const auto& [eb, vb] : b.c) {
        Exponent e(a.m);
        for (int i = 0; i < a.m; ++i) e[i] = ea[i] + eb[i];
        out.add(e, va * vb);
      }
    return out;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

  Poly diff(int axis) const {
    Poly out(m);
    for (const auto& [e, v] : c) {
      if (e[axis - 1] == 0) continue;
      Exponent f = e;
      --f[axis - 1];
      out.add(f, S(e[axis - 1]) * v);
    }
    return out;
  }
};

// E[x^k] under pi^{-1/2} e^{-x^2}: 0 for odd k, (k-1)!!/2^{k/2} for even k.
inline Rational moment(int k) {
  if (k % 2) return Rational(0);
  Rational r(1);
  for (int j = 1; j < k; j += 2) r *= j;
  for (int j = 0; j < k / 2; ++j) r /= 2;
  return r;
}

template <class S>
S integrate(const Poly<S>& p) {
  S acc(0);
  for (const auto& [e, v] : p.c) {
    Rational w(1);
    for (int k : e) w *= moment(k);
    acc += v * S(w);
  }
  return acc;
}

template <class S>
Poly<S> conj(const Poly<S>& p) {
  Poly<S> out(p.m);
  for (const auto& [e, v] : p.c) out.add(e, gauss_hodge::conj(v));
  return out;
}

// <f, g> = E[f conj(g)].
template <class S>
S inner(const Poly<S>& f, const Poly<S>& g) {
  return integrate(f * conj(g));
}

// Power coefficients of H_k from H_{k+1} = 2x H_k - 2k H_{k-1}.
inline std::vector<Rational> hermite_power(int k) {
  std::vector<Rational> prev{Rational(1)}, cur{Rational(0), Rational(2)};
  if (k == 0) return prev;
  for (int j = 1; j < k; ++j) {
    std::vector<Rational> next(j + 2, Rational(0));
    for (int i = 0; i <= j; ++i) next[i + 1] += 2 * cur[i];
    for (int i = 0; i < static_cast<int>(prev.size()); ++i) next[i] -= 2 * j * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

template <class S>
Poly<S> from_field(const gauss_hodge::ScalarField<S>& f) {
  Poly<S> out(f.dim());
  for (const auto& [k, v] : f.coeffs()) {
    Poly<S> term = Poly<S>::constant(f.dim(), v);
    for (int a = 0; a < f.dim(); ++a) {
      Poly<S> h(f.dim());
      const auto pw = hermite_power(k[a]);
      for (int i = 0; i < static_cast<int>(pw.size()); ++i) {
        Exponent e(f.dim(), 0);
        e[a] = i;
        h.add(e, S(pw[i]));
      }
      term = term * h;
    }
    out += term;
  }
  return out;
}

template <class S>
S eval(const Poly<S>& p, const std::vector<gauss_hodge::RealOf<S>>& x) {
  S acc(0);
  for (const auto& [e, v] : p.c) {
    gauss_hodge::RealOf<S> mono(1);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int j = 0; j < e[i]; ++j) mono *= x[i];
    acc += v * S(mono);
  }
  return acc;
}

// Sign of the permutation sorting `seq`, 0 on a repeated entry.
inline int sort_sign(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b) {
      if (seq[a] == seq[b]) return 0;
      if (seq[a] > seq[b]) ++inversions;
    }
  return inversions % 2 ? -1 : 1;
}

// Real p-forms as {sorted axes -> coefficient}.
template <class S>
using Form = std::map<std::vector<int>, Poly<S>>;

template <class S>
Form<S> from_form(const gauss_hodge::PForm<S>& f) {
  Form<S> out;
  for (const auto& [I, field] : f.components()) out[I.axes()] = from_field(field);
  return out;
}

template <class S>
void add_to(Form<S>& f, const std::vector<int>& axes, const Poly<S>& p) {
  auto it = f.find(axes);
  if (it == f.end()) it = f.emplace(axes, Poly<S>(p.m)).first;
  it->second += p;
  if (it->second.zero()) f.erase(it);
}

template <class S>
Form<S> d(const Form<S>& u, int n) {
  Form<S> out;
  for (const auto& [I, p] : u)
    for (int j = 1; j <= n; ++j) {
      std::vector<int> seq{j};
      seq.insert(seq.end(), I.begin(), I.end());
      const int s = sort_sign(seq);
      if (s == 0) continue;
      std::sort(seq.begin(), seq.end());
      add_to(out, seq, S(s) * p.diff(j));
    }
  return out;
}

// A_I = -sum_j (d/dx_j - 2 x_j) alpha_{jI}, alpha_{jI} read through sort signs.
template <class S>
Form<S> codiff(const Form<S>& a, int n) {
  Form<S> out;
  for (const auto& [M, p] : a)
    for (std::size_t pos = 0; pos < M.size(); ++pos) {
      const int j = M[pos];
      std::vector<int> I = M;
      I.erase(I.begin() + pos);
      std::vector<int> seq{j};
      seq.insert(seq.end(), I.begin(), I.end());
      const int s = sort_sign(seq);  // alpha_{jI} = s * alpha_M
      const Poly<S> twist = p.diff(j) - S(2) * (Poly<S>::var(n, j) * p);
      add_to(out, I, S(-s) * twist);
    }
  return out;
}

template <class S>
S inner(const Form<S>& a, const Form<S>& b) {
  S acc(0);
  for (const auto& [I, p] : a) {
    auto it = b.find(I);
    if (it != b.end()) acc += inner(p, it->second);
  }
  return acc;
}

// Complex-coordinate helpers on R^{2n}: z_j = x_{2j-1} + i x_{2j}.
using CPoly = Poly<Complex<Rational>>;

inline CPoly z(int n, int j) {
  return CPoly::var(2 * n, 2 * j - 1) + Complex<Rational>::i() * CPoly::var(2 * n, 2 * j);
}
inline CPoly zbar(int n, int j) {
  return CPoly::var(2 * n, 2 * j - 1) - Complex<Rational>::i() * CPoly::var(2 * n, 2 * j);
}
inline CPoly dz(const CPoly& p, int j) {
  return Complex<Rational>(Rational(1, 2)) *
         (p.diff(2 * j - 1) - Complex<Rational>::i() * p.diff(2 * j));
}
inline CPoly dzbar(const CPoly& p, int j) {
  return Complex<Rational>(Rational(1, 2)) *
         (p.diff(2 * j - 1) + Complex<Rational>::i() * p.diff(2 * j));
}

}  // namespace oracle
