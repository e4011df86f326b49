#include "gauss_hodge/synth.hpp"

#include <stdexcept>

namespace gauss_hodge {

Rng trial_rng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(stream)};
  return Rng(seq);
}

int uniform_int(Rng& rng, int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("empty integer range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

namespace {

int nonzero_digit(Rng& rng) {
  const int v = uniform_int(rng, 1, 9);
  return uniform_int(rng, 0, 1) ? v : -v;
}

template <class S>
S random_scalar(Rng& rng) {
  using R = RealOf<S>;
  if constexpr (is_complex_v<S>) {
    int re = uniform_int(rng, -9, 9);
    int im = uniform_int(rng, -9, 9);
    if (re == 0 && im == 0) re = nonzero_digit(rng);
    return S(R(re), R(im));
  } else {
    return S(nonzero_digit(rng));
  }
}

Degree random_degree(Rng& rng, int m, int total) {
  Degree k(static_cast<std::size_t>(m), 0);
  for (int t = 0; t < total; ++t) ++k[uniform_int(rng, 0, m - 1)];
  return k;
}

}  // namespace

template <class S>
ScalarField<S> random_field(Rng& rng, int m, int max_degree, int capacity, int max_terms) {
  ScalarField<S> f(m, capacity);
  if (max_degree < 0) return f;
  const int terms = uniform_int(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) {
    const int total = uniform_int(rng, 0, max_degree);
    const Degree k = random_degree(rng, m, total);
    f.add_term(k, random_scalar<S>(rng));
  }
  return f;
}

template <class S>
PForm<S> random_form(Rng& rng, int n, int p, int max_degree, int capacity, int max_terms) {
  PForm<S> form(n, p, capacity);
  if (p > n) return form;
  for (const auto& I : enumerate_indices(n, p)) {
    if (uniform_int(rng, 0, 3) == 0) continue;  // leave some components empty
    form.add_to_component(I, random_field<S>(rng, n, max_degree, capacity, max_terms));
  }
  return form;
}

template <class R>
ComplexForm<R> random_complex_form(Rng& rng, int n, int p, int q, int max_degree, int capacity,
                                   int max_terms) {
  ComplexForm<R> form(n, p, q, capacity);
  if (p > n || q > n) return form;
  for (const auto& K : enumerate_indices(n, p))
    for (const auto& L : enumerate_indices(n, q)) {
      if (uniform_int(rng, 0, 3) == 0) continue;
      form.add_to_component(K, L,
                            random_field<Complex<R>>(rng, 2 * n, max_degree, capacity, max_terms));
    }
  return form;
}

template <class R>
std::vector<std::vector<R>> random_points(Rng& rng, int m, int count) {
  std::vector<std::vector<R>> pts(static_cast<std::size_t>(count));
  for (auto& x : pts) {
    x.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) x.push_back(ratio<R>(uniform_int(rng, -8, 8), 4));
  }
  return pts;
}

template ScalarField<Rational> random_field(Rng&, int, int, int, int);
template ScalarField<double> random_field(Rng&, int, int, int, int);
template ScalarField<Complex<Rational>> random_field(Rng&, int, int, int, int);
template ScalarField<Complex<double>> random_field(Rng&, int, int, int, int);
template PForm<Rational> random_form(Rng&, int, int, int, int, int);
template PForm<double> random_form(Rng&, int, int, int, int, int);
template ComplexForm<Rational> random_complex_form(Rng&, int, int, int, int, int, int);
template ComplexForm<double> random_complex_form(Rng&, int, int, int, int, int, int);
template std::vector<std::vector<Rational>> random_points(Rng&, int, int);
template std::vector<std::vector<double>> random_points(Rng&, int, int);

}  // namespace gauss_hodge
