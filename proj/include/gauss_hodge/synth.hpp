#pragma once

// Seeded random test data.  Coefficients are nonzero integers in [-9, 9]
// placed on random Hermite basis functions, so the same draw is exact in
// both arithmetic modes.

#include <cstdint>
#include <random>
#include <vector>

#include "gauss_hodge/calculus.hpp"

namespace gauss_hodge {

using Rng = std::mt19937_64;

// Independent stream per (seed, trial, stream); stable across platforms.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream);

// Uniform on [lo, hi]; modulo reduction keeps it implementation-independent.
int uniform_int(Rng& rng, int lo, int hi);

template <class S>
ScalarField<S> random_field(Rng& rng, int m, int max_degree, int capacity, int max_terms = 4);

template <class S>
PForm<S> random_form(Rng& rng, int n, int p, int max_degree, int capacity, int max_terms = 4);

template <class R>
ComplexForm<R> random_complex_form(Rng& rng, int n, int p, int q, int max_degree, int capacity,
                                   int max_terms = 3);

// Points on the grid k/4, |k| <= 8.
template <class R>
std::vector<std::vector<R>> random_points(Rng& rng, int m, int count);

}  // namespace gauss_hodge
