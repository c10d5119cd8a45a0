#pragma once

// Random group elements with a known Iwahori cell, for verification sweeps.
// Only the raw 64-bit output of std::mt19937_64 is used, so streams are
// identical across standard libraries.

#include <cstdint>
#include <random>

#include "iwahori/padic.hpp"

namespace iwahori {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
long uniform(Rng& rng, long lo, long hi);
/// a/b with v_p >= min_valuation; b has a p-free part in {1,..,4}.
Rational random_rational(Rng& rng, long p, int min_valuation, long numerator_bound = 6);
Rational random_unit(Rng& rng, long p);
Permutation random_permutation(Rng& rng, int n);
/// Upper unitriangular with entries of valuation >= min_valuation.
PAdicMatrix random_unipotent(Rng& rng, int n, long p, int min_valuation);
/// Diagonal units.
PAdicMatrix random_torus_units(Rng& rng, int n, long p);
/// Element of J: unit diagonal, integral upper part, lower part in pZ_(p).
PAdicMatrix random_iwahori(Rng& rng, int n, long p);

struct SampleShape {
  int weight_bound = 2;         // k_i in [-weight_bound, weight_bound]
  int unipotent_valuation = -2;  // valuation floor of the N factor
};

struct StructuredSample {
  PAdicMatrix g;
  Weight kbar;
  Permutation w;
};

/// g = n p^k t0 P_w j with independent random factors.
StructuredSample random_structured(Rng& rng, int n, long p, const SampleShape& shape = {});

}  // namespace iwahori
