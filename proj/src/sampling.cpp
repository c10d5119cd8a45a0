#include "iwahori/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace iwahori {

long uniform(Rng& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

Rational random_rational(Rng& rng, long p, int min_valuation, long numerator_bound) {
  long den = 1;
  do {
    den = uniform(rng, 1, 4);
  } while (den % p == 0);
  const int shift = static_cast<int>(uniform(rng, min_valuation, std::max(min_valuation, 1)));
  Rational x(uniform(rng, -numerator_bound, numerator_bound), den);
  x.canonicalize();
  // A numerator divisible by p only raises the valuation, so the floor holds.
  return x * power_of(p, shift);
}

Rational random_unit(Rng& rng, long p) {
  for (;;) {
    long num = uniform(rng, -6, 6);
    long den = uniform(rng, 1, 4);
    if (num % p != 0 && den % p != 0) {
      Rational x(num, den);
      x.canonicalize();
      return x;
    }
  }
}

Permutation random_permutation(Rng& rng, int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    std::swap(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(uniform(rng, 0, i))]);
  }
  return Permutation(std::move(w));
}

PAdicMatrix random_unipotent(Rng& rng, int n, long p, int min_valuation) {
  PAdicMatrix m = PAdicMatrix::identity(n, p);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) m(i, j) = random_rational(rng, p, min_valuation);
  }
  return m;
}

PAdicMatrix random_torus_units(Rng& rng, int n, long p) {
  std::vector<Rational> units;
  for (int i = 0; i < n; ++i) units.push_back(random_unit(rng, p));
  return PAdicMatrix::diagonal(units, p);
}

PAdicMatrix random_iwahori(Rng& rng, int n, long p) {
  PAdicMatrix m(n, p);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) {
        m(i, j) = random_unit(rng, p);
      } else {
        m(i, j) = random_rational(rng, p, i > j ? 1 : 0, 3);
      }
    }
  }
  return m;
}

StructuredSample random_structured(Rng& rng, int n, long p, const SampleShape& shape) {
  Weight k = Weight::zero(n);
  for (int i = 1; i <= n; ++i) k[i] = static_cast<int>(uniform(rng, -shape.weight_bound, shape.weight_bound));
  const Permutation w = random_permutation(rng, n);
  const PAdicMatrix g = random_unipotent(rng, n, p, shape.unipotent_valuation) * PAdicMatrix::torus(k, p) *
                        random_torus_units(rng, n, p) * PAdicMatrix::permutation(w, p) *
                        random_iwahori(rng, n, p);
  return StructuredSample{g, k, w};
}

}  // namespace iwahori
