#pragma once

// Iwahori-fixed vectors of the induced representation with
// f(b g) = chi(b) delta_B(b) f(g), chi = tau o det unramified with
// tau(p) = eps = exp(2 pi i eps_exp / n). The residue cardinality is q = p.

#include <cstdint>
#include <functional>
#include <map>

#include "iwahori/affine_weyl.hpp"
#include "iwahori/cyclotomic.hpp"
#include "iwahori/report.hpp"

namespace iwahori {

struct SeriesParams {
  int n = 2;
  long p = 2;
  int eps_exp = 0;
};

using Evaluator = std::function<Cyclotomic(const PAdicMatrix&)>;

/// (chi delta_B)(p^k) = eps^{sum k} q^{-sum (n+1-2i) k_i}.
Cyclotomic chi_delta(const Weight& k, long p, int eps_exp);

/// Casselman basis function f_w at g.
Cyclotomic f_eval(const Permutation& w, const PAdicMatrix& g, int eps_exp);

class InducedFunction {
 public:
  explicit InducedFunction(SeriesParams params) : params_(params) {}

  static InducedFunction basis(const Permutation& w, SeriesParams params);
  /// sum_w (-q)^{-l(w)} f_w
  static InducedFunction phi_minus(SeriesParams params);
  /// sum_w f_w
  static InducedFunction phi_plus(SeriesParams params);

  const SeriesParams& params() const { return params_; }
  const std::map<Permutation, Rational>& coefficients() const { return coeffs_; }
  void set_coefficient(const Permutation& w, const Rational& c);

  Cyclotomic operator()(const PAdicMatrix& g) const;
  Evaluator evaluator() const;

 private:
  SeriesParams params_;
  std::map<Permutation, Rational> coeffs_;
};

enum class PhiSign { minus, plus };

Cyclotomic phi_eval(PhiSign sign, const PAdicMatrix& g, int eps_exp);

/// (X_gen F)(g) = sum over coset representatives gamma of F(g gamma).
Cyclotomic apply_generator(const Evaluator& F, const Generator& gen, const PAdicMatrix& g);

/// rho(X_u) on the Steinberg line, (-1)^{n-1} eps, as an exact number.
Cyclotomic steinberg_rotation_eigenvalue(int n, int eps_exp);

/// Eigen-identities for phi-/phi+ at random points, basis triangularity,
/// right J-invariance and agreement of the two s_0 coset routes.
SuiteReport verify_principal_series(const SeriesParams& params, int samples, std::uint64_t seed);

}  // namespace iwahori
