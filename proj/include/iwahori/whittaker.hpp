#pragma once

// The Iwahori-fixed Whittaker function W of a (generalized) Steinberg
// representation of GL(n), normalized by W(1) = 1. Here eps = zeta_n^eps_exp
// is the eigenvalue of X_u on W, W(g u) = eps W(g), and X_{s_i} acts by -1.
//
//   W(n p^k w j) = psi(n) eps^{|k|} (-1)^{(n-1)|k|} delta_B(p^k) (-q)^{-l(w)}
//
// when k is w-dominant and 0 otherwise, with |k| = k_1 + ... + k_n.

#include <cstdint>
#include <string>

#include "iwahori/affine_weyl.hpp"
#include "iwahori/cyclotomic.hpp"
#include "iwahori/report.hpp"

namespace iwahori {

struct WhittakerParams {
  int n = 2;
  long p = 2;
  int eps_exp = 0;
};

/// Zero, or sign * zeta_n^eps_exp * q^q_exp * exp(2 pi i psi_phase). The
/// eps_exp field is the exponent of the primitive root zeta_n, already
/// multiplied through by the configured eps exponent.
class WhittakerValue {
 public:
  static WhittakerValue zero(int n) { return WhittakerValue(n); }
  static WhittakerValue one(int n) { return monomial(n, 1, 0, 0); }
  static WhittakerValue monomial(int n, int sign, int eps_exp, int q_exp, const Rational& psi_phase = 0);

  int modulus() const { return n_; }
  bool is_zero() const { return zero_; }
  int sign() const { return sign_; }
  int eps_exp() const { return eps_exp_; }
  int q_exp() const { return q_exp_; }
  const Rational& psi_phase() const { return psi_; }

  friend WhittakerValue operator*(const WhittakerValue& a, const WhittakerValue& b);
  /// Throws std::domain_error on zero.
  WhittakerValue inverse() const;
  WhittakerValue with_psi(const Rational& phase) const;

  /// Field-wise comparison of canonical forms.
  friend bool operator==(const WhittakerValue& a, const WhittakerValue& b);

  /// Specializes q = p.
  Cyclotomic to_cyclotomic(long p) const;
  std::string to_string() const;

 private:
  explicit WhittakerValue(int n) : n_(n) {}
  int n_;
  bool zero_ = true;
  int sign_ = 1;
  int eps_exp_ = 0;
  int q_exp_ = 0;
  Rational psi_ = 0;
};

/// Support predicate: k is w-dominant.
bool support(const Weight& k, const Permutation& w);

/// Closed form at the cell p^k w.
WhittakerValue eval_cell(const Weight& k, const Permutation& w, const WhittakerParams& params);

/// Value at an arbitrary invertible matrix: psi of the superdiagonal of the
/// N-witness times the cell value. The prime and n come from g.
WhittakerValue eval_matrix(const PAdicMatrix& g, int eps_exp);

/// Independent evaluation by recursion. Dominant diagonal values come from
///   W(p^{k + e_i}) = eps (-q)^{-(n+1-2i)} W(p^k),
/// (the X_u relation combined with W(p^k v) = (-q)^{-l(v)} W(p^k)), walked
/// down from the central element p^{(k_1,..,k_1)}, where W equals `base`.
/// Other cells use W(p^k w) = (-q)^{-l(w)} W(d_w^{-1})^{-1} W(p^k d_w^{-1})
/// with the constant W(d_w^{-1}) taken from the W(1) = 1 normalization.
WhittakerValue eval_recursive(const Weight& k, const Permutation& w, const WhittakerParams& params,
                              const WhittakerValue& base);
WhittakerValue eval_recursive(const Weight& k, const Permutation& w, const WhittakerParams& params);

/// Checks at random g spanning many cells:
///   sum_t W(g x_i(t) s_i) = -W(g) for i = 0..n-1,
///   W(g u) = eps W(g) and W(p g) = W(g).
SuiteReport verify_functional_equations(const WhittakerParams& params, int samples, std::uint64_t seed);

struct ParahoricCertificate {
  int index = 1;
  WhittakerValue at_boundary_cell;  // W(d_{s_i} s_i)
  WhittakerValue at_diagonal;       // W(d_{s_i})
  bool certified() const { return !at_boundary_cell.is_zero() && at_diagonal.is_zero(); }
};

/// W(g s_i) differs from W(g) at g = d_{s_i}, so the Iwahori-fixed vector is
/// not fixed by the parahoric containing s_i.
ParahoricCertificate parahoric_check(int i, const WhittakerParams& params);

/// Functional equations plus a parahoric certificate for every simple s_i.
SuiteReport verify_whittaker(const WhittakerParams& params, int samples, std::uint64_t seed);

/// eval_matrix restricted to det g = 1; throws std::invalid_argument otherwise.
WhittakerValue eval_sl(const PAdicMatrix& g, int eps_exp);

}  // namespace iwahori
