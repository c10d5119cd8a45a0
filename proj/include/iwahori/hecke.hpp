#pragma once

// Iwahori-Hecke algebra H(G,J) of GL(n) in the Iwahori-Matsumoto
// presentation. Elements are finite combinations of T_x, x in the extended
// affine Weyl group, with coefficients in Z[zeta]/(zeta^n - 1)[q, 1/q].

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "iwahori/affine_weyl.hpp"
#include "iwahori/cyclotomic.hpp"
#include "iwahori/report.hpp"

namespace iwahori {

/// Laurent polynomial in the formal residue cardinality q with coefficients
/// in the group ring Z[zeta]/(zeta^n - 1), zeta a formal primitive n-th root
/// of unity. Zero coefficients are never stored.
class Coefficient {
 public:
  explicit Coefficient(int n) : n_(n) {}
  static Coefficient constant(int n, const Integer& c) { return monomial(n, c, 0, 0); }
  static Coefficient q(int n) { return monomial(n, 1, 1, 0); }
  static Coefficient zeta(int n, int k) { return monomial(n, 1, 0, k); }
  /// c q^q_exp zeta^zeta_exp
  static Coefficient monomial(int n, const Integer& c, int q_exp, int zeta_exp);

  int modulus() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  /// (q exponent, zeta exponent mod n) -> integer coefficient
  const std::map<std::pair<int, int>, Integer>& terms() const { return terms_; }

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend bool operator==(const Coefficient&, const Coefficient&) = default;

  /// q -> p and zeta -> exp(2 pi i / n).
  Cyclotomic specialize(long p) const;
  std::string to_string() const;

 private:
  void add(std::pair<int, int> key, const Integer& c);
  int n_;
  std::map<std::pair<int, int>, Integer> terms_;
};

enum class Side { left, right };

class HeckeElement {
 public:
  explicit HeckeElement(int n) : n_(n) {}
  static HeckeElement basis(const ExtAffineElement& x);
  static HeckeElement generator(int n, int i) { return basis(ExtAffineElement::simple_reflection(n, i)); }
  static HeckeElement rotation(int n) { return basis(ExtAffineElement::rotation(n)); }
  static HeckeElement unit(int n) { return basis(ExtAffineElement::identity(n)); }

  int size() const { return n_; }
  const std::map<ExtAffineElement, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const ExtAffineElement& x, const Coefficient& c);

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const Coefficient& c, const HeckeElement& h);
  /// Expands the right factor along reduced words.
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  /// Every index shifted by a multiple of (1,..,1) to lambda_n = 0.
  HeckeElement normalize_central() const;

  std::string to_string() const;

 private:
  int n_;
  std::map<ExtAffineElement, Coefficient> terms_;
};

/// h T_{s_i}: T_x T_s = T_{xs} if l(xs) > l(x), else q T_{xs} + (q-1) T_x.
HeckeElement mult_generator(const HeckeElement& h, int i);
/// T_{s_i} h, the mirror rule with l(s x).
HeckeElement left_mult_generator(int i, const HeckeElement& h);
/// h T_u^power (right) or T_u^power h (left); u has length zero.
HeckeElement mult_u(const HeckeElement& h, Side side, int power = 1);

/// The Steinberg character: rho(T_{s_i}) = -1 and rho(T_u) = (-1)^{n-1} eps
/// with eps = zeta^eps_exp, so rho(T_x) = ((-1)^{n-1} eps)^m (-1)^{l(x)} for
/// x = u^m y, y in the affine Weyl group.
Coefficient steinberg_character(const ExtAffineElement& x, int eps_exp);
Coefficient steinberg_character(const HeckeElement& h, int eps_exp);

struct RelationCheck {
  std::string family;    // quadratic, rotation_power, rotation_conjugation, braid, commute
  std::string instance;  // e.g. "s0*s2 = s2*s0"
  bool algebra_ok = false;
  bool character_ok = false;
};

struct PresentationReport {
  int n = 0;
  std::vector<RelationCheck> checks;
  bool all_passed() const;
  int count(const std::string& family) const;
};

/// Checks every instance of the five relation families as normal-form
/// identities in symbolic q, and that rho takes equal values on both sides
/// for every eps exponent. Rotation relations are compared modulo the
/// centre. Requires 2 <= n <= 5.
PresentationReport verify_presentation(int n);

/// One tally per relation family.
SuiteReport to_suite_report(const PresentationReport& report);

}  // namespace iwahori
