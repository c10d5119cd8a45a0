#pragma once

#include <map>
#include <string>

#include "iwahori/rational.hpp"

namespace iwahori {

/// Exact element of a cyclotomic field: a finite sum of c * exp(2 pi i a)
/// with rational c and rational phase a taken mod 1. Used for values of
/// characters mixing q-powers, n-th roots of unity and psi.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(const Rational& c) { add_term(c, 0); }  // NOLINT(google-explicit-constructor)
  static Cyclotomic root_of_unity(const Rational& phase) {
    Cyclotomic z;
    z.add_term(1, phase);
    return z;
  }
  /// exp(2 pi i k / n)
  static Cyclotomic zeta(long n, long k) { return root_of_unity(Rational(k, n)); }

  void add_term(Rational coeff, const Rational& phase);
  const std::map<Rational, Rational>& terms() const { return terms_; }

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic operator-() const;

  /// Decides vanishing exactly by rewriting into a basis of Q(zeta_L).
  bool is_zero() const;
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return (a - b).is_zero(); }

  /// Terms with the same phase merged; not a canonical form across phases.
  std::string to_string() const;

 private:
  // phase in [0,1) -> nonzero coefficient
  std::map<Rational, Rational> terms_;
};

}  // namespace iwahori
