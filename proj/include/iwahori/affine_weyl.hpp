#pragma once

// Extended affine Weyl group Z^n x| S_n of GL(n). The pair (lambda, w)
// stands for the monomial matrix diag(p^lambda) P_w, so
//   (lambda, w)(mu, v) = (lambda + w.mu, w v).
// Generators: s_1..s_{n-1} (finite), s_0 = ((-1,0,..,0,1), (1 n)) and the
// length-zero rotation u = ((0,..,0,1), s_{n-1}...s_1). With these matrices
// u s_i u^{-1} = s_{i-1 mod n}.

#include <compare>
#include <string>
#include <vector>

#include "iwahori/padic.hpp"
#include "iwahori/weyl.hpp"

namespace iwahori {

class ExtAffineElement {
 public:
  ExtAffineElement(Weight lambda, Permutation w);

  static ExtAffineElement identity(int n);
  static ExtAffineElement translation(const Weight& lambda);
  static ExtAffineElement finite(const Permutation& w);
  /// s_i for 0 <= i <= n-1; s_0 is the affine reflection.
  static ExtAffineElement simple_reflection(int n, int i);
  static ExtAffineElement rotation(int n);

  int size() const { return w_.size(); }
  const Weight& lambda() const { return lambda_; }
  const Permutation& w() const { return w_; }

  /// Sum of lambda: the exponent m with x u^{-m} in the affine Weyl group.
  int rotation_degree() const { return lambda_.sum(); }

  ExtAffineElement inverse() const;
  ExtAffineElement power(int m) const;
  /// Shifts lambda by a multiple of (1,..,1) so that lambda_n = 0.
  ExtAffineElement normalize_central() const;
  bool is_identity() const { return w_.is_identity() && lambda_ == Weight::zero(size()); }

  friend ExtAffineElement operator*(const ExtAffineElement& x, const ExtAffineElement& y);
  friend bool operator==(const ExtAffineElement&, const ExtAffineElement&) = default;
  friend auto operator<=>(const ExtAffineElement&, const ExtAffineElement&) = default;

  std::string to_string() const;

 private:
  Weight lambda_;
  Permutation w_;
};

/// Length: the distance from the identity to x u^{-m} in the Cayley graph on
/// s_0..s_{n-1}. Breadth-first search with a process-wide memo that is safe
/// to use from several threads. Throws std::length_error past the search cap.
int length_ext(const ExtAffineElement& x);

/// Closed form sum_{i<j} |<alpha_ij, lambda> + [w^{-1}(i) > w^{-1}(j)]|,
/// validated against length_ext in the tests.
int length_ext_formula(const ExtAffineElement& x);

struct ReducedWord {
  std::vector<int> letters;  // generator indices 0..n-1
  int rotation = 0;          // x = s_{letters[0]} ... s_{letters.back()} u^rotation
};

ReducedWord reduced_word(const ExtAffineElement& x);

/// diag(p^lambda) P_w.
PAdicMatrix realize(const ExtAffineElement& x, long p);

/// A generator of the Iwahori-Hecke algebra with a closed-form coset
/// decomposition: s_i (0 <= i <= n-1) or the rotation u.
struct Generator {
  enum class Kind { reflection, rotation };
  Kind kind = Kind::reflection;
  int index = 0;

  static Generator s(int i) { return Generator{Kind::reflection, i}; }
  static Generator u() { return Generator{Kind::rotation, 0}; }
  std::string to_string() const;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// gamma_t with J x J = disjoint union of gamma_t J: x_{i,i+1}(t) P_{s_i} for
/// s_i, x_{n,1}(p t) M_{s_0} for s_0 (t in {0..p-1}), and M_u alone for u.
std::vector<PAdicMatrix> coset_representatives(const Generator& gen, int n, long p);

/// Representatives for s_0 obtained by conjugating those of s_1 by u.
std::vector<PAdicMatrix> affine_coset_representatives_by_rotation(int n, long p);

}  // namespace iwahori
