#pragma once

// Exact matrices over Q viewed inside Q_p, the unramified additive character,
// and the decomposition G = union of N p^k w J.

#include <climits>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "iwahori/rational.hpp"
#include "iwahori/weyl.hpp"

namespace iwahori {

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

bool is_prime(long p);

/// Valuation of zero.
inline constexpr int kInfiniteValuation = INT_MAX;

/// Exponent of p in x; kInfiniteValuation for x = 0.
int valuation(const Rational& x, long p);

/// The p-adic fractional part of x in [0,1). The unramified character is
/// psi(x) = exp(2 pi i psi_phase(x)); it is trivial on Z_(p).
Rational psi_phase(const Rational& x, long p);

/// A rational number interpreted in Q_p.
struct PAdicScalar {
  Rational value;
  long prime = 2;

  int valuation() const { return iwahori::valuation(value, prime); }
  bool integral() const { return valuation() >= 0; }
  bool unit() const { return valuation() == 0; }
  /// |x| = q^{-v(x)}, exact; zero for x = 0.
  Rational abs() const;
  Rational phase() const { return psi_phase(value, prime); }
};

/// Square matrix over Q with a distinguished prime p. Indices are 1-based.
class PAdicMatrix {
 public:
  PAdicMatrix(int n, long p);
  PAdicMatrix(long p, std::vector<std::vector<Rational>> rows);

  static PAdicMatrix identity(int n, long p);
  /// x_{i,j}(t) = I + t e_{i,j}.
  static PAdicMatrix root_element(int n, long p, int i, int j, const Rational& t);
  /// diag(p^{k_1}, ..., p^{k_n}).
  static PAdicMatrix torus(const Weight& k, long p);
  static PAdicMatrix diagonal(const std::vector<Rational>& entries, long p);
  /// P_w with P_w[w(j)][j] = 1.
  static PAdicMatrix permutation(const Permutation& w, long p);

  int size() const { return n_; }
  long prime() const { return p_; }

  const Rational& operator()(int i, int j) const { return a_[index(i, j)]; }
  Rational& operator()(int i, int j) { return a_[index(i, j)]; }

  friend PAdicMatrix operator*(const PAdicMatrix& x, const PAdicMatrix& y);
  friend bool operator==(const PAdicMatrix&, const PAdicMatrix&) = default;
  PAdicMatrix scaled(const Rational& c) const;

  Rational determinant() const;
  /// Throws SingularMatrixError when not invertible.
  PAdicMatrix inverse() const;

  int min_valuation() const;
  bool integral() const;
  bool upper_triangular() const;
  bool upper_unitriangular() const;
  bool is_diagonal() const;
  /// Member of K = GL_n(Z_(p)).
  bool in_maximal_compact() const;
  /// Member of the Iwahori subgroup: in K and strictly lower entries in pZ_(p).
  bool in_iwahori() const;

  std::string to_string() const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * n_ + (j - 1));
  }
  int n_;
  long p_;
  std::vector<Rational> a_;
};

/// Square matrix over F_p with entries in {0..p-1}. Indices are 1-based.
class ResidueMatrix {
 public:
  ResidueMatrix(int n, long p);
  static ResidueMatrix identity(int n, long p);
  /// Reduction mod p of a matrix with entries in Z_(p).
  static ResidueMatrix reduce(const PAdicMatrix& m);

  int size() const { return n_; }
  long prime() const { return p_; }
  std::int64_t operator()(int i, int j) const { return a_[index(i, j)]; }
  void set(int i, int j, std::int64_t v);

  friend ResidueMatrix operator*(const ResidueMatrix& x, const ResidueMatrix& y);
  friend bool operator==(const ResidueMatrix&, const ResidueMatrix&) = default;

  bool upper_triangular() const;
  /// Lift with representatives {0..p-1}.
  PAdicMatrix lift() const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * n_ + (j - 1));
  }
  int n_;
  long p_;
  std::vector<std::int64_t> a_;
};

struct IwasawaFactors {
  PAdicMatrix b;  // upper triangular, diagonal entries exactly p^{v_i}
  PAdicMatrix k;  // in K
};

/// g = b k. Rows are reduced from the bottom; in each row the pivot is the
/// entry of minimal valuation among unused columns, ties broken by the
/// smallest column index. Throws SingularMatrixError.
IwasawaFactors iwasawa(const PAdicMatrix& g);

struct ResidueBruhat {
  Permutation w;
  ResidueMatrix b1;
  ResidueMatrix b2;
};

/// m = b1 P_w b2 with b1, b2 upper triangular over F_p. Columns are scanned
/// left to right, the pivot being the lowest unpivoted nonzero row.
ResidueBruhat residue_bruhat(const ResidueMatrix& m);

/// g = n_factor * p^kbar * t0_factor * P_w * j_factor.
struct Cell {
  Weight kbar;
  Permutation w;
  PAdicMatrix n_factor;   // upper unitriangular
  PAdicMatrix t0_factor;  // diagonal units
  PAdicMatrix j_factor;   // in J

  PAdicMatrix reconstruct() const;
};

/// Decomposes an invertible g; throws SingularMatrixError. The pair
/// (kbar, w) does not depend on pivoting choices; the witnesses do.
Cell iwahori_cell(const PAdicMatrix& g);

}  // namespace iwahori
