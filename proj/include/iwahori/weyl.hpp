#pragma once

// Finite Weyl group S_n of GL(n) together with type A_{n-1} roots and
// integer weights.
//
// Conventions used everywhere in this library:
//   * a permutation is stored in one-line notation, w(i) = window[i-1], 1-based;
//   * composition is (v * w)(i) = v(w(i));
//   * the permutation matrix P_w has P_w[w(j)][j] = 1, so that
//     P_w x_{i,j}(t) P_w^{-1} = x_{w(i),w(j)}(t);
//   * a weight k acts by (w . k)_i = k_{w^{-1}(i)}, i.e. P_w diag(t) P_w^{-1}.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace iwahori {

class Permutation {
 public:
  /// Throws std::invalid_argument unless window is a bijection on {1..n}.
  explicit Permutation(std::vector<int> window);

  static Permutation identity(int n);
  /// Simple reflection s_i swapping i and i+1, 1 <= i <= n-1.
  static Permutation simple(int n, int i);
  /// Transposition (i j).
  static Permutation transposition(int n, int i, int j);
  static Permutation longest(int n);
  /// All n! permutations in lexicographic order of their windows.
  static std::vector<Permutation> all(int n);

  int size() const { return static_cast<int>(window_.size()); }
  int operator()(int i) const { return window_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& window() const { return window_; }

  Permutation inverse() const;
  bool is_identity() const;

  friend Permutation operator*(const Permutation& v, const Permutation& w);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// "[2,3,1]"
  std::string to_string() const;

 private:
  std::vector<int> window_;
};

/// The root alpha_{i,j}: diag(t) -> t_i / t_j.
struct Root {
  int i = 1;
  int j = 2;

  bool positive() const { return i < j; }
  friend bool operator==(const Root&, const Root&) = default;
};

/// Exponent vector k of the torus element diag(p^{k_1}, ..., p^{k_n}).
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> exps) : exps_(std::move(exps)) {}
  static Weight zero(int n) { return Weight(std::vector<int>(static_cast<std::size_t>(n), 0)); }
  static Weight constant(int n, int c) { return Weight(std::vector<int>(static_cast<std::size_t>(n), c)); }
  /// Unit vector e_i, 1-based.
  static Weight unit(int n, int i);

  int size() const { return static_cast<int>(exps_.size()); }
  /// 1-based access, k_i.
  int operator[](int i) const { return exps_[static_cast<std::size_t>(i - 1)]; }
  int& operator[](int i) { return exps_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& exps() const { return exps_; }

  int sum() const;
  /// <alpha_{i,j}, k> = k_i - k_j.
  int pair(const Root& alpha) const { return (*this)[alpha.i] - (*this)[alpha.j]; }
  /// sum_i (n + 1 - 2i) k_i; delta_B(p^k) = q^{-modular_exponent}.
  int modular_exponent() const;
  bool is_dominant() const;

  Weight operator-() const;
  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string to_string() const;

 private:
  std::vector<int> exps_;
};

/// (w . k)_i = k_{w^{-1}(i)}.
Weight act(const Permutation& w, const Weight& k);

/// Number of inversions i < j, w(i) > w(j).
int length(const Permutation& w);

/// alpha_{i,j} -> alpha_{w(i),w(j)}.
Root act_on_root(const Permutation& w, const Root& alpha);

/// w^{-1} has a descent at place i, i.e. w^{-1} alpha_{i,i+1} is negative.
bool inverse_descent(const Permutation& w, int i);

/// k_i - k_{i+1} >= 0 at ascents of w^{-1} and >= -1 at descents, for all i.
bool w_dominant(const Weight& k, const Permutation& w);

/// g_i = #{ j >= i : w^{-1}(j) > w^{-1}(j+1) }; g_n = 0.
Weight g_vector(const Permutation& w);

/// The element d_w, built from its defining difference conditions with
/// k_n = 0. Equals -g_vector(w).
Weight d_w(const Permutation& w);

struct AuxIdentity {
  /// Exponents of w0 d_w w0 d_{w0}.
  Weight conjugated;
  /// z with conjugated + (z,...,z) == d_{w0 w} when the identity holds.
  int central_shift = 0;
};

/// Evaluates the left side of d_{w0 w} = w0 d_w w0 d_{w0} z_w and the central
/// exponent read off the last coordinate; callers compare against d_w(w0 * w).
AuxIdentity aux_identity_check(const Permutation& w);

}  // namespace iwahori
