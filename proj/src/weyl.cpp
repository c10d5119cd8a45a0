#include "iwahori/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>


namespace iwahori {

// --- Permutation ------------------------------------------------------------

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : window_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation window");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("simple reflection index");
  return transposition(n, i, i + 1);
}

Permutation Permutation::transposition(int n, int i, int j) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(j - 1)]);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(window_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

Permutation operator*(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> out(w.window_.size());
  for (int i = 1; i <= w.size(); ++i) out[static_cast<std::size_t>(i - 1)] = v(w(i));
  return Permutation(std::move(out));
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < window_.size(); ++i) os << (i ? "," : "") << window_[i];
  os << ']';
  return os.str();
}

// --- Weight -----------------------------------------------------------------

Weight Weight::unit(int n, int i) {
  Weight k = zero(n);
  k[i] = 1;
  return k;
}

int Weight::sum() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

int Weight::modular_exponent() const {
  const int n = size();
  int e = 0;
  for (int i = 1; i <= n; ++i) e += (n + 1 - 2 * i) * (*this)[i];
  return e;
}

bool Weight::is_dominant() const {
  for (int i = 1; i < size(); ++i) {
    if ((*this)[i] < (*this)[i + 1]) return false;
  }
  return true;
}

Weight Weight::operator-() const {
  Weight out = *this;
  for (int& v : out.exps_) v = -v;
  return out;
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight size mismatch");
  Weight out = a;
  for (std::size_t i = 0; i < out.exps_.size(); ++i) out.exps_[i] += b.exps_[i];
  return out;
}

Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < exps_.size(); ++i) os << (i ? "," : "") << exps_[i];
  os << ')';
  return os.str();
}

// --- combinatorics ----------------------------------------------------------

Weight act(const Permutation& w, const Weight& k) {
  if (w.size() != k.size()) throw std::invalid_argument("weight size mismatch");
  const Permutation inv = w.inverse();
  Weight out = Weight::zero(k.size());
  for (int i = 1; i <= k.size(); ++i) out[i] = k[inv(i)];
  return out;
}

int length(const Permutation& w) {
  int inversions = 0;
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) {
      if (w(i) > w(j)) ++inversions;
    }
  }
  return inversions;
}

Root act_on_root(const Permutation& w, const Root& alpha) { return Root{w(alpha.i), w(alpha.j)}; }

bool inverse_descent(const Permutation& w, int i) {
  return !act_on_root(w.inverse(), Root{i, i + 1}).positive();
}

bool w_dominant(const Weight& k, const Permutation& w) {
  for (int i = 1; i < w.size(); ++i) {
    const int bound = inverse_descent(w, i) ? -1 : 0;
    if (k.pair(Root{i, i + 1}) < bound) return false;
  }
  return true;
}

Weight g_vector(const Permutation& w) {
  const int n = w.size();
  const Permutation inv = w.inverse();
  Weight g = Weight::zero(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j < n; ++j) {
      if (inv(j) > inv(j + 1)) ++g[i];
    }
  }
  return g;
}

Weight d_w(const Permutation& w) {
  const int n = w.size();
  Weight k = Weight::zero(n);
  for (int i = n - 1; i >= 1; --i) {
    k[i] = k[i + 1] + (inverse_descent(w, i) ? -1 : 0);
  }
  return k;
}

AuxIdentity aux_identity_check(const Permutation& w) {
  const int n = w.size();
  const Permutation w0 = Permutation::longest(n);
  // w0 is an involution, so w0 d_w w0 is the conjugation action of w0.
  const Weight conjugated = act(w0, d_w(w)) + d_w(w0);
  const Weight target = d_w(w0 * w);
  return AuxIdentity{conjugated, target[n] - conjugated[n]};
}

}  // namespace iwahori
