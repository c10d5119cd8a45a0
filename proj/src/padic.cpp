#include "iwahori/padic.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace iwahori {

namespace {

int valuation_of(const Integer& z, long p) {
  if (z == 0) return kInfiniteValuation;
  Integer r = z;
  const Integer pp(p);
  int v = 0;
  while (mpz_divisible_p(r.get_mpz_t(), pp.get_mpz_t())) {
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), pp.get_mpz_t());
    ++v;
  }
  return v;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw SingularMatrixError("element not invertible mod p");
  return ((t % p) + p) % p;
}

}  // namespace

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int valuation(const Rational& x, long p) {
  if (x == 0) return kInfiniteValuation;
  return valuation_of(x.get_num(), p) - valuation_of(x.get_den(), p);
}

Rational psi_phase(const Rational& x, long p) {
  if (x == 0) return 0;
  const int m = valuation_of(x.get_den(), p);
  if (m == 0) return 0;
  const Integer pm = power_of(p, m).get_num();
  Integer cofactor;
  mpz_divexact(cofactor.get_mpz_t(), x.get_den().get_mpz_t(), pm.get_mpz_t());
  Integer inv;
  mpz_invert(inv.get_mpz_t(), cofactor.get_mpz_t(), pm.get_mpz_t());
  Integer r = x.get_num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), pm.get_mpz_t());
  Rational phase(r, pm);
  phase.canonicalize();
  return phase;
}

Rational PAdicScalar::abs() const {
  if (value == 0) return 0;
  return power_of(prime, -valuation());
}

// --- PAdicMatrix ------------------------------------------------------------

PAdicMatrix::PAdicMatrix(int n, long p) : n_(n), p_(p), a_(static_cast<std::size_t>(n * n)) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
}

PAdicMatrix::PAdicMatrix(long p, std::vector<std::vector<Rational>> rows)
    : PAdicMatrix(static_cast<int>(rows.size()), p) {
  for (int i = 1; i <= n_; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != n_) throw std::invalid_argument("matrix is not square");
    for (int j = 1; j <= n_; ++j) (*this)(i, j) = row[static_cast<std::size_t>(j - 1)];
  }
}

PAdicMatrix PAdicMatrix::identity(int n, long p) {
  PAdicMatrix m(n, p);
  for (int i = 1; i <= n; ++i) m(i, i) = 1;
  return m;
}

PAdicMatrix PAdicMatrix::root_element(int n, long p, int i, int j, const Rational& t) {
  if (i == j) throw std::invalid_argument("root element needs i != j");
  PAdicMatrix m = identity(n, p);
  m(i, j) = t;
  return m;
}

PAdicMatrix PAdicMatrix::torus(const Weight& k, long p) {
  PAdicMatrix m(k.size(), p);
  for (int i = 1; i <= k.size(); ++i) m(i, i) = power_of(p, k[i]);
  return m;
}

PAdicMatrix PAdicMatrix::diagonal(const std::vector<Rational>& entries, long p) {
  PAdicMatrix m(static_cast<int>(entries.size()), p);
  for (int i = 1; i <= m.size(); ++i) m(i, i) = entries[static_cast<std::size_t>(i - 1)];
  return m;
}

PAdicMatrix PAdicMatrix::permutation(const Permutation& w, long p) {
  PAdicMatrix m(w.size(), p);
  for (int j = 1; j <= w.size(); ++j) m(w(j), j) = 1;
  return m;
}

PAdicMatrix operator*(const PAdicMatrix& x, const PAdicMatrix& y) {
  if (x.n_ != y.n_ || x.p_ != y.p_) throw std::invalid_argument("matrix shape or prime mismatch");
  PAdicMatrix out(x.n_, x.p_);
  for (int i = 1; i <= x.n_; ++i) {
    for (int l = 1; l <= x.n_; ++l) {
      const Rational& a = x(i, l);
      if (a == 0) continue;
      for (int j = 1; j <= x.n_; ++j) {
        if (y(l, j) != 0) out(i, j) += a * y(l, j);
      }
    }
  }
  return out;
}

PAdicMatrix PAdicMatrix::scaled(const Rational& c) const {
  PAdicMatrix out = *this;
  for (auto& v : out.a_) v *= c;
  return out;
}

Rational PAdicMatrix::determinant() const {
  PAdicMatrix m = *this;
  Rational det = 1;
  for (int c = 1; c <= n_; ++c) {
    int pivot = 0;
    for (int r = c; r <= n_; ++r) {
      if (m(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == 0) return 0;
    if (pivot != c) {
      for (int j = 1; j <= n_; ++j) std::swap(m(pivot, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (int r = c + 1; r <= n_; ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (int j = c; j <= n_; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

PAdicMatrix PAdicMatrix::inverse() const {
  PAdicMatrix m = *this;
  PAdicMatrix inv = identity(n_, p_);
  for (int c = 1; c <= n_; ++c) {
    int pivot = 0;
    for (int r = c; r <= n_; ++r) {
      if (m(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == 0) throw SingularMatrixError("matrix is singular");
    for (int j = 1; j <= n_; ++j) {
      std::swap(m(pivot, j), m(c, j));
      std::swap(inv(pivot, j), inv(c, j));
    }
    const Rational s = 1 / m(c, c);
    for (int j = 1; j <= n_; ++j) {
      m(c, j) *= s;
      inv(c, j) *= s;
    }
    for (int r = 1; r <= n_; ++r) {
      if (r == c || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (int j = 1; j <= n_; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

int PAdicMatrix::min_valuation() const {
  int v = kInfiniteValuation;
  for (const auto& x : a_) v = std::min(v, valuation(x, p_));
  return v;
}

bool PAdicMatrix::integral() const { return min_valuation() >= 0; }

bool PAdicMatrix::upper_triangular() const {
  for (int i = 2; i <= n_; ++i) {
    for (int j = 1; j < i; ++j) {
      if ((*this)(i, j) != 0) return false;
    }
  }
  return true;
}

bool PAdicMatrix::upper_unitriangular() const {
  if (!upper_triangular()) return false;
  for (int i = 1; i <= n_; ++i) {
    if ((*this)(i, i) != 1) return false;
  }
  return true;
}

bool PAdicMatrix::is_diagonal() const {
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (i != j && (*this)(i, j) != 0) return false;
    }
  }
  return true;
}

bool PAdicMatrix::in_maximal_compact() const {
  return integral() && valuation(determinant(), p_) == 0;
}

bool PAdicMatrix::in_iwahori() const {
  if (!in_maximal_compact()) return false;
  for (int i = 2; i <= n_; ++i) {
    for (int j = 1; j < i; ++j) {
      if (valuation((*this)(i, j), p_) < 1) return false;
    }
  }
  return true;
}

std::string PAdicMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= n_; ++i) {
    os << (i > 1 ? "," : "") << '[';
    for (int j = 1; j <= n_; ++j) os << (j > 1 ? "," : "") << iwahori::to_string((*this)(i, j));
    os << ']';
  }
  os << ']';
  return os.str();
}

// --- ResidueMatrix ----------------------------------------------------------

ResidueMatrix::ResidueMatrix(int n, long p) : n_(n), p_(p), a_(static_cast<std::size_t>(n * n), 0) {}

ResidueMatrix ResidueMatrix::identity(int n, long p) {
  ResidueMatrix m(n, p);
  for (int i = 1; i <= n; ++i) m.set(i, i, 1);
  return m;
}

ResidueMatrix ResidueMatrix::reduce(const PAdicMatrix& m) {
  const long p = m.prime();
  ResidueMatrix out(m.size(), p);
  const Integer pp(p);
  for (int i = 1; i <= m.size(); ++i) {
    for (int j = 1; j <= m.size(); ++j) {
      const Rational& x = m(i, j);
      if (valuation(x, p) < 0) throw std::domain_error("entry is not p-integral");
      Integer num = x.get_num(), den = x.get_den(), inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
      Integer r = num * inv;
      mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), pp.get_mpz_t());
      out.set(i, j, r.get_si());
    }
  }
  return out;
}

void ResidueMatrix::set(int i, int j, std::int64_t v) { a_[index(i, j)] = ((v % p_) + p_) % p_; }

ResidueMatrix operator*(const ResidueMatrix& x, const ResidueMatrix& y) {
  if (x.n_ != y.n_ || x.p_ != y.p_) throw std::invalid_argument("matrix shape or prime mismatch");
  ResidueMatrix out(x.n_, x.p_);
  for (int i = 1; i <= x.n_; ++i) {
    for (int j = 1; j <= x.n_; ++j) {
      std::int64_t s = 0;
      for (int l = 1; l <= x.n_; ++l) s = (s + x(i, l) * y(l, j)) % x.p_;
      out.set(i, j, s);
    }
  }
  return out;
}

bool ResidueMatrix::upper_triangular() const {
  for (int i = 2; i <= n_; ++i) {
    for (int j = 1; j < i; ++j) {
      if ((*this)(i, j) != 0) return false;
    }
  }
  return true;
}

PAdicMatrix ResidueMatrix::lift() const {
  PAdicMatrix out(n_, p_);
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) out(i, j) = static_cast<long>((*this)(i, j));
  }
  return out;
}

// --- decompositions ---------------------------------------------------------

IwasawaFactors iwasawa(const PAdicMatrix& g) {
  const int n = g.size();
  const long p = g.prime();
  PAdicMatrix b = g;
  // Every right multiplication E applied to b is undone on k as k <- E^{-1} k.
  PAdicMatrix k = PAdicMatrix::identity(n, p);
  for (int i = n; i >= 1; --i) {
    int pivot = 0;
    int best = kInfiniteValuation;
    for (int c = 1; c <= i; ++c) {
      const int v = valuation(b(i, c), p);
      if (v < best) {
        best = v;
        pivot = c;
      }
    }
    if (pivot == 0) throw SingularMatrixError("matrix is singular");
    if (pivot != i) {
      for (int r = 1; r <= n; ++r) std::swap(b(r, pivot), b(r, i));
      for (int c = 1; c <= n; ++c) std::swap(k(pivot, c), k(i, c));
    }
    const Rational unit_scale = power_of(p, best) / b(i, i);
    for (int r = 1; r <= n; ++r) b(r, i) *= unit_scale;
    for (int c = 1; c <= n; ++c) k(i, c) /= unit_scale;
    for (int j = 1; j < i; ++j) {
      if (b(i, j) == 0) continue;
      const Rational coef = -b(i, j) / b(i, i);
      for (int r = 1; r <= n; ++r) b(r, j) += coef * b(r, i);
      for (int c = 1; c <= n; ++c) k(i, c) -= coef * k(j, c);
    }
  }
  return IwasawaFactors{std::move(b), std::move(k)};
}

ResidueBruhat residue_bruhat(const ResidueMatrix& m) {
  const int n = m.size();
  const long p = m.prime();
  ResidueMatrix work = m;
  // work = L m R; track L^{-1} and R^{-1} directly.
  ResidueMatrix l_inv = ResidueMatrix::identity(n, p);
  ResidueMatrix r_inv = ResidueMatrix::identity(n, p);
  std::vector<bool> pivoted(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> window(static_cast<std::size_t>(n), 0);
  for (int c = 1; c <= n; ++c) {
    int r = 0;
    for (int i = n; i >= 1; --i) {
      if (!pivoted[static_cast<std::size_t>(i)] && work(i, c) != 0) {
        r = i;
        break;
      }
    }
    if (r == 0) throw SingularMatrixError("matrix is singular mod p");
    pivoted[static_cast<std::size_t>(r)] = true;
    window[static_cast<std::size_t>(c - 1)] = r;
    const std::int64_t inv = mod_inverse(work(r, c), p);
    for (int i = 1; i < r; ++i) {
      const std::int64_t f = (p - work(i, c) * inv % p) % p;
      if (f == 0) continue;
      // row_i += f row_r; L^{-1} <- L^{-1} (I - f e_{i,r}).
      for (int j = 1; j <= n; ++j) work.set(i, j, work(i, j) + f * work(r, j));
      for (int row = 1; row <= n; ++row) l_inv.set(row, r, l_inv(row, r) - f * l_inv(row, i));
    }
    for (int j = c + 1; j <= n; ++j) {
      const std::int64_t f = (p - work(r, j) * inv % p) % p;
      if (f == 0) continue;
      // col_j += f col_c; R^{-1} <- (I - f e_{c,j}) R^{-1}.
      for (int i = 1; i <= n; ++i) work.set(i, j, work(i, j) + f * work(i, c));
      for (int col = 1; col <= n; ++col) r_inv.set(c, col, r_inv(c, col) - f * r_inv(j, col));
    }
  }
  // work = P_w D with D_c = work(w(c), c); b2 = D R^{-1}.
  ResidueMatrix diag(n, p);
  for (int c = 1; c <= n; ++c) diag.set(c, c, work(window[static_cast<std::size_t>(c - 1)], c));
  return ResidueBruhat{Permutation(std::move(window)), l_inv, diag * r_inv};
}

PAdicMatrix Cell::reconstruct() const {
  const long p = n_factor.prime();
  return n_factor * PAdicMatrix::torus(kbar, p) * t0_factor * PAdicMatrix::permutation(w, p) *
         j_factor;
}

Cell iwahori_cell(const PAdicMatrix& g) {
  const int n = g.size();
  const long p = g.prime();
  auto [b, k] = iwasawa(g);

  Weight kbar = Weight::zero(n);
  for (int i = 1; i <= n; ++i) kbar[i] = valuation(b(i, i), p);
  const PAdicMatrix d = PAdicMatrix::torus(kbar, p);
  const PAdicMatrix n0 = b * PAdicMatrix::torus(-kbar, p);

  const ResidueBruhat rb = residue_bruhat(ResidueMatrix::reduce(k));
  const PAdicMatrix b1 = rb.b1.lift();
  PAdicMatrix j = PAdicMatrix::permutation(rb.w.inverse(), p) * b1.inverse() * k;
  if (!j.in_iwahori()) throw std::logic_error("iwahori_cell: J-witness left the Iwahori subgroup");

  // b1 = t0 n1 and d t0 n1 = (d t0 n1 (d t0)^{-1}) d t0.
  std::vector<Rational> units;
  for (int i = 1; i <= n; ++i) units.push_back(b1(i, i));
  PAdicMatrix t0 = PAdicMatrix::diagonal(units, p);
  const PAdicMatrix dt0 = d * t0;
  const PAdicMatrix n1 = t0.inverse() * b1;
  PAdicMatrix n_factor = n0 * dt0 * n1 * dt0.inverse();

  Cell cell{std::move(kbar), rb.w, std::move(n_factor), std::move(t0), std::move(j)};
  if (!cell.n_factor.upper_unitriangular() || cell.reconstruct() != g) {
    throw std::logic_error("iwahori_cell: witness product does not reproduce g");
  }
  return cell;
}

}  // namespace iwahori
