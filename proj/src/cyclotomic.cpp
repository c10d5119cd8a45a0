#include "iwahori/cyclotomic.hpp"

#include <cstdint>
#include <sstream>
#include <utility>
#include <vector>

namespace iwahori {

namespace {

Rational reduce_phase(Rational a) {
  // Callers may pass Rational(k, n) straight from the two-argument constructor.
  a.canonicalize();
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  return a - Rational(fl);
}

struct PrimePower {
  long prime;
  long exponent;
  long value;
};

std::vector<PrimePower> factor(long L) {
  std::vector<PrimePower> out;
  for (long d = 2; d * d <= L; ++d) {
    if (L % d != 0) continue;
    PrimePower pp{d, 0, 1};
    while (L % d == 0) {
      L /= d;
      ++pp.exponent;
      pp.value *= d;
    }
    out.push_back(pp);
  }
  if (L > 1) out.push_back({L, 1, L});
  return out;
}

long mod_inverse(long a, long m) {
  long t = 0, new_t = 1, r = m, new_r = ((a % m) + m) % m;
  while (new_r != 0) {
    const long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return ((t % m) + m) % m;
}

}  // namespace

void Cyclotomic::add_term(Rational coeff, const Rational& phase) {
  coeff.canonicalize();
  if (coeff == 0) return;
  const Rational a = reduce_phase(phase);
  auto [it, inserted] = terms_.try_emplace(a, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  for (const auto& [a, c] : o.terms_) add_term(c, a);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  for (const auto& [a, c] : o.terms_) add_term(-c, a);
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic out;
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) out.add_term(ca * cb, pa + pb);
  }
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out;
  for (const auto& [a, c] : terms_) out.terms_.emplace(a, -c);
  return out;
}

// Q(zeta_L) is the tensor product of Q(zeta_P) over the prime powers P || L.
// For P = l^m the powers zeta_P^e with e < (l-1) l^{m-1} form a basis, and a
// larger exponent e = e0 + (l-1) l^{m-1} rewrites as
//   -sum_{j=0}^{l-2} zeta_P^{e0 + j l^{m-1}}.
// Rewriting each CRT component yields coordinates in the product basis.
bool Cyclotomic::is_zero() const {
  if (terms_.empty()) return true;
  Integer lcm = 1;
  for (const auto& [a, c] : terms_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a.get_den_mpz_t());
  if (!lcm.fits_slong_p()) throw std::overflow_error("cyclotomic conductor too large");
  const long L = lcm.get_si();
  const auto parts = factor(L);

  using Key = std::vector<long>;
  std::map<Key, Rational> coords;
  for (const auto& [a, c] : terms_) {
    const long e = Rational(a * L).get_num().get_si();
    Key key;
    for (const auto& pp : parts) {
      const long cofactor = (L / pp.value) % pp.value;
      key.push_back(e * mod_inverse(cofactor, pp.value) % pp.value);
    }
    std::vector<std::pair<Key, Rational>> pending{{key, c}};
    for (std::size_t idx = 0; idx < parts.size(); ++idx) {
      const long step = parts[idx].value / parts[idx].prime;
      const long top = (parts[idx].prime - 1) * step;
      std::vector<std::pair<Key, Rational>> next;
      for (auto& [k, coeff] : pending) {
        if (k[idx] < top) {
          next.emplace_back(k, coeff);
          continue;
        }
        const long e0 = k[idx] - top;
        for (long j = 0; j + 1 < parts[idx].prime; ++j) {
          Key kk = k;
          kk[idx] = e0 + j * step;
          next.emplace_back(std::move(kk), -coeff);
        }
      }
      pending = std::move(next);
    }
    for (auto& [k, coeff] : pending) {
      auto [it, inserted] = coords.try_emplace(k, coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second == 0) coords.erase(it);
      }
    }
  }
  return coords.empty();
}

std::string Cyclotomic::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    os << (first ? "" : " + ") << iwahori::to_string(c);
    if (a != 0) os << "*e(" << iwahori::to_string(a) << ")";
    first = false;
  }
  return os.str();
}

}  // namespace iwahori
