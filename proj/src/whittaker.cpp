#include "iwahori/whittaker.hpp"

#include <sstream>
#include <stdexcept>

#include "iwahori/parallel.hpp"
#include "iwahori/sampling.hpp"

namespace iwahori {

namespace {

int mod(long a, int n) { return static_cast<int>(((a % n) + n) % n); }

int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

Rational reduce_phase(Rational a) {
  a.canonicalize();
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  return a - Rational(fl);
}

/// (-q)^e
WhittakerValue minus_q_power(int n, int e) { return WhittakerValue::monomial(n, parity_sign(e), 0, e); }

}  // namespace

// --- WhittakerValue ---------------------------------------------------------

WhittakerValue WhittakerValue::monomial(int n, int sign, int eps_exp, int q_exp, const Rational& psi_phase) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  WhittakerValue v(n);
  v.zero_ = false;
  v.sign_ = sign;
  v.eps_exp_ = mod(eps_exp, n);
  v.q_exp_ = q_exp;
  v.psi_ = reduce_phase(psi_phase);
  return v;
}

WhittakerValue operator*(const WhittakerValue& a, const WhittakerValue& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("value modulus mismatch");
  if (a.zero_ || b.zero_) return WhittakerValue::zero(a.n_);
  return WhittakerValue::monomial(a.n_, a.sign_ * b.sign_, a.eps_exp_ + b.eps_exp_, a.q_exp_ + b.q_exp_,
                                  a.psi_ + b.psi_);
}

WhittakerValue WhittakerValue::inverse() const {
  if (zero_) throw std::domain_error("inverse of zero Whittaker value");
  return monomial(n_, sign_, -eps_exp_, -q_exp_, -psi_);
}

WhittakerValue WhittakerValue::with_psi(const Rational& phase) const {
  if (zero_) return *this;
  return monomial(n_, sign_, eps_exp_, q_exp_, psi_ + phase);
}

bool operator==(const WhittakerValue& a, const WhittakerValue& b) {
  if (a.n_ != b.n_ || a.zero_ != b.zero_) return false;
  if (a.zero_) return true;
  return a.sign_ == b.sign_ && a.eps_exp_ == b.eps_exp_ && a.q_exp_ == b.q_exp_ && a.psi_ == b.psi_;
}

Cyclotomic WhittakerValue::to_cyclotomic(long p) const {
  Cyclotomic out;
  if (zero_) return out;
  Rational phase(eps_exp_, n_);
  phase.canonicalize();
  out.add_term(Rational(sign_) * power_of(p, q_exp_), phase + psi_);
  return out;
}

std::string WhittakerValue::to_string() const {
  if (zero_) return "0";
  std::ostringstream os;
  os << (sign_ < 0 ? "-" : "") << "z" << n_ << "^" << eps_exp_ << "*q^" << q_exp_;
  if (psi_ != 0) os << "*psi(" << iwahori::to_string(psi_) << ")";
  return os.str();
}

// --- evaluation -------------------------------------------------------------

bool support(const Weight& k, const Permutation& w) { return w_dominant(k, w); }

WhittakerValue eval_cell(const Weight& k, const Permutation& w, const WhittakerParams& params) {
  const int n = params.n;
  if (k.size() != n || w.size() != n) throw std::invalid_argument("cell dimension mismatch");
  if (!support(k, w)) return WhittakerValue::zero(n);
  const long total = k.sum();
  const int len = length(w);
  return WhittakerValue::monomial(n, parity_sign((n - 1) * total + len), static_cast<int>(params.eps_exp * total % n),
                                  -k.modular_exponent() - len);
}

WhittakerValue eval_matrix(const PAdicMatrix& g, int eps_exp) {
  const int n = g.size();
  const Cell cell = iwahori_cell(g);
  const WhittakerValue v = eval_cell(cell.kbar, cell.w, WhittakerParams{n, g.prime(), eps_exp});
  if (v.is_zero()) return v;
  Rational superdiagonal = 0;
  for (int i = 1; i < n; ++i) superdiagonal += cell.n_factor(i, i + 1);
  return v.with_psi(psi_phase(superdiagonal, g.prime()));
}

namespace {

WhittakerValue diagonal_recursive(const Weight& k, const WhittakerParams& params, const WhittakerValue& base) {
  const int n = params.n;
  if (!k.is_dominant()) return WhittakerValue::zero(n);
  WhittakerValue factor = WhittakerValue::one(n);
  Weight cur = k;
  for (;;) {
    int i = 0;
    for (int c = 2; c <= n; ++c) {
      if (cur[c] < cur[c - 1]) {
        i = c;
        break;
      }
    }
    if (i == 0) break;
    // W(p^cur) = eps^{-1} (-q)^{n+1-2i} W(p^{cur + e_i})
    factor = factor * WhittakerValue::monomial(n, 1, -params.eps_exp, 0) * minus_q_power(n, n + 1 - 2 * i);
    cur[i] += 1;
  }
  return factor * base;
}

}  // namespace

WhittakerValue eval_recursive(const Weight& k, const Permutation& w, const WhittakerParams& params,
                              const WhittakerValue& base) {
  const int n = params.n;
  if (k.size() != n || w.size() != n) throw std::invalid_argument("cell dimension mismatch");
  if (w.is_identity()) return diagonal_recursive(k, params, base);
  const Weight dw = d_w(w);
  const WhittakerValue normalizer = diagonal_recursive(-dw, params, WhittakerValue::one(n)).inverse();
  return minus_q_power(n, -length(w)) * normalizer * diagonal_recursive(k - dw, params, base);
}

WhittakerValue eval_recursive(const Weight& k, const Permutation& w, const WhittakerParams& params) {
  return eval_recursive(k, w, params, WhittakerValue::one(params.n));
}

// --- verification -----------------------------------------------------------

namespace {

struct PointResult {
  std::vector<std::pair<std::string, bool>> checks;
  std::string witness;
};

}  // namespace

SuiteReport verify_functional_equations(const WhittakerParams& params, int samples, std::uint64_t seed) {
  const int n = params.n;
  const long p = params.p;
  if (n < 2 || n > 4) throw std::out_of_range("functional equations are checked for 2 <= n <= 4");
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");

  std::vector<PAdicMatrix> points;
  {
    Rng rng(seed);
    points.push_back(PAdicMatrix::identity(n, p));
    while (static_cast<int>(points.size()) < samples) points.push_back(random_structured(rng, n, p).g);
  }
  const Cyclotomic eps = Cyclotomic::zeta(n, params.eps_exp);
  const PAdicMatrix u = realize(ExtAffineElement::rotation(n), p);

  const auto results = parallel_map<PointResult>(points.size(), [&](std::size_t idx) {
    const PAdicMatrix& g = points[idx];
    PointResult r;
    r.witness = g.to_string();
    const Cyclotomic value = eval_matrix(g, params.eps_exp).to_cyclotomic(p);
    for (int i = 0; i < n; ++i) {
      Cyclotomic sum;
      for (const auto& gamma : coset_representatives(Generator::s(i), n, p)) {
        sum += eval_matrix(g * gamma, params.eps_exp).to_cyclotomic(p);
      }
      r.checks.emplace_back("hecke_s" + std::to_string(i), sum == -value);
    }
    r.checks.emplace_back("rotation", eval_matrix(g * u, params.eps_exp).to_cyclotomic(p) == eps * value);
    r.checks.emplace_back("central", eval_matrix(g.scaled(p), params.eps_exp).to_cyclotomic(p) == value);
    return r;
  });

  SuiteReport report{"whittaker", {}};
  for (const auto& r : results) {
    for (const auto& [name, ok] : r.checks) report.tally(name).record(ok, r.witness);
  }
  return report;
}

ParahoricCertificate parahoric_check(int i, const WhittakerParams& params) {
  const int n = params.n;
  if (i < 1 || i >= n) throw std::out_of_range("simple reflection index");
  const Permutation s = Permutation::simple(n, i);
  const Weight d = d_w(s);
  return ParahoricCertificate{i, eval_cell(d, s, params), eval_cell(d, Permutation::identity(n), params)};
}

SuiteReport verify_whittaker(const WhittakerParams& params, int samples, std::uint64_t seed) {
  SuiteReport report = verify_functional_equations(params, samples, seed);
  for (int i = 1; i < params.n; ++i) {
    const ParahoricCertificate cert = parahoric_check(i, params);
    report.tally("parahoric").record(cert.certified(), "s" + std::to_string(i) + ": W(d s) = " +
                                                           cert.at_boundary_cell.to_string() + ", W(d) = " +
                                                           cert.at_diagonal.to_string());
  }
  return report;
}

WhittakerValue eval_sl(const PAdicMatrix& g, int eps_exp) {
  if (g.determinant() != 1) throw std::invalid_argument("eval_sl requires det(g) = 1");
  return eval_matrix(g, eps_exp);
}

}  // namespace iwahori
