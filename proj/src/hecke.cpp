#include "iwahori/hecke.hpp"

#include <sstream>
#include <stdexcept>

namespace iwahori {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

// --- Coefficient ------------------------------------------------------------

Coefficient Coefficient::monomial(int n, const Integer& c, int q_exp, int zeta_exp) {
  Coefficient out(n);
  out.add({q_exp, zeta_exp}, c);
  return out;
}

void Coefficient::add(std::pair<int, int> key, const Integer& c) {
  if (c == 0) return;
  key.second = mod(key.second, n_);
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  if (o.n_ != n_) throw std::invalid_argument("coefficient modulus mismatch");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  if (o.n_ != n_) throw std::invalid_argument("coefficient modulus mismatch");
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("coefficient modulus mismatch");
  Coefficient out(a.n_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  }
  return out;
}

Cyclotomic Coefficient::specialize(long p) const {
  Cyclotomic out;
  for (const auto& [k, c] : terms_) out.add_term(Rational(c) * power_of(p, k.first), Rational(k.second, n_));
  return out;
}

std::string Coefficient::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    os << (first ? "" : " + ") << c.get_str();
    if (k.first != 0) os << "*q^" << k.first;
    if (k.second != 0) os << "*z^" << k.second;
    first = false;
  }
  return os.str();
}

// --- HeckeElement -----------------------------------------------------------

HeckeElement HeckeElement::basis(const ExtAffineElement& x) {
  HeckeElement h(x.size());
  h.add_term(x, Coefficient::constant(x.size(), 1));
  return h;
}

void HeckeElement::add_term(const ExtAffineElement& x, const Coefficient& c) {
  if (x.size() != n_) throw std::invalid_argument("hecke element dimension mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [x, c] : o.terms_) add_term(x, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (const auto& [x, c] : o.terms_) add_term(x, Coefficient(n_) - c);
  return *this;
}

HeckeElement operator*(const Coefficient& c, const HeckeElement& h) {
  HeckeElement out(h.n_);
  for (const auto& [x, coeff] : h.terms_) out.add_term(x, c * coeff);
  return out;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement out(a.n_);
  for (const auto& [y, cy] : b.terms_) {
    const ReducedWord word = reduced_word(y);
    HeckeElement partial = a;
    for (int letter : word.letters) partial = mult_generator(partial, letter);
    partial = mult_u(partial, Side::right, word.rotation);
    out += cy * partial;
  }
  return out;
}

HeckeElement HeckeElement::normalize_central() const {
  HeckeElement out(n_);
  for (const auto& [x, c] : terms_) out.add_term(x.normalize_central(), c);
  return out;
}

std::string HeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, c] : terms_) {
    os << (first ? "" : " + ") << '(' << c.to_string() << ")*T" << x.to_string();
    first = false;
  }
  return os.str();
}

HeckeElement mult_generator(const HeckeElement& h, int i) {
  const int n = h.size();
  const ExtAffineElement s = ExtAffineElement::simple_reflection(n, i);
  const Coefficient q = Coefficient::q(n);
  const Coefficient q_minus_one = q - Coefficient::constant(n, 1);
  HeckeElement out(n);
  for (const auto& [x, c] : h.terms()) {
    const ExtAffineElement xs = x * s;
    if (length_ext(xs) > length_ext(x)) {
      out.add_term(xs, c);
    } else {
      out.add_term(xs, q * c);
      out.add_term(x, q_minus_one * c);
    }
  }
  return out;
}

HeckeElement left_mult_generator(int i, const HeckeElement& h) {
  const int n = h.size();
  const ExtAffineElement s = ExtAffineElement::simple_reflection(n, i);
  const Coefficient q = Coefficient::q(n);
  const Coefficient q_minus_one = q - Coefficient::constant(n, 1);
  HeckeElement out(n);
  for (const auto& [x, c] : h.terms()) {
    const ExtAffineElement sx = s * x;
    if (length_ext(sx) > length_ext(x)) {
      out.add_term(sx, c);
    } else {
      out.add_term(sx, q * c);
      out.add_term(x, q_minus_one * c);
    }
  }
  return out;
}

HeckeElement mult_u(const HeckeElement& h, Side side, int power) {
  const ExtAffineElement u = ExtAffineElement::rotation(h.size()).power(power);
  HeckeElement out(h.size());
  for (const auto& [x, c] : h.terms()) out.add_term(side == Side::right ? x * u : u * x, c);
  return out;
}

Coefficient steinberg_character(const ExtAffineElement& x, int eps_exp) {
  const int n = x.size();
  const int m = x.rotation_degree();
  const int sign_exponent = (n - 1) * m + length_ext(x);
  const Integer sign = sign_exponent % 2 == 0 ? 1 : -1;
  return Coefficient::monomial(n, sign, 0, mod(eps_exp * m, n));
}

Coefficient steinberg_character(const HeckeElement& h, int eps_exp) {
  Coefficient out(h.size());
  for (const auto& [x, c] : h.terms()) out += c * steinberg_character(x, eps_exp);
  return out;
}

// --- presentation -----------------------------------------------------------

bool PresentationReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.algebra_ok || !c.character_ok) return false;
  }
  return !checks.empty();
}

int PresentationReport::count(const std::string& family) const {
  int k = 0;
  for (const auto& c : checks) k += c.family == family ? 1 : 0;
  return k;
}

namespace {

HeckeElement product(int n, const std::vector<int>& letters) {
  HeckeElement h = HeckeElement::unit(n);
  for (int i : letters) h = mult_generator(h, i);
  return h;
}

RelationCheck compare(std::string family, std::string instance, const HeckeElement& lhs,
                      const HeckeElement& rhs, bool modulo_centre) {
  const int n = lhs.size();
  RelationCheck check{std::move(family), std::move(instance), false, true};
  const HeckeElement l = modulo_centre ? lhs.normalize_central() : lhs;
  const HeckeElement r = modulo_centre ? rhs.normalize_central() : rhs;
  check.algebra_ok = l == r;
  for (int e = 0; e < n; ++e) {
    if (!(steinberg_character(lhs, e) == steinberg_character(rhs, e))) check.character_ok = false;
  }
  return check;
}

bool adjacent(int i, int j, int n) {
  const int d = mod(i - j, n);
  return d == 1 || d == n - 1;
}

}  // namespace

PresentationReport verify_presentation(int n) {
  if (n < 2 || n > 5) throw std::out_of_range("verify_presentation supports 2 <= n <= 5");
  PresentationReport report;
  report.n = n;
  const Coefficient q = Coefficient::q(n);
  const auto s = [](int i) { return "s" + std::to_string(i); };

  // 1) (T_s - q)(T_s + 1) = 0
  for (int i = 0; i < n; ++i) {
    const HeckeElement t = HeckeElement::generator(n, i);
    const HeckeElement lhs = (t - q * HeckeElement::unit(n)) * (t + HeckeElement::unit(n));
    report.checks.push_back(compare("quadratic", "(T" + s(i) + " - q)(T" + s(i) + " + 1) = 0", lhs,
                                    HeckeElement(n), false));
  }

  // 2) T_u^n = 1 modulo the centre
  {
    HeckeElement lhs = HeckeElement::unit(n);
    for (int k = 0; k < n; ++k) lhs = lhs * HeckeElement::rotation(n);
    report.checks.push_back(
        compare("rotation_power", "Tu^" + std::to_string(n) + " = 1", lhs, HeckeElement::unit(n), true));
  }

  // 3) T_u T_{s_{i+1}} = T_{s_i} T_u
  for (int i = 0; i < n; ++i) {
    const int next = mod(i + 1, n);
    const HeckeElement lhs = mult_generator(HeckeElement::rotation(n), next);
    const HeckeElement rhs = mult_u(HeckeElement::generator(n, i), Side::right);
    report.checks.push_back(
        compare("rotation_conjugation", "Tu*T" + s(next) + " = T" + s(i) + "*Tu", lhs, rhs, false));
  }

  // 4) braid and 5) commutation, only meaningful once n >= 3
  if (n >= 3) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (adjacent(i, j, n)) {
          report.checks.push_back(compare("braid", s(i) + s(j) + s(i) + " = " + s(j) + s(i) + s(j),
                                          product(n, {i, j, i}), product(n, {j, i, j}), false));
        } else {
          report.checks.push_back(compare("commute", s(i) + s(j) + " = " + s(j) + s(i), product(n, {i, j}),
                                          product(n, {j, i}), false));
        }
      }
    }
  }
  return report;
}

SuiteReport to_suite_report(const PresentationReport& report) {
  SuiteReport out{"hecke", {}};
  for (const auto& c : report.checks) {
    out.tally(c.family).record(c.algebra_ok && c.character_ok,
                               c.instance + (c.algebra_ok ? "" : " [normal form]") +
                                   (c.character_ok ? "" : " [character]"));
  }
  return out;
}

}  // namespace iwahori
