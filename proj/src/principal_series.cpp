#include "iwahori/principal_series.hpp"

#include <stdexcept>

#include "iwahori/parallel.hpp"
#include "iwahori/sampling.hpp"

namespace iwahori {

Cyclotomic chi_delta(const Weight& k, long p, int eps_exp) {
  const int n = k.size();
  Cyclotomic out;
  out.add_term(power_of(p, -k.modular_exponent()), Rational(static_cast<long>(eps_exp) * k.sum(), n));
  return out;
}

Cyclotomic f_eval(const Permutation& w, const PAdicMatrix& g, int eps_exp) {
  const Cell cell = iwahori_cell(g);
  if (cell.w != w) return Cyclotomic();
  return chi_delta(cell.kbar, g.prime(), eps_exp);
}

InducedFunction InducedFunction::basis(const Permutation& w, SeriesParams params) {
  InducedFunction f(params);
  f.set_coefficient(w, 1);
  return f;
}

InducedFunction InducedFunction::phi_minus(SeriesParams params) {
  InducedFunction f(params);
  for (const auto& w : Permutation::all(params.n)) f.set_coefficient(w, power_of(-params.p, -length(w)));
  return f;
}

InducedFunction InducedFunction::phi_plus(SeriesParams params) {
  InducedFunction f(params);
  for (const auto& w : Permutation::all(params.n)) f.set_coefficient(w, 1);
  return f;
}

void InducedFunction::set_coefficient(const Permutation& w, const Rational& c) {
  if (w.size() != params_.n) throw std::invalid_argument("permutation size mismatch");
  if (c == 0) {
    coeffs_.erase(w);
  } else {
    coeffs_[w] = c;
  }
}

Cyclotomic InducedFunction::operator()(const PAdicMatrix& g) const {
  // Only the f_w of the cell containing g is nonzero there.
  const Cell cell = iwahori_cell(g);
  const auto it = coeffs_.find(cell.w);
  if (it == coeffs_.end()) return Cyclotomic();
  return Cyclotomic(it->second) * chi_delta(cell.kbar, params_.p, params_.eps_exp);
}

Evaluator InducedFunction::evaluator() const {
  return [f = *this](const PAdicMatrix& g) { return f(g); };
}

Cyclotomic phi_eval(PhiSign sign, const PAdicMatrix& g, int eps_exp) {
  const SeriesParams params{g.size(), g.prime(), eps_exp};
  const auto f = sign == PhiSign::minus ? InducedFunction::phi_minus(params) : InducedFunction::phi_plus(params);
  return f(g);
}

Cyclotomic apply_generator(const Evaluator& F, const Generator& gen, const PAdicMatrix& g) {
  Cyclotomic sum;
  for (const auto& gamma : coset_representatives(gen, g.size(), g.prime())) sum += F(g * gamma);
  return sum;
}

Cyclotomic steinberg_rotation_eigenvalue(int n, int eps_exp) {
  return Cyclotomic((n - 1) % 2 == 0 ? 1 : -1) * Cyclotomic::zeta(n, eps_exp);
}

namespace {

struct PointResult {
  std::vector<std::pair<std::string, bool>> checks;
  std::string witness;
};

}  // namespace

SuiteReport verify_principal_series(const SeriesParams& params, int samples, std::uint64_t seed) {
  const int n = params.n;
  const long p = params.p;
  const auto phi_m = InducedFunction::phi_minus(params);
  const auto phi_p = InducedFunction::phi_plus(params);
  const Cyclotomic q(p);
  const Cyclotomic rho_u = steinberg_rotation_eigenvalue(n, params.eps_exp);

  std::vector<PAdicMatrix> points;
  {
    Rng rng(seed);
    points.push_back(PAdicMatrix::identity(n, p));
    while (static_cast<int>(points.size()) < samples) points.push_back(random_structured(rng, n, p).g);
  }

  const auto results = parallel_map<PointResult>(points.size(), [&](std::size_t idx) {
    const PAdicMatrix& g = points[idx];
    PointResult r;
    r.witness = g.to_string();
    const Cyclotomic m = phi_m(g);
    const Cyclotomic pl = phi_p(g);
    for (int i = 0; i < n; ++i) {
      const auto tag = "s" + std::to_string(i);
      r.checks.emplace_back("phi_minus_" + tag, apply_generator(phi_m.evaluator(), Generator::s(i), g) == -m);
      // phi+ is spherical for K only; the affine s_0 does not act on it by q.
      if (i == 0) continue;
      r.checks.emplace_back("phi_plus_" + tag, apply_generator(phi_p.evaluator(), Generator::s(i), g) == q * pl);
    }
    r.checks.emplace_back("phi_minus_u", apply_generator(phi_m.evaluator(), Generator::u(), g) == rho_u * m);
    // phi+ is not a Steinberg vector; count the points where that shows.
    r.checks.emplace_back("phi_plus_u_differs",
                          !(apply_generator(phi_p.evaluator(), Generator::u(), g) == rho_u * pl));
    Rng local(seed ^ (0x9e3779b97f4a7c15ULL * (idx + 1)));
    const PAdicMatrix j = random_iwahori(local, n, p);
    r.checks.emplace_back("right_J_invariance", phi_m(g * j) == m && phi_p(g * j) == pl);
    Cyclotomic via_rotation;
    for (const auto& gamma : affine_coset_representatives_by_rotation(n, p)) via_rotation += phi_m(g * gamma);
    r.checks.emplace_back("s0_routes_agree",
                          via_rotation == apply_generator(phi_m.evaluator(), Generator::s(0), g));
    return r;
  });

  SuiteReport report{"principal", {}};
  bool separated = false;
  for (const auto& r : results) {
    for (const auto& [name, ok] : r.checks) {
      if (name == "phi_plus_u_differs") {
        separated = separated || ok;
        continue;
      }
      report.tally(name).record(ok, r.witness);
    }
  }
  report.tally("phi_plus_u_separation").record(separated, "phi+ satisfied the Steinberg u-identity everywhere");

  const auto id = PAdicMatrix::identity(n, p);
  for (const auto& w : Permutation::all(n)) {
    const auto f = InducedFunction::basis(w, params).evaluator();
    for (int i = 1; i < n; ++i) {
      const Cyclotomic expected = w == Permutation::simple(n, i) ? q : Cyclotomic();
      report.tally("basis_triangularity")
          .record(apply_generator(f, Generator::s(i), id) == expected, "f_" + w.to_string() + " s" + std::to_string(i));
    }
  }
  return report;
}

}  // namespace iwahori
