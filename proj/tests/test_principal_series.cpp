#include "doctest.h"
#include "iwahori/principal_series.hpp"
#include "iwahori/sampling.hpp"

using namespace iwahori;

namespace {

using RMatrix = std::vector<std::vector<Rational>>;

int rank(RMatrix m) {
  int r = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
    std::size_t piv = static_cast<std::size_t>(r);
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(r)]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(r) || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[static_cast<std::size_t>(r)][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[static_cast<std::size_t>(r)][j];
    }
    ++r;
  }
  return r;
}

Rational real_value(const Cyclotomic& z) {
  Rational s = 0;
  for (const auto& [phase, c] : z.terms()) {
    REQUIRE(phase == 0);
    s += c;
  }
  return s;
}

// Matrix of X_{s_i} on the basis f_w, read off at the points P_v, which
// represent B\G/J. Entry [v][w] = (X_{s_i} f_w)(P_v).
RMatrix generator_matrix(int n, long p, int i) {
  const auto perms = Permutation::all(n);
  RMatrix m(perms.size(), std::vector<Rational>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a) {
    const PAdicMatrix pv = PAdicMatrix::permutation(perms[a], p);
    for (std::size_t b = 0; b < perms.size(); ++b) {
      const auto f = InducedFunction::basis(perms[b], {n, p, 0}).evaluator();
      m[a][b] = real_value(apply_generator(f, Generator::s(i), pv));
    }
  }
  return m;
}

// Dimension of the joint eigenspace of X_{s_1..s_{n-1}} for eigenvalue lambda,
// and whether the given coefficient vector lies in it.
std::pair<int, bool> joint_eigenspace(int n, long p, const Rational& lambda, const std::vector<Rational>& c) {
  const std::size_t size = c.size();
  RMatrix stacked;
  bool contains = true;
  for (int i = 1; i < n; ++i) {
    RMatrix m = generator_matrix(n, p, i);
    for (std::size_t a = 0; a < size; ++a) {
      m[a][a] -= lambda;
      Rational dot = 0;
      for (std::size_t b = 0; b < size; ++b) dot += m[a][b] * c[b];
      contains = contains && dot == 0;
      stacked.push_back(m[a]);
    }
  }
  return {static_cast<int>(size) - rank(stacked), contains};
}

}  // namespace

TEST_SUITE("principal_series") {
  TEST_CASE("character on the torus") {
    // n = 2, eps = -1: chi delta(p^(1,0)) = -1/p
    CHECK(chi_delta(Weight({1, 0}), 3, 1) == Cyclotomic(Rational(-1, 3)));
    CHECK(chi_delta(Weight({0, 1}), 3, 0) == Cyclotomic(3));
    CHECK(chi_delta(Weight({1, 1, 1}), 2, 1) == Cyclotomic(1));
    CHECK(chi_delta(Weight({1, 0, 0}), 2, 1) == Cyclotomic::zeta(3, 1) * Cyclotomic(Rational(1, 4)));
    CHECK(chi_delta(Weight({1, 0, 0}), 2, 0) == Cyclotomic(Rational(1, 4)));
  }

  TEST_CASE("basis functions on structured points") {
    Rng rng(31);
    for (int t = 0; t < 200; ++t) {
      const int n = 2 + t % 3;
      const long p = t % 2 == 0 ? 2 : 3;
      const int e = static_cast<int>(uniform(rng, 0, n - 1));
      const auto s = random_structured(rng, n, p);
      for (const auto& w : Permutation::all(n)) {
        const Cyclotomic expected = w == s.w ? chi_delta(s.kbar, p, e) : Cyclotomic();
        CHECK(f_eval(w, s.g, e) == expected);
      }
    }
  }

  TEST_CASE("rotation matrix lies in the cell of its finite part") {
    for (int n = 2; n <= 4; ++n) {
      for (int e = 0; e < n; ++e) {
        const auto u = ExtAffineElement::rotation(n);
        const PAdicMatrix mu = realize(u, 2);
        // f_{u'}(M_u) = eps q^{n-1}
        const Cyclotomic expected = Cyclotomic::zeta(n, e) * Cyclotomic(power_of(2, n - 1));
        CHECK(f_eval(u.w(), mu, e) == expected);
      }
    }
  }

  TEST_CASE("phi minus and phi plus at permutation matrices") {
    for (int n = 2; n <= 4; ++n) {
      for (const auto& w : Permutation::all(n)) {
        const PAdicMatrix pw = PAdicMatrix::permutation(w, 3);
        CHECK(phi_eval(PhiSign::minus, pw, 0) == Cyclotomic(power_of(-3, -length(w))));
        CHECK(phi_eval(PhiSign::plus, pw, 0) == Cyclotomic(1));
      }
    }
  }

  TEST_CASE("joint eigenspaces are lines spanned by phi minus and phi plus") {
    for (int n = 2; n <= 3; ++n) {
      for (long p : {2L, 3L}) {
        const SeriesParams params{n, p, 0};
        std::vector<Rational> cm;
        std::vector<Rational> cp;
        for (const auto& w : Permutation::all(n)) {
          cm.push_back(InducedFunction::phi_minus(params).coefficients().at(w));
          cp.push_back(InducedFunction::phi_plus(params).coefficients().at(w));
        }
        const auto [dim_m, has_m] = joint_eigenspace(n, p, -1, cm);
        const auto [dim_p, has_p] = joint_eigenspace(n, p, p, cp);
        CHECK(dim_m == 1);
        CHECK(has_m);
        CHECK(dim_p == 1);
        CHECK(has_p);
      }
    }
  }

  TEST_CASE("rotation eigenvalue at the identity") {
    for (int n = 2; n <= 4; ++n) {
      for (int e = 0; e < n; ++e) {
        const auto f = InducedFunction::phi_minus({n, 2, e}).evaluator();
        const Cyclotomic lhs = apply_generator(f, Generator::u(), PAdicMatrix::identity(n, 2));
        CHECK(lhs == steinberg_rotation_eigenvalue(n, e));
        CHECK(steinberg_rotation_eigenvalue(n, e) ==
              Cyclotomic(n % 2 == 0 ? -1 : 1) * Cyclotomic::zeta(n, e));
      }
    }
  }

  TEST_CASE("phi plus is fixed by K") {
    Rng rng(17);
    for (int t = 0; t < 60; ++t) {
      const int n = 2 + t % 3;
      const auto s = random_structured(rng, n, 3);
      const PAdicMatrix k = PAdicMatrix::permutation(random_permutation(rng, n), 3);
      CHECK(phi_eval(PhiSign::plus, s.g * k, 1) == phi_eval(PhiSign::plus, s.g, 1));
    }
  }

  TEST_CASE("verification suite") {
    for (int n = 2; n <= 3; ++n) {
      for (int e = 0; e < n; ++e) {
        const auto report = verify_principal_series({n, 2, e}, 30, 5);
        CHECK(report.ok());
      }
    }
  }

  TEST_CASE("coefficients must match the rank") {
    InducedFunction f({2, 2, 0});
    CHECK_THROWS_AS(f.set_coefficient(Permutation::identity(3), 1), std::invalid_argument);
  }
}
