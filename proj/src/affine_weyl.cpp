#include "iwahori/affine_weyl.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace iwahori {

ExtAffineElement::ExtAffineElement(Weight lambda, Permutation w)
    : lambda_(std::move(lambda)), w_(std::move(w)) {
  if (lambda_.size() != w_.size()) throw std::invalid_argument("translation/permutation size mismatch");
}

ExtAffineElement ExtAffineElement::identity(int n) {
  return ExtAffineElement(Weight::zero(n), Permutation::identity(n));
}

ExtAffineElement ExtAffineElement::translation(const Weight& lambda) {
  return ExtAffineElement(lambda, Permutation::identity(lambda.size()));
}

ExtAffineElement ExtAffineElement::finite(const Permutation& w) {
  return ExtAffineElement(Weight::zero(w.size()), w);
}

ExtAffineElement ExtAffineElement::simple_reflection(int n, int i) {
  if (n < 2 || i < 0 || i >= n) throw std::out_of_range("generator index");
  if (i > 0) return finite(Permutation::simple(n, i));
  Weight lambda = Weight::zero(n);
  lambda[1] = -1;
  lambda[n] = 1;
  return ExtAffineElement(lambda, Permutation::transposition(n, 1, n));
}

ExtAffineElement ExtAffineElement::rotation(int n) {
  Permutation c = Permutation::identity(n);
  for (int i = n - 1; i >= 1; --i) c = c * Permutation::simple(n, i);
  return ExtAffineElement(Weight::unit(n, n), c);
}

ExtAffineElement operator*(const ExtAffineElement& x, const ExtAffineElement& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
  return ExtAffineElement(x.lambda_ + act(x.w_, y.lambda_), x.w_ * y.w_);
}

ExtAffineElement ExtAffineElement::inverse() const {
  const Permutation inv = w_.inverse();
  return ExtAffineElement(-act(inv, lambda_), inv);
}

ExtAffineElement ExtAffineElement::power(int m) const {
  ExtAffineElement base = m >= 0 ? *this : inverse();
  ExtAffineElement out = identity(size());
  for (int i = 0; i < std::abs(m); ++i) out = out * base;
  return out;
}

ExtAffineElement ExtAffineElement::normalize_central() const {
  return ExtAffineElement(lambda_ - Weight::constant(size(), lambda_[size()]), w_);
}

std::string ExtAffineElement::to_string() const {
  return "(" + lambda_.to_string() + ", " + w_.to_string() + ")";
}

// --- length -----------------------------------------------------------------

namespace {

std::string key_of(const ExtAffineElement& x) {
  std::string key;
  key.reserve(static_cast<std::size_t>(2 * x.size()));
  for (int v : x.lambda().exps()) key.push_back(static_cast<char>(v));
  for (int v : x.w().window()) key.push_back(static_cast<char>(v));
  return key;
}

// Breadth-first ball around the identity in the affine Weyl group,
// grown one layer at a time on demand.
class LengthTable {
 public:
  explicit LengthTable(int n) : n_(n) {
    const auto id = ExtAffineElement::identity(n);
    distance_.emplace(key_of(id), 0);
    frontier_.push_back(id);
    for (int i = 0; i < n; ++i) generators_.push_back(ExtAffineElement::simple_reflection(n, i));
  }

  int lookup(const ExtAffineElement& y) {
    const std::string key = key_of(y);
    std::lock_guard lock(mutex_);
    for (;;) {
      if (auto it = distance_.find(key); it != distance_.end()) return it->second;
      if (radius_ >= kMaxRadius || distance_.size() > kMaxElements) {
        throw std::length_error("length search exceeded its cap at " + y.to_string());
      }
      grow();
    }
  }

 private:
  static constexpr int kMaxRadius = 120;
  static constexpr std::size_t kMaxElements = 20'000'000;

  void grow() {
    ++radius_;
    std::vector<ExtAffineElement> next;
    for (const auto& x : frontier_) {
      for (const auto& s : generators_) {
        ExtAffineElement y = x * s;
        if (distance_.emplace(key_of(y), radius_).second) next.push_back(std::move(y));
      }
    }
    frontier_ = std::move(next);
  }

  int n_;
  int radius_ = 0;
  std::vector<ExtAffineElement> generators_;
  std::vector<ExtAffineElement> frontier_;
  std::unordered_map<std::string, int> distance_;
  std::mutex mutex_;
};

LengthTable& table_for(int n) {
  static std::mutex registry_mutex;
  static std::map<int, std::unique_ptr<LengthTable>> registry;
  std::lock_guard lock(registry_mutex);
  auto& slot = registry[n];
  if (!slot) slot = std::make_unique<LengthTable>(n);
  return *slot;
}

}  // namespace

int length_ext(const ExtAffineElement& x) {
  const int m = x.rotation_degree();
  const ExtAffineElement y = x * ExtAffineElement::rotation(x.size()).power(-m);
  return table_for(x.size()).lookup(y);
}

int length_ext_formula(const ExtAffineElement& x) {
  const Permutation inv = x.w().inverse();
  int total = 0;
  for (int i = 1; i <= x.size(); ++i) {
    for (int j = i + 1; j <= x.size(); ++j) {
      const int shift = inv(i) > inv(j) ? 1 : 0;
      total += std::abs(x.lambda()[i] - x.lambda()[j] + shift);
    }
  }
  return total;
}

ReducedWord reduced_word(const ExtAffineElement& x) {
  const int n = x.size();
  ReducedWord out;
  out.rotation = x.rotation_degree();
  ExtAffineElement y = x * ExtAffineElement::rotation(n).power(-out.rotation);
  int len = length_ext(y);
  std::vector<int> reversed;
  while (len > 0) {
    bool found = false;
    for (int i = 0; i < n && !found; ++i) {
      ExtAffineElement shorter = y * ExtAffineElement::simple_reflection(n, i);
      if (length_ext(shorter) < len) {
        reversed.push_back(i);
        y = std::move(shorter);
        --len;
        found = true;
      }
    }
    if (!found) throw std::logic_error("reduced_word: no descent found");
  }
  out.letters.assign(reversed.rbegin(), reversed.rend());
  return out;
}

PAdicMatrix realize(const ExtAffineElement& x, long p) {
  return PAdicMatrix::torus(x.lambda(), p) * PAdicMatrix::permutation(x.w(), p);
}

// --- coset representatives --------------------------------------------------

std::string Generator::to_string() const {
  return kind == Kind::rotation ? std::string("u") : "s" + std::to_string(index);
}

std::vector<PAdicMatrix> coset_representatives(const Generator& gen, int n, long p) {
  std::vector<PAdicMatrix> reps;
  if (gen.kind == Generator::Kind::rotation) {
    reps.push_back(realize(ExtAffineElement::rotation(n), p));
    return reps;
  }
  if (gen.index < 0 || gen.index >= n) throw std::out_of_range("generator index");
  const PAdicMatrix m = realize(ExtAffineElement::simple_reflection(n, gen.index), p);
  for (long t = 0; t < p; ++t) {
    const PAdicMatrix x = gen.index == 0
                              ? PAdicMatrix::root_element(n, p, n, 1, Rational(p * t))
                              : PAdicMatrix::root_element(n, p, gen.index, gen.index + 1, Rational(t));
    reps.push_back(x * m);
  }
  return reps;
}

std::vector<PAdicMatrix> affine_coset_representatives_by_rotation(int n, long p) {
  const PAdicMatrix u = realize(ExtAffineElement::rotation(n), p);
  const PAdicMatrix u_inv = u.inverse();
  std::vector<PAdicMatrix> reps;
  for (const auto& r : coset_representatives(Generator::s(1), n, p)) reps.push_back(u * r * u_inv);
  return reps;
}

}  // namespace iwahori
