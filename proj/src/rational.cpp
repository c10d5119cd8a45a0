#include "iwahori/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace iwahori {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    t.erase(t.begin(), std::find_if(t.begin(), t.end(), not_space));
    t.erase(std::find_if(t.rbegin(), t.rend(), not_space).base(), t.end());
  };
  trim(s);
  auto valid_int = [](const std::string& t, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) start = 1;
    if (start >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(start), t.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational power_of(long p, long e) {
  Integer base;
  mpz_pow_ui(base.get_mpz_t(), Integer(p).get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(base);
  Rational r(1, base);
  r.canonicalize();
  return r;
}

}  // namespace iwahori
