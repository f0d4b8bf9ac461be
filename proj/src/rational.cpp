#include "aplab/rational.hpp"

#include <cctype>

#include "aplab/errors.hpp"

namespace aplab {

Rational make_rational(long num, long den) {
  if (den == 0) throw InvalidParameter("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational normalize_mod1(const Rational& x) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - Rational(fl);
}

std::string fraction_str(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_fraction(const std::string& text) {
  if (text.empty()) throw InvalidParameter("parse_fraction: empty string");
  auto is_integer = [](const std::string& s) {
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den))
    throw InvalidParameter("parse_fraction: malformed rational '" + text + "'");
  BigInt d(den);
  if (d == 0) throw InvalidParameter("parse_fraction: zero denominator in '" + text + "'");
  Rational q(BigInt(num), d);
  q.canonicalize();
  return q;
}

}  // namespace aplab
