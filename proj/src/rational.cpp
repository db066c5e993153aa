#include "incmon/rational.hpp"

#include <cctype>

#include "incmon/errors.hpp"

namespace incmon {

namespace {

bool is_integer_token(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_integer_token(num) || !is_integer_token(den))
    fail("ParseError", "malformed rational '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);  // mpz_set_str rejects a leading plus
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) fail("ParseError", "zero denominator in '" + text + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_of(long num, long den) {
  if (den == 0) fail("ParseError", "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace incmon
