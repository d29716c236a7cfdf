#include "xmodlie/rational.hpp"

#include <cctype>

namespace xmodlie {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den))
    throw XmodError(ErrorKind::parse,
                    "malformed rational '" + std::string(text) + "'");
  Integer p{std::string(num)};
  Integer q{std::string(den)};
  if (q == 0)
    throw XmodError(ErrorKind::parse,
                    "zero denominator in '" + std::string(text) + "'");
  return Rational(p) / Rational(q);
}

std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace xmodlie
