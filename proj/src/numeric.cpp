#include "stablekac/numeric.hpp"

#include "stablekac/errors.hpp"

namespace stablekac {

std::string to_decimal(const Rational& v) {
  const Integer num = boost::multiprecision::numerator(v);
  const Integer den = boost::multiprecision::denominator(v);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    const bool ok = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) == std::string::npos &&
                    s != "-";
    if (!ok) throw InvalidInput("malformed rational \"" + text + "\": expected P or P/Q");
    return Integer(s);
  };
  const Integer num = parse_int(text.substr(0, slash));
  const Integer den = slash == std::string::npos ? Integer(1) : parse_int(text.substr(slash + 1));
  if (den == 0) throw InvalidInput("malformed rational \"" + text + "\": zero denominator");
  return Rational(num, den);
}

}  // namespace stablekac
