#include "rlcm/rational.hpp"

#include <cctype>

#include "rlcm/error.hpp"

namespace rlcm {

namespace {

boost::multiprecision::mpz_int parse_integer(std::string_view text,
                                             std::size_t offset,
                                             bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && !text.empty() && (text[0] == '-' || text[0] == '+')) {
    i = 1;
  }
  if (i == text.size()) {
    throw ParseError(0, offset + i + 1, "expected digits");
  }
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw ParseError(0, offset + k + 1,
                       "unexpected character '" + std::string(1, text[k]) +
                           "' in rational literal");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return boost::multiprecision::mpz_int(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, 0, true));
  }
  auto num = parse_integer(text.substr(0, slash), 0, true);
  auto den = parse_integer(text.substr(slash + 1), slash + 1, false);
  if (den == 0) {
    throw ParseError(0, slash + 2, "zero denominator");
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

}  // namespace rlcm
