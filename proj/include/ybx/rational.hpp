#ifndef YBX_RATIONAL_HPP
#define YBX_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>

namespace ybx {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number, always reduced, denominator > 0, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
  const Integer& num = boost::multiprecision::numerator(r);
  const Integer& den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Parses `n` or `n/d` with optional leading sign. Throws on malformed input.
inline Rational parse_rational(const std::string& text) {
  std::size_t pos = 0;
  auto read_int = [&](bool sign_ok) -> Integer {
    std::size_t start = pos;
    if (sign_ok && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw std::invalid_argument("malformed rational: '" + text + "'");
    return Integer(text.substr(start, pos - start));
  };
  Integer num = read_int(true);
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_int(false);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  if (pos != text.size()) throw std::invalid_argument("malformed rational: '" + text + "'");
  return Rational(num, den);
}

}  // namespace ybx

#endif
