#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ckhopf {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// "p/q" with q omitted when 1. Denominator is always positive.
inline std::string to_string(const Rational& r)
{
  const Integer& num = boost::multiprecision::numerator(r);
  const Integer& den = boost::multiprecision::denominator(r);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

inline Rational parse_rational(std::string_view text)
{
  auto bad = [&] { return std::invalid_argument("not a rational: '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view s) {
    if (s.empty())
      throw bad();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
      throw bad();
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9')
        throw bad();
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_int(text));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0)
    throw bad();
  return Rational(parse_int(text.substr(0, slash)), den);
}

inline Integer factorial(int n)
{
  Integer r = 1;
  for (int i = 2; i <= n; ++i)
    r *= i;
  return r;
}

} // namespace ckhopf
