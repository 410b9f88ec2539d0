#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "inccat/error.hpp"

namespace inccat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Formats as "p/q" with q > 0, always including the denominator.
inline std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

/// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto as_int = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_int(text)) throw ParseError("not a rational: '" + std::string(text) + "'");
    return Rational(as_int(text));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw ParseError("not a rational: '" + std::string(text) + "'");
  Integer d = as_int(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(as_int(num), d);
}

}  // namespace inccat
