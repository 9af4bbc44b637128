#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ribbon {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_str(const Rational& q) { return q.str(); }

Rational rational_parse(const std::string& s);

}  // namespace ribbon
