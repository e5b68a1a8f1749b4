#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mrt::exact {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return rat_den(r) == 1; }

inline long long to_ll(const Int& v) { return v.convert_to<long long>(); }

}  // namespace mrt::exact
