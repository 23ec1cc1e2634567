#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

namespace cameral {

// Exact arbitrary-precision rational scalar for the symbolic layer.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using Complex = std::complex<double>;

inline double to_double(const Rational& r) { return static_cast<double>(r); }

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace cameral
