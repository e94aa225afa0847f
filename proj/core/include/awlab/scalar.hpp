#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace awlab {

// 50 decimal digits, expression templates off so `auto` stays a value type.
using ext = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>,
                                          boost::multiprecision::et_off>;

enum class Precision { Double, Extended };

inline const char* precision_name(Precision p) {
  return p == Precision::Double ? "double" : "extended";
}

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class T>
double to_double(const T& x) {
  return static_cast<double>(x);
}

template <class T>
bool is_finite(const T& x) {
  using std::isfinite;
  using boost::multiprecision::isfinite;
  return isfinite(x);
}

template <class T>
T checked(const T& x, const char* what) {
  if (!is_finite(x)) throw NumericError(std::string("non-finite value in ") + what);
  return x;
}

template <class T>
T abs_of(const T& x) {
  using std::abs;
  using boost::multiprecision::abs;
  return abs(x);
}

}  // namespace awlab
