#pragma once

#include "awlab/scalar.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace awlab {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PoleError : NumericError {
  using NumericError::NumericError;
};

struct QContext {
  double q = 0.7;
  double eps_inf = 1e-18;
  double default_tol = 1e-10;
  Precision precision = Precision::Double;

  void validate() const {
    if (!(q > 0.0 && q < 1.0)) throw ConfigError("q must satisfy 0 < q < 1, got " + std::to_string(q));
    if (!(eps_inf > 0.0)) throw ConfigError("eps_inf must be positive");
    if (!(default_tol > 0.0)) throw ConfigError("default_tol must be positive");
  }
};

// Typed evaluation of q-deformed elementary functions for a fixed q.
template <class T>
class QFun {
 public:
  explicit QFun(const QContext& c) : ctx_(c), q_(T(c.q)) {
    c.validate();
    using std::log;
    logq_ = log(q_);
  }

  const QContext& ctx() const { return ctx_; }
  const T& q() const { return q_; }
  const T& logq() const { return logq_; }

  T pow(const T& x) const {
    using std::exp;
    return checked(T(exp(x * logq_)), "q-power");
  }
  T sinh(const T& x) const { return checked(T(pow(x) - pow(-x)), "sinh_q"); }
  T cosh(const T& x) const { return checked(T(pow(x) + pow(-x)), "cosh_q"); }
  T bracket(const T& n) const { return sinh(n) / sinh(T(1)); }

  // Inverse of sinh_q on the reals.
  T asinh(const T& y) const {
    using std::log;
    using std::sqrt;
    T u = (y + sqrt(y * y + 4)) / 2;
    return log(u) / logq_;
  }

  T s1sq() const {
    T s = sinh(T(1));
    return s * s;
  }

 private:
  QContext ctx_;
  T q_;
  T logq_;
};

inline double sinh_q(const QContext& ctx, double x) { return QFun<double>(ctx).sinh(x); }
inline double cosh_q(const QContext& ctx, double x) { return QFun<double>(ctx).cosh(x); }
inline double qbracket(const QContext& ctx, double n) { return QFun<double>(ctx).bracket(n); }

// (a; base)_n
template <class T>
T qpoch(const T& a, const T& base, int n) {
  if (n < 0) throw std::invalid_argument("qpoch: n must be nonnegative");
  T r(1);
  T bi(1);
  for (int i = 0; i < n; ++i) {
    r *= (1 - a * bi);
    bi *= base;
  }
  return checked(r, "qpoch");
}

// (a; base)_inf, truncated once |a base^i| < eps_inf.
template <class T>
T qpoch_inf(const T& a, const T& base, double eps_inf) {
  if (!(abs_of(base) < 1)) throw NumericError("qpoch_inf: |base| >= 1, product does not converge");
  T r(1);
  T f = a;
  for (long i = 0; i < 10000000; ++i) {
    if (abs_of(f) < eps_inf) return checked(r, "qpoch_inf");
    r *= (1 - f);
    f *= base;
  }
  throw NumericError("qpoch_inf: truncation threshold not reached");
}

// If x == base^{-k} for an integer k >= 0, return k.
template <class T>
std::optional<int> terminating_index(const T& x, const T& base) {
  using std::log;
  using std::round;
  using boost::multiprecision::round;
  if (!(x > 0)) return std::nullopt;
  T e = -log(x) / log(base);
  T r = round(e);
  if (abs_of(T(e - r)) < 1e-9 && r >= 0) return static_cast<int>(to_double(r));
  return std::nullopt;
}

// Terminating 4phi3(num; den; base, z). Terms use a running ratio; the sum stops at the
// smallest terminating numerator index or at nmax.
template <class T>
T phi43(const std::array<T, 4>& num, const std::array<T, 3>& den, const T& base, const T& z, int nmax) {
  int stop = nmax;
  for (const T& a : num) {
    auto k = terminating_index(a, base);
    if (k && *k < stop) stop = *k;
  }
  T sum(1);
  T term(1);
  T bk(1);  // base^k
  for (int k = 0; k < stop; ++k) {
    T ratio = z / (1 - bk * base);
    for (const T& a : num) ratio *= (1 - a * bk);
    for (const T& d : den) {
      T f = 1 - d * bk;
      if (abs_of(f) < 1e-14) throw PoleError("phi43: denominator Pochhammer vanishes at k=" + std::to_string(k));
      ratio /= f;
    }
    term *= ratio;
    sum += term;
    bk *= base;
  }
  return checked(sum, "phi43");
}

// Direct term-by-term summation with freshly computed Pochhammers; used as an oracle.
template <class T>
T phi43_direct(const std::array<T, 4>& num, const std::array<T, 3>& den, const T& base, const T& z, int nterms) {
  T sum(0);
  for (int k = 0; k <= nterms; ++k) {
    T t(1);
    for (const T& a : num) t *= qpoch(a, base, k);
    for (const T& d : den) t /= qpoch(d, base, k);
    t /= qpoch(base, base, k);
    using std::pow;
    T zk(1);
    for (int i = 0; i < k; ++i) zk *= z;
    sum += t * zk;
  }
  return sum;
}

}  // namespace awlab
