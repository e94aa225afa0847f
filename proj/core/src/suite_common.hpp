#pragma once

#include "awlab/adjudicate.hpp"
#include "awlab/presets.hpp"
#include "awlab/suites.hpp"

#include <cstdio>
#include <functional>

namespace awlab::detail {

inline std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline double tol_of(const SuiteConfig& cfg, double def) { return cfg.tol ? *cfg.tol : def; }

inline ParamList alpha_params(const SuiteConfig& cfg, const Alpha3& a) {
  return {{"q", num(cfg.ctx.q)}, {"alpha0", num(a.alpha0)}, {"alpha1", num(a.alpha1)}, {"alpha2", num(a.alpha2)}};
}

template <class T>
double rel_diff(const T& a, const T& b) {
  return to_double(T(abs_of(T(a - b)) / std::max(T(1), abs_of(b))));
}

// Runs a section; an exception becomes a failing "<prefix>.error" entry.
inline void guarded(Report& r, const std::string& prefix, const ParamList& params, const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    r.checks.push_back(make_check(prefix + ".error", params, std::numeric_limits<double>::infinity(), 0.0,
                                  std::string("numerical failure: ") + e.what()));
  }
}

inline CheckReport adjudication_check(const std::string& id, const ParamList& params, const Adjudication& a) {
  // an ambiguous or empty verdict is reported with an infinite residual
  const double res = a.unique() ? a.selected_residual() : std::numeric_limits<double>::infinity();
  return make_check(id, params, res, a.gate, a.topic + "; " + a.summary());
}

}  // namespace awlab::detail
