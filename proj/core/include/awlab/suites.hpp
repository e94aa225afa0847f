#pragma once

#include "awlab/qcore.hpp"
#include "awlab/rank2.hpp"
#include "awlab/report.hpp"

#include <optional>
#include <string>

namespace awlab {

enum class Suite { AW3, UQ, Rank2, All };

Suite parse_suite(const std::string& s);  // throws ConfigError
const char* suite_name(Suite s);

struct SuiteConfig {
  QContext ctx;
  int N = 4, N1 = 2, N2 = 2;
  std::optional<Alpha3> alpha;  // preset scan when absent
  std::optional<double> tol;    // overrides every hard-check tolerance
  bool corrupt = false;         // debug: perturb one coefficient in each construction
};

Report run_suite(Suite s, const SuiteConfig& cfg);

namespace detail {
template <class T>
Report aw3_suite(const SuiteConfig& cfg);
template <class T>
Report uq_suite(const SuiteConfig& cfg);
template <class T>
Report rank2_suite(const SuiteConfig& cfg);
}  // namespace detail

}  // namespace awlab
