#include "awlab/suites.hpp"

namespace awlab {

Suite parse_suite(const std::string& s) {
  if (s == "aw3") return Suite::AW3;
  if (s == "uq") return Suite::UQ;
  if (s == "rank2") return Suite::Rank2;
  if (s == "all") return Suite::All;
  throw ConfigError("unknown suite '" + s + "' (expected aw3, uq, rank2 or all)");
}

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::AW3: return "aw3";
    case Suite::UQ: return "uq";
    case Suite::Rank2: return "rank2";
    case Suite::All: return "all";
  }
  return "?";
}

namespace {

template <class T>
Report run_typed(Suite s, const SuiteConfig& cfg) {
  Report r;
  if (s == Suite::AW3 || s == Suite::All) r.append(detail::aw3_suite<T>(cfg));
  if (s == Suite::UQ || s == Suite::All) r.append(detail::uq_suite<T>(cfg));
  if (s == Suite::Rank2 || s == Suite::All) r.append(detail::rank2_suite<T>(cfg));
  return r;
}

}  // namespace

Report run_suite(Suite s, const SuiteConfig& cfg) {
  cfg.ctx.validate();
  if (cfg.N < 0 || cfg.N1 < 0 || cfg.N2 < 0) throw ConfigError("N, N1 and N2 must be nonnegative");
  if (cfg.tol && !(*cfg.tol > 0)) throw ConfigError("tol must be positive");
  Report r = cfg.ctx.precision == Precision::Extended ? run_typed<ext>(s, cfg) : run_typed<double>(s, cfg);
  r.meta.q = cfg.ctx.q;
  r.meta.N = cfg.N;
  r.meta.N1 = cfg.N1;
  r.meta.N2 = cfg.N2;
  r.meta.precision = precision_name(cfg.ctx.precision);
  return r;
}

}  // namespace awlab
