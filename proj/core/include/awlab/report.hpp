#pragma once

#include <string>
#include <utility>
#include <vector>

namespace awlab {

using ParamList = std::vector<std::pair<std::string, std::string>>;

struct CheckReport {
  std::string check_id;
  ParamList params;
  double residual = 0;
  double tolerance = 0;
  bool pass = false;
  std::string notes;
};

// pass = residual <= tolerance; NaN residuals fail.
CheckReport make_check(std::string id, ParamList params, double residual, double tolerance, std::string notes = {});

// Warning-class entry: always pass, notes carry "WARNING: ..." when the residual exceeds tolerance.
CheckReport make_warning(std::string id, ParamList params, double residual, double tolerance, std::string notes);

struct RunMeta {
  double q = 0;
  int N = 0, N1 = 0, N2 = 0;
  std::string precision = "double";
};

struct Report {
  RunMeta meta;
  std::vector<CheckReport> checks;

  bool all_pass() const;
  void append(const Report& other);
  std::vector<std::string> failing_ids() const;
};

std::string fmt17(double x);            // %.17g, "null" for NaN/inf in JSON contexts
std::string json_escape(const std::string& s);
std::string to_json(const Report& r);

}  // namespace awlab
