#pragma once

#include "awlab/suites.hpp"

#include <string>
#include <vector>

namespace awlab {

enum class TableKind { QRacah, Bivariate, Weights, Stencil };

TableKind parse_table_kind(const std::string& s);  // throws ConfigError
const char* table_kind_name(TableKind k);

// Row-major numeric table; `columns` is documented in the CSV comment line.
struct NumTable {
  std::string kind;
  std::string description;
  ParamList params;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Uses cfg.alpha when set, otherwise the first admissible preset for the requested dimensions.
NumTable make_table(TableKind k, const SuiteConfig& cfg);

// One '#' comment line naming the columns and parameters, then one line per row, %.17g.
std::string to_csv(const NumTable& t);
std::string to_json(const NumTable& t);

}  // namespace awlab
