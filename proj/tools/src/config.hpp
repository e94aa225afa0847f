#pragma once

#include "awlab/suites.hpp"

#include <map>
#include <string>
#include <vector>

namespace awlab::cli {

// Ordered raw settings; later sources overwrite earlier ones.
using KeyValues = std::map<std::string, std::string>;

struct RunConfig {
  SuiteConfig suite;
  std::string out;  // empty: stdout
};

// Keys accepted in config files, grid files and as flags.
const std::vector<std::string>& known_keys();

// `key = value` lines; '#' starts a comment; blank lines ignored. Unknown keys and
// malformed lines throw ConfigError naming the line.
KeyValues parse_config_text(const std::string& text, const std::string& origin = "config");
KeyValues load_config_file(const std::string& path);

// Validates and converts; throws ConfigError naming the violated constraint.
RunConfig to_run_config(const KeyValues& kv);

// AWLAB_PRECISION, when set, replaces any precision setting.
void apply_environment(KeyValues& kv);

// Sweep grid: the same line format with comma-separated value lists.
struct GridAxis {
  std::string key;
  std::vector<std::string> values;
};
std::vector<GridAxis> parse_grid_text(const std::string& text, const std::string& origin = "grid");
std::vector<GridAxis> load_grid_file(const std::string& path);

// Cartesian product, last axis fastest.
std::vector<KeyValues> expand_grid(const KeyValues& base, const std::vector<GridAxis>& axes);

std::string read_file(const std::string& path);  // throws ConfigError when unreadable

}  // namespace awlab::cli
