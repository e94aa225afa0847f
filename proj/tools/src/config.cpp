#include "config.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace awlab::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool is_known(const std::string& k) {
  const auto& ks = known_keys();
  return std::find(ks.begin(), ks.end(), k) != ks.end();
}

template <class F>
void for_each_entry(const std::string& text, const std::string& origin, F&& f) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = origin + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(where + ": empty key");
    if (!is_known(key)) throw ConfigError(where + ": unknown key '" + key + "'");
    if (value.empty()) throw ConfigError(where + ": empty value for '" + key + "'");
    f(key, value, where);
  }
}

double to_real(const std::string& key, const std::string& v) {
  errno = 0;
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(x))
    throw ConfigError(key + " must be a finite real number, got '" + v + "'");
  return x;
}

int to_count(const std::string& key, const std::string& v) {
  errno = 0;
  char* end = nullptr;
  const long x = std::strtol(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0' || errno == ERANGE) throw ConfigError(key + " must be an integer, got '" + v + "'");
  if (x < 0) throw ConfigError(key + " must be >= 0, got " + v);
  if (x > 64) throw ConfigError(key + " must be <= 64, got " + v);
  return int(x);
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError(key + " must be true or false, got '" + v + "'");
}

}  // namespace

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> k{"suite", "q",   "N",         "N1",  "N2",     "alpha0", "alpha1",
                                          "alpha2", "tol", "precision", "out", "corrupt", "eps_inf"};
  return k;
}

KeyValues parse_config_text(const std::string& text, const std::string& origin) {
  KeyValues kv;
  for_each_entry(text, origin, [&](const std::string& k, const std::string& v, const std::string& where) {
    if (kv.count(k)) throw ConfigError(where + ": duplicate key '" + k + "'");
    kv[k] = v;
  });
  return kv;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

KeyValues load_config_file(const std::string& path) { return parse_config_text(read_file(path), path); }

void apply_environment(KeyValues& kv) {
  if (const char* p = std::getenv("AWLAB_PRECISION"); p && *p) kv["precision"] = p;
}

RunConfig to_run_config(const KeyValues& kv) {
  RunConfig rc;
  auto& c = rc.suite;
  for (const auto& [k, v] : kv)
    if (!is_known(k)) throw ConfigError("unknown key '" + k + "'");
  if (auto it = kv.find("q"); it != kv.end()) c.ctx.q = to_real("q", it->second);
  if (auto it = kv.find("eps_inf"); it != kv.end()) c.ctx.eps_inf = to_real("eps_inf", it->second);
  if (auto it = kv.find("N"); it != kv.end()) c.N = to_count("N", it->second);
  if (auto it = kv.find("N1"); it != kv.end()) c.N1 = to_count("N1", it->second);
  if (auto it = kv.find("N2"); it != kv.end()) c.N2 = to_count("N2", it->second);
  if (auto it = kv.find("tol"); it != kv.end()) {
    const double t = to_real("tol", it->second);
    if (!(t > 0)) throw ConfigError("tol must be > 0, got " + it->second);
    c.tol = t;
  }
  if (auto it = kv.find("precision"); it != kv.end()) {
    if (it->second == "double") c.ctx.precision = Precision::Double;
    else if (it->second == "extended") c.ctx.precision = Precision::Extended;
    else throw ConfigError("precision must be 'double' or 'extended', got '" + it->second + "'");
  }
  if (auto it = kv.find("corrupt"); it != kv.end()) c.corrupt = to_bool("corrupt", it->second);
  if (auto it = kv.find("out"); it != kv.end()) rc.out = it->second;
  const int given = int(kv.count("alpha0") + kv.count("alpha1") + kv.count("alpha2"));
  if (given == 3)
    c.alpha = Alpha3{to_real("alpha0", kv.at("alpha0")), to_real("alpha1", kv.at("alpha1")),
                     to_real("alpha2", kv.at("alpha2"))};
  else if (given != 0)
    throw ConfigError("alpha0, alpha1 and alpha2 must be given together");
  c.ctx.validate();
  return rc;
}

std::vector<GridAxis> parse_grid_text(const std::string& text, const std::string& origin) {
  std::vector<GridAxis> axes;
  for_each_entry(text, origin, [&](const std::string& k, const std::string& v, const std::string& where) {
    for (const auto& a : axes)
      if (a.key == k) throw ConfigError(where + ": duplicate key '" + k + "'");
    if (k == "out") throw ConfigError(where + ": 'out' cannot be swept");
    GridAxis ax{k, {}};
    std::istringstream in(v);
    std::string item;
    while (std::getline(in, item, ',')) {
      item = trim(item);
      if (item.empty()) throw ConfigError(where + ": empty list item for '" + k + "'");
      ax.values.push_back(item);
    }
    axes.push_back(std::move(ax));
  });
  if (axes.empty()) throw ConfigError(origin + ": grid has no axes");
  return axes;
}

std::vector<GridAxis> load_grid_file(const std::string& path) { return parse_grid_text(read_file(path), path); }

std::vector<KeyValues> expand_grid(const KeyValues& base, const std::vector<GridAxis>& axes) {
  std::vector<KeyValues> pts{base};
  for (const auto& ax : axes) {
    std::vector<KeyValues> next;
    for (const auto& p : pts)
      for (const auto& v : ax.values) {
        KeyValues q = p;
        q[ax.key] = v;
        next.push_back(std::move(q));
      }
    pts = std::move(next);
  }
  return pts;
}

}  // namespace awlab::cli
