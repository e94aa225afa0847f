#include "awlab/report.hpp"

#include <cmath>
#include <cstdio>

namespace awlab {

CheckReport make_check(std::string id, ParamList params, double residual, double tolerance, std::string notes) {
  CheckReport c;
  c.check_id = std::move(id);
  c.params = std::move(params);
  c.residual = residual;
  c.tolerance = tolerance;
  c.pass = residual <= tolerance;  // false for NaN
  c.notes = std::move(notes);
  return c;
}

CheckReport make_warning(std::string id, ParamList params, double residual, double tolerance, std::string notes) {
  CheckReport c = make_check(std::move(id), std::move(params), residual, tolerance);
  if (!c.pass) c.notes = "WARNING: " + notes;
  else c.notes = notes;
  c.pass = true;
  return c;
}

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

std::vector<std::string> Report::failing_ids() const {
  std::vector<std::string> ids;
  for (const auto& c : checks)
    if (!c.pass) ids.push_back(c.check_id);
  return ids;
}

std::string fmt17(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string o;
  o.reserve(s.size() + 2);
  for (unsigned char ch : s) {
    switch (ch) {
      case '"': o += "\\\""; break;
      case '\\': o += "\\\\"; break;
      case '\n': o += "\\n"; break;
      case '\t': o += "\\t"; break;
      case '\r': o += "\\r"; break;
      default:
        if (ch < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          o += buf;
        } else {
          o += char(ch);
        }
    }
  }
  return o;
}

std::string to_json(const Report& r) {
  std::string o = "{\n  \"meta\": {\"q\": " + fmt17(r.meta.q) + ", \"dims\": {\"N\": " + std::to_string(r.meta.N) +
                  ", \"N1\": " + std::to_string(r.meta.N1) + ", \"N2\": " + std::to_string(r.meta.N2) +
                  "}, \"precision\": \"" + json_escape(r.meta.precision) + "\"},\n  \"checks\": [";
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    const auto& c = r.checks[i];
    o += i ? ",\n    {" : "\n    {";
    o += "\"check_id\": \"" + json_escape(c.check_id) + "\", \"params\": {";
    for (std::size_t k = 0; k < c.params.size(); ++k) {
      if (k) o += ", ";
      o += "\"" + json_escape(c.params[k].first) + "\": \"" + json_escape(c.params[k].second) + "\"";
    }
    o += "}, \"residual\": " + fmt17(c.residual) + ", \"tolerance\": " + fmt17(c.tolerance) +
         ", \"pass\": " + (c.pass ? "true" : "false") + ", \"notes\": \"" + json_escape(c.notes) + "\"}";
  }
  o += r.checks.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return o;
}

}  // namespace awlab
