#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <ostream>
#include <thread>

namespace awlab::cli {

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
  if (!f) throw std::runtime_error("write failed for '" + path + "'");
}

std::string strip_extension(const std::string& p) {
  for (const char* ext : {".csv", ".json"}) {
    const std::string e(ext);
    if (p.size() > e.size() && p.compare(p.size() - e.size(), e.size(), e) == 0) return p.substr(0, p.size() - e.size());
  }
  return p;
}

void summarize(const Report& r, const std::string& what, std::ostream& err) {
  std::size_t failed = 0, warned = 0;
  for (const auto& c : r.checks) {
    if (!c.pass) {
      ++failed;
      err << "FAIL " << c.check_id << " residual=" << fmt17(c.residual) << " tol=" << fmt17(c.tolerance);
      if (!c.notes.empty()) err << " (" << c.notes << ")";
      err << "\n";
    } else if (c.notes.rfind("WARNING:", 0) == 0) {
      ++warned;
    }
  }
  err << what << ": " << r.checks.size() << " checks, " << failed << " failed, " << warned << " warnings\n";
}

}  // namespace

int cmd_verify(Suite s, const RunConfig& rc, std::ostream& out, std::ostream& err) {
  const Report r = run_suite(s, rc.suite);
  const std::string json = to_json(r);
  if (rc.out.empty()) out << json;
  else write_file(rc.out, json);
  summarize(r, std::string("verify ") + suite_name(s), err);
  return r.all_pass() ? kPass : kCheckFailure;
}

int cmd_tables(TableKind k, const RunConfig& rc, std::ostream& out, std::ostream& err) {
  const NumTable t = make_table(k, rc.suite);
  if (rc.out.empty()) {
    out << to_csv(t);
  } else {
    const std::string stem = strip_extension(rc.out);
    write_file(stem + ".csv", to_csv(t));
    write_file(stem + ".json", to_json(t));
    err << "tables " << t.kind << ": wrote " << stem << ".csv and " << stem << ".json (" << t.rows.size()
        << " rows)\n";
  }
  return kPass;
}

std::vector<SweepPoint> run_sweep(const std::vector<KeyValues>& points, unsigned jobs) {
  std::vector<SweepPoint> res(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      SweepPoint& p = res[i];
      p.settings = points[i];
      try {
        const auto it = points[i].find("suite");
        if (it == points[i].end()) throw ConfigError("sweep point has no 'suite'");
        const Suite s = parse_suite(it->second);
        const RunConfig rc = to_run_config(points[i]);
        p.report = run_suite(s, rc.suite);
        p.status = p.report.all_pass() ? "pass" : "fail";
      } catch (const ConfigError& e) {
        p.status = "invalid";
        p.message = e.what();
      } catch (const std::exception& e) {
        p.status = "fail";
        p.message = e.what();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, unsigned(points.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return res;
}

std::string sweep_json(const std::vector<GridAxis>& axes, const std::vector<SweepPoint>& results) {
  struct Agg {
    double max_residual = 0;
    double tolerance = 0;
    std::size_t points = 0, failures = 0;
  };
  // std::map keeps check_ids sorted, so the output does not depend on scheduling
  std::map<std::string, Agg> agg;
  std::size_t invalid = 0, failed = 0;
  std::string o = "{\n  \"meta\": {\"points\": " + std::to_string(results.size()) + ", \"axes\": [";
  for (std::size_t a = 0; a < axes.size(); ++a) {
    o += (a ? ", " : "") + std::string("{\"key\": \"") + json_escape(axes[a].key) + "\", \"values\": [";
    for (std::size_t v = 0; v < axes[a].values.size(); ++v)
      o += (v ? ", \"" : "\"") + json_escape(axes[a].values[v]) + "\"";
    o += "]}";
  }
  o += "]},\n  \"points\": [";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& p = results[i];
    if (p.status == "invalid") ++invalid;
    if (p.status == "fail") ++failed;
    o += i ? ",\n    {" : "\n    {";
    o += "\"index\": " + std::to_string(i) + ", \"settings\": {";
    bool first = true;
    for (const auto& [k, v] : p.settings) {
      o += (first ? "\"" : ", \"") + json_escape(k) + "\": \"" + json_escape(v) + "\"";
      first = false;
    }
    o += "}, \"status\": \"" + p.status + "\", \"message\": \"" + json_escape(p.message) + "\", \"failing\": [";
    const auto ids = p.report.failing_ids();
    for (std::size_t k = 0; k < ids.size(); ++k) o += (k ? ", \"" : "\"") + json_escape(ids[k]) + "\"";
    o += "], \"report\": ";
    std::string rep = p.status == "invalid" ? std::string("null") : to_json(p.report);
    while (!rep.empty() && rep.back() == '\n') rep.pop_back();
    o += rep + "}";
    for (const auto& c : p.report.checks) {
      auto [it, fresh] = agg.try_emplace(c.check_id);
      Agg& a = it->second;
      const double r = std::isnan(c.residual) ? INFINITY : c.residual;
      a.max_residual = fresh ? r : std::max(a.max_residual, r);
      a.tolerance = fresh ? c.tolerance : std::min(a.tolerance, c.tolerance);
      ++a.points;
      if (!c.pass) ++a.failures;
    }
  }
  o += results.empty() ? "]" : "\n  ]";
  o += ",\n  \"summary\": {\"pass\": " + std::to_string(results.size() - invalid - failed) +
       ", \"fail\": " + std::to_string(failed) + ", \"invalid\": " + std::to_string(invalid) + "},\n  \"aggregate\": [";
  bool first = true;
  for (const auto& [id, a] : agg) {
    o += first ? "\n    {" : ",\n    {";
    first = false;
    o += "\"check_id\": \"" + json_escape(id) + "\", \"max_residual\": " + fmt17(a.max_residual) +
         ", \"tolerance\": " + fmt17(a.tolerance) + ", \"points\": " + std::to_string(a.points) +
         ", \"failures\": " + std::to_string(a.failures) + ", \"pass\": " + (a.failures ? "false" : "true") + "}";
  }
  o += agg.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return o;
}

int cmd_sweep(const KeyValues& base, const std::vector<GridAxis>& axes, const std::string& out_path, unsigned jobs,
              std::ostream& out, std::ostream& err) {
  auto points = expand_grid(base, axes);
  for (auto& p : points) {
    apply_environment(p);
    p.erase("out");
  }
  const auto results = run_sweep(points, jobs);
  const std::string json = sweep_json(axes, results);
  if (out_path.empty()) out << json;
  else write_file(out_path, json);
  bool ok = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& p = results[i];
    if (p.status != "pass") {
      ok = false;
      err << "point " << i << ": " << p.status;
      if (!p.message.empty()) err << " (" << p.message << ")";
      for (const auto& id : p.report.failing_ids()) err << " " << id;
      err << "\n";
    }
  }
  err << "sweep: " << results.size() << " points\n";
  return ok ? kPass : kCheckFailure;
}

}  // namespace awlab::cli
