#include "awlab/tables.hpp"

#include "awlab/presets.hpp"

#include <cstdio>

namespace awlab {

TableKind parse_table_kind(const std::string& s) {
  if (s == "qracah") return TableKind::QRacah;
  if (s == "bivariate") return TableKind::Bivariate;
  if (s == "weights") return TableKind::Weights;
  if (s == "stencil") return TableKind::Stencil;
  throw ConfigError("unknown table kind '" + s + "' (expected qracah, bivariate, weights or stencil)");
}

const char* table_kind_name(TableKind k) {
  switch (k) {
    case TableKind::QRacah: return "qracah";
    case TableKind::Bivariate: return "bivariate";
    case TableKind::Weights: return "weights";
    case TableKind::Stencil: return "stencil";
  }
  return "?";
}

namespace {

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

bool rank2_kind(TableKind k) { return k == TableKind::Bivariate || k == TableKind::Stencil; }

Alpha3 pick_alpha(TableKind k, const SuiteConfig& cfg) {
  if (cfg.alpha) return *cfg.alpha;
  const auto pre = rank2_kind(k) ? rank2_presets(cfg.ctx, cfg.N1, cfg.N2, 1) : aw3_presets(cfg.ctx, cfg.N, 1);
  if (pre.empty()) throw NumericError("no admissible parameter preset for these dimensions; pass --alpha0/1/2");
  return pre.front();
}

template <class T>
void square_table(NumTable& t, const Matrix<T>& m, const std::string& what) {
  t.description = what + "; row j = 0..N (variable index), column n = 0..N (degree)";
  for (std::size_t n = 0; n < m.cols(); ++n) t.columns.push_back("n" + std::to_string(n));
  for (std::size_t j = 0; j < m.rows(); ++j) {
    std::vector<double> row;
    for (std::size_t n = 0; n < m.cols(); ++n) row.push_back(to_double(m(j, n)));
    t.rows.push_back(std::move(row));
  }
}

template <class T>
NumTable build(TableKind k, const SuiteConfig& cfg, const Alpha3& al) {
  const QFun<T> qf(cfg.ctx);
  NumTable t;
  t.kind = table_kind_name(k);
  t.params = {{"q", g17(cfg.ctx.q)},
              {"alpha0", g17(al.alpha0)},
              {"alpha1", g17(al.alpha1)},
              {"alpha2", g17(al.alpha2)},
              {"precision", precision_name(cfg.ctx.precision)}};
  if (!rank2_kind(k)) {
    t.params.push_back({"N", std::to_string(cfg.N)});
    const AlphaParams p = AlphaParams::for_dim(al.alpha0, al.alpha1, al.alpha2, cfg.N);
    if (k == TableKind::QRacah)
      square_table(t, series_table(qf, p, cfg.N), "q-Racah values R_n(mu_j)");
    else
      square_table(t, weight_table(qf, p, cfg.N), "orthogonality weights rho(j)/h_n");
    return t;
  }
  t.params.push_back({"N1", std::to_string(cfg.N1)});
  t.params.push_back({"N2", std::to_string(cfg.N2)});
  const auto rep = build_aw2(qf, cfg.N1, cfg.N2, al);
  if (k == TableKind::Bivariate) {
    const auto bt = bivariate_overlaps(qf, rep);
    t.description = "bivariate overlaps from eigenvectors and from the product formula";
    t.columns = {"j1", "j2", "k1", "k2", "P_overlap", "P_formula"};
    for (int j1 = 0; j1 <= cfg.N1; ++j1)
      for (int j2 = 0; j2 <= cfg.N2; ++j2)
        for (int k1 = 0; k1 <= cfg.N1; ++k1)
          for (int k2 = 0; k2 <= cfg.N2; ++k2)
            t.rows.push_back({double(j1), double(j2), double(k1), double(k2), to_double(bt.P(j1, j2, k1, k2)),
                              to_double(bivariate_product_formula(qf, al, cfg.N1, cfg.N2, k1, k2, j1, j2))});
    return t;
  }
  t.description = "L2 coefficients on the nine-point stencil; c_a_b couples (t1,t2) to (t1+2a,t2+2b), 0 off the grid";
  t.columns = {"two_n1", "two_n2"};
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      t.columns.push_back(std::string("c_") + (a < 0 ? "m1" : a > 0 ? "p1" : "0") + "_" +
                          (b < 0 ? "m1" : b > 0 ? "p1" : "0"));
  for (std::size_t i = 0; i < rep.grid.size(); ++i) {
    const auto [t1, t2] = rep.grid.states[i];
    std::vector<double> row{double(t1), double(t2)};
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b) {
        const auto j = rep.grid.find(t1 + 2 * a, t2 + 2 * b);
        row.push_back(j ? to_double(rep.L2(i, *j)) : 0.0);
      }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

NumTable make_table(TableKind k, const SuiteConfig& cfg) {
  cfg.ctx.validate();
  if (cfg.N < 0 || cfg.N1 < 0 || cfg.N2 < 0) throw ConfigError("N, N1 and N2 must be nonnegative");
  const Alpha3 al = pick_alpha(k, cfg);
  return cfg.ctx.precision == Precision::Extended ? build<ext>(k, cfg, al) : build<double>(k, cfg, al);
}

std::string to_csv(const NumTable& t) {
  std::string o = "# " + t.kind + ": " + t.description + "; columns:";
  for (std::size_t i = 0; i < t.columns.size(); ++i) o += (i ? "," : " ") + t.columns[i];
  for (const auto& [k, v] : t.params) o += "; " + k + "=" + v;
  o += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) o += (i ? "," : "") + g17(row[i]);
    o += "\n";
  }
  return o;
}

std::string to_json(const NumTable& t) {
  std::string o = "{\n  \"kind\": \"" + json_escape(t.kind) + "\",\n  \"description\": \"" +
                  json_escape(t.description) + "\",\n  \"params\": {";
  for (std::size_t i = 0; i < t.params.size(); ++i)
    o += (i ? ", \"" : "\"") + json_escape(t.params[i].first) + "\": \"" + json_escape(t.params[i].second) + "\"";
  o += "},\n  \"columns\": [";
  for (std::size_t i = 0; i < t.columns.size(); ++i) o += (i ? ", \"" : "\"") + json_escape(t.columns[i]) + "\"";
  o += "],\n  \"rows\": [";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    o += r ? ",\n    [" : "\n    [";
    for (std::size_t i = 0; i < t.rows[r].size(); ++i) o += (i ? ", " : "") + fmt17(t.rows[r][i]);
    o += "]";
  }
  o += t.rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return o;
}

}  // namespace awlab
