#include "awlab/presets.hpp"

#include <algorithm>
#include <cmath>

namespace awlab {

namespace {

std::vector<Alpha3> scan_grid() {
  std::vector<Alpha3> g;
  for (int i = -6; i <= 6; ++i)
    for (int j = -6; j <= 6; ++j)
      for (int k = -6; k <= 6; ++k) {
        // zero or repeated magnitudes make terms of the identities vanish or coincide
        if (i == 0 || j == 0 || k == 0) continue;
        if (std::abs(i) == std::abs(j) || std::abs(j) == std::abs(k) || std::abs(i) == std::abs(k)) continue;
        g.push_back({0.25 * i, 0.25 * j, 0.25 * k});
      }
  std::stable_sort(g.begin(), g.end(), [](const Alpha3& a, const Alpha3& b) {
    return std::abs(a.alpha0) + std::abs(a.alpha1) + std::abs(a.alpha2) <
           std::abs(b.alpha0) + std::abs(b.alpha1) + std::abs(b.alpha2);
  });
  return g;
}

bool univariate_ok(const QFun<double>& qf, const AlphaParams& p, int N) {
  if (N == 0) return true;
  const auto roots = root_params<double>(p);
  for (int k = 1; k <= N; ++k) {
    const double n = double(k) - double(N) / 2;
    if (!(a_sq(qf, p, n) > 0)) return false;
    // every factor sinh_q(x) - sinh_q(p_i) of an interior a^2 stays away from zero relative to its terms;
    // a ratio of extreme a^2 values would reject all large-N points at small q
    const double sx = qf.sinh(2 * n + p.alpha0 - 1);
    for (double r : roots) {
      const double sr = qf.sinh(r);
      if (!(std::abs(sx - sr) >= 1e-2 * (std::abs(sx) + std::abs(sr)))) return false;
    }
  }
  try {
    const auto P = qracah_params(qf, p);
    const double c = norm_constant(P, NormConstant::Rescaled, qf.ctx().eps_inf);
    for (int j = 0; j <= N; ++j) {
      const double rho = rho_weight(P, j), h = h_norm(P, j, c);
      if (!(rho > 0) || !(h > 0) || !std::isfinite(rho) || !std::isfinite(h)) return false;
      for (int k = 0; k <= N; ++k)
        if (!std::isfinite(qracah_eval(k, j, P))) return false;
    }
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

bool aw3_admissible(const QContext& ctx, const Alpha3& a, int N) {
  const QFun<double> qf(ctx);
  return univariate_ok(qf, AlphaParams::for_dim(a.alpha0, a.alpha1, a.alpha2, N), N);
}

bool rank2_admissible(const QContext& ctx, const Alpha3& a, int N1, int N2) {
  const QFun<double> qf(ctx);
  try {
    build_aw2(qf, N1, N2, a, {}, 1e-3);
  } catch (const std::exception&) {
    return false;
  }
  for (int k2 = 0; k2 <= N2; ++k2)
    if (!univariate_ok(qf, AlphaParams{a.alpha0 + 2 * k2 - N2, a.alpha1, a.alpha2, -double(N1) - 1, 1, 1}, N1))
      return false;
  for (int j1 = 0; j1 <= N1; ++j1)
    if (!univariate_ok(qf, AlphaParams{a.alpha1 + 2 * j1 - N1, a.alpha0, a.alpha2, -double(N2) - 1, 1, 1}, N2))
      return false;
  return true;
}

std::vector<Alpha3> aw3_presets(const QContext& ctx, int N, std::size_t count) {
  std::vector<Alpha3> out;
  for (const auto& a : scan_grid()) {
    if (out.size() >= count) break;
    if (aw3_admissible(ctx, a, N)) out.push_back(a);
  }
  return out;
}

std::vector<Alpha3> rank2_presets(const QContext& ctx, int N1, int N2, std::size_t count) {
  std::vector<Alpha3> out;
  for (const auto& a : scan_grid()) {
    if (out.size() >= count) break;
    if (rank2_admissible(ctx, a, N1, N2)) out.push_back(a);
  }
  return out;
}

}  // namespace awlab
