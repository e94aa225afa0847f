#include "awlab/embedding.hpp"

#include <cmath>
#include <complex>

namespace awlab {

AWStructure<double> embedding_constants(const QFun<double>& qf, const TwistCoeffs<double>& c, double omega0) {
  const double s = qf.s1sq(), ch = qf.cosh(1.0);
  const double th = c.theta(qf);
  return {s * (c.as * c.bt - th * omega0), -ch * ch * c.bE * c.bF, -ch * ch * c.aE * c.aF,
          ch * (c.as * omega0 * c.bE * c.bF + s * c.bt * th), ch * (c.bt * omega0 * c.aE * c.aF + s * c.as * th)};
}

double structure_distance(const AWStructure<double>& a, const AWStructure<double>& b) {
  auto d = [](double x, double y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); };
  return std::max({d(a.B, b.B), d(a.C0, b.C0), d(a.C1, b.C1), d(a.D0, b.D0), d(a.D1, b.D1)});
}

namespace {

using Poly = std::vector<double>;  // ascending coefficients

Poly pmul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly padd(Poly a, const Poly& b, double f = 1.0) {
  if (b.size() > a.size()) a.resize(b.size(), 0.0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += f * b[i];
  return a;
}

double peval(const Poly& p, double x) {
  double r = 0;
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

double pscale(const Poly& p, double x) {
  double r = 0;
  for (std::size_t i = p.size(); i-- > 0;) r = r * std::abs(x) + std::abs(p[i]);
  return r;
}

Poly pderiv(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(double(i) * p[i]);
  if (d.empty()) d.push_back(0.0);
  return d;
}

// Coefficient sets for given (theta, as, bt); empty when aE bF has no real value.
std::vector<TwistCoeffs<double>> factor_coefficients(const QFun<double>& qf, const AWStructure<double>& s, double theta,
                                                     double as, double bt) {
  const double sq = qf.s1sq(), ch = qf.cosh(1.0), c4 = ch * ch * ch * ch;
  const double pc = s.C0 * s.C1 / c4;
  const double disc = sq * sq * theta * theta - 4 * pc;
  std::vector<TwistCoeffs<double>> out;
  if (disc < 0) return out;
  std::vector<double> us;
  const double r = std::sqrt(disc);
  for (double u : {(-sq * theta + r) / 2, (-sq * theta - r) / 2})
    if (std::find(us.begin(), us.end(), u) == us.end()) us.push_back(u);
  for (double u : us) {
    TwistCoeffs<double> c{};
    c.as = as;
    c.bt = bt;
    if (u != 0.0) {
      c.aE = std::sqrt(std::abs(u));
      c.bF = u / c.aE;
      c.aF = -s.C1 / (ch * ch * c.aE);
      c.bE = -s.C0 / (ch * ch * c.bF);
    } else if (s.C1 == 0.0) {
      c.aE = 0;
      c.aF = 0;
      c.bF = 1;
      c.bE = -s.C0 / (ch * ch);
    } else {
      c.bF = 0;
      c.bE = 0;
      c.aE = 1;
      c.aF = -s.C1 / (ch * ch);
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<EmbeddingSolution> solve_embedding(const QFun<double>& qf, const AWStructure<double>& s, double omega0,
                                               double accept_tol) {
  if (omega0 == 0.0) throw std::invalid_argument("solve_embedding: omega0 must be nonzero");
  for (double v : {s.B, s.C0, s.C1, s.D0, s.D1})
    if (!std::isfinite(v)) throw std::invalid_argument("solve_embedding: non-finite structure constant");
  const double sq = qf.s1sq(), ch = qf.cosh(1.0);
  const double k0 = s.C0 * omega0 * omega0 / (ch * ch), k1 = s.C1 * omega0 * omega0 / (ch * ch);
  const double d0 = s.D0 * omega0 / ch, d1 = s.D1 * omega0 / ch;

  // as = n(bt)/m(bt) with n = B bt + d0, m = sq bt^2 - k0;
  // bt (sq n^2 - k1 m^2) - B n m - d1 m^2 = 0.
  const Poly n{d0, s.B}, m{-k0, 0.0, sq}, x{0.0, 1.0};
  Poly P = pmul(x, padd(pmul(n, n), pmul(m, m), -k1 / sq));
  for (double& v : P) v *= sq;
  P = padd(P, pmul(n, m), -s.B);
  P = padd(P, pmul(m, m), -d1);

  std::vector<std::pair<double, double>> cand;  // (as, bt)
  const double pnorm = pscale(P, 1.0);
  std::vector<double> desc(P.rbegin(), P.rend());
  while (!desc.empty() && std::abs(desc.front()) <= 1e-14 * std::max(1.0, pnorm)) desc.erase(desc.begin());
  if (desc.size() >= 2) {
    const Poly dP = pderiv(P);
    for (const auto& z : companion_roots(desc)) {
      if (std::abs(z.imag()) > 1e-7 * std::max(1.0, std::abs(z))) continue;
      double bt = z.real();
      for (int it = 0; it < 8; ++it) {
        const double dv = peval(dP, bt);
        if (dv == 0.0) break;
        bt -= peval(P, bt) / dv;
      }
      const double mv = peval(m, bt);
      if (std::abs(mv) < 1e-8 * std::max(1.0, std::abs(k0))) continue;  // handled by the special branch
      cand.push_back({peval(n, bt) / mv, bt});
    }
  }
  // Special branch m(bt) = 0, which needs n(bt) = 0; as then solves sq bt as^2 - B as - (k1 bt + d1) = 0.
  if (k0 / sq >= 0) {
    const double r0 = std::sqrt(k0 / sq);
    for (double bt : {r0, -r0}) {
      if (std::abs(peval(n, bt)) > 1e-10 * std::max(1.0, std::abs(s.B * bt) + std::abs(d0))) continue;
      const double a = sq * bt, b = -s.B, c = -(k1 * bt + d1);
      if (a == 0.0) {
        if (b != 0.0) cand.push_back({-c / b, bt});
        continue;
      }
      const double disc = b * b - 4 * a * c;
      if (disc < 0) continue;
      cand.push_back({(-b + std::sqrt(disc)) / (2 * a), bt});
      cand.push_back({(-b - std::sqrt(disc)) / (2 * a), bt});
    }
  }

  std::vector<EmbeddingSolution> sols;
  for (const auto& [as, bt] : cand) {
    const double theta = (as * bt - s.B / sq) / omega0;
    for (const auto& c : factor_coefficients(qf, s, theta, as, bt)) {
      EmbeddingSolution e{c, c.theta(qf), structure_distance(embedding_constants(qf, c, omega0), s)};
      if (e.residual <= accept_tol) sols.push_back(e);
    }
  }
  if (sols.empty()) {
    const bool excluded = s.B == 0.0 && s.C0 == 0.0 && s.C1 == 0.0 && ((s.D0 == 0.0) != (s.D1 == 0.0));
    throw NoSolution(excluded ? "solve_embedding: excluded structure (a single nonzero D constant)"
                              : "solve_embedding: no real coefficient set reproduces the structure");
  }
  return sols;
}

}  // namespace awlab
