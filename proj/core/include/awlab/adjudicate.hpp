#pragma once

#include "awlab/rank2.hpp"
#include "awlab/uqsl2.hpp"

#include <string>
#include <vector>

namespace awlab {

// Candidate readings of an ambiguous formula, each scored by a residual gate.
struct Adjudication {
  std::string topic;
  double gate = 0;
  std::vector<std::pair<std::string, double>> candidates;  // (name, residual)

  std::vector<std::string> passing() const {
    std::vector<std::string> p;
    for (const auto& c : candidates)
      if (c.second <= gate) p.push_back(c.first);
    return p;
  }
  bool unique() const { return passing().size() == 1; }
  double selected_residual() const {
    for (const auto& c : candidates)
      if (c.second <= gate) return c.second;
    double m = std::numeric_limits<double>::infinity();
    for (const auto& c : candidates) m = std::min(m, c.second);
    return m;
  }
  std::string summary() const {
    const auto p = passing();
    std::string s = p.size() == 1 ? "selected: " + p.front() : "ambiguous: " + std::to_string(p.size()) + " candidates pass";
    s += "; candidates:";
    for (const auto& c : candidates) {
      char buf[64];
      std::snprintf(buf, sizeof buf, " %s=%.3e", c.first.c_str(), c.second);
      s += buf;
    }
    return s;
  }
};

inline double finite_or_inf(double x) { return std::isfinite(x) ? x : std::numeric_limits<double>::infinity(); }

// Variable of the characteristic polynomial.
template <class T>
Adjudication adjudicate_poly_variable(const QFun<T>& qf, const AlphaParams& p, int N) {
  Adjudication a{"characteristic polynomial variable", 1e-8, {}};
  const auto rep = build_rep(qf, p, N);
  const auto s = structure_from_alpha(qf, p);
  const T Q0 = casimir_Q(qf, rep.K, rep.L, s)(0, 0);
  const auto cp = char_poly(qf, s, Q0);
  for (auto v : {PolyVariable::Raw, PolyVariable::Sinh, PolyVariable::CoshOneSinh})
    a.candidates.push_back({poly_variable_name(v), finite_or_inf(poly_root_residual(qf, cp, root_params<T>(p), v))});
  return a;
}

// Fourth dual root: gate is the swapped build satisfying the relations with the dual spectrum.
template <class T>
Adjudication adjudicate_dual_roots(const QFun<T>& qf, const AlphaParams& p, int N) {
  Adjudication a{"dual root s3", 1e-10, {}};
  for (auto v : {DualVariant::Printed, DualVariant::Symmetric}) {
    const auto d = dual_check(qf, p, N, v);
    a.candidates.push_back({dual_variant_name(v), d.finite ? finite_or_inf(std::max(d.aw_residual, d.spectrum_error))
                                                           : std::numeric_limits<double>::infinity()});
  }
  return a;
}

struct Rank2Probe {
  Alpha3 alpha;
  int N1 = 0, N2 = 0;
};

// Reading of the undefined A3 symbol in the L2 coefficients. Each candidate is scored by its worst
// result over all probes; with N1 = N2 the readings A_N1 and A_N2 coincide, so callers add an
// asymmetric probe. A probe where no candidate builds is skipped.
template <class T>
Adjudication adjudicate_a3_reading(const QFun<T>& qf, const std::vector<Rank2Probe>& probes) {
  Adjudication a{"A3 symbol in L2 coefficients", 1e-9, {}};
  const std::array<A3Reading, 4> readings{A3Reading::AN2, A3Reading::AN1, A3Reading::MinusAN2, A3Reading::A2};
  std::array<double, 4> score{};
  bool any_probe = false;
  for (const auto& pr : probes) {
    std::array<double, 4> s;
    bool built = false;
    for (std::size_t i = 0; i < readings.size(); ++i) {
      s[i] = std::numeric_limits<double>::infinity();
      try {
        AW2Options o;
        o.a3 = readings[i];
        const auto rep = build_aw2(qf, pr.N1, pr.N2, pr.alpha, o);
        const auto st = stencil_checks(rep);
        // e-consistency has its own, tighter, gate folded in by scaling
        s[i] = finite_or_inf(std::max(verify_aw2_relations(qf, rep).worst(), st.e_consistency * 10));
        built = true;
      } catch (const std::exception&) {
      }
    }
    if (!built) continue;
    any_probe = true;
    for (std::size_t i = 0; i < readings.size(); ++i) score[i] = std::max(score[i], s[i]);
  }
  for (std::size_t i = 0; i < readings.size(); ++i)
    a.candidates.push_back({a3_reading_name(readings[i]), any_probe ? score[i] : std::numeric_limits<double>::infinity()});
  return a;
}

template <class T>
Adjudication adjudicate_a3_reading(const QFun<T>& qf, const Alpha3& al, int N1, int N2) {
  return adjudicate_a3_reading(qf, std::vector<Rank2Probe>{{al, N1, N2}});
}

// Sign of the -sinh_q(1)^2 entries of the M2-type rows of the coproduct table.
template <class T>
Adjudication adjudicate_table_sign(const QFun<T>& qf, const TensorGens<T>& g, const TwistCoeffs<T>& c) {
  Adjudication a{"coproduct table sign of sinh_q(1)^2 entries", 1e-10, {}};
  for (int sg : {1, -1}) {
    double worst = 0;
    for (const auto& row : coproduct_table_rows(qf, g, c, sg)) worst = std::max(worst, row_residual(qf, row));
    a.candidates.push_back({sg == 1 ? "-sinh_q(1)^2" : "+sinh_q(1)^2", finite_or_inf(worst)});
  }
  return a;
}

}  // namespace awlab
