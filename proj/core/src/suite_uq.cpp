#include "awlab/embedding.hpp"
#include "suite_common.hpp"

namespace awlab::detail {

namespace {

// Two generic sets plus one with the special normalization aE aF = bE bF = -sinh_q(1)^2.
template <class T>
std::vector<std::pair<std::string, TwistCoeffs<T>>> coefficient_sets(const QFun<T>& qf, const Alpha3& a) {
  return {{"canonical_t1", TwistCoeffs<T>::canonical(qf, a.alpha0, a.alpha1, a.alpha2, 1.0)},
          {"canonical_t1.3", TwistCoeffs<T>::canonical(qf, a.alpha0, a.alpha1, a.alpha2, 1.3)},
          {"special", TwistCoeffs<T>::special(qf, 1.2, 0.8, 0.4, -0.3)}};
}

ParamList with(ParamList p, const std::string& k, const std::string& v) {
  p.push_back({k, v});
  return p;
}

}  // namespace

template <class T>
Report uq_suite(const SuiteConfig& cfg) {
  Report r;
  const QFun<T> qf(cfg.ctx);
  const Alpha3 al = cfg.alpha ? *cfg.alpha : Alpha3{0.3, 0.2, 0.1};
  const ParamList base = alpha_params(cfg, al);
  const auto sets = coefficient_sets(qf, al);

  // single irrep of dimension N+1
  const ParamList Pn = with(base, "N", std::to_string(cfg.N));
  guarded(r, "uq.irrep", Pn, [&] {
    const auto ir = build_irrep(qf, cfg.N);
    const auto rel = irrep_relation_residuals(qf, ir);
    r.checks.push_back(make_check("uq.irrep_relations", Pn, *std::max_element(rel.begin(), rel.end()),
                                  tol_of(cfg, 1e-12), "K Kinv = 1, K E = q E K, K F = q^-1 F K, [E,F] = [K^2]"));
    const auto [om1, om2] = casimir_omega_forms(qf, ir);
    r.checks.push_back(make_check("uq.casimir_forms", Pn, difference_residual(om1, om2), tol_of(cfg, 1e-12)));
    const auto I = Matrix<T>::identity(ir.K.rows());
    r.checks.push_back(make_check("uq.casimir_scalar", Pn,
                                  difference_residual(om1, Matrix<T>(qf.cosh(T(cfg.N + 1)) * I)), tol_of(cfg, 1e-12),
                                  "Omega = cosh_q(N+1) on the irrep"));
    for (const auto& [name, c] : sets) {
      const ParamList Pc = with(Pn, "coeffs", name);
      r.checks.push_back(make_check("uq.twisted_pair", Pc, twisted_pair_residual(qf, ir, c), tol_of(cfg, 1e-10),
                                    "Omega as a matrix structure entry; theta = -(aE bF + aF bE)/sinh_q(1)^2"));
      r.checks.push_back(make_warning("uq.theta_single_product", Pc, twisted_pair_residual(qf, ir, c, true), 1e-10,
                                      "theta = -aE bF/sinh_q(1)^2 is rejected"));
    }
    const auto& cs = sets.back().second;
    const auto sa = special_aw_check(qf, ir, cs);
    const ParamList Ps = with(Pn, "coeffs", "special");
    r.checks.push_back(make_check("uq.special_cyclic", Ps, std::max(sa.cyclic12_standard, sa.cyclic23_standard),
                                  tol_of(cfg, 1e-10),
                                  "L12 paired with (L1 L2 + L3 L123), L23 with (L2 L3 + L1 L123)"));
    r.checks.push_back(make_check("uq.special_cyclic_listed_pairing", Ps,
                                  std::max(sa.cyclic12_printed, sa.cyclic23_printed), tol_of(cfg, 1e-10),
                                  "L12 paired with (L2 L3 + L1 L123), L23 with (L1 L2 + L3 L123)"));
    r.checks.push_back(make_check("uq.special_casimir", Ps, sa.casimir_vs_Q, tol_of(cfg, 1e-9),
                                  "simplified scalar " + num(to_double(sa.simplified)) + " vs Q of the AW relations " +
                                      num(to_double(sa.Q0))));
    r.checks.push_back(make_check("uq.special_casimir_reduced", Ps, sa.casimir_vs_reduced, tol_of(cfg, 1e-9),
                                  "simplified scalar vs the three-generator reduced Casimir"));
  });

  // two-fold tensor product
  ParamList Pt = with(with(base, "N1", std::to_string(cfg.N1)), "N2", std::to_string(cfg.N2));
  guarded(r, "uq.tensor", Pt, [&] {
    const auto r1 = build_irrep(qf, cfg.N1), r2 = build_irrep(qf, cfg.N2);
    for (std::size_t si = 0; si < sets.size(); ++si) {
      const auto& [name, c] = sets[si];
      const ParamList Pc = with(Pt, "coeffs", name);
      const auto g = build_tensor(qf, r1, r2, c);
      r.checks.push_back(make_check("uq.coproduct_closed_forms", Pc,
                                    std::max({difference_residual(g.dYK, g.dYK_alt), difference_residual(g.dYL, g.dYL_alt),
                                              difference_residual(g.dOmega, g.dOmega_alt)}),
                                    tol_of(cfg, 1e-12)));
      for (const auto& row : coproduct_table_rows(qf, g, c)) {
        r.checks.push_back(make_check("uq.coproduct_table." + row.name, Pc, row_residual(qf, row), tol_of(cfg, 1e-10)));
        r.checks.push_back(make_check("uq.coproduct_locality." + row.name, Pc, row_locality(row), tol_of(cfg, 1e-10)));
      }
      for (const auto& [pair, res] : commuting_pairs(g))
        r.checks.push_back(make_check("uq.commuting." + pair, Pc, res, tol_of(cfg, 1e-10)));
      if (si == 0)
        r.checks.push_back(adjudication_check("uq.table_sign", Pc, adjudicate_table_sign(qf, g, c)));
      if (si + 1 == sets.size()) {
        const auto h = hole_relation_check(qf, g, c);
        r.checks.push_back(make_check("uq.hole_relation", Pc, h.main, tol_of(cfg, 1e-9),
                                      "top label -theta, alpha = -1/sinh_q(2), beta = 1/cosh_q(1)"));
        r.checks.push_back(make_check("uq.hole_siblings", Pc, *std::max_element(h.siblings.begin(), h.siblings.end()),
                                      tol_of(cfg, 1e-9)));
        // power of the check: a 1% change of beta must be visible above 1e-3
        r.checks.push_back(make_check("uq.hole_power", Pc, h.perturbed > 0 ? 1e-3 / h.perturbed
                                                                           : std::numeric_limits<double>::infinity(),
                                      1.0, "perturbed residual " + num(h.perturbed)));
        const auto hp = hole_relation_check(qf, g, c, +1);
        r.checks.push_back(make_warning("uq.hole_top_sign_listed", Pc, hp.main, 1e-9,
                                        "top label +theta does not satisfy the relation"));
      }
    }
  });

  // embedding solver, double only
  guarded(r, "uq.embedding", base, [&] {
    const QFun<double> qd(cfg.ctx);
    double worst = 0;
    int tuples = 0;
    for (double t : {1.0, 1.3, 0.7}) {
      const auto c = TwistCoeffs<double>::canonical(qd, al.alpha0, al.alpha1, al.alpha2, t);
      const double om0 = qd.cosh(double(cfg.N + 1));
      const auto s = embedding_constants(qd, c, om0);
      double best = std::numeric_limits<double>::infinity();
      for (const auto& sol : solve_embedding(qd, s, om0)) best = std::min(best, sol.residual);
      worst = std::max(worst, best);
      ++tuples;
    }
    r.checks.push_back(make_check("uq.embedding_roundtrip", with(base, "tuples", std::to_string(tuples)), worst,
                                  tol_of(cfg, 1e-8)));
    bool rejected = false;
    std::string msg = "solver returned a solution";
    try {
      solve_embedding(qd, AWStructure<double>{0, 0, 0, 0, 1.0}, qd.cosh(double(cfg.N + 1)));
    } catch (const NoSolution& e) {
      rejected = true;
      msg = e.what();
    }
    r.checks.push_back(make_check("uq.embedding_excluded", with(base, "structure", "B=C0=C1=D0=0,D1=1"),
                                  rejected ? 0.0 : 1.0, 0.0, msg));
  });
  return r;
}

template Report uq_suite<double>(const SuiteConfig&);
template Report uq_suite<ext>(const SuiteConfig&);

}  // namespace awlab::detail
