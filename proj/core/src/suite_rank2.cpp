#include "suite_common.hpp"

namespace awlab::detail {

template <class T>
Report rank2_suite(const SuiteConfig& cfg) {
  Report r;
  const QFun<T> qf(cfg.ctx);
  const int N1 = cfg.N1, N2 = cfg.N2;
  Alpha3 al;
  if (cfg.alpha) {
    al = *cfg.alpha;
  } else {
    const auto pre = rank2_presets(cfg.ctx, N1, N2, 1);
    if (pre.empty()) {
      r.checks.push_back(make_check("rank2.preset",
                                    {{"q", num(cfg.ctx.q)}, {"N1", std::to_string(N1)}, {"N2", std::to_string(N2)}},
                                    std::numeric_limits<double>::infinity(), 0.0, "no admissible preset found"));
      return r;
    }
    al = pre.front();
  }
  ParamList P = alpha_params(cfg, al);
  P.push_back({"N1", std::to_string(N1)});
  P.push_back({"N2", std::to_string(N2)});

  guarded(r, "rank2", P, [&] {
    AW2Options opt;
    opt.corrupt = cfg.corrupt;
    const auto rep = build_aw2(qf, N1, N2, al, opt);
    const auto v = verify_aw2_relations(qf, rep);
    for (const auto& rel : v.relations) {
      r.checks.push_back(make_check("rank2.relation." + rel.name, P, rel.residual, tol_of(cfg, 1e-9)));
      r.checks.push_back(make_check("rank2.locality." + rel.name, P, rel.locality, tol_of(cfg, 1e-9)));
    }
    for (const auto& [name, res] : v.commutators)
      r.checks.push_back(make_check("rank2.commutator." + name, P, res, tol_of(cfg, 1e-9)));

    const auto st = stencil_checks(rep);
    r.checks.push_back(make_check("rank2.stencil_outside", P, st.outside, tol_of(cfg, 1e-12),
                                  "largest L2 entry outside shifts {-1,0,1}^2"));
    r.checks.push_back(make_check("rank2.stencil_k1_band", P, st.k1_band, tol_of(cfg, 1e-12)));
    r.checks.push_back(make_check("rank2.stencil_k2_band", P, st.k2_band, tol_of(cfg, 1e-12)));
    r.checks.push_back(make_check("rank2.m2_band", P, st.m2_band, tol_of(cfg, 1e-12)));
    r.checks.push_back(make_check("rank2.e_consistency", P, st.e_consistency, tol_of(cfg, 1e-10),
                                  "diagonal of L2 from the two closed forms"));
  });

  guarded(r, "rank2.adjudication", P, [&] {
    std::vector<Rank2Probe> probes{{al, N1, N2}};
    std::string probe_note;
    if (N1 == N2) {
      // A_N1 = A_N2 here; add the nearest asymmetric dimensions with their own preset
      const auto pre = rank2_presets(cfg.ctx, N1, N2 + 1, 1);
      if (!pre.empty()) {
        probes.push_back({pre.front(), N1, N2 + 1});
        probe_note = "; asymmetric probe (" + std::to_string(N1) + "," + std::to_string(N2 + 1) + ") at alpha=(" +
                     num(pre.front().alpha0) + "," + num(pre.front().alpha1) + "," + num(pre.front().alpha2) + ")";
      }
    }
    const auto a = adjudicate_a3_reading(qf, probes);
    auto chk = adjudication_check("rank2.a3_reading", P, a);
    chk.notes += probe_note;
    r.checks.push_back(chk);

    double listed = std::numeric_limits<double>::infinity();
    std::string why;
    try {
      AW2Options o;
      o.m2_sign = -1;
      listed = verify_aw2_relations(qf, build_aw2(qf, N1, N2, al, o)).worst();
    } catch (const std::exception& e) {
      why = std::string("; build failed: ") + e.what();
    }
    r.checks.push_back(make_warning("rank2.m2_slot_sign_listed", P, listed, 1e-9,
                                    "M2 off-diagonal with the listed third parameter sign" + why));
    AW2Options o;
    o.relation_sign = M2RelationSign::AsListed;
    r.checks.push_back(make_warning("rank2.relation_sign_listed", P,
                                    verify_aw2_relations(qf, build_aw2(qf, N1, N2, al, o)).worst(), 1e-9,
                                    "A2 = +K2 and A2 = +L2 in the M2 relations"));
  });

  guarded(r, "rank2.bivariate", P, [&] {
    const auto rep = build_aw2(qf, N1, N2, al);
    const auto bt = bivariate_overlaps(qf, rep);
    const std::string hint = std::is_same_v<T, double> && (N1 + 1) * (N2 + 1) > 20
                                 ? "; large grids are ill-conditioned in double, use --precision extended"
                                 : "";
    r.checks.push_back(make_check("rank2.phi_spectrum", P, bt.spectrum_error, tol_of(cfg, 1e-9)));
    r.checks.push_back(make_check("rank2.bivariate_factorization", P, bt.factor_error, tol_of(cfg, 1e-8),
                                  "|<Phi, psi>| = |A_k2(j1,k1) B_j1(j2,k2)|"));
    r.checks.push_back(make_check("rank2.bivariate_assembled", P, bt.assembled_error, tol_of(cfg, 1e-7)));
    const auto bc = bivariate_checks(qf, rep, bt);
    r.checks.push_back(make_check("rank2.bivariate_product", P, bc.product_error, tol_of(cfg, 1e-7), hint.empty() ? "" : hint.substr(2)));
    r.checks.push_back(make_check("rank2.bivariate_orthogonality", P, bc.orthogonality, tol_of(cfg, 1e-8),
                                  hint.empty() ? "" : hint.substr(2)));
    r.checks.push_back(make_check("rank2.double_weight", P, bc.weight_vs_overlap, tol_of(cfg, 1e-7),
                                  "squared overlap over product formula vs the double weight"));
    r.checks.push_back(make_warning("rank2.weight_positivity", P, bc.min_weight > 0 ? 0.0 : 1.0, 0.0,
                                    "minimum double weight " + num(bc.min_weight)));
  });

  guarded(r, "rank2.gasper_rahman", P, [&] {
    const auto br = gasper_rahman_bridge(qf, al, N1, N2);
    r.checks.push_back(make_check("rank2.gasper_rahman", P, br.worst_spread, tol_of(cfg, 1e-8),
                                  "max over degree pairs of the relative spread of the ratio over (j1,j2)"));
    r.checks.push_back(make_check("rank2.gasper_rahman_balance", P, br.worst_balance, tol_of(cfg, 1e-12)));
  });
  return r;
}

template Report rank2_suite<double>(const SuiteConfig&);
template Report rank2_suite<ext>(const SuiteConfig&);

}  // namespace awlab::detail
