#include "awlab/adjudicate.hpp"
#include "awlab/aw3.hpp"
#include "awlab/presets.hpp"
#include "oracle_values.hpp"

#include <doctest.h>

using namespace awlab;

namespace {

QContext ctx_at(double q) {
  QContext c;
  c.q = q;
  return c;
}

AlphaParams oracle_params() {
  return AlphaParams::for_dim(oracle::kAw3Alpha[0], oracle::kAw3Alpha[1], oracle::kAw3Alpha[2], oracle::kAw3N);
}

}  // namespace

TEST_CASE("representation entries match frozen high-precision values") {
  const QFun<double> qf(ctx_at(oracle::kQ));
  const auto rep = build_rep(qf, oracle_params(), oracle::kAw3N);
  for (int k = 0; k <= oracle::kAw3N; ++k) {
    CHECK(rep.lambda[k] == doctest::Approx(oracle::kAw3Lambda[k]).epsilon(1e-13));
    CHECK(rep.b[k] == doctest::Approx(oracle::kAw3B[k]).epsilon(1e-12));
    CHECK(rep.a[k] == doctest::Approx(oracle::kAw3A[k]).epsilon(1e-12));
  }
  const auto es = sym_eig(rep.L);
  for (int j = 0; j <= oracle::kAw3N; ++j)
    CHECK(es.values[j] == doctest::Approx(oracle::kAw3LSpectrumSorted[j]).epsilon(1e-12));
}

TEST_CASE("Casimir value matches the frozen value in double and extended precision") {
  const auto p = oracle_params();
  {
    const QFun<double> qf(ctx_at(oracle::kQ));
    const auto rep = build_rep(qf, p, oracle::kAw3N);
    const auto Q = casimir_Q(qf, rep.K, rep.L, structure_from_alpha(qf, p));
    CHECK(Q(0, 0) == doctest::Approx(oracle::kAw3CasimirQ0).epsilon(1e-11));
    CHECK(Q(2, 2) == doctest::Approx(oracle::kAw3CasimirQ0).epsilon(1e-11));
  }
  {
    const QFun<ext> qf(ctx_at(oracle::kQ));
    const auto rep = build_rep(qf, p, oracle::kAw3N);
    const auto Q = casimir_Q(qf, rep.K, rep.L, structure_from_alpha(qf, p));
    // 0.7 as a double differs from the exact decimal by ~1e-17 relative
    CHECK(to_double(Q(1, 1)) == doctest::Approx(oracle::kAw3CasimirQ0).epsilon(1e-14));
    // the canonical closed form reproduces the matrix value to working precision
    const auto rp = root_params<ext>(p);
    const ext B = structure_from_alpha(qf, p).B;
    CHECK(to_double(q0_canonical_form(qf, B, rp)) == doctest::Approx(oracle::kAw3CasimirQ0).epsilon(1e-14));
  }
}

TEST_CASE("relations hold on preset parameters across q and N") {
  for (double q : {0.5, 0.8}) {
    const QContext ctx = ctx_at(q);
    const QFun<double> qf(ctx);
    for (int N = 1; N <= 6; ++N) {
      const auto pre = aw3_presets(ctx, N, 2);
      REQUIRE(pre.size() == 2);
      for (const auto& a : pre) {
        const auto p = AlphaParams::for_dim(a.alpha0, a.alpha1, a.alpha2, N);
        const auto rep = build_rep(qf, p, N);
        CAPTURE(q);
        CAPTURE(N);
        CHECK(aw_residual(qf, rep.K, rep.L, a_values(qf, p)).worst() < 1e-10);
        // truncation: squared coefficients vanish at both ends
        const auto pos = validate_positivity(qf, p, N);
        CHECK(pos.ok);
        CHECK(std::abs(pos.boundary_low) < 1e-12);
        CHECK(std::abs(pos.boundary_high) < 1e-12);
        // Casimir is scalar
        const auto Q = casimir_Q(qf, rep.K, rep.L, structure_from_alpha(qf, p));
        CHECK(difference_residual(Q, Matrix<double>(Q(0, 0) * Matrix<double>::identity(N + 1))) < 1e-10);
      }
    }
  }
}

TEST_CASE("negative controls break the relations") {
  const QFun<double> qf(ctx_at(0.7));
  const auto p = oracle_params();
  BuildOptions printed;
  printed.diag = DiagVariant::Printed;
  const auto bad = build_rep(qf, p, oracle::kAw3N, printed);
  CHECK(aw_residual(qf, bad.K, bad.L, a_values(qf, p)).worst() > 1e-4);
  BuildOptions corrupt;
  corrupt.corrupt = true;
  const auto c = build_rep(qf, p, oracle::kAw3N, corrupt);
  CHECK(aw_residual(qf, c.K, c.L, a_values(qf, p)).worst() > 1e-6);
}

TEST_CASE("non-positive squared coefficients are reported with their index") {
  const QFun<double> qf(ctx_at(0.7));
  // scan for a parameter point that violates positivity
  bool found = false;
  for (double a0 = -1.5; a0 <= 1.5 && !found; a0 += 0.25)
    for (double a1 = -1.5; a1 <= 1.5 && !found; a1 += 0.25) {
      const auto p = AlphaParams::for_dim(a0, a1, 1.25, 4);
      const auto pos = validate_positivity(qf, p, 4);
      if (!pos.ok) {
        found = true;
        CHECK(pos.bad_index >= 1);
        CHECK(pos.bad_index <= 4);
        CHECK_THROWS_AS(build_rep(qf, p, 4), NegativeWeight);
      }
    }
  CHECK(found);
  CHECK_THROWS(build_rep(qf, AlphaParams::for_dim(0.1, 0.2, 0.3, 4), 3));
}

TEST_CASE("characteristic polynomial roots and their parameters") {
  const QFun<double> qf(ctx_at(0.7));
  const auto p = oracle_params();
  const auto s = structure_from_alpha(qf, p);
  const auto cp = char_poly(qf, s, oracle::kAw3CasimirQ0);
  const auto rp = root_params<double>(p);
  CHECK(poly_root_residual(qf, cp, rp, PolyVariable::CoshOneSinh) < 1e-10);
  CHECK(poly_root_residual(qf, cp, rp, PolyVariable::Sinh) > 1e-3);
  double imag = 1;
  auto got = roots_to_params(qf, cp, &imag);
  std::array<double, 4> want = rp;
  std::sort(want.begin(), want.end());
  CHECK(imag < 1e-8);
  for (int k = 0; k < 4; ++k) CHECK(got[k] == doctest::Approx(want[k]).epsilon(1e-7));
  // B, D0, D1 closed forms in terms of the roots
  const auto cf = closed_form_from_roots(qf, rp);
  CHECK(cf.B == doctest::Approx(s.B).epsilon(1e-12));
  CHECK(cf.D0 == doctest::Approx(s.D0).epsilon(1e-12));
  CHECK(cf.D1 == doctest::Approx(s.D1).epsilon(1e-12));
}

TEST_CASE("adjudications on the single-factor algebra select one candidate") {
  const QFun<double> qf(ctx_at(0.7));
  const auto p = AlphaParams::for_dim(-0.75, -0.5, -0.25, 4);
  const auto pv = adjudicate_poly_variable(qf, p, 4);
  REQUIRE(pv.unique());
  CHECK(pv.passing().front() == poly_variable_name(PolyVariable::CoshOneSinh));
  const auto dr = adjudicate_dual_roots(qf, p, 4);
  REQUIRE(dr.unique());
  CHECK(dr.passing().front() == dual_variant_name(DualVariant::Symmetric));
}

TEST_CASE("dual representation reproduces the L spectrum") {
  const QFun<double> qf(ctx_at(0.7));
  const auto p = AlphaParams::for_dim(-0.75, -0.5, -0.25, 4);
  const auto d = dual_check(qf, p, 4, DualVariant::Symmetric);
  CHECK(d.finite);
  CHECK(d.aw_residual < 1e-10);
  CHECK(d.spectrum_error < 1e-12);
}
