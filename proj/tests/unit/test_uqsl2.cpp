#include "awlab/adjudicate.hpp"
#include "awlab/embedding.hpp"
#include "awlab/uqsl2.hpp"
#include "oracle_values.hpp"

#include <doctest.h>

#include <random>

using namespace awlab;

namespace {

QContext ctx_at(double q) {
  QContext c;
  c.q = q;
  return c;
}

TwistCoeffs<double> oracle_coeffs() {
  const double* c = oracle::kUqCoeffs;
  return {c[0], c[1], c[2], c[3], c[4], c[5]};
}

}  // namespace

TEST_CASE("irreducible representations satisfy the defining relations") {
  const QFun<double> qf(ctx_at(0.7));
  for (int N = 0; N <= 8; ++N) {
    const auto r = build_irrep(qf, N);
    for (double v : irrep_relation_residuals(qf, r)) CHECK(v < 1e-12);
    const auto [a, b] = casimir_omega_forms(qf, r);
    CHECK(difference_residual(a, b) < 1e-12);
    const Matrix<double> want = qf.cosh(double(N + 1)) * Matrix<double>::identity(N + 1);
    CHECK(difference_residual(a, want) < 1e-12);
  }
}

TEST_CASE("theta and realized structure constants match frozen values") {
  const QFun<double> qf(ctx_at(oracle::kQ));
  const auto c = oracle_coeffs();
  CHECK(c.theta(qf) == doctest::Approx(oracle::kUqTheta).epsilon(1e-14));
  const auto s = embedding_constants(qf, c, oracle::kUqOmega0);
  CHECK(s.B == doctest::Approx(oracle::kUqStructure[0]).epsilon(1e-13));
  CHECK(s.C0 == doctest::Approx(oracle::kUqStructure[1]).epsilon(1e-13));
  CHECK(s.C1 == doctest::Approx(oracle::kUqStructure[2]).epsilon(1e-13));
  CHECK(s.D0 == doctest::Approx(oracle::kUqStructure[3]).epsilon(1e-13));
  CHECK(s.D1 == doctest::Approx(oracle::kUqStructure[4]).epsilon(1e-13));
}

TEST_CASE("twisted pair satisfies the relations with the Casimir as a matrix") {
  const QFun<double> qf(ctx_at(0.7));
  for (int N = 1; N <= 8; ++N) {
    const auto r = build_irrep(qf, N);
    CHECK(twisted_pair_residual(qf, r, oracle_coeffs()) < 1e-10);
    CHECK(twisted_pair_residual(qf, r, TwistCoeffs<double>::canonical(qf, 0.3, 0.2, 0.1, 1.3)) < 1e-10);
  }
  // the single-product theta is not consistent
  CHECK(twisted_pair_residual(qf, build_irrep(qf, 3), oracle_coeffs(), true) > 1e-4);
}

TEST_CASE("coproduct table rows, locality and commuting pairs") {
  const QFun<double> qf(ctx_at(0.7));
  for (auto [N1, N2] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{3, 1}}) {
    const auto r1 = build_irrep(qf, N1), r2 = build_irrep(qf, N2);
    const auto c = oracle_coeffs();
    const auto g = build_tensor(qf, r1, r2, c);
    const auto rows = coproduct_table_rows(qf, g, c, 1);
    CHECK(rows.size() == 5);
    for (const auto& row : rows) {
      CAPTURE(row.name);
      CHECK(row_residual(qf, row) < 1e-10);
      CHECK(row_locality(row) < 1e-10);
    }
    for (const auto& [name, v] : commuting_pairs(g)) {
      CAPTURE(name);
      CHECK(v < 1e-10);
    }
    // explicit tensor formulas agree with the coproduct images
    CHECK(difference_residual(g.dYK, g.dYK_alt) < 1e-12);
    CHECK(difference_residual(g.dYL, g.dYL_alt) < 1e-12);
    CHECK(difference_residual(g.dOmega, g.dOmega_alt) < 1e-12);
    const auto a = adjudicate_table_sign(qf, g, c);
    REQUIRE(a.unique());
    CHECK(a.passing().front() == "-sinh_q(1)^2");
  }
}

TEST_CASE("special normalization: Casimir value and the simplified scalar") {
  const QFun<double> qf(ctx_at(oracle::kQ));
  const auto c = TwistCoeffs<double>::special(qf, 1.2, 0.8, 0.4, -0.3);
  const auto r = build_irrep(qf, 2);
  const auto [YK, YL] = build_twisted(qf, r, c);
  const double s1 = qf.s1sq();
  const AValues<double> a{c.as, c.bt, c.theta(qf), qf.cosh(3.0), -s1, -s1};
  const auto Q = casimir_Q(qf, YK, YL, structure_from_A(qf, a));
  CHECK(Q(0, 0) == doctest::Approx(oracle::kSpecialQ0).epsilon(1e-12));
  const auto res = special_aw_check(qf, r, c);
  CHECK(res.cyclic12_standard < 1e-10);
  CHECK(res.cyclic23_standard < 1e-10);
  CHECK(res.Q_offdiag < 1e-10);
  CHECK(res.casimir_vs_reduced < 1e-9);
  // the simplified scalar is a different number from Q
  CHECK(std::abs(oracle::kSpecialSimplified - oracle::kSpecialQ0) > 1);
  CHECK(res.casimir_vs_Q > 1e-3);
}

TEST_CASE("relations with holes hold and are sensitive to the coefficient") {
  const QFun<double> qf(ctx_at(0.7));
  const auto c = TwistCoeffs<double>::special(qf, 1.2, 0.8, 0.4, -0.3);
  for (int N1 = 1; N1 <= 3; ++N1)
    for (int N2 = 1; N2 <= 3; ++N2) {
      const auto g = build_tensor(qf, build_irrep(qf, N1), build_irrep(qf, N2), c);
      const auto h = hole_relation_check(qf, g, c);
      CAPTURE(N1);
      CAPTURE(N2);
      CHECK(h.main < 1e-9);
      for (double v : h.siblings) CHECK(v < 1e-9);
      CHECK(h.perturbed > 1e-3);
      CHECK(hole_relation_check(qf, g, c, +1).main > 1e-6);
    }
}

TEST_CASE("embedding solver round trip on random coefficient sets") {
  const QFun<double> qf(ctx_at(0.7));
  std::mt19937 gen(20240611u);
  std::uniform_real_distribution<double> u(0.3, 1.6);
  std::bernoulli_distribution sign(0.5);
  auto pick = [&] { return (sign(gen) ? 1 : -1) * u(gen); };
  for (int i = 0; i < 12; ++i) {
    const TwistCoeffs<double> c{pick(), pick(), pick(), pick(), pick(), pick()};
    const double om0 = qf.cosh(double(2 + i % 4));
    const auto s = embedding_constants(qf, c, om0);
    const auto sols = solve_embedding(qf, s, om0);
    REQUIRE(!sols.empty());
    double best = 1;
    for (const auto& sol : sols) {
      best = std::min(best, sol.residual);
      CHECK(structure_distance(embedding_constants(qf, sol.coeffs, om0), s) < 1e-8);
    }
    CHECK(best < 1e-8);
  }
}

TEST_CASE("embedding solver rejects the excluded structure") {
  const QFun<double> qf(ctx_at(0.7));
  CHECK_THROWS_AS(solve_embedding(qf, AWStructure<double>{0, 0, 0, 0, 1.0}, qf.cosh(3.0)), NoSolution);
  CHECK_THROWS_AS(solve_embedding(qf, AWStructure<double>{0, 0, 0, 1.0, 0}, qf.cosh(3.0)), NoSolution);
}
