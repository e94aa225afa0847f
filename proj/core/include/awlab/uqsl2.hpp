#pragma once

#include "awlab/aw3.hpp"

#include <string>
#include <vector>

namespace awlab {

template <class T>
struct UqIrrep {
  int N = 0;
  Matrix<T> K, Kinv, E, F;
};

template <class T>
UqIrrep<T> build_irrep(const QFun<T>& qf, int N) {
  using std::sqrt;
  if (N < 0) throw std::invalid_argument("build_irrep: N must be nonnegative");
  const std::size_t d = std::size_t(N) + 1;
  UqIrrep<T> r;
  r.N = N;
  r.K = Matrix<T>(d, d);
  r.Kinv = Matrix<T>(d, d);
  r.E = Matrix<T>(d, d);
  r.F = Matrix<T>(d, d);
  for (int i = 0; i <= N; ++i) {
    r.K(i, i) = qf.pow(T(N) / 2 - i);
    r.Kinv(i, i) = qf.pow(T(i) - T(N) / 2);
    if (i + 1 <= N) r.F(i + 1, i) = sqrt(qf.bracket(T(i + 1)) * qf.bracket(T(N - i)));
    if (i >= 1) r.E(i - 1, i) = sqrt(qf.bracket(T(i)) * qf.bracket(T(N - i + 1)));
  }
  return r;
}

// Residuals of the four defining relations.
template <class T>
std::array<double, 4> irrep_relation_residuals(const QFun<T>& qf, const UqIrrep<T>& r) {
  const T q = qf.q();
  const auto I = Matrix<T>::identity(r.K.rows());
  return {difference_residual(Matrix<T>(r.K * r.Kinv), I), rel_residual<T>({r.K * r.E, -(q * (r.E * r.K))}),
          rel_residual<T>({r.K * r.F, -((T(1) / q) * (r.F * r.K))}),
          rel_residual<T>({r.E * r.F, -(r.F * r.E), -((T(1) / (q - 1 / q)) * (r.K * r.K - r.Kinv * r.Kinv))})};
}

// Casimir in the EF ordering and in the FE ordering.
template <class T>
std::pair<Matrix<T>, Matrix<T>> casimir_omega_forms(const QFun<T>& qf, const UqIrrep<T>& r) {
  const T q = qf.q(), s = qf.s1sq();
  Matrix<T> a = (T(1) / q) * (r.K * r.K) + q * (r.Kinv * r.Kinv) + s * (r.E * r.F);
  Matrix<T> b = q * (r.K * r.K) + (T(1) / q) * (r.Kinv * r.Kinv) + s * (r.F * r.E);
  return {a, b};
}

template <class T>
Matrix<T> casimir_omega(const QFun<T>& qf, const UqIrrep<T>& r) {
  return casimir_omega_forms(qf, r).first;
}

template <class T>
struct TwistCoeffs {
  T aE, aF, as, bE, bF, bt;

  T theta(const QFun<T>& qf) const { return -(aE * bF + aF * bE) / qf.s1sq(); }
  // Single-product form, a rejected candidate.
  T theta_single(const QFun<T>& qf) const { return -(aE * bF) / qf.s1sq(); }

  // aE = t sinh_q(1), aF = sinh_q(1)/t, bE = s sinh_q(1), bF = sinh_q(1)/s with t/s = -q^{alpha2}.
  static TwistCoeffs canonical(const QFun<T>& qf, double alpha0, double alpha1, double alpha2, double t = 1.0) {
    const T s1 = qf.sinh(T(1));
    const T tt(t);
    const T ss = -tt / qf.pow(T(alpha2));
    return {tt * s1, s1 / tt, qf.sinh(T(alpha0)), ss * s1, s1 / ss, qf.sinh(T(alpha1))};
  }
  // aE aF = bE bF = -sinh_q(1)^2.
  static TwistCoeffs special(const QFun<T>& qf, double t, double s, double as, double bt) {
    const T s1 = qf.sinh(T(1));
    return {T(t) * s1, -s1 / T(t), T(as), T(s) * s1, -s1 / T(s), T(bt)};
  }
};

template <class T>
std::pair<Matrix<T>, Matrix<T>> build_twisted(const QFun<T>& qf, const UqIrrep<T>& r, const TwistCoeffs<T>& c) {
  using std::sqrt;
  const T sq = sqrt(qf.q());
  Matrix<T> YK = (sq * c.aE) * (r.E * r.K) + (c.aF / sq) * (r.F * r.K) + c.as * (r.K * r.K);
  Matrix<T> YL = (c.bE / sq) * (r.E * r.Kinv) + (sq * c.bF) * (r.F * r.Kinv) + c.bt * (r.Kinv * r.Kinv);
  return {YK, YL};
}

template <class T>
struct TensorGens {
  Matrix<T> oneYK, dYK, YLone, dYL, dOmega, OmegaOne, oneOmega;
  // Coproducts assembled a second way, for consistency checks.
  Matrix<T> dYK_alt, dYL_alt, dOmega_alt;
};

template <class T>
TensorGens<T> build_tensor(const QFun<T>& qf, const UqIrrep<T>& r1, const UqIrrep<T>& r2, const TwistCoeffs<T>& c) {
  using std::sqrt;
  const T q = qf.q(), s = qf.s1sq(), sq = sqrt(q);
  const auto I1 = Matrix<T>::identity(r1.K.rows()), I2 = Matrix<T>::identity(r2.K.rows());
  auto [YK1, YL1] = build_twisted(qf, r1, c);
  auto [YK2, YL2] = build_twisted(qf, r2, c);
  const Matrix<T> Om1 = casimir_omega(qf, r1), Om2 = casimir_omega(qf, r2);

  // Coproducts of generators: Delta(K) = K x K, Delta(E) = K x E + E x K^{-1}, Delta(F) = K x F + F x K^{-1}.
  const Matrix<T> DK = kron(r1.K, r2.K), DKi = kron(r1.Kinv, r2.Kinv);
  const Matrix<T> DE = kron(r1.K, r2.E) + kron(r1.E, r2.Kinv);
  const Matrix<T> DF = kron(r1.K, r2.F) + kron(r1.F, r2.Kinv);

  TensorGens<T> g;
  g.oneYK = kron(I1, YK2);
  g.YLone = kron(YL1, I2);
  g.OmegaOne = kron(Om1, I2);
  g.oneOmega = kron(I1, Om2);
  g.dYK = (sq * c.aE) * (DE * DK) + (c.aF / sq) * (DF * DK) + c.as * (DK * DK);
  g.dYL = (c.bE / sq) * (DE * DKi) + (sq * c.bF) * (DF * DKi) + c.bt * (DKi * DKi);
  g.dOmega = (T(1) / q) * (DK * DK) + q * (DKi * DKi) + s * (DE * DF);

  const Matrix<T> K1sq = r1.K * r1.K, K2isq = r2.Kinv * r2.Kinv;
  g.dYK_alt = kron(K1sq, YK2) + kron(Matrix<T>(YK1 - c.as * K1sq), I2);
  g.dYL_alt = kron(I1, Matrix<T>(YL2 - c.bt * K2isq)) + kron(YL1, K2isq);
  g.dOmega_alt = kron(K1sq, Om2) + kron(Om1, K2isq) - qf.cosh(T(1)) * kron(K1sq, K2isq) +
                 s * (kron(Matrix<T>(r1.K * r1.F), Matrix<T>(r2.E * r2.Kinv)) +
                      kron(Matrix<T>(r1.E * r1.K), Matrix<T>(r2.Kinv * r2.F)));
  return g;
}

// One AW row of the coproduct relation table.
template <class T>
struct TableRow {
  std::string name;
  const Matrix<T>* g1;
  const Matrix<T>* g2;
  std::array<Coef<T>, 6> A;
};

// Rows of the coproduct relation table; `sigma_sign` multiplies the -sinh_q(1)^2 entries
// of rows 4 and 5 (+1 is the tabulated sign).
template <class T>
std::vector<TableRow<T>> coproduct_table_rows(const QFun<T>& qf, const TensorGens<T>& g, const TwistCoeffs<T>& c,
                                              int sigma_sign = 1) {
  const T th = c.theta(qf);
  const T sE = c.bE * c.bF, sK = c.aE * c.aF;
  const T ms = -T(sigma_sign) * qf.s1sq();
  std::vector<TableRow<T>> rows;
  rows.push_back({"dYK_dYL", &g.dYK, &g.dYL, {c.as, c.bt, th, g.dOmega, sE, sK}});
  rows.push_back({"oneYK_dYL", &g.oneYK, &g.dYL, {c.as, g.YLone, th, g.oneOmega, sE, sK}});
  rows.push_back({"dYK_YLone", &g.dYK, &g.YLone, {g.oneYK, c.bt, th, g.OmegaOne, sE, sK}});
  rows.push_back({"oneYK_dOmega", &g.oneYK, &g.dOmega, {c.as, g.OmegaOne, Matrix<T>(-g.dYK), g.oneOmega, ms, sK}});
  rows.push_back({"dOmega_YLone", &g.dOmega, &g.YLone, {g.oneOmega, c.bt, Matrix<T>(-g.dYL), g.OmegaOne, sE, ms}});
  return rows;
}

template <class T>
double row_residual(const QFun<T>& qf, const TableRow<T>& r) {
  return aw_residual(qf, *r.g1, *r.g2, r.A[0], r.A[1], r.A[2], r.A[3], r.A[4], r.A[5]).worst();
}

template <class T>
double row_locality(const TableRow<T>& r) {
  std::vector<Matrix<T>> mats;
  for (const auto& a : r.A)
    if (a.is_matrix()) mats.push_back(a.matrix());
  return locality_residual(mats, *r.g1, *r.g2);
}

template <class T>
std::vector<std::pair<std::string, double>> commuting_pairs(const TensorGens<T>& g) {
  return {{"oneYK_YLone", commutator_residual(g.oneYK, g.YLone)},
          {"oneYK_dYK", commutator_residual(g.oneYK, g.dYK)},
          {"YLone_dYL", commutator_residual(g.YLone, g.dYL)},
          {"dOmega_dYK", commutator_residual(g.dOmega, g.dYK)},
          {"dOmega_dYL", commutator_residual(g.dOmega, g.dYL)}};
}

// Twisted pair on a single irrep against the relations with the Casimir as a matrix entry.
template <class T>
double twisted_pair_residual(const QFun<T>& qf, const UqIrrep<T>& r, const TwistCoeffs<T>& c, bool single_theta = false) {
  auto [YK, YL] = build_twisted(qf, r, c);
  const Matrix<T> Om = casimir_omega(qf, r);
  const T th = single_theta ? c.theta_single(qf) : c.theta(qf);
  return aw_residual<T>(qf, YK, YL, c.as, c.bt, th, Om, c.bE * c.bF, c.aE * c.aF).worst();
}

template <class T>
struct SpecialAWResult {
  double cyclic12_standard = 0, cyclic23_standard = 0;
  double cyclic12_printed = 0, cyclic23_printed = 0;
  double casimir_vs_Q = 0;          // simplified scalar vs Q of the AW relations
  double casimir_vs_reduced = 0;    // simplified scalar vs the reduced three-generator Casimir
  double Q_offdiag = 0;
  T Q0, simplified, reduced0;
};

// Identities of the special AW algebra generated by (Y_L, Y_K) with A4 = A5 = -sinh_q(1)^2.
template <class T>
SpecialAWResult<T> special_aw_check(const QFun<T>& qf, const UqIrrep<T>& r, const TwistCoeffs<T>& c) {
  auto [YK, YL] = build_twisted(qf, r, c);
  const std::size_t n = YK.rows();
  const auto I = Matrix<T>::identity(n);
  const T q = qf.q(), s2 = qf.sinh(T(2)), c1 = qf.cosh(T(1));
  const T omega0 = qf.cosh(T(r.N + 1));
  const T l1 = c.bt, l2 = omega0, l3 = c.as, l123 = -c.theta(qf);
  const Matrix<T>& L12 = YL;
  const Matrix<T>& L23 = YK;
  const Matrix<T> L13 = -(T(1) / s2) * qcomm(q, L12, L23) + ((l1 * l3 + l2 * l123) / c1) * I;

  SpecialAWResult<T> out;
  auto cyc = [&](const Matrix<T>& lhs, const Matrix<T>& x, const Matrix<T>& y, const T& k) {
    return rel_residual<T>({lhs, (T(1) / s2) * qcomm(q, x, y), -((k / c1) * I)});
  };
  out.cyclic12_standard = cyc(L12, L23, L13, T(l1 * l2 + l3 * l123));
  out.cyclic23_standard = cyc(L23, L13, L12, T(l2 * l3 + l1 * l123));
  out.cyclic12_printed = cyc(L12, L23, L13, T(l2 * l3 + l1 * l123));
  out.cyclic23_printed = cyc(L23, L13, L12, T(l1 * l2 + l3 * l123));

  AValues<T> a{c.as, c.bt, c.theta(qf), omega0, -qf.s1sq(), -qf.s1sq()};
  const Matrix<T> Q = casimir_Q(qf, YK, YL, structure_from_A(qf, a));
  out.Q0 = Q(0, 0);
  out.Q_offdiag = difference_residual(Q, Matrix<T>(out.Q0 * I));
  out.simplified = c1 * c1 - l123 * l123 - l1 * l1 - l2 * l2 - l3 * l3 - l123 * l1 * l2 * l3;
  out.casimir_vs_Q = to_double(T(abs_of(T(out.Q0 - out.simplified)) / std::max(T(1), T(abs_of(out.Q0) + abs_of(out.simplified)))));

  const T al = l1 * l3 + l2 * l123, be = l1 * l2 + l3 * l123, ga = l2 * l3 + l1 * l123;
  const Matrix<T>& A = L13;
  const Matrix<T>& B = L12;
  const Matrix<T>& C = L23;
  const Matrix<T> red = q * (A * B * C) + (q * q) * (A * A) + (T(1) / (q * q)) * (B * B) + (q * q) * (C * C) -
                        (q * al) * A - (be / q) * B - (q * ga) * C;
  out.reduced0 = red(0, 0);
  out.casimir_vs_reduced = rel_residual<T>({red, -(out.simplified * I)});
  return out;
}

template <class T>
struct HoleRelations {
  double main = 0;                     // Lambda_14 relation through Lambda_13, Lambda_34
  std::array<double, 6> siblings{};    // all cyclic relations of both hole patterns
  double perturbed = 0;                // main relation with beta scaled by 1.01
};

// Relations with "holes" in the four-fold labelling, built from the tensor generators.
// `top_sign` multiplies theta in the top label (-1 is the consistent choice).
template <class T>
HoleRelations<T> hole_relation_check(const QFun<T>& qf, const TensorGens<T>& g, const TwistCoeffs<T>& c,
                                     int top_sign = -1) {
  const std::size_t d = g.dOmega.rows();
  const auto I = Matrix<T>::identity(d);
  const T q = qf.q();
  const T al = -T(1) / qf.sinh(T(2));
  const Matrix<T> L1 = c.bt * I, L2 = g.OmegaOne, L3 = g.oneOmega, L4 = c.as * I;
  const Matrix<T>& L12 = g.YLone;
  const Matrix<T>& L23 = g.dOmega;
  const Matrix<T>& L34 = g.oneYK;
  const Matrix<T>& L123 = g.dYL;
  const Matrix<T>& L234 = g.dYK;
  const Matrix<T> L1234 = (T(top_sign) * c.theta(qf)) * I;

  auto run = [&](const T& be) {
    // Lambda_C = al [A, B]_q + be (cap cup + (A\B)(B\A))
    auto rel = [&](const Matrix<T>& A, const Matrix<T>& B, const Matrix<T>& cap, const Matrix<T>& cup,
                   const Matrix<T>& amb, const Matrix<T>& bma) {
      return Matrix<T>(al * qcomm(q, A, B) + be * (cap * cup + amb * bma));
    };
    auto res = [&](const Matrix<T>& lhs, const Matrix<T>& rhs) { return difference_residual(lhs, rhs); };
    const Matrix<T> L13 = rel(L12, L23, L2, L123, L1, L3);
    const Matrix<T> L14 = rel(L123, L234, L23, L1234, L1, L4);
    const Matrix<T> L134 = rel(L12, L234, L2, L1234, L1, L34);
    const Matrix<T> L24 = rel(L23, L34, L3, L234, L2, L4);
    const Matrix<T> L124 = rel(L123, L34, L3, L1234, L12, L4);
    HoleRelations<T> h;
    h.main = res(L14, rel(L13, L34, L3, L134, L1, L4));
    h.siblings = {h.main,
                  res(L13, rel(L34, L14, L4, L134, L3, L1)),
                  res(L34, rel(L14, L13, L1, L134, L4, L3)),
                  res(L14, rel(L12, L24, L2, L124, L1, L4)),
                  res(L12, rel(L24, L14, L4, L124, L2, L1)),
                  res(L24, rel(L14, L12, L1, L124, L4, L2))};
    return h;
  };
  HoleRelations<T> out = run(T(1) / qf.cosh(T(1)));
  out.perturbed = run(T(1.01) / qf.cosh(T(1))).main;
  return out;
}

}  // namespace awlab
