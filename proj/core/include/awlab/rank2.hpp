#pragma once

#include "awlab/qracah.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace awlab {

// Doubled-index grid: states (2 n1, 2 n2), k2 outer, k1 inner.
struct Grid2 {
  int N1 = 0, N2 = 0;
  std::vector<std::pair<int, int>> states;
  std::map<std::pair<int, int>, std::size_t> index;

  Grid2() = default;
  Grid2(int n1, int n2) : N1(n1), N2(n2) {
    if (n1 < 0 || n2 < 0) throw std::invalid_argument("Grid2: dimensions must be nonnegative");
    for (int k2 = 0; k2 <= N2; ++k2)
      for (int k1 = 0; k1 <= N1; ++k1) {
        index[{2 * k1 + 2 * k2 - N1 - N2, 2 * k2 - N2}] = states.size();
        states.push_back({2 * k1 + 2 * k2 - N1 - N2, 2 * k2 - N2});
      }
  }
  std::size_t size() const { return states.size(); }
  std::optional<std::size_t> find(int t1, int t2) const {
    auto it = index.find({t1, t2});
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
  // (k1, k2) of a state
  static std::pair<int, int> degrees(int t1, int t2, int N1, int N2) { return {(t1 - t2 + N1) / 2, (t2 + N2) / 2}; }
};

struct Alpha3 {
  double alpha0 = 0, alpha1 = 0, alpha2 = 0;
};

// Readings of the undefined symbol in the L2 coefficients.
enum class A3Reading { AN2, AN1, MinusAN2, A2 };

inline const char* a3_reading_name(A3Reading r) {
  switch (r) {
    case A3Reading::AN2: return "A_N2=cosh_q(N2+1)";
    case A3Reading::AN1: return "A_N1=cosh_q(N1+1)";
    case A3Reading::MinusAN2: return "-A_N2";
    case A3Reading::A2: return "A2=cosh_q(alpha2)";
  }
  return "?";
}

// Sign of the structure entry A2 in the two relations involving M2:
// Negated gives A2 = -K2 and A2 = -L2.
enum class M2RelationSign { Negated, AsListed };

struct AW2Options {
  A3Reading a3 = A3Reading::AN2;
  int m2_sign = 1;  // -1: the M2 off-diagonal parameter slot as listed (fails positivity)
  DiagVariant diag = DiagVariant::Corrected;
  M2RelationSign relation_sign = M2RelationSign::Negated;
  bool corrupt = false;  // perturb one diagonal L2 coefficient by 1e-3
};

struct BoundaryError : NumericError {
  using NumericError::NumericError;
};

struct DegenerateCorner : NumericError {
  using NumericError::NumericError;
};

template <class T>
struct AW2Rep {
  Grid2 grid;
  Matrix<T> oneK1, K2, L1one, L2, M2;
  std::vector<T> e_alt;  // diagonal of L2 from the second closed form
  T A0, A1, A2, AN1, AN2, A3sym, sigma;
  Alpha3 alpha;
  AW2Options opt;
};

// Coefficient families of the rank-2 construction, as functions of doubled indices.
template <class T>
class AW2Coefficients {
 public:
  AW2Coefficients(const QFun<T>& qf, int N1, int N2, const Alpha3& al, const AW2Options& opt)
      : qf_(qf), N1_(N1), N2_(N2), al_(al), opt_(opt) {
    A0 = qf.sinh(T(al.alpha0));
    A1 = qf.sinh(T(al.alpha1));
    A2 = qf.cosh(T(al.alpha2));
    AN1 = qf.cosh(T(N1 + 1));
    AN2 = qf.cosh(T(N2 + 1));
    A3 = AN2;
    switch (opt.a3) {
      case A3Reading::AN2: A3 = AN2; break;
      case A3Reading::AN1: A3 = AN1; break;
      case A3Reading::MinusAN2: A3 = -AN2; break;
      case A3Reading::A2: A3 = A2; break;
    }
    c1 = qf.cosh(T(1));
  }

  T A0, A1, A2, AN1, AN2, A3, c1;

  T lam(int t) const { return qf_.sinh(T(t) + T(al_.alpha0)); }
  T cc(int t) const { return qf_.cosh(T(t) + T(al_.alpha0) - 1) * qf_.cosh(T(t) + T(al_.alpha0) + 1); }

  AlphaParams alpha_L1(int t2) const { return {al_.alpha0 + t2, al_.alpha1, al_.alpha2, -double(N1_) - 1, 1, 1}; }
  AlphaParams alpha_M2_a(int t1) const {
    return {al_.alpha0, opt_.m2_sign * (al_.alpha0 + t1), -double(N1_) - 1, -double(N2_) - 1, 1, 1};
  }
  AlphaParams alpha_M2_b(int t1) const {
    return {al_.alpha0, -double(N1_) - 1, -(al_.alpha0 + t1), -double(N2_) - 1, 1, 1};
  }

  T aL1_sq(int t1, int t2) const { return a_sq(qf_, alpha_L1(t2), T(t1 - t2) / 2); }
  T aL1(int t1, int t2) const { return root(aL1_sq(t1, t2)); }
  T bL1(int t1, int t2) const { return b_coef(qf_, alpha_L1(t2), T(t1 - t2) / 2, opt_.diag); }
  T aM_sq(int t1, int t2) const { return -a_sq(qf_, alpha_M2_a(t1), T(t2) / 2); }
  T aM(int t1, int t2) const { return root(aM_sq(t1, t2)); }
  T bM(int t1, int t2) const { return tilde_b(qf_, alpha_M2_b(t1), T(t2) / 2, opt_.diag); }

  T d(int t1, int t2) const { return aM(t1, t2) * (c1 * A1 - A2 * lam(t1)) / cc(t1); }
  T bb(int t1, int t2) const { return aL1(t1, t2) * (A0 * lam(t2) + c1 * A3) / cc(t2); }
  T e(int t1, int t2) const {
    return (bM(t1, t2) * (c1 * A1 - A2 * lam(t1)) + A0 * (A1 * lam(t1) + c1 * A2)) / cc(t1);
  }
  T e_alt(int t1, int t2) const {
    return (bL1(t1, t2) * (A0 * lam(t2) + c1 * A3) - A2 * (A3 * lam(t2) - c1 * A0)) / cc(t2);
  }
  T corner_den_a(int t1, int t2) const { return bL1(t1 - 2, t2 - 2) - bL1(t1, t2); }
  T corner_den_c(int t1, int t2) const { return bL1(t1 - 2, t2 + 2) - bL1(t1, t2); }
  T acorner(int t1, int t2) const {
    return (aL1(t1, t2) * d(t1 - 2, t2) - aL1(t1, t2 - 2) * d(t1, t2)) / corner_den_a(t1, t2);
  }
  T ccorner(int t1, int t2) const {
    return (aL1(t1, t2) * d(t1 - 2, t2 + 2) - aL1(t1, t2 + 2) * d(t1, t2 + 2)) / corner_den_c(t1, t2);
  }

 private:
  // Square root of a squared coefficient; boundary values within rounding of zero give 0,
  // clearly negative values give NaN (callers decide whether that is an error).
  static T root(const T& v) {
    using std::sqrt;
    if (v > 0) return sqrt(v);
    if (v > T(-1e-12)) return T(0);
    return std::numeric_limits<T>::quiet_NaN();
  }

  const QFun<T>& qf_;
  int N1_, N2_;
  Alpha3 al_;
  AW2Options opt_;
};

// Direct construction of the five generators in the joint K-eigenbasis.
template <class T>
AW2Rep<T> build_aw2(const QFun<T>& qf, int N1, int N2, const Alpha3& al, const AW2Options& opt = {},
                    double corner_guard = 1e-8) {
  AW2Rep<T> r;
  r.grid = Grid2(N1, N2);
  r.alpha = al;
  r.opt = opt;
  const AW2Coefficients<T> cf(qf, N1, N2, al, opt);
  r.A0 = cf.A0;
  r.A1 = cf.A1;
  r.A2 = cf.A2;
  r.AN1 = cf.AN1;
  r.AN2 = cf.AN2;
  r.A3sym = cf.A3;
  r.sigma = qf.s1sq();
  const std::size_t D = r.grid.size();
  for (auto* m : {&r.oneK1, &r.K2, &r.L1one, &r.L2, &r.M2}) *m = Matrix<T>(D, D);
  r.e_alt.assign(D, T(0));

  auto place = [&](Matrix<T>& m, std::size_t i, std::size_t j, const T& v, const char* what) {
    if (!is_finite(v))
      throw NegativeWeight(std::string("build_aw2 (") + what + ")", int(i), to_double(v));
    m(i, j) = m(j, i) = v;
  };
  // Coefficients pointing off the grid must vanish.
  auto tripwire = [&](const T& v, const char* what, int t1, int t2) {
    if (is_finite(v) && abs_of(v) > T(1e-12))
      throw BoundaryError(std::string("build_aw2: ") + what + " at off-grid neighbour of (" + std::to_string(t1) +
                          "," + std::to_string(t2) + ") does not vanish (" + std::to_string(to_double(v)) + ")");
  };

  for (std::size_t i = 0; i < D; ++i) {
    const auto [t1, t2] = r.grid.states[i];
    r.oneK1(i, i) = cf.lam(t2);
    r.K2(i, i) = cf.lam(t1);
    place(r.L1one, i, i, cf.bL1(t1, t2), "L1 diagonal");
    place(r.M2, i, i, cf.bM(t1, t2), "M2 diagonal");
    place(r.L2, i, i, cf.e(t1, t2), "L2 diagonal");
    r.e_alt[i] = cf.e_alt(t1, t2);

    if (auto j = r.grid.find(t1 - 2, t2)) {
      place(r.L1one, i, *j, cf.aL1(t1, t2), "L1 off-diagonal");
      place(r.L2, i, *j, cf.bb(t1, t2), "L2 n1 step");
    } else {
      tripwire(cf.aL1(t1, t2), "L1 off-diagonal", t1, t2);
      tripwire(cf.bb(t1, t2), "L2 n1 step", t1, t2);
    }
    if (auto j = r.grid.find(t1, t2 - 2)) {
      place(r.M2, i, *j, cf.aM(t1, t2), "M2 off-diagonal");
      place(r.L2, i, *j, cf.d(t1, t2), "L2 n2 step");
    } else {
      tripwire(cf.aM(t1, t2), "M2 off-diagonal", t1, t2);
      tripwire(cf.d(t1, t2), "L2 n2 step", t1, t2);
    }
    if (auto j = r.grid.find(t1 - 2, t2 - 2)) {
      if (abs_of(cf.corner_den_a(t1, t2)) < T(corner_guard))
        throw DegenerateCorner("build_aw2: corner denominator below guard");
      place(r.L2, i, *j, cf.acorner(t1, t2), "L2 corner");
    }
    if (auto j = r.grid.find(t1 - 2, t2 + 2)) {
      if (abs_of(cf.corner_den_c(t1, t2)) < T(corner_guard))
        throw DegenerateCorner("build_aw2: corner denominator below guard");
      place(r.L2, i, *j, cf.ccorner(t1, t2), "L2 corner");
    }
  }
  if (opt.corrupt) r.L2(D / 2, D / 2) += T(1e-3);
  return r;
}

template <class T>
struct AW2RelationResult {
  std::string name;
  double residual = 0;
  double locality = 0;
};

template <class T>
struct AW2Verification {
  std::vector<AW2RelationResult<T>> relations;
  std::vector<std::pair<std::string, double>> commutators;
  double worst() const {
    double w = 0;
    for (const auto& r : relations) w = std::max({w, r.residual, r.locality});
    for (const auto& c : commutators) w = std::max(w, c.second);
    return w;
  }
};

template <class T>
AW2Verification<T> verify_aw2_relations(const QFun<T>& qf, const AW2Rep<T>& r) {
  const T s = r.sigma;
  const T sg = r.opt.relation_sign == M2RelationSign::Negated ? T(-1) : T(1);
  struct Row {
    std::string name;
    const Matrix<T>* g1;
    const Matrix<T>* g2;
    std::array<Coef<T>, 6> A;
  };
  const Matrix<T> sK2 = sg * r.K2, sL2 = sg * r.L2;
  std::vector<Row> rows;
  rows.push_back({"K2_L2", &r.K2, &r.L2, {r.A0, r.A1, r.A2, r.M2, s, s}});
  rows.push_back({"K1_L2", &r.oneK1, &r.L2, {r.A0, r.L1one, r.A2, r.AN2, s, s}});
  rows.push_back({"K2_L1", &r.K2, &r.L1one, {r.oneK1, r.A1, r.A2, r.AN1, s, s}});
  rows.push_back({"K1_M2", &r.oneK1, &r.M2, {r.A0, r.AN1, sK2, r.AN2, -s, s}});
  rows.push_back({"M2_L1", &r.M2, &r.L1one, {r.AN2, r.A1, sL2, r.AN1, s, -s}});
  AW2Verification<T> out;
  for (const auto& row : rows) {
    AW2RelationResult<T> res;
    res.name = row.name;
    res.residual = aw_residual(qf, *row.g1, *row.g2, row.A[0], row.A[1], row.A[2], row.A[3], row.A[4], row.A[5]).worst();
    std::vector<Matrix<T>> mats;
    for (const auto& a : row.A)
      if (a.is_matrix()) mats.push_back(a.matrix());
    res.locality = locality_residual(mats, *row.g1, *row.g2);
    out.relations.push_back(res);
  }
  out.commutators = {{"K1_K2", commutator_residual(r.oneK1, r.K2)},
                     {"L1_L2", commutator_residual(r.L1one, r.L2)},
                     {"M2_K2", commutator_residual(r.M2, r.K2)},
                     {"M2_L2", commutator_residual(r.M2, r.L2)}};
  return out;
}

template <class T>
struct StencilResult {
  double k1_band = 0;     // projector leakage of L2 beyond one n2 step
  double k2_band = 0;     // same for n1
  double outside = 0;     // largest L2 entry outside the nine-point stencil
  double m2_band = 0;     // largest M2 entry outside (same n1, n2 +- 1)
  double e_consistency = 0;
};

template <class T>
StencilResult<T> stencil_checks(const AW2Rep<T>& r) {
  StencilResult<T> out;
  const auto& st = r.grid.states;
  const std::size_t D = st.size();
  // Projector sandwiches: Pi_{n2'} L2 Pi_{n2} for |n2 - n2'| > 1, measured relative to ||L2||.
  const T nrm = std::max(T(1), frobenius(r.L2));
  auto band = [&](auto key) {
    std::map<int, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < D; ++i) groups[key(st[i])].push_back(i);
    T worst(0);
    for (const auto& [a, ia] : groups)
      for (const auto& [b, ib] : groups) {
        if (std::abs(a - b) <= 2) continue;
        T f(0);
        for (auto i : ia)
          for (auto j : ib) f += r.L2(i, j) * r.L2(i, j);
        using std::sqrt;
        worst = std::max(worst, T(sqrt(f)));
      }
    return to_double(T(worst / nrm));
  };
  out.k1_band = band([](const std::pair<int, int>& s) { return s.second; });
  out.k2_band = band([](const std::pair<int, int>& s) { return s.first; });
  T outside(0), m2(0), econs(0);
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j) {
      const int d1 = (st[j].first - st[i].first) / 2, d2 = (st[j].second - st[i].second) / 2;
      // nine-point stencil: shifts in {-1,0,1}^2
      if (!(std::abs(d1) <= 1 && std::abs(d2) <= 1)) outside = std::max(outside, T(abs_of(r.L2(i, j))));
      if (!(d1 == 0 && std::abs(d2) <= 1)) m2 = std::max(m2, T(abs_of(r.M2(i, j))));
    }
  for (std::size_t i = 0; i < D; ++i)
    econs = std::max(econs, T(abs_of(T(r.L2(i, i) - r.e_alt[i])) / std::max(T(1), abs_of(r.e_alt[i]))));
  out.outside = to_double(outside);
  out.m2_band = to_double(m2);
  out.e_consistency = to_double(econs);
  return out;
}

template <class T>
struct PhiBasis {
  std::vector<int> j1, j2;   // labels per column
  std::vector<T> mu1, mu2;   // eigenvalues of L1 x 1 and L2
  Matrix<T> vectors;         // columns Phi_(j1,j2) in the psi basis
  double spectrum_error = 0;
  double label_error = 0;    // distance of recovered labels from integers
};

template <class T>
PhiBasis<T> phi_basis(const QFun<T>& qf, const AW2Rep<T>& r) {
  const auto es = sym_eig(r.L1one);
  const auto le = block_refine(es.values, r.L2, es.vectors);
  PhiBasis<T> pb;
  pb.vectors = le.vectors;
  const int N1 = r.grid.N1, N2 = r.grid.N2;
  const double a1 = r.alpha.alpha1;
  for (std::size_t c = 0; c < le.first.size(); ++c) {
    const double x1 = to_double(qf.asinh(le.first[c])) - a1;   // 2 m1
    const double x2 = to_double(qf.asinh(le.second[c])) - a1;  // 2 m2
    const long tm1 = std::lround(x1), tm2 = std::lround(x2);
    pb.label_error = std::max({pb.label_error, std::abs(x1 - double(tm1)), std::abs(x2 - double(tm2))});
    const int j1 = int(tm1 + N1) / 2, j2 = int(tm2 - tm1 + N2) / 2;
    if ((tm1 + N1) % 2 != 0 || (tm2 - tm1 + N2) % 2 != 0 || j1 < 0 || j1 > N1 || j2 < 0 || j2 > N2)
      throw SpectrumMatchError("phi_basis: eigenvalue labels outside the index range");
    pb.j1.push_back(j1);
    pb.j2.push_back(j2);
    pb.mu1.push_back(le.first[c]);
    pb.mu2.push_back(le.second[c]);
    const T m1 = qf.sinh(T(tm1) + T(a1)), m2 = qf.sinh(T(tm2) + T(a1));
    pb.spectrum_error = std::max({pb.spectrum_error,
                                  to_double(T(abs_of(T(le.first[c] - m1)) / std::max(T(1), abs_of(m1)))),
                                  to_double(T(abs_of(T(le.second[c] - m2)) / std::max(T(1), abs_of(m2))))});
  }
  // labels must be a bijection onto the grid
  std::vector<int> seen((N1 + 1) * (N2 + 1), 0);
  for (std::size_t c = 0; c < pb.j1.size(); ++c)
    if (seen[pb.j1[c] * (N2 + 1) + pb.j2[c]]++)
      throw SpectrumMatchError("phi_basis: repeated joint label");
  return pb;
}

// Four-index table with (j1, j2, k1, k2) layout.
template <class T>
struct Table4 {
  int N1 = 0, N2 = 0;
  std::vector<T> v;
  Table4() = default;
  Table4(int n1, int n2) : N1(n1), N2(n2), v(std::size_t((n1 + 1) * (n2 + 1)) * std::size_t((n1 + 1) * (n2 + 1))) {}
  T& operator()(int j1, int j2, int k1, int k2) { return v[pos(j1, j2, k1, k2)]; }
  const T& operator()(int j1, int j2, int k1, int k2) const { return v[pos(j1, j2, k1, k2)]; }
  std::size_t pos(int j1, int j2, int k1, int k2) const {
    return ((std::size_t(j1) * (N2 + 1) + j2) * (N1 + 1) + k1) * (N2 + 1) + k2;
  }
};

// P = X Y from raw overlaps G.
template <class T>
T double_ratio(const Table4<T>& G, int j1, int j2, int k1, int k2) {
  const T X = (G(j1, j2, k1, k2) / G(j1, j2, 0, k2)) / (G(0, 0, k1, k2) / G(0, 0, 0, k2));
  const T Y = (G(j1, j2, 0, k2) / G(j1, 0, 0, k2)) / (G(j1, j2, 0, 0) / G(j1, 0, 0, 0));
  return X * Y;
}

template <class T>
struct BivarTable {
  Table4<T> G;                        // <Phi_(j1,j2), psi_(k1,k2)>
  Table4<T> P;                        // normalized overlaps
  std::vector<Matrix<T>> A_block;     // per k2: (j1, k1)
  std::vector<Matrix<T>> B_block;     // per j1: (j2, k2)
  double factor_error = 0;            // | |G| - |A B| |
  double assembled_error = 0;         // P from G vs P from A B
  double spectrum_error = 0;
};

template <class T>
BivarTable<T> bivariate_overlaps(const QFun<T>& qf, const AW2Rep<T>& r) {
  const int N1 = r.grid.N1, N2 = r.grid.N2;
  const auto pb = phi_basis(qf, r);
  BivarTable<T> bt;
  bt.spectrum_error = pb.spectrum_error;
  bt.G = Table4<T>(N1, N2);
  for (std::size_t c = 0; c < pb.j1.size(); ++c)
    for (std::size_t i = 0; i < r.grid.size(); ++i) {
      const auto [k1, k2] = Grid2::degrees(r.grid.states[i].first, r.grid.states[i].second, N1, N2);
      bt.G(pb.j1[c], pb.j2[c], k1, k2) = pb.vectors(i, c);
    }
  const auto& al = r.alpha;
  for (int k2 = 0; k2 <= N2; ++k2) {
    const auto rep = build_rep(qf, AlphaParams{al.alpha0 + 2 * k2 - N2, al.alpha1, al.alpha2, -double(N1) - 1, 1, 1}, N1);
    bt.A_block.push_back(overlap_from_rep(qf, rep).O);
  }
  for (int j1 = 0; j1 <= N1; ++j1) {
    const auto rep = build_rep(qf, AlphaParams{al.alpha1 + 2 * j1 - N1, al.alpha0, al.alpha2, -double(N2) - 1, 1, 1}, N2);
    bt.B_block.push_back(overlap_from_rep(qf, rep).O.transpose());
  }
  Table4<T> AB(N1, N2);
  bt.P = Table4<T>(N1, N2);
  for (int j1 = 0; j1 <= N1; ++j1)
    for (int j2 = 0; j2 <= N2; ++j2)
      for (int k1 = 0; k1 <= N1; ++k1)
        for (int k2 = 0; k2 <= N2; ++k2) {
          AB(j1, j2, k1, k2) = bt.A_block[k2](j1, k1) * bt.B_block[j1](j2, k2);
          bt.factor_error = std::max(
              bt.factor_error, to_double(T(abs_of(T(abs_of(bt.G(j1, j2, k1, k2)) - abs_of(AB(j1, j2, k1, k2)))))));
        }
  for (int j1 = 0; j1 <= N1; ++j1)
    for (int j2 = 0; j2 <= N2; ++j2)
      for (int k1 = 0; k1 <= N1; ++k1)
        for (int k2 = 0; k2 <= N2; ++k2) {
          bt.P(j1, j2, k1, k2) = double_ratio(bt.G, j1, j2, k1, k2);
          const T pa = double_ratio(AB, j1, j2, k1, k2);
          bt.assembled_error =
              std::max(bt.assembled_error, to_double(T(abs_of(T(pa - bt.P(j1, j2, k1, k2))) /
                                                       std::max(T(1), abs_of(bt.P(j1, j2, k1, k2))))));
        }
  return bt;
}

template <class T>
AlphaParams bivar_first_params(const Alpha3& al, int N1, int N2, int k2) {
  return {al.alpha0 + 2 * k2 - N2, al.alpha1, al.alpha2, -double(N1) - 1, 1, 1};
}

template <class T>
AlphaParams bivar_second_params(const Alpha3& al, int N1, int N2, int j1) {
  return {al.alpha0, al.alpha1 + 2 * j1 - N1, -al.alpha2, -double(N2) - 1, 1, 1};
}

// Product of two univariate q-Racah polynomials.
template <class T>
T bivariate_product_formula(const QFun<T>& qf, const Alpha3& al, int N1, int N2, int k1, int k2, int j1, int j2) {
  const auto P1 = qracah_params(qf, bivar_first_params<T>(al, N1, N2, k2));
  const auto P2 = qracah_params(qf, bivar_second_params<T>(al, N1, N2, j1));
  return qracah_eval(k1, j1, P1) * qracah_eval(k2, j2, P2);
}

template <class T>
struct BivarChecks {
  double product_error = 0;       // overlaps vs product formula
  double orthogonality = 0;       // sum w2 P P - delta
  double weight_vs_overlap = 0;   // w2 vs (G/P)^2
  double min_weight = 0;
};

template <class T>
T double_weight(const QFun<T>& qf, const Alpha3& al, int N1, int N2, int j1, int j2, int k1, int k2) {
  const auto P1 = qracah_params(qf, bivar_first_params<T>(al, N1, N2, k2));
  const auto P2 = qracah_params(qf, bivar_second_params<T>(al, N1, N2, j1));
  const double eps = qf.ctx().eps_inf;
  const T w1 = rho_weight(P1, j1) / h_norm(P1, k1, norm_constant(P1, NormConstant::Rescaled, eps));
  const T w2 = rho_weight(P2, j2) / h_norm(P2, k2, norm_constant(P2, NormConstant::Rescaled, eps));
  return w1 * w2;
}

template <class T>
BivarChecks<T> bivariate_checks(const QFun<T>& qf, const AW2Rep<T>& r, const BivarTable<T>& bt) {
  const int N1 = r.grid.N1, N2 = r.grid.N2;
  BivarChecks<T> out;
  Table4<T> F(N1, N2), W(N1, N2);
  bool first = true;
  for (int j1 = 0; j1 <= N1; ++j1)
    for (int j2 = 0; j2 <= N2; ++j2)
      for (int k1 = 0; k1 <= N1; ++k1)
        for (int k2 = 0; k2 <= N2; ++k2) {
          F(j1, j2, k1, k2) = bivariate_product_formula(qf, r.alpha, N1, N2, k1, k2, j1, j2);
          W(j1, j2, k1, k2) = double_weight(qf, r.alpha, N1, N2, j1, j2, k1, k2);
          const double wd = to_double(W(j1, j2, k1, k2));
          if (first || wd < out.min_weight) out.min_weight = wd;
          first = false;
          const T f = F(j1, j2, k1, k2), p = bt.P(j1, j2, k1, k2);
          out.product_error =
              std::max(out.product_error, to_double(T(abs_of(T(p - f)) / std::max(T(1), abs_of(f)))));
          if (abs_of(f) > T(1e-8)) {
            const T c = bt.G(j1, j2, k1, k2) / f;
            const T w = W(j1, j2, k1, k2);
            out.weight_vs_overlap =
                std::max(out.weight_vs_overlap, to_double(T(abs_of(T(c * c - w)) / std::max(T(1), abs_of(w)))));
          }
        }
  for (int k1 = 0; k1 <= N1; ++k1)
    for (int k2 = 0; k2 <= N2; ++k2)
      for (int l1 = 0; l1 <= N1; ++l1)
        for (int l2 = 0; l2 <= N2; ++l2) {
          T s(0);
          for (int j1 = 0; j1 <= N1; ++j1)
            for (int j2 = 0; j2 <= N2; ++j2) s += W(j1, j2, k1, k2) * F(j1, j2, k1, k2) * F(j1, j2, l1, l2);
          const T target = (k1 == l1 && k2 == l2) ? T(1) : T(0);
          out.orthogonality = std::max(out.orthogonality, to_double(T(abs_of(T(s - target)))));
        }
  return out;
}

// Factor pair of the two-variable series after the parameter substitution, base q^2.
template <class T>
std::pair<Series43<T>, Series43<T>> gasper_rahman_factors(const QFun<T>& qf, const Alpha3& al, int N1, int N2, int j1,
                                                          int j2, int k1, int k2) {
  const T Q = qf.q() * qf.q();
  const T ah = T(al.alpha0 - al.alpha1 + al.alpha2);
  const T a1 = -qf.pow(T(2 * al.alpha0 + 2 * al.alpha2 + 2));
  const T a2 = qf.pow(T(-2 * N2));
  const T a3 = qf.pow(T(-2 * N1));
  const T b = -qf.pow(T(2 * al.alpha0));
  const T N = (-ah + N1 + N2 - 1) / 2;
  const T x1 = (T(2 * j1 + 2 * j2) - ah - N1 - N2 - 1) / 2;
  const T x2 = (T(2 * j1) - ah - N1 + N2 - 1) / 2;
  const int n1 = k2, n2 = k1;
  auto Qp = [&](const T& e) { return qf.pow(2 * e); };
  Series43<T> f1, f2;
  f1.num = {Qp(T(-n1)), b * a2 * Qp(T(n1)), Qp(-x1), a1 * Qp(x1)};
  f1.den = {b * Q, a1 * a2 * Qp(x2), Qp(-x2)};
  f1.n = n1;
  f1.base = Q;
  f2.num = {Qp(T(-n2)), b * a2 * a3 * Qp(T(2 * n1 + n2)), Qp(T(n1) - x2), a1 * a2 * Qp(T(n1) + x2)};
  f2.den = {b * a2 * Qp(T(2 * n1 + 1)), a1 * a2 * a3 * Qp(T(n1) + N), Qp(T(n1) - N)};
  f2.n = n2;
  f2.base = Q;
  return {f1, f2};
}

template <class T>
struct BridgeResult {
  double worst_spread = 0;                          // max over degrees of max_j |ratio/ratio_0 - 1|
  double worst_balance = 0;
  std::vector<std::tuple<int, int, double, double>> ratios;  // (k1, k2, ratio at j=0, spread)
};

template <class T>
BridgeResult<T> gasper_rahman_bridge(const QFun<T>& qf, const Alpha3& al, int N1, int N2, int ia = 1, int ie = 1) {
  BridgeResult<T> out;
  for (int k1 = 0; k1 <= N1; ++k1)
    for (int k2 = 0; k2 <= N2; ++k2) {
      std::vector<T> rs;
      for (int j1 = 0; j1 <= N1; ++j1)
        for (int j2 = 0; j2 <= N2; ++j2) {
          auto [f1, f2] = gasper_rahman_factors(qf, al, N1, N2, j1, j2, k1, k2);
          out.worst_balance = std::max({out.worst_balance, f1.balance_defect(), f2.balance_defect()});
          const auto s1 = sears_transform(f1, ia, ie), s2 = sears_transform(f2, ia, ie);
          const T lhs = s1.rhs.eval() * s2.rhs.eval();
          rs.push_back(lhs / bivariate_product_formula(qf, al, N1, N2, k1, k2, j1, j2));
        }
      double spread = 0;
      for (const T& x : rs) spread = std::max(spread, to_double(T(abs_of(T(x / rs[0] - 1)))));
      out.worst_spread = std::max(out.worst_spread, spread);
      out.ratios.emplace_back(k1, k2, to_double(rs[0]), spread);
    }
  return out;
}

}  // namespace awlab
