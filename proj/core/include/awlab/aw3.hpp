#pragma once

#include "awlab/linalg.hpp"
#include "awlab/qcore.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <complex>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

namespace awlab {

// Reparametrized structure data. A4 = a4_sign * sinh_q(1)^2, A5 = a5_sign * sinh_q(1)^2.
struct AlphaParams {
  double alpha0 = 0, alpha1 = 0, alpha2 = 0, alpha3 = -1;
  int a4_sign = 1;
  int a5_sign = 1;

  static AlphaParams for_dim(double a0, double a1, double a2, int N) { return {a0, a1, a2, -double(N) - 1, 1, 1}; }
  // Exchange of degree and variable: alpha0 <-> alpha1, alpha2 -> -alpha2.
  AlphaParams dual() const { return {alpha1, alpha0, -alpha2, alpha3, a5_sign, a4_sign}; }
};

template <class T>
struct AWStructure {
  T B, C0, C1, D0, D1;
};

template <class T>
struct AValues {
  T A0, A1, A2, A3, A4, A5;
};

template <class T>
AValues<T> a_values(const QFun<T>& qf, const AlphaParams& p) {
  T s = qf.s1sq();
  return {qf.sinh(T(p.alpha0)), qf.sinh(T(p.alpha1)), qf.cosh(T(p.alpha2)), qf.cosh(T(p.alpha3)),
          T(p.a4_sign) * s, T(p.a5_sign) * s};
}

template <class T>
AWStructure<T> structure_from_A(const QFun<T>& qf, const AValues<T>& a) {
  T s = qf.s1sq(), c = qf.cosh(T(1));
  return {s * (a.A0 * a.A1 - a.A2 * a.A3), -c * c * a.A4, -c * c * a.A5, c * (a.A0 * a.A3 * a.A4 + s * a.A1 * a.A2),
          c * (a.A1 * a.A3 * a.A5 + s * a.A0 * a.A2)};
}

template <class T>
AWStructure<T> structure_from_alpha(const QFun<T>& qf, const AlphaParams& p) {
  return structure_from_A(qf, a_values(qf, p));
}

// Roots (alpha0+alpha3, alpha0-alpha3, alpha1+alpha2, alpha1-alpha2).
template <class T>
std::array<T, 4> root_params(const AlphaParams& p) {
  return {T(p.alpha0 + p.alpha3), T(p.alpha0 - p.alpha3), T(p.alpha1 + p.alpha2), T(p.alpha1 - p.alpha2)};
}

// Scalar-or-matrix structure entry.
template <class T>
class Coef {
 public:
  Coef(const T& v) : s_(v) {}  // NOLINT(implicit)
  template <class U, class = std::enable_if_t<std::is_arithmetic_v<U> && !std::is_same_v<U, T>>>
  Coef(U v) : s_(T(v)) {}  // NOLINT(implicit)
  Coef(const Matrix<T>& m) : s_(0), m_(m) {}  // NOLINT(implicit)

  bool is_matrix() const { return m_.has_value(); }
  const T& scalar() const { return s_; }
  const Matrix<T>& matrix() const { return *m_; }
  Matrix<T> lift(std::size_t n) const { return m_ ? *m_ : s_ * Matrix<T>::identity(n); }

  friend Coef operator*(const Coef& a, const Coef& b) {
    if (!a.m_ && !b.m_) return Coef(a.s_ * b.s_);
    if (!a.m_) return Coef(Matrix<T>(a.s_ * *b.m_));
    if (!b.m_) return Coef(Matrix<T>(*a.m_ * b.s_));
    return Coef(Matrix<T>(*a.m_ * *b.m_));
  }
  friend Coef operator*(const T& s, const Coef& a) { return Coef(s) * a; }
  Coef operator-() const { return m_ ? Coef(Matrix<T>(-*m_)) : Coef(T(-s_)); }
  // Coef applied on the left of a matrix.
  Matrix<T> times(const Matrix<T>& x) const { return m_ ? *m_ * x : s_ * x; }

 private:
  T s_;
  std::optional<Matrix<T>> m_;
};

template <class T>
struct AWResidual {
  Matrix<T> r1, r2;
  double rel1 = 0, rel2 = 0;
  double worst() const {
    if (!(rel1 == rel1) || !(rel2 == rel2)) return std::numeric_limits<double>::infinity();
    return std::max(rel1, rel2);
  }
};

// Both components of the AW relation function; zero iff the relations hold.
template <class T>
AWResidual<T> aw_residual(const QFun<T>& qf, const Matrix<T>& K, const Matrix<T>& L, const Coef<T>& A0,
                          const Coef<T>& A1, const Coef<T>& A2, const Coef<T>& A3, const Coef<T>& A4,
                          const Coef<T>& A5) {
  if (!K.square() || !L.square() || K.rows() != L.rows()) throw DimensionError("aw_residual: generator shapes");
  const std::size_t n = K.rows();
  for (const Coef<T>* a : {&A0, &A1, &A2, &A3, &A4, &A5})
    if (a->is_matrix() && (a->matrix().rows() != n || !a->matrix().square()))
      throw DimensionError("aw_residual: structure entry shape");
  const T s = qf.s1sq(), c = qf.cosh(T(1)), c2 = qf.cosh(T(2));
  const Matrix<T> I = Matrix<T>::identity(n);
  auto mat = [&](const Coef<T>& x) { return x.lift(n); };
  const Matrix<T> KK = K * K, LL = L * L, KL = K * L, LK = L * K;
  AWResidual<T> out;
  {
    std::vector<Matrix<T>> t;
    t.push_back(c2 * (KL * K));
    t.push_back(-(KK * L));
    t.push_back(-(L * KK));
    t.push_back(-(s * (A0 * A1).times(K)));
    t.push_back(s * (A2 * A3).times(K));
    t.push_back(c * c * A5.times(L));
    t.push_back(-(c * mat(A1 * A3 * A5)));
    t.push_back(-(c * s * mat(A0 * A2)));
    out.r1 = Matrix<T>(n, n);
    for (auto& x : t) out.r1 += x;
    out.rel1 = rel_residual(t);
  }
  {
    std::vector<Matrix<T>> t;
    t.push_back(c2 * (LK * L));
    t.push_back(-(LL * K));
    t.push_back(-(K * LL));
    t.push_back(-(s * (A0 * A1).times(L)));
    t.push_back(s * (A2 * A3).times(L));
    t.push_back(c * c * A4.times(K));
    t.push_back(-(c * mat(A0 * A3 * A4)));
    t.push_back(-(c * s * mat(A1 * A2)));
    out.r2 = Matrix<T>(n, n);
    for (auto& x : t) out.r2 += x;
    out.rel2 = rel_residual(t);
  }
  (void)I;
  return out;
}

template <class T>
AWResidual<T> aw_residual(const QFun<T>& qf, const Matrix<T>& K, const Matrix<T>& L, const AValues<T>& a) {
  return aw_residual<T>(qf, K, L, a.A0, a.A1, a.A2, a.A3, a.A4, a.A5);
}

// Max pairwise commutator residual among structure matrices and the two generators.
template <class T>
double locality_residual(const std::vector<Matrix<T>>& a_list, const Matrix<T>& K, const Matrix<T>& L) {
  double worst = 0;
  for (std::size_t i = 0; i < a_list.size(); ++i) {
    for (std::size_t j = i + 1; j < a_list.size(); ++j)
      worst = std::max(worst, commutator_residual(a_list[i], a_list[j]));
    worst = std::max(worst, commutator_residual(a_list[i], K));
    worst = std::max(worst, commutator_residual(a_list[i], L));
  }
  return worst;
}

template <class T>
Matrix<T> casimir_Q(const QFun<T>& qf, const Matrix<T>& K, const Matrix<T>& L, const AWStructure<T>& s) {
  const T q = qf.q();
  const Matrix<T> KLq = qcomm(q, K, L);
  const Matrix<T> KL = K * L, LK = L * K;
  Matrix<T> Q = (T(1) / q - q * q * q) * (KL * KLq);
  Q += (q * q) * (KLq * KLq);
  Q += s.B * (KL + LK);
  Q += (s.C0 * q * q) * (K * K);
  Q += (s.C1 / (q * q)) * (L * L);
  Q += (s.D0 * (1 + q * q)) * K;
  Q += (s.D1 * (1 + T(1) / (q * q))) * L;
  return Q;
}

struct NegativeWeight : NumericError {
  NegativeWeight(const std::string& where, int idx, double v)
      : NumericError(where + ": squared off-diagonal coefficient at index " + std::to_string(idx) +
                     " is not positive (" + std::to_string(v) + ")"),
        index(idx),
        value(v) {}
  int index;
  double value;
};

// Which variant of the diagonal coefficient formula to use. Printed drops the A0 factor in the
// lambda coefficient; it is kept only as a negative control.
enum class DiagVariant { Corrected, Printed };

template <class T>
T lambda_n(const QFun<T>& qf, const AlphaParams& p, const T& n) {
  return qf.sinh(2 * n + T(p.alpha0));
}

template <class T>
T a_sq(const QFun<T>& qf, const AlphaParams& p, const T& n) {
  const auto r = root_params<T>(p);
  const T x = 2 * n + T(p.alpha0) - 1;
  T num(1);
  for (const T& pk : r) num *= (qf.sinh(x) - qf.sinh(pk));
  const T cx = qf.cosh(x);
  return -num / (cx * cx * qf.cosh(x + 1) * qf.cosh(x - 1));
}

template <class T>
T b_coef(const QFun<T>& qf, const AlphaParams& p, const T& n, DiagVariant v = DiagVariant::Corrected) {
  const AValues<T> a = a_values(qf, p);
  const T lam = lambda_n(qf, p, n);
  const T lead = v == DiagVariant::Corrected ? T(a.A0 * a.A1) : a.A1;
  const T a0 = T(p.alpha0);
  return ((lead - a.A2 * a.A3) * lam + qf.cosh(T(1)) * (a.A1 * a.A3 + a.A0 * a.A2)) /
         (qf.cosh(2 * n + a0 - 1) * qf.cosh(2 * n + a0 + 1));
}

// Coefficients for the case C0 > 0 (swapped alpha1/alpha2 roles, sign flip).
template <class T>
T tilde_a_sq(const QFun<T>& qf, const AlphaParams& p, const T& n) {
  AlphaParams sw = p;
  std::swap(sw.alpha1, sw.alpha2);
  return -a_sq(qf, sw, n);
}

template <class T>
T tilde_b(const QFun<T>& qf, const AlphaParams& p, const T& n, DiagVariant v = DiagVariant::Corrected) {
  const T t0 = qf.sinh(T(p.alpha0)), t1 = qf.cosh(T(p.alpha1)), t2 = qf.sinh(T(p.alpha2)), t3 = qf.cosh(T(p.alpha3));
  const T lam = lambda_n(qf, p, n);
  const T lead = v == DiagVariant::Corrected ? T(t0 * t1) : t1;
  const T a0 = T(p.alpha0);
  return ((lead - t2 * t3) * lam + qf.cosh(T(1)) * (t1 * t3 + t0 * t2)) /
         (qf.cosh(2 * n + a0 - 1) * qf.cosh(2 * n + a0 + 1));
}

template <class T>
struct TildeCoeffs {
  T a_tilde_sq, b_tilde;
};

template <class T>
TildeCoeffs<T> tilde_coeffs(const QFun<T>& qf, const AlphaParams& p, const T& n,
                            DiagVariant v = DiagVariant::Corrected) {
  return {tilde_a_sq(qf, p, n), tilde_b(qf, p, n, v)};
}

inline int dim_from_alpha3(const AlphaParams& p) {
  const double N = -p.alpha3 - 1;
  const long r = std::lround(N);
  if (r < 0 || std::abs(N - double(r)) > 1e-12) throw std::invalid_argument("alpha3 must equal -(N+1) for integer N >= 0");
  return int(r);
}

template <class T>
struct PositivityReport {
  bool ok = true;
  int bad_index = -1;
  T min_a_sq = T(0);
  T boundary_low = T(0), boundary_high = T(0);
};

// Interior squared coefficients a^2_{n(k)}, k = 1..N, must be positive.
template <class T>
PositivityReport<T> validate_positivity(const QFun<T>& qf, const AlphaParams& p, int N) {
  PositivityReport<T> r;
  bool first = true;
  for (int k = 1; k <= N; ++k) {
    const T n = T(k) - T(N) / 2;
    const T v = a_sq(qf, p, n);
    if (first || v < r.min_a_sq) r.min_a_sq = v;
    first = false;
    if (!(v > 0) && r.ok) {
      r.ok = false;
      r.bad_index = k;
    }
  }
  r.boundary_low = a_sq(qf, p, T(-N) / 2);
  r.boundary_high = a_sq(qf, p, T(N) / 2 + 1);
  return r;
}

template <class T>
struct AW3Rep {
  int N = 0;
  Matrix<T> K, L;
  std::vector<T> lambda;  // K spectrum, index k
  std::vector<T> a;       // a[k] couples k-1 and k; a[0] = 0
  std::vector<T> b;
  AlphaParams params;
};

struct BuildOptions {
  DiagVariant diag = DiagVariant::Corrected;
  bool corrupt = false;  // debug: perturb one diagonal coefficient by 1e-3
};

template <class T>
AW3Rep<T> build_rep(const QFun<T>& qf, const AlphaParams& p, int N, const BuildOptions& opt = {}) {
  if (dim_from_alpha3(p) != N) throw std::invalid_argument("build_rep: alpha3 must equal -N-1");
  using std::sqrt;
  AW3Rep<T> rep;
  rep.N = N;
  rep.params = p;
  const std::size_t d = std::size_t(N) + 1;
  rep.K = Matrix<T>(d, d);
  rep.L = Matrix<T>(d, d);
  rep.a.assign(d, T(0));
  for (int k = 0; k <= N; ++k) {
    const T n = T(k) - T(N) / 2;
    const T lam = lambda_n(qf, p, n);
    rep.lambda.push_back(lam);
    rep.K(k, k) = lam;
    rep.b.push_back(b_coef(qf, p, n, opt.diag));
    rep.L(k, k) = rep.b.back();
    if (k > 0) {
      const T v = a_sq(qf, p, n);
      if (!(v > 0)) throw NegativeWeight("build_rep", k, to_double(v));
      rep.a[k] = sqrt(v);
      rep.L(k, k - 1) = rep.L(k - 1, k) = rep.a[k];
    }
  }
  if (opt.corrupt) rep.L(N / 2, N / 2) += T(1e-3);
  return rep;
}

// Spectrum recursions of a sinh_q ladder with step 2.
template <class T>
double spectrum_identities(const QFun<T>& qf, const std::vector<T>& lam, const T& C1) {
  const T c2 = qf.cosh(T(2));
  double worst = 0;
  auto rel = [](const T& v, const T& scale) { return to_double(T(abs_of(v) / std::max(T(1), scale))); };
  for (std::size_t n = 0; n + 1 < lam.size(); ++n) {
    const T a = lam[n], b = lam[n + 1];
    const T v = a * a + b * b - c2 * a * b + C1;
    worst = std::max(worst, rel(v, a * a + b * b + abs_of(T(c2 * a * b)) + abs_of(C1)));
  }
  for (std::size_t n = 1; n + 1 < lam.size(); ++n) {
    const T a = lam[n - 1], m = lam[n], b = lam[n + 1];
    worst = std::max(worst, rel(T(c2 * m - b - a), T(abs_of(T(c2 * m)) + abs_of(a) + abs_of(b))));
    worst = std::max(worst, rel(T(m * m - b * a + C1), T(m * m + abs_of(T(a * b)) + abs_of(C1))));
  }
  return worst;
}

// Characteristic polynomial, coefficients from z^4 down to z^0.
template <class T>
struct CharPoly {
  std::array<T, 5> coeffs;
  std::array<std::complex<double>, 4> roots;

  T eval(const T& z) const {
    T r(0);
    for (const T& c : coeffs) r = r * z + c;
    return r;
  }
  T scale(const T& z) const {
    T r(0);
    for (const T& c : coeffs) r = r * abs_of(z) + abs_of(c);
    return r;
  }
};

inline std::vector<std::complex<double>> companion_roots(const std::vector<double>& c_desc) {
  std::size_t lead = 0;
  while (lead < c_desc.size() && c_desc[lead] == 0.0) ++lead;
  const int deg = int(c_desc.size() - lead) - 1;
  if (deg < 1) return {};
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
  for (int j = 0; j < deg; ++j) comp(0, j) = -c_desc[lead + 1 + j] / c_desc[lead];
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  if (es.info() != Eigen::Success) throw NumericError("companion matrix eigenvalue solve did not converge");
  std::vector<std::complex<double>> r;
  for (int i = 0; i < deg; ++i) r.push_back(es.eigenvalues()(i));
  return r;
}

template <class T>
CharPoly<T> char_poly(const QFun<T>& qf, const AWStructure<T>& s, const T& Q0) {
  const T s1 = qf.s1sq(), c = qf.cosh(T(1));
  const T c2 = c * c, c4 = c2 * c2;
  CharPoly<T> cp;
  cp.coeffs = {s.C0 * s1 / c4, s.D0 * s1 / c2, (s.B * s.B - s1 * Q0) / c2 + (s1 - 4) * s.C0 * s.C1 / c4,
               s.B * s.D1 - 4 * s.C1 * s.D0 / c2,
               s.D1 * s.D1 + s.C1 * (s.B * s.B + 4 * Q0) / c2 - 4 * s.C0 * s.C1 * s.C1 / c4};
  std::vector<double> cd;
  for (const T& x : cp.coeffs) cd.push_back(to_double(x));
  auto r = companion_roots(cd);
  if (r.size() != 4) throw NumericError("characteristic polynomial is not quartic");
  for (int i = 0; i < 4; ++i) cp.roots[i] = r[i];
  return cp;
}

// Candidate conventions for the polynomial variable at a root parameter p.
enum class PolyVariable { Raw, Sinh, CoshOneSinh };

inline const char* poly_variable_name(PolyVariable v) {
  switch (v) {
    case PolyVariable::Raw: return "z=p";
    case PolyVariable::Sinh: return "z=sinh_q(p)";
    case PolyVariable::CoshOneSinh: return "z=cosh_q(1)*sinh_q(p)";
  }
  return "?";
}

template <class T>
T poly_variable(const QFun<T>& qf, PolyVariable v, const T& p) {
  switch (v) {
    case PolyVariable::Raw: return p;
    case PolyVariable::Sinh: return qf.sinh(p);
    case PolyVariable::CoshOneSinh: return qf.cosh(T(1)) * qf.sinh(p);
  }
  return p;
}

// Max over roots of |P(z(p_k))| / scale.
template <class T>
double poly_root_residual(const QFun<T>& qf, const CharPoly<T>& cp, const std::array<T, 4>& p, PolyVariable v) {
  double worst = 0;
  for (const T& pk : p) {
    const T z = poly_variable(qf, v, pk);
    worst = std::max(worst, to_double(T(abs_of(cp.eval(z)) / std::max(T(1), cp.scale(z)))));
  }
  return worst;
}

// Closed forms for B, D0, D1, Q0 from the roots, as printed.
template <class T>
struct RootClosedForm {
  T B, D0, D1, Q0;
};

template <class T>
RootClosedForm<T> closed_form_from_roots(const QFun<T>& qf, const std::array<T, 4>& p) {
  const T s1 = qf.s1sq(), c1 = qf.cosh(T(1)), s2 = qf.sinh(T(2));
  const T sp01 = qf.sinh((p[0] + p[1]) / 2), sp23 = qf.sinh((p[2] + p[3]) / 2);
  const T cm01 = qf.cosh((p[0] - p[1]) / 2), cm23 = qf.cosh((p[2] - p[3]) / 2);
  RootClosedForm<T> r;
  r.B = s1 * (sp01 * sp23 - cm01 * cm23);
  r.D0 = s2 * s2 / c1 * (sp01 * cm01 + sp23 * cm23);
  r.D1 = s2 * s2 / c1 * (sp23 * cm01 + sp01 * cm23);
  T prod(1);
  for (const T& x : p) prod *= qf.sinh(x / 2);
  r.Q0 = s2 * s2 * (prod + s1 - (s1 * r.B + r.D1 * r.D1) / (s1 * s2 * s2));
  return r;
}

// Empirical closed form for Q0 in the canonical case A4 = A5 = sinh_q(1)^2.
template <class T>
T q0_canonical_form(const QFun<T>& qf, const T& B, const std::array<T, 4>& p) {
  const T s1 = qf.s1sq(), c1 = qf.cosh(T(1)), s2 = qf.sinh(T(2));
  std::array<T, 4> sp;
  for (int k = 0; k < 4; ++k) sp[k] = qf.sinh(p[k]);
  T e2(0);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) e2 += sp[i] * sp[j];
  return B * B / s1 + s2 * s2 * e2 + (s1 - 4) * c1 * c1 * s1;
}

// Root parameters recovered from the polynomial roots via the inverse of z = cosh_q(1) sinh_q(p).
template <class T>
std::array<double, 4> roots_to_params(const QFun<T>& qf, const CharPoly<T>& cp, double* max_imag = nullptr) {
  std::array<double, 4> out;
  double im = 0;
  const double c1 = to_double(qf.cosh(T(1)));
  QFun<double> qd(qf.ctx());
  for (int k = 0; k < 4; ++k) {
    im = std::max(im, std::abs(cp.roots[k].imag()) / std::max(1.0, std::abs(cp.roots[k])));
    out[k] = qd.asinh(cp.roots[k].real() / c1);
  }
  std::sort(out.begin(), out.end());
  if (max_imag) *max_imag = im;
  return out;
}

enum class DualVariant { Printed, Symmetric };

inline const char* dual_variant_name(DualVariant v) {
  return v == DualVariant::Printed ? "s3=Sigma/2-p1" : "s3=Sigma/2-p2";
}

template <class T>
std::array<T, 4> dual_roots(const std::array<T, 4>& p, DualVariant v) {
  const T half = (p[0] + p[1] + p[2] + p[3]) / 2;
  return {half - p[1], half - p[0], half - p[3], v == DualVariant::Printed ? T(half - p[1]) : T(half - p[2])};
}

// Representation built directly from roots and structure constants (K diagonal, L tridiagonal).
// With swap = true the roles of C0/C1 and D0/D1 are exchanged.
template <class T>
std::pair<Matrix<T>, Matrix<T>> root_build(const QFun<T>& qf, const std::array<T, 4>& r, const AWStructure<T>& s,
                                          int N, bool swap) {
  using std::sqrt;
  const T D1 = swap ? s.D0 : s.D1;
  const std::size_t d = std::size_t(N) + 1;
  Matrix<T> K(d, d), L(d, d);
  auto lam = [&](int n) { return qf.sinh(2 * T(n) + r[0] + 1); };
  const T nan = std::numeric_limits<T>::quiet_NaN();
  for (int n = 0; n <= N; ++n) {
    K(n, n) = lam(n);
    L(n, n) = (s.B * lam(n) + D1) / ((lam(n) - lam(n - 1)) * (lam(n + 1) - lam(n)));
    if (n > 0) {
      const T x = 2 * T(n) + r[0];
      T num(1);
      for (const T& pk : r) num *= (qf.sinh(x) - qf.sinh(pk));
      const T cx = qf.cosh(x);
      const T v = -num / (cx * cx * qf.cosh(x + 1) * qf.cosh(x - 1));
      L(n, n - 1) = L(n - 1, n) = v > 0 ? T(sqrt(v)) : nan;
    }
  }
  return {K, L};
}

template <class T>
struct DualCheck {
  double aw_residual = 0;      // swapped representation against the original relations
  double spectrum_error = 0;   // diagonal of the swapped K vs mu_m
  bool finite = true;
};

// Swapped representation from dual roots: tridiagonal part plays K, diagonal part plays L.
template <class T>
DualCheck<T> dual_check(const QFun<T>& qf, const AlphaParams& p, int N, DualVariant v) {
  DualCheck<T> out;
  const auto s = structure_from_alpha(qf, p);
  const auto dr = dual_roots(root_params<T>(p), v);
  auto [Kp, Lp] = root_build(qf, dr, s, N, true);
  out.finite = all_finite(Lp);
  if (!out.finite) {
    out.aw_residual = std::numeric_limits<double>::infinity();
  } else {
    out.aw_residual = aw_residual(qf, Lp, Kp, a_values(qf, p)).worst();
  }
  double sp = 0;
  for (int j = 0; j <= N; ++j) {
    const T mu = qf.sinh(2 * (T(j) - T(N) / 2) + T(p.alpha1));
    sp = std::max(sp, to_double(T(abs_of(T(Kp(j, j) - mu)) / std::max(T(1), abs_of(mu)))));
  }
  out.spectrum_error = sp;
  return out;
}

}  // namespace awlab
