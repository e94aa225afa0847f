#pragma once

#include "awlab/aw3.hpp"

#include <array>
#include <string>
#include <vector>

namespace awlab {

template <class T>
struct QRacahParams {
  T alpha, beta, gamma, delta;
  T base;
};

// Parameters identified from the overlap of the K and L eigenbases, base q^2.
template <class T>
QRacahParams<T> qracah_params(const QFun<T>& qf, const AlphaParams& p) {
  const T a0(p.alpha0), a1(p.alpha1), a2(p.alpha2), a3(p.alpha3);
  return {-qf.pow(a0 + a1 + a2 + a3), qf.pow(a0 - a1 - a2 + a3), qf.pow(2 * a3), -qf.pow(2 * a1), qf.q() * qf.q()};
}

// Alternative parameter set (minus alpha1), kept as a rejected candidate.
template <class T>
QRacahParams<T> qracah_params_alt(const QFun<T>& qf, const AlphaParams& p) {
  const T a0(p.alpha0), a1(p.alpha1), a2(p.alpha2), a3(p.alpha3);
  return {-qf.pow(a0 - a1 + a2 + a3), qf.pow(a0 - a1 - a2 + a3), qf.pow(2 * a3), -qf.pow(-2 * a1), qf.q() * qf.q()};
}

template <class T>
T y_grid(const QRacahParams<T>& P, int j) {
  using std::pow;
  T bj(1);
  for (int i = 0; i < j; ++i) bj *= P.base;
  return 1 / bj + P.gamma * P.delta * bj * P.base;
}

template <class T>
T base_pow(const T& base, int k) {
  T r(1);
  const T b = k >= 0 ? base : T(1) / base;
  for (int i = 0; i < std::abs(k); ++i) r *= b;
  return r;
}

// R_n(y_j) as a terminating 4phi3 at z = base.
template <class T>
T qracah_eval(int n, int j, const QRacahParams<T>& P) {
  const T& b = P.base;
  const std::array<T, 4> num{base_pow(b, -n), P.alpha * P.beta * base_pow(b, n + 1), base_pow(b, -j),
                             P.gamma * P.delta * base_pow(b, j + 1)};
  const std::array<T, 3> den{P.alpha * b, P.beta * P.delta * b, P.gamma * b};
  return phi43(num, den, b, b, std::max(n, j));
}

// Table P[j][k]: rows are the variable index, columns the degree.
template <class T>
Matrix<T> series_table(const QFun<T>& qf, const AlphaParams& p, int N, bool alt = false) {
  const auto P = alt ? qracah_params_alt(qf, p) : qracah_params(qf, p);
  Matrix<T> t(N + 1, N + 1);
  for (int j = 0; j <= N; ++j)
    for (int k = 0; k <= N; ++k) t(j, k) = qracah_eval(k, j, P);
  return t;
}

template <class T>
std::vector<T> l_spectrum(const QFun<T>& qf, const AlphaParams& p, int N) {
  std::vector<T> mu;
  for (int j = 0; j <= N; ++j) mu.push_back(qf.sinh(2 * (T(j) - T(N) / 2) + T(p.alpha1)));
  return mu;
}

// Three-term recurrence from L phi = mu phi in the K eigenbasis, normalized by the k = 0 entry.
template <class T>
Matrix<T> recurrence_eval(const QFun<T>& qf, const AW3Rep<T>& rep) {
  const int N = rep.N;
  const auto mu = l_spectrum(qf, rep.params, N);
  Matrix<T> t(N + 1, N + 1);
  for (int j = 0; j <= N; ++j) {
    std::vector<T> v(N + 1);
    v[0] = T(1);
    T prev(0);
    for (int k = 0; k < N; ++k) {
      const T nxt = ((mu[j] - rep.b[k]) * v[k] - (k > 0 ? T(rep.a[k] * prev) : T(0))) / rep.a[k + 1];
      prev = v[k];
      v[k + 1] = nxt;
    }
    for (int k = 0; k <= N; ++k) t(j, k) = v[k];
  }
  // double-ratio normalization: P(j,k) = v_k(j) / v_k(0)
  Matrix<T> out(N + 1, N + 1);
  for (int j = 0; j <= N; ++j)
    for (int k = 0; k <= N; ++k) out(j, k) = t(j, k) / t(0, k);
  return out;
}

template <class T>
Matrix<T> recurrence_eval(const QFun<T>& qf, const AlphaParams& p, int N) {
  return recurrence_eval(qf, build_rep(qf, p, N));
}

struct SpectrumMatchError : NumericError {
  using NumericError::NumericError;
};

// Assign each target value the nearest eigenvalue. Rejects when targets are closer than
// 10 x tol or when any assignment misses by more than the gap guard.
template <class T>
std::vector<std::size_t> match_spectrum(const std::vector<T>& values, const std::vector<T>& targets, double tol) {
  T gap = std::numeric_limits<T>::max();
  for (std::size_t a = 0; a < targets.size(); ++a)
    for (std::size_t b = a + 1; b < targets.size(); ++b) gap = std::min(gap, T(abs_of(T(targets[a] - targets[b]))));
  if (targets.size() > 1 && gap < 10 * tol) throw SpectrumMatchError("spectrum gap below guard");
  std::vector<std::size_t> idx;
  std::vector<bool> used(values.size(), false);
  for (const T& t : targets) {
    std::size_t best = 0;
    T bd = std::numeric_limits<T>::max();
    for (std::size_t i = 0; i < values.size(); ++i) {
      const T d = abs_of(T(values[i] - t));
      if (d < bd) {
        bd = d;
        best = i;
      }
    }
    if (used[best] || bd > gap / 4 + tol) throw SpectrumMatchError("eigenvalue does not match closed-form spectrum");
    used[best] = true;
    idx.push_back(best);
  }
  return idx;
}

template <class T>
struct RepOverlaps {
  Matrix<T> P;  // double ratio table
  Matrix<T> O;  // O(j,k) = <phi_j, psi_k>
  double spectrum_error = 0;
};

template <class T>
RepOverlaps<T> overlap_from_rep(const QFun<T>& qf, const AW3Rep<T>& rep, double tol = 1e-10) {
  const int N = rep.N;
  const auto es = sym_eig(rep.L);
  const auto mu = l_spectrum(qf, rep.params, N);
  const auto idx = match_spectrum(es.values, mu, tol);
  RepOverlaps<T> r;
  r.O = Matrix<T>(N + 1, N + 1);
  r.P = Matrix<T>(N + 1, N + 1);
  for (int j = 0; j <= N; ++j) {
    r.spectrum_error =
        std::max(r.spectrum_error, to_double(T(abs_of(T(es.values[idx[j]] - mu[j])) / std::max(T(1), abs_of(mu[j])))));
    for (int k = 0; k <= N; ++k) r.O(j, k) = es.vectors(k, idx[j]);
  }
  for (int j = 0; j <= N; ++j)
    for (int k = 0; k <= N; ++k) r.P(j, k) = r.O(j, k) * r.O(0, 0) / (r.O(j, 0) * r.O(0, k));
  return r;
}

// Relative max-entry difference between two tables.
template <class T>
double table_distance(const Matrix<T>& a, const Matrix<T>& b) {
  T scale = std::max(T(1), std::max(max_abs(a), max_abs(b)));
  return to_double(T(max_abs(Matrix<T>(a - b)) / scale));
}

// Orthogonality measure: max |sum_j w(j,k) P(j,k) P(j,k') - delta|.
template <class T>
double orthogonality_error(const Matrix<T>& P, const Matrix<T>& w) {
  const std::size_t n = P.cols();
  double worst = 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t kk = 0; kk < n; ++kk) {
      T s(0);
      for (std::size_t j = 0; j < P.rows(); ++j) s += w(j, k) * P(j, k) * P(j, kk);
      worst = std::max(worst, to_double(T(abs_of(T(s - (k == kk ? 1 : 0))))));
    }
  return worst;
}

template <class T>
T rho_weight(const QRacahParams<T>& P, int m) {
  const T& b = P.base;
  const T a = P.alpha, bb = P.beta, g = P.gamma, d = P.delta;
  const T num = qpoch(T(a * b), b, m) * qpoch(T(bb * d * b), b, m) * qpoch(T(g * b), b, m) *
                qpoch(T(g * d * b), b, m) * (1 - g * d * base_pow(b, 2 * m + 1));
  const T den = qpoch(b, b, m) * qpoch(T(g * d * b / a), b, m) * qpoch(T(g * b / bb), b, m) * qpoch(T(d * b), b, m) *
                base_pow(T(a * bb * b), m) * (1 - g * d * b);
  return num / den;
}

enum class NormConstant { Printed, Rescaled };

// n-independent infinite-product constant of the norm.
template <class T>
T norm_constant(const QRacahParams<T>& P, NormConstant c, double eps_inf) {
  const T& b = P.base;
  const T a = P.alpha, bb = P.beta, g = P.gamma, d = P.delta;
  auto pi = [&](const T& x) { return qpoch_inf(x, b, eps_inf); };
  const T den = pi(T(1 / (a * bb * b))) * pi(T(g * d * b / a)) * pi(T(g * b / bb)) * pi(T(d * b));
  if (c == NormConstant::Printed) return pi(T(1 / a)) * pi(T(g / bb)) * pi(T(d / a)) * pi(T(1 / bb)) * pi(T(g * d * b * b)) / den;
  return pi(T(g / (a * bb))) * pi(T(d / a)) * pi(T(1 / bb)) * pi(T(g * d * b * b)) / den;
}

template <class T>
T h_norm(const QRacahParams<T>& P, int n, const T& constant) {
  const T& b = P.base;
  const T a = P.alpha, bb = P.beta, g = P.gamma, d = P.delta;
  const T num = (1 - a * bb * b) * base_pow(T(g * d * b), n) * qpoch(b, b, n) * qpoch(T(a * bb * b / g), b, n) *
                qpoch(T(a * b / d), b, n) * qpoch(T(bb * b), b, n);
  const T den = (1 - a * bb * base_pow(b, 2 * n + 1)) * qpoch(T(a * b), b, n) * qpoch(T(a * bb * b), b, n) *
                qpoch(T(bb * d * b), b, n) * qpoch(T(g * b), b, n);
  return constant * num / den;
}

// w(j,k) = rho(j) / h_k
template <class T>
Matrix<T> weight_table(const QFun<T>& qf, const AlphaParams& p, int N, NormConstant c = NormConstant::Rescaled) {
  const auto P = qracah_params(qf, p);
  const T constant = norm_constant(P, c, qf.ctx().eps_inf);
  Matrix<T> w(N + 1, N + 1);
  for (int j = 0; j <= N; ++j)
    for (int k = 0; k <= N; ++k) w(j, k) = rho_weight(P, j) / h_norm(P, k, constant);
  return w;
}

// |<phi_j,psi_0><phi_0,psi_k>/<phi_0,psi_0>|^2 from eigenvectors.
template <class T>
Matrix<T> eigen_weight_table(const Matrix<T>& O) {
  Matrix<T> w(O.rows(), O.cols());
  for (std::size_t j = 0; j < O.rows(); ++j)
    for (std::size_t k = 0; k < O.cols(); ++k) {
      const T v = O(j, 0) * O(0, k) / O(0, 0);
      w(j, k) = v * v;
    }
  return w;
}

struct BalanceError : NumericError {
  using NumericError::NumericError;
};

// Terminating 4phi3 with num[0] = base^{-n}, evaluated at z = base.
template <class T>
struct Series43 {
  std::array<T, 4> num;
  std::array<T, 3> den;
  int n = 0;
  T base;

  T eval() const { return phi43(num, den, base, base, n); }
  double balance_defect() const {
    T pn(1), pd(1);
    for (const T& x : num) pn *= x;
    for (const T& x : den) pd *= x;
    return to_double(T(abs_of(T(base * pn / pd - 1))));
  }
};

template <class T>
struct SearsResult {
  Series43<T> rhs;
  T prefactor;
};

// Sears transformation with alpha = num[ia] (ia in 1..3) and epsilon = den[ie]:
// LHS = prefactor * RHS.
template <class T>
SearsResult<T> sears_transform(const Series43<T>& s, int ia = 1, int ie = 1, double balance_tol = 1e-10) {
  if (ia < 1 || ia > 3 || ie < 0 || ie > 2) throw std::invalid_argument("sears_transform: slot out of range");
  if (s.balance_defect() > balance_tol) throw BalanceError("sears_transform: series is not balanced");
  const T al = s.num[ia];
  std::vector<T> rest;
  for (int i = 1; i < 4; ++i)
    if (i != ia) rest.push_back(s.num[i]);
  const T eps = s.den[ie];
  std::vector<T> dz;
  for (int i = 0; i < 3; ++i)
    if (i != ie) dz.push_back(s.den[i]);
  const T shift = base_pow(s.base, 1 - s.n);
  SearsResult<T> r;
  r.rhs.num = {s.num[0], al, eps / rest[0], eps / rest[1]};
  r.rhs.den = {al * shift / dz[0], eps, al * shift / dz[1]};
  r.rhs.n = s.n;
  r.rhs.base = s.base;
  r.prefactor = base_pow(al, s.n) * qpoch(T(dz[0] / al), s.base, s.n) * qpoch(T(dz[1] / al), s.base, s.n) /
                (qpoch(dz[0], s.base, s.n) * qpoch(dz[1], s.base, s.n));
  return r;
}

}  // namespace awlab
