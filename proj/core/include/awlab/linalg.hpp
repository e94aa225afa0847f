#pragma once

#include "awlab/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

namespace awlab {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const T& v = T(0)) : r_(r), c_(c), a_(r * c, v) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix diag(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  const std::vector<T>& data() const { return a_; }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Matrix& operator+=(const Matrix& o) {
    same_shape(o, "+=");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    same_shape(o, "-=");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }

  void same_shape(const Matrix& o, const char* op) const {
    if (r_ != o.r_ || c_ != o.c_)
      throw DimensionError(std::string("matrix shape mismatch in ") + op);
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

template <class T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  return a += b;
}
template <class T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  return a -= b;
}
template <class T>
Matrix<T> operator-(Matrix<T> a) {
  return a *= T(-1);
}
template <class T>
Matrix<T> operator*(Matrix<T> a, const T& s) {
  return a *= s;
}
template <class T>
Matrix<T> operator*(const T& s, Matrix<T> a) {
  return a *= s;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product dimension mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class T>
T frobenius(const Matrix<T>& a) {
  using std::sqrt;
  T s(0);
  for (const auto& x : a.data()) s += x * x;
  return sqrt(s);
}

template <class T>
T max_abs(const Matrix<T>& a) {
  T m(0);
  for (const auto& x : a.data()) m = std::max(m, T(abs_of(x)));
  return m;
}

template <class T>
bool all_finite(const Matrix<T>& a) {
  return std::all_of(a.data().begin(), a.data().end(), [](const T& x) { return is_finite(x); });
}

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t r = 0; r < b.cols(); ++r) k(i * b.rows() + p, j * b.cols() + r) = a(i, j) * b(p, r);
  return k;
}

template <class T>
Matrix<T> comm(const Matrix<T>& x, const Matrix<T>& y) {
  if (!x.square() || !y.square() || x.rows() != y.rows()) throw DimensionError("comm: dimension mismatch");
  return x * y - y * x;
}

// q X Y - q^{-1} Y X
template <class T>
Matrix<T> qcomm(const T& q, const Matrix<T>& x, const Matrix<T>& y) {
  if (!x.square() || !y.square() || x.rows() != y.rows()) throw DimensionError("qcomm: dimension mismatch");
  return q * (x * y) - (T(1) / q) * (y * x);
}

// ||sum terms||_F / max(1, sum ||term||_F)
template <class T>
double rel_residual(const std::vector<Matrix<T>>& terms) {
  if (terms.empty()) return 0.0;
  Matrix<T> s(terms.front().rows(), terms.front().cols());
  T norms(0);
  for (const auto& t : terms) {
    s += t;
    norms += frobenius(t);
  }
  T den = norms > 1 ? norms : T(1);
  return to_double(T(frobenius(s) / den));
}

template <class T>
double commutator_residual(const Matrix<T>& x, const Matrix<T>& y) {
  return rel_residual<T>({x * y, -(y * x)});
}

template <class T>
double difference_residual(const Matrix<T>& x, const Matrix<T>& y) {
  return rel_residual<T>({x, -y});
}

template <class T>
struct EigenSystem {
  std::vector<T> values;   // ascending
  Matrix<T> vectors;       // columns
  std::string convention_tag = "max-abs-entry-positive";
};

struct EigenspaceLeakage : NumericError {
  using NumericError::NumericError;
};

namespace detail {

template <class T>
T epsilon_of() {
  return std::numeric_limits<T>::epsilon();
}

// Flip sign so the largest-magnitude entry is positive; ties go to the lowest index.
template <class T>
void fix_sign(Matrix<T>& v, std::size_t col) {
  T best(0);
  for (std::size_t i = 0; i < v.rows(); ++i) best = std::max(best, T(abs_of(v(i, col))));
  T thr = best * (1 - T(1e-12));
  for (std::size_t i = 0; i < v.rows(); ++i) {
    if (abs_of(v(i, col)) >= thr) {
      if (v(i, col) < 0)
        for (std::size_t k = 0; k < v.rows(); ++k) v(k, col) = -v(k, col);
      return;
    }
  }
}

}  // namespace detail

// Cyclic Jacobi eigendecomposition of a symmetric matrix.
template <class T>
EigenSystem<T> sym_eig(const Matrix<T>& a_in) {
  using std::sqrt;
  if (!a_in.square()) throw DimensionError("sym_eig: matrix not square");
  const std::size_t n = a_in.rows();
  T nrm = frobenius(a_in);
  if (frobenius(Matrix<T>(a_in - a_in.transpose())) > T(1e-12) * std::max(T(1), nrm))
    throw std::invalid_argument("sym_eig: matrix not symmetric");
  Matrix<T> a = a_in;
  Matrix<T> v = Matrix<T>::identity(n);
  const T tol = detail::epsilon_of<T>() * std::max(T(1), nrm);
  for (int sweep = 0; sweep < 100; ++sweep) {
    T off(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (sqrt(off) <= tol) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t r = p + 1; r < n; ++r) {
        if (abs_of(a(p, r)) <= detail::epsilon_of<T>() * T(1e-3) * std::max(T(1), nrm)) continue;
        T theta = (a(r, r) - a(p, p)) / (2 * a(p, r));
        T t = (theta >= 0 ? T(1) : T(-1)) / (abs_of(theta) + sqrt(theta * theta + 1));
        T c = 1 / sqrt(t * t + 1);
        T s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          T akp = a(k, p), akr = a(k, r);
          a(k, p) = c * akp - s * akr;
          a(k, r) = s * akp + c * akr;
        }
        for (std::size_t k = 0; k < n; ++k) {
          T apk = a(p, k), ark = a(r, k);
          a(p, k) = c * apk - s * ark;
          a(r, k) = s * apk + c * ark;
        }
        for (std::size_t k = 0; k < n; ++k) {
          T vkp = v(k, p), vkr = v(k, r);
          v(k, p) = c * vkp - s * vkr;
          v(k, r) = s * vkp + c * vkr;
        }
      }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });
  EigenSystem<T> es;
  es.vectors = Matrix<T>(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    es.values.push_back(a(order[c], order[c]));
    for (std::size_t k = 0; k < n; ++k) es.vectors(k, c) = v(k, order[c]);
    detail::fix_sign(es.vectors, c);
  }
  return es;
}

template <class T>
struct LabeledEigen {
  std::vector<T> first;    // label from the first operator
  std::vector<T> second;   // eigenvalue of the refining operator
  Matrix<T> vectors;       // columns
};

// Diagonalize B inside each eigenspace of a first operator. `labels[c]` is the first-operator
// eigenvalue of basis column c; columns with labels within group_tol are one eigenspace.
template <class T>
LabeledEigen<T> block_refine(const std::vector<T>& labels, const Matrix<T>& b, const Matrix<T>& basis,
                             double group_tol = 1e-8, double leak_tol = 1e-10) {
  const std::size_t n = basis.rows(), m = basis.cols();
  if (labels.size() != m || b.rows() != n || !b.square()) throw DimensionError("block_refine: shape mismatch");
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return labels[x] < labels[y]; });
  T bn = std::max(T(1), frobenius(b));
  LabeledEigen<T> out;
  out.vectors = Matrix<T>(n, m);
  std::size_t col = 0;
  for (std::size_t s = 0; s < m;) {
    std::size_t e = s + 1;
    while (e < m && abs_of(T(labels[order[e]] - labels[order[s]])) <= group_tol * std::max(T(1), T(abs_of(labels[order[s]]))))
      ++e;
    const std::size_t k = e - s;
    Matrix<T> v(n, k);
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t i = 0; i < n; ++i) v(i, c) = basis(i, order[s + c]);
    Matrix<T> bv = b * v;
    Matrix<T> sub = v.transpose() * bv;
    Matrix<T> leak = bv - v * sub;
    if (to_double(T(frobenius(leak) / bn)) > leak_tol)
      throw EigenspaceLeakage("block_refine: operator does not preserve eigenspace");
    // symmetrize against rounding before the inner solve
    Matrix<T> symsub = T(0.5) * (sub + sub.transpose());
    EigenSystem<T> es = sym_eig(symsub);
    Matrix<T> w = v * es.vectors;
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t i = 0; i < n; ++i) out.vectors(i, col) = w(i, c);
      detail::fix_sign(out.vectors, col);
      out.first.push_back(labels[order[s]]);
      out.second.push_back(es.values[c]);
      ++col;
    }
    s = e;
  }
  return out;
}

}  // namespace awlab
