#include "awlab/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace awlab;

namespace {

Matrix<double> random_sym(std::size_t n, unsigned seed) {
  std::mt19937 g(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  Matrix<double> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) a(i, j) = a(j, i) = u(g);
  return a;
}

}  // namespace

TEST_CASE("symmetric eigensolver reconstructs the matrix") {
  for (std::size_t n : {1u, 2u, 5u, 12u}) {
    const auto a = random_sym(n, 17 + unsigned(n));
    const auto es = sym_eig(a);
    REQUIRE(es.values.size() == n);
    for (std::size_t i = 1; i < n; ++i) CHECK(es.values[i - 1] <= es.values[i]);
    const auto V = es.vectors;
    const Matrix<double> rec = V * Matrix<double>::diag(es.values) * V.transpose();
    CHECK(max_abs(Matrix<double>(rec - a)) < 1e-12);
    CHECK(max_abs(Matrix<double>(V.transpose() * V - Matrix<double>::identity(n))) < 1e-12);
    // sign convention: largest-magnitude entry of each column is positive
    for (std::size_t c = 0; c < n; ++c) {
      double best = 0, val = 0;
      for (std::size_t r = 0; r < n; ++r)
        if (std::abs(V(r, c)) > best + 1e-12) best = std::abs(V(r, c)), val = V(r, c);
      CHECK(val > 0);
    }
  }
}

TEST_CASE("Kronecker product and commutators") {
  Matrix<double> a(2, 2), b(2, 2);
  a(0, 0) = 1, a(0, 1) = 2, a(1, 0) = 3, a(1, 1) = 4;
  b(0, 0) = 0, b(0, 1) = 1, b(1, 0) = 1, b(1, 1) = 0;
  const auto k = kron(a, b);
  REQUIRE(k.rows() == 4);
  CHECK(k(0, 1) == 1);
  CHECK(k(1, 0) == 1);
  CHECK(k(2, 1) == 3);
  CHECK(k(3, 0) == 3);
  CHECK(k(2, 3) == 4);
  CHECK(k(0, 0) == 0);
  // (A x B)(C x D) = AC x BD
  const auto lhs = kron(a, b) * kron(b, a);
  const auto rhs = kron(Matrix<double>(a * b), Matrix<double>(b * a));
  CHECK(max_abs(Matrix<double>(lhs - rhs)) == 0);

  const double q = 0.7;
  const auto c = comm(a, b);
  CHECK(max_abs(Matrix<double>(c - (a * b - b * a))) == 0);
  const auto qc = qcomm(q, a, b);
  CHECK(max_abs(Matrix<double>(qc - (q * (a * b) - (1 / q) * (b * a)))) < 1e-15);
  CHECK(commutator_residual(a, a) == 0);
  CHECK(commutator_residual(a, b) > 0.1);
}

TEST_CASE("relative residual normalization") {
  const auto a = Matrix<double>::identity(3);
  CHECK(rel_residual<double>({a, Matrix<double>(-a)}) == 0);
  // terms of size 1e-3 are compared against max(1, sum of norms)
  const Matrix<double> tiny = 1e-3 * a;
  CHECK(rel_residual<double>({tiny}) == doctest::Approx(frobenius(tiny)));
  CHECK_THROWS_AS(a + Matrix<double>(2, 3), DimensionError);
}

TEST_CASE("block refinement splits a degenerate eigenspace") {
  // first operator diag(1,1,2), second operator mixes the degenerate pair
  Matrix<double> b(3, 3);
  b(0, 0) = 0, b(0, 1) = 1, b(1, 0) = 1, b(1, 1) = 0, b(2, 2) = 5;
  const auto le = block_refine<double>({1, 1, 2}, b, Matrix<double>::identity(3));
  REQUIRE(le.first.size() == 3);
  CHECK(le.first[0] == 1);
  CHECK(le.second[0] == doctest::Approx(-1));
  CHECK(le.second[1] == doctest::Approx(1));
  CHECK(le.second[2] == doctest::Approx(5));
  // an operator that leaks out of the eigenspace is rejected
  b(0, 2) = b(2, 0) = 0.5;
  CHECK_THROWS_AS(block_refine<double>({1, 1, 2}, b, Matrix<double>::identity(3)), EigenspaceLeakage);
}
