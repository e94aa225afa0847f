#pragma once

#include "awlab/aw3.hpp"
#include "awlab/uqsl2.hpp"

#include <vector>

namespace awlab {

struct NoSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structure constants realized by (Y_K, Y_L) with Casimir value omega0.
AWStructure<double> embedding_constants(const QFun<double>& qf, const TwistCoeffs<double>& c, double omega0);

struct EmbeddingSolution {
  TwistCoeffs<double> coeffs;
  double theta = 0;
  double residual = 0;  // max relative component error of the round trip
};

// Max relative component difference between two structure tuples.
double structure_distance(const AWStructure<double>& a, const AWStructure<double>& b);

// All real coefficient sets whose embedding constants reproduce s (round-trip residual <= accept_tol).
// Throws NoSolution when none exists, in particular for B = C0 = C1 = D0 = 0, D1 != 0 and its mirror.
std::vector<EmbeddingSolution> solve_embedding(const QFun<double>& qf, const AWStructure<double>& s, double omega0,
                                               double accept_tol = 1e-9);

}  // namespace awlab
