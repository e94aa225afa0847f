#pragma once

#include "awlab/rank2.hpp"

#include <vector>

namespace awlab {

// Deterministic parameter scans over alpha_i in {-1.5, -1.25, ..., 1.5}.

// Interior a^2 positive and well separated from zero, q-Racah series and weights regular.
bool aw3_admissible(const QContext& ctx, const Alpha3& a, int N);

// Rank-2 build succeeds with corner denominators above 1e-3 and every univariate block admissible.
bool rank2_admissible(const QContext& ctx, const Alpha3& a, int N1, int N2);

// Up to `count` admissible points, smallest |alpha0|+|alpha1|+|alpha2| first.
std::vector<Alpha3> aw3_presets(const QContext& ctx, int N, std::size_t count = 2);
std::vector<Alpha3> rank2_presets(const QContext& ctx, int N1, int N2, std::size_t count = 1);

}  // namespace awlab
