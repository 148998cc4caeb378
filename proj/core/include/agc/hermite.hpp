#pragma once

#include <optional>
#include <vector>

#include "agc/poly_matrix.hpp"

namespace agc {

/// Result of row-reducing R to staircase (Hermite) form: U*R = H with U
/// unimodular. The first `rank` rows of H carry the pivots; pivot columns
/// strictly increase, each pivot is monic, entries above a pivot have
/// strictly smaller degree, and rows below `rank` are zero. For a fixed
/// input the output is deterministic, and with the reduction above pivots
/// the nonzero rows are the canonical basis of the row module of R.
struct HermiteReduction {
    PolyMatrix U;
    PolyMatrix H;
    std::vector<int> pivot_cols;
    int rank = 0;
};

HermiteReduction hermite_row_form(const PolyMatrix& R);

/// Solves X * R = S exactly, i.e. decides whether every row of S lies in
/// the row module of R and produces the witness when so. The witness is
/// re-verified by multiplication before it is returned.
std::optional<PolyMatrix> solve_left(const PolyMatrix& R, const PolyMatrix& S);

} // namespace agc
