#pragma once

#include <vector>

#include "geneo/matrix.hpp"

namespace geneo {

// Rectangular permutation matrix: exactly one 1 per row, at column
// row_choice[i]. Encodes a function from row indices to column indices.
struct RectPerm {
    std::vector<int> row_choice;
};

Matrix to_matrix(const RectPerm& r, int cols);

struct ConvexCombo {
    struct Term {
        double weight;
        RectPerm perm;
    };
    std::vector<Term> terms;

    double weight_sum() const;
};

bool is_row_stochastic(const Matrix& a, double tol = 1e-9);

// Greedy constructive decomposition of a row-stochastic matrix into a convex
// combination of rectangular permutation matrices. Each step selects, per
// row, the column of the largest positive residual entry (ties: smallest
// column), emits the minimum selected entry as the weight and subtracts it.
// At least one entry reaches zero per step, so there are at most rows*cols
// terms. Deterministic: identical input yields the identical term sequence.
ConvexCombo decompose_stochastic(Matrix a, double tol = 1e-9);

Matrix reconstruct(const ConvexCombo& combo, int rows, int cols);

}  // namespace geneo
