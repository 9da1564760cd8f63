#include "geneo/stochastic_decomp.hpp"

#include <cmath>

namespace geneo {

Matrix to_matrix(const RectPerm& r, int cols) {
    Matrix m(static_cast<int>(r.row_choice.size()), cols);
    for (int i = 0; i < m.rows; ++i) {
        const int j = r.row_choice[i];
        if (j < 0 || j >= cols) throw ShapeMismatch("row choice outside column range");
        m(i, j) = 1.0;
    }
    return m;
}

double ConvexCombo::weight_sum() const {
    double s = 0.0;
    for (const auto& t : terms) s += t.weight;
    return s;
}

bool is_row_stochastic(const Matrix& a, double tol) {
    for (double v : a.data)
        if (v < -tol) return false;
    for (int i = 0; i < a.rows; ++i)
        if (std::abs(row_sum(a, i) - 1.0) > tol) return false;
    return true;
}

ConvexCombo decompose_stochastic(Matrix a, double tol) {
    if (!is_row_stochastic(a, tol)) throw NotStochastic("matrix is not row-stochastic");
    for (double& v : a.data)
        if (v < 0.0) v = 0.0;

    // Residual row sums agree across rows up to rounding, so below this floor
    // the leftover mass is rounding noise and the loop stops.
    constexpr double weight_floor = 1e-13;

    ConvexCombo combo;
    const int max_terms = a.rows * a.cols;
    for (int step = 0; step < max_terms; ++step) {
        RectPerm selection;
        selection.row_choice.resize(a.rows);
        double weight = 2.0;
        for (int i = 0; i < a.rows; ++i) {
            int best = 0;
            for (int j = 1; j < a.cols; ++j)
                if (a(i, j) > a(i, best)) best = j;
            selection.row_choice[i] = best;
            weight = std::min(weight, a(i, best));
        }
        if (weight <= weight_floor) break;
        for (int i = 0; i < a.rows; ++i) a(i, selection.row_choice[i]) -= weight;
        combo.terms.push_back({weight, std::move(selection)});
    }
    return combo;
}

Matrix reconstruct(const ConvexCombo& combo, int rows, int cols) {
    Matrix out(rows, cols);
    for (const auto& term : combo.terms) {
        if (static_cast<int>(term.perm.row_choice.size()) != rows)
            throw ShapeMismatch("term row count does not match");
        for (int i = 0; i < rows; ++i) {
            const int j = term.perm.row_choice[i];
            if (j < 0 || j >= cols) throw ShapeMismatch("term column outside range");
            out(i, j) += term.weight;
        }
    }
    return out;
}

}  // namespace geneo
