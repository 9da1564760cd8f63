#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "geneo/alpha_action.hpp"
#include "geneo/matrix.hpp"

namespace geneo {

// A linear operator R^X -> R^Y given by its matrix in the indicator bases
// (column-vector convention: output = B * input), together with the group
// data: G = T.source() acting on X, K = T.target() acting on Y.
struct GeoProblem {
    Homomorphism T;
    Matrix B;

    GeoProblem(Homomorphism t, Matrix b) : T(std::move(t)), B(std::move(b)) {
        if (B.rows != T.target().degree() || B.cols != T.source().degree())
            throw ShapeMismatch("operator matrix must be |Y| x |X|");
    }

    int x_size() const { return T.source().degree(); }
    int y_size() const { return T.target().degree(); }
};

// Cell identity B(i,j) = B(T(g)(i), g(j)) on generators (sufficient by
// composition); additionally swept over every element when |G| <= 1000.
bool check_equivariance(const GeoProblem& p, double tol = 1e-9);

// If every row is a multiset permutation of the first row, returns that row.
std::optional<std::vector<double>> check_row_permutation(const Matrix& b, double tol = 1e-9);

struct SplitParts {
    Matrix plus;
    Matrix minus;
    std::optional<std::vector<double>> beta_plus;
    std::optional<std::vector<double>> beta_minus;
};

// Entry-wise positive/negative split: plus = max(B,0), minus = max(-B,0).
SplitParts split_pos_neg(const Matrix& b, double tol = 1e-9);

// Nonnegative weights on functions Y -> X, supported on at most rows*cols
// functions (the decomposition terms of one sign part).
using CoeffFn = std::map<FnYX, double>;

// Scales the part to a stochastic matrix, decomposes it, and returns
// row-sum * weight per selected function. Zero part -> empty map.
CoeffFn extract_coeffs(const Matrix& part, double tol = 1e-9);

// mu(h) = sum over f in O(h) of c(f) / |O(h)|: constant on orbits, mass
// preserved per orbit.
SignedMeasure orbit_average(const CoeffFn& c, const Homomorphism& t);

struct MeasureTriple {
    SignedMeasure mu_plus;
    SignedMeasure mu_minus;
    SignedMeasure mu;  // mu_plus - mu_minus
};

// Full pipeline: equivariance check, positive/negative split, coefficient
// extraction, orbit averaging. The result reproduces B and mu_plus/mu_minus
// are mutually singular permutant measures. Requires T(G) transitive on Y;
// otherwise throws NotTransitive (use split_by_target_orbits and represent
// each block).
MeasureTriple represent(const GeoProblem& p, double tol = 1e-9);

// psi(y) = sum_h phi(h(y)) mu(h)
std::vector<double> apply_measure(const SignedMeasure& mu, std::span<const double> phi);

// B = sum_h mu(h) R(h)
Matrix matrix_of_measure(const SignedMeasure& mu);

// max over rows of the row l1 norm: the inf->inf operator norm.
double operator_norm_inf(const Matrix& b);

// The sign pattern of the first row, sgn(0) = 0: a function of uniform norm
// <= 1 whose image attains the operator norm when rows are permutations of
// each other.
std::vector<double> norm_witness(const Matrix& b);

// Equivariant and total variation of the represented measure <= 1 (+tol);
// cross-checked against the operator norm of B.
std::pair<bool, MeasureTriple> is_geneo(const GeoProblem& p, double tol = 1e-9);

bool check_mutual_singularity(const MeasureTriple& t, double tol = 1e-9);

// One subproblem per T(G)-orbit of Y: rows restricted to the orbit, target
// group replaced by the restriction of T(G) to it (transitive by
// construction).
std::vector<GeoProblem> split_by_target_orbits(const GeoProblem& p, double tol = 1e-9);

}  // namespace geneo
