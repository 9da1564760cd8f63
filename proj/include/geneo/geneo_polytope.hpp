#pragma once

#include <span>
#include <vector>

#include "geneo/geo_repr.hpp"

namespace geneo {

// Basis of the space of permutant measures: one indicator measure nu_i per
// orbit O_i of the action on X^Y, together with the operator matrix of each.
// Orbit order (lexicographic representative) fixes the meaning of coefficient
// indices.
struct OrbitBasis {
    Homomorphism T;
    std::vector<Orbit> orbits;
    std::vector<SignedMeasure> nu;
    std::vector<Matrix> matrices;

    std::size_t size() const { return orbits.size(); }
};

OrbitBasis orbit_basis(const Homomorphism& t, std::size_t guard = default_orbit_guard);

// The coordinates of a permutant measure in the orbit basis: a_i is the
// common value of mu on O_i. Throws NotPermutant when mu is not constant on
// orbits.
std::vector<double> measure_coefficients(const SignedMeasure& mu, const OrbitBasis& basis);

// sum_i a_i nu_i as a measure.
SignedMeasure combine(std::span<const double> a, const OrbitBasis& basis);

// sum_i |a_i| * |O_i|: the total variation of sum_i a_i nu_i.
double weighted_l1(std::span<const double> a, const OrbitBasis& basis);

// Membership in the convex hull of { +/- F_{nu_i} / |O_i| }: weighted l1 <= 1.
bool is_linear_geneo_hull(std::span<const double> a, const OrbitBasis& basis, double tol = 1e-9);

// In the degree-3 symmetric-group setting with the identity homomorphism,
// verifies that the normalized operator of the transposition orbit is the
// convex combination (1/3, 2/3) of the normalized identity-orbit and
// 3-cycle-orbit operators, i.e. that it is not a vertex of the hull. Throws
// WrongSetting anywhere else.
bool check_redundancy_identity(const OrbitBasis& basis, double tol = 1e-12);

}  // namespace geneo
