#include "geneo/geneo_polytope.hpp"

#include <cmath>

namespace geneo {

OrbitBasis orbit_basis(const Homomorphism& t, std::size_t guard) {
    OrbitBasis basis{t, all_orbits(t, guard), {}, {}};
    basis.nu.reserve(basis.orbits.size());
    basis.matrices.reserve(basis.orbits.size());
    for (const auto& orbit : basis.orbits) {
        SignedMeasure nu;
        nu.x_size = t.source().degree();
        nu.y_size = t.target().degree();
        nu.permutant = true;
        for (const auto& member : orbit.members) nu.values[member] = 1.0;
        basis.matrices.push_back(matrix_of_measure(nu));
        basis.nu.push_back(std::move(nu));
    }
    return basis;
}

std::vector<double> measure_coefficients(const SignedMeasure& mu, const OrbitBasis& basis) {
    if (mu.x_size != basis.T.source().degree() || mu.y_size != basis.T.target().degree())
        throw ShapeMismatch("measure domain does not match the basis");
    if (!mu.permutant && !is_permutant(mu, basis.T))
        throw NotPermutant("measure is not constant on orbits");

    std::vector<double> a(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) a[i] = mu.at(basis.orbits[i].representative());
    return a;
}

SignedMeasure combine(std::span<const double> a, const OrbitBasis& basis) {
    if (a.size() != basis.size()) throw ShapeMismatch("coefficient count does not match basis size");
    SignedMeasure mu;
    mu.x_size = basis.T.source().degree();
    mu.y_size = basis.T.target().degree();
    mu.permutant = true;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (a[i] == 0.0) continue;
        for (const auto& member : basis.orbits[i].members) mu.values[member] = a[i];
    }
    return mu;
}

double weighted_l1(std::span<const double> a, const OrbitBasis& basis) {
    if (a.size() != basis.size()) throw ShapeMismatch("coefficient count does not match basis size");
    double w = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i)
        w += std::abs(a[i]) * static_cast<double>(basis.orbits[i].size());
    return w;
}

bool is_linear_geneo_hull(std::span<const double> a, const OrbitBasis& basis, double tol) {
    return weighted_l1(a, basis) <= 1.0 + tol;
}

bool check_redundancy_identity(const OrbitBasis& basis, double tol) {
    const auto& G = basis.T.source();
    const auto& K = basis.T.target();
    if (G.degree() != 3 || K.degree() != 3 || G.order() != 6 || K.order() != 6)
        throw WrongSetting("expects the full degree-3 symmetric group on both sides");
    for (std::size_t gi = 0; gi < G.order(); ++gi)
        if (!(basis.T.image(gi) == G.element(gi)))
            throw WrongSetting("expects the identity homomorphism");

    auto find = [&](const std::vector<int>& rep) -> std::ptrdiff_t {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis.orbits[i].representative().values == rep) return static_cast<std::ptrdiff_t>(i);
        return -1;
    };
    const std::ptrdiff_t identity_orbit = find({0, 1, 2});
    const std::ptrdiff_t cycle_orbit = find({1, 2, 0});
    const std::ptrdiff_t transposition_orbit = find({0, 2, 1});
    if (identity_orbit < 0 || cycle_orbit < 0 || transposition_orbit < 0)
        throw WrongSetting("bijection orbits not found in the basis");
    if (basis.orbits[identity_orbit].size() != 1 || basis.orbits[cycle_orbit].size() != 2 ||
        basis.orbits[transposition_orbit].size() != 3)
        throw WrongSetting("bijection orbits have unexpected sizes");

    const Matrix& m1 = basis.matrices[identity_orbit];
    const Matrix& m2 = basis.matrices[cycle_orbit];
    const Matrix& m3 = basis.matrices[transposition_orbit];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double lhs = m3(i, j) / 3.0;
            const double rhs = (1.0 / 3.0) * m1(i, j) + (2.0 / 3.0) * (m2(i, j) / 2.0);
            if (std::abs(lhs - rhs) > tol) return false;
        }
    return true;
}

}  // namespace geneo
