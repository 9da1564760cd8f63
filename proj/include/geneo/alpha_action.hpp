#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "geneo/finite_group.hpp"

namespace geneo {

// A function h: Y -> X between finite sets, stored as values[i] = h(y_i).
// Total order is lexicographic on the value array.
struct FnYX {
    std::vector<int> values;

    int source_size() const { return static_cast<int>(values.size()); }

    friend bool operator==(const FnYX&, const FnYX&) = default;
    friend auto operator<=>(const FnYX&, const FnYX&) = default;
};

// Twisted conjugation: (g, h) -> g ∘ h ∘ T(g)^{-1}.
FnYX act(const Permutation& g, const Permutation& image_of_g, const FnYX& h);
FnYX act(const Homomorphism& t, std::size_t g_index, const FnYX& h);

struct Orbit {
    std::vector<FnYX> members;  // sorted ascending
    int stabilizer_size = 0;

    const FnYX& representative() const { return members.front(); }
    std::size_t size() const { return members.size(); }
};

// Sweeps the whole group; asserts |stabilizer| * |orbit| = |G|.
Orbit orbit_of(const FnYX& h, const Homomorphism& t);

inline constexpr std::size_t default_orbit_guard = 10000000;

// Partition of all |X|^|Y| functions into orbits, ordered by representative.
std::vector<Orbit> all_orbits(const Homomorphism& t, std::size_t guard = default_orbit_guard);

// Sparse signed measure on X^Y; absent keys carry value 0. `permutant` marks
// measures known to be constant on each orbit of the action with support a
// union of full orbits (set by the constructions that guarantee it, or after
// an explicit is_permutant check).
struct SignedMeasure {
    int x_size = 0;  // |X|
    int y_size = 0;  // |Y|
    std::map<FnYX, double> values;
    bool permutant = false;

    double at(const FnYX& h) const {
        auto it = values.find(h);
        return it == values.end() ? 0.0 : it->second;
    }

    double total_variation() const;
};

SignedMeasure subtract(const SignedMeasure& a, const SignedMeasure& b);

// Checks invariance of the measure under the action on generators of G
// (sufficient by closure), comparing values with the given tolerance.
bool is_permutant(const SignedMeasure& mu, const Homomorphism& t, double tol = 1e-9);

}  // namespace geneo
