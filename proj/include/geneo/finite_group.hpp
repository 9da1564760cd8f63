#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "geneo/errors.hpp"

namespace geneo {

// A finite set: elements are the indices 0..size-1 and nothing else.
// (Wire formats and the API are 0-based; prose counts from 1.)
struct FiniteSet {
    int size = 0;

    explicit FiniteSet(int n) : size(n) {
        if (n < 1) throw ShapeMismatch("finite set must have at least one element");
    }
};

// Bijection of 0..n-1; image()[j] is where j goes.
class Permutation {
  public:
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int degree);

    int degree() const { return static_cast<int>(image_.size()); }
    int operator()(int j) const { return image_[j]; }
    const std::vector<int>& image() const { return image_; }

    // (*this ∘ rhs)(j) = (*this)(rhs(j))
    Permutation compose(const Permutation& rhs) const;
    Permutation inverse() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

  private:
    std::vector<int> image_;
};

Permutation transposition(int degree, int a, int b);
// j -> j+1 (mod degree)
Permutation cycle_shift(int degree);

struct IntVectorHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (int x : v) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

// Explicit finite permutation group: the full element list is materialized by
// closure over the generators. Element order is deterministic: breadth-first
// by generator word length, ties broken by lexicographic image array, so
// serialized artifacts and fixtures are stable. elements()[0] is the identity.
class PermutationGroup {
  public:
    static constexpr std::size_t default_max_elements = 1000000;

    static PermutationGroup closure(int degree, std::vector<Permutation> generators,
                                    std::size_t max_elements = default_max_elements);

    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const Permutation& element(std::size_t i) const { return elements_[i]; }
    const std::vector<Permutation>& generators() const { return generators_; }
    std::size_t identity_index() const { return 0; }

    // -1 when absent
    std::ptrdiff_t index_of(const Permutation& p) const;
    bool contains(const Permutation& p) const { return index_of(p) >= 0; }

  private:
    PermutationGroup() = default;

    int degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::unordered_map<std::vector<int>, int, IntVectorHash> index_;
};

PermutationGroup trivial_group(int degree);
PermutationGroup cyclic_group(int degree);
PermutationGroup symmetric_group(int degree);

bool is_transitive(const PermutationGroup& g, FiniteSet on);
// Orbits of 0..on.size-1 under the group; blocks sorted by smallest member.
std::vector<std::vector<int>> orbit_partition(const PermutationGroup& g, FiniteSet on);

// Verified element-wise map T: G -> K. Construction extends the generator
// images along the Cayley graph of G and rejects any inconsistency, then
// re-checks multiplicativity on all pairs (|G| <= 1000) or on 10^4 sampled
// pairs. The map is never trusted unchecked.
class Homomorphism {
  public:
    static Homomorphism build(PermutationGroup source, PermutationGroup target,
                              std::vector<Permutation> generator_images);

    const PermutationGroup& source() const { return source_; }
    const PermutationGroup& target() const { return target_; }

    int image_index(std::size_t source_element) const { return table_[source_element]; }
    const Permutation& image(std::size_t source_element) const { return target_.element(table_[source_element]); }
    const std::vector<Permutation>& generator_images() const { return generator_images_; }

  private:
    Homomorphism() = default;

    PermutationGroup source_;
    PermutationGroup target_;
    std::vector<Permutation> generator_images_;
    std::vector<int> table_;  // source element index -> target element index
};

Homomorphism identity_homomorphism(const PermutationGroup& g);
Homomorphism trivial_homomorphism(PermutationGroup source, PermutationGroup target);

// Orbits of the target carrier under the image subgroup T(G).
std::vector<std::vector<int>> image_orbit_partition(const Homomorphism& t);
bool image_is_transitive(const Homomorphism& t);

}  // namespace geneo
