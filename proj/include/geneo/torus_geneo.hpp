#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "geneo/geo_repr.hpp"

namespace geneo {

bool is_prime(int p);

// Z_p x Z_p as an index set of p*p cells, with Z_p as the target line. All
// arithmetic is modulo the prime p.
struct PrimeTorus {
    int p;

    explicit PrimeTorus(int prime);

    int x_size() const { return p * p; }
    int cell_index(int a, int b) const { return a * p + b; }
};

// w with w.w = 1 (mod p). perp() = (-w2, w1) satisfies perp.w = 0 and
// perp.perp = 1.
struct UnitVector {
    int p;
    int w1;
    int w2;

    UnitVector(int prime, int a, int b);

    std::pair<int, int> perp() const { return {(p - w2) % p, w1}; }

    friend bool operator==(const UnitVector&, const UnitVector&) = default;
};

// All unit vectors of Z_p x Z_p in lexicographic order.
std::vector<UnitVector> unit_vectors(int p);

// p x p image on the torus, indexed (row, col).
struct TorusImage {
    int p = 0;
    std::vector<double> pix;

    TorusImage() = default;
    explicit TorusImage(int prime) : p(prime), pix(std::size_t(prime) * prime, 0.0) {}

    double& at(int r, int c) { return pix[std::size_t(r) * p + c]; }
    double at(int r, int c) const { return pix[std::size_t(r) * p + c]; }
};

// The translation-equivariant operator attached to a unit vector w: the
// uniform measure (value 1/p) on the family h^t(z) = z*w + t*perp(w),
// t in Z_p. Applying it takes line averages along direction perp(w); total
// variation is 1, so the operator is non-expansive.
class TorusGeneo {
  public:
    static TorusGeneo build(int p, UnitVector w);

    int p() const { return p_; }
    const UnitVector& unit() const { return w_; }
    const std::vector<FnYX>& family() const { return family_; }

    SignedMeasure measure() const;

  private:
    TorusGeneo(int p, UnitVector w) : p_(p), w_(w) {}

    int p_;
    UnitVector w_;
    std::vector<FnYX> family_;
};

// F(phi)(z) = (1/p) * sum_t phi(z*w + t*perp(w)), evaluated in closed form.
std::vector<double> apply(const TorusGeneo& geneo, const TorusImage& img);

// One row per unit vector of Z_p x Z_p, in unit_vectors(p) order.
Matrix stack_features(int p, const TorusImage& img);

// psi(q) = phi(q + v)
TorusImage toroidal_translate(const TorusImage& img, int v1, int v2);

// Each pixel is independently corrupted with probability `level`; corrupted
// pixels become lo or hi with probability 1/2 each. Draw order (SplitMix64
// seeded with `seed`): one uniform per pixel in row-major order, then one
// uniform per corrupted pixel in row-major order.
TorusImage salt_pepper(const TorusImage& img, double level, std::uint64_t seed, double lo = 0.0,
                       double hi = 1.0);

// Scales bytes to [0,1] and zero-pads with one extra row at the bottom and
// one extra column at the right.
TorusImage pad_to_prime(std::span<const std::uint8_t> raw, int rows, int cols, int p);
TorusImage pad_mnist(std::span<const std::uint8_t> raw28x28);

// Group-machinery bridges for cross-checking against the representation
// pipeline (practical only for small p: the operator matrix is p x p^2).
PermutationGroup torus_translation_group(int p);  // on p^2 cells, generated by the two unit steps
PermutationGroup line_translation_group(int p);   // on p points, generated by +1
Homomorphism torus_homomorphism(int p, const UnitVector& w);
GeoProblem torus_problem(const TorusGeneo& geneo);

}  // namespace geneo
