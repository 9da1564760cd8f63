#include "geneo/torus_geneo.hpp"

#include <algorithm>
#include <string>

#include "geneo/rng.hpp"

namespace geneo {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

PrimeTorus::PrimeTorus(int prime) : p(prime) {
    if (!is_prime(prime)) throw NotPrime(std::to_string(prime) + " is not prime");
}

UnitVector::UnitVector(int prime, int a, int b) : p(prime), w1(a), w2(b) {
    if (!is_prime(prime)) throw NotPrime(std::to_string(prime) + " is not prime");
    if (w1 < 0 || w1 >= p || w2 < 0 || w2 >= p) throw InvalidArgument("unit vector coordinates must be reduced mod p");
    if ((w1 * w1 + w2 * w2) % p != 1) throw InvalidArgument("vector does not have unit length mod p");
}

std::vector<UnitVector> unit_vectors(int p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    std::vector<UnitVector> out;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            if ((a * a + b * b) % p == 1) out.push_back(UnitVector(p, a, b));
    return out;
}

TorusGeneo TorusGeneo::build(int p, UnitVector w) {
    if (w.p != p) throw ShapeMismatch("unit vector belongs to a different torus");
    const PrimeTorus torus(p);
    const auto [q1, q2] = w.perp();

    TorusGeneo geneo(p, w);
    geneo.family_.reserve(p);
    for (int t = 0; t < p; ++t) {
        FnYX h;
        h.values.resize(p);
        for (int z = 0; z < p; ++z)
            h.values[z] = torus.cell_index((z * w.w1 + t * q1) % p, (z * w.w2 + t * q2) % p);
        geneo.family_.push_back(std::move(h));
    }

    std::vector<FnYX> sorted = geneo.family_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvarianceViolation("family members are not distinct");

    // g_v ∘ h^t ∘ T(g_v)^{-1} must land back in the family; checking the two
    // generating translations suffices.
    for (const auto v : {std::pair{1, 0}, std::pair{0, 1}}) {
        const int shift = (v.first * w.w1 + v.second * w.w2) % p;
        for (int t = 0; t < p; ++t) {
            FnYX moved;
            moved.values.resize(p);
            for (int z = 0; z < p; ++z) {
                const int cell = geneo.family_[t].values[(z - shift + p) % p];
                moved.values[z] = torus.cell_index(((cell / p) + v.first) % p, ((cell % p) + v.second) % p);
            }
            if (!std::binary_search(sorted.begin(), sorted.end(), moved))
                throw InvarianceViolation("family is not closed under the twisted action");
        }
    }
    return geneo;
}

SignedMeasure TorusGeneo::measure() const {
    SignedMeasure mu;
    mu.x_size = p_ * p_;
    mu.y_size = p_;
    mu.permutant = true;
    for (const auto& h : family_) mu.values[h] = 1.0 / static_cast<double>(p_);
    return mu;
}

std::vector<double> apply(const TorusGeneo& geneo, const TorusImage& img) {
    const int p = geneo.p();
    if (img.p != p) throw ShapeMismatch("image size does not match the torus");
    std::vector<double> out(p, 0.0);
    for (int z = 0; z < p; ++z) {
        double sum = 0.0;
        for (int t = 0; t < p; ++t) sum += img.pix[geneo.family()[t].values[z]];
        out[z] = sum / static_cast<double>(p);
    }
    return out;
}

Matrix stack_features(int p, const TorusImage& img) {
    if (img.p != p) throw ShapeMismatch("image size does not match the torus");
    const auto units = unit_vectors(p);
    Matrix features(static_cast<int>(units.size()), p);
    for (std::size_t u = 0; u < units.size(); ++u) {
        const auto row = apply(TorusGeneo::build(p, units[u]), img);
        for (int z = 0; z < p; ++z) features(static_cast<int>(u), z) = row[z];
    }
    return features;
}

TorusImage toroidal_translate(const TorusImage& img, int v1, int v2) {
    const int p = img.p;
    const int a = ((v1 % p) + p) % p;
    const int b = ((v2 % p) + p) % p;
    TorusImage out(p);
    for (int r = 0; r < p; ++r)
        for (int c = 0; c < p; ++c) out.at(r, c) = img.at((r + a) % p, (c + b) % p);
    return out;
}

TorusImage salt_pepper(const TorusImage& img, double level, std::uint64_t seed, double lo, double hi) {
    if (level < 0.0 || level > 1.0) throw InvalidArgument("noise level must lie in [0, 1]");
    SplitMix64 rng(seed);
    TorusImage out = img;
    std::vector<std::size_t> corrupted;
    for (std::size_t k = 0; k < out.pix.size(); ++k)
        if (rng.next_double() < level) corrupted.push_back(k);
    for (std::size_t k : corrupted) out.pix[k] = rng.next_double() < 0.5 ? lo : hi;
    return out;
}

TorusImage pad_to_prime(std::span<const std::uint8_t> raw, int rows, int cols, int p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    if (rows > p || cols > p) throw ShapeMismatch("image does not fit the torus");
    if (raw.size() != static_cast<std::size_t>(rows) * cols) throw ShapeMismatch("byte count does not match shape");
    TorusImage out(p);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) out.at(r, c) = raw[std::size_t(r) * cols + c] / 255.0;
    return out;
}

TorusImage pad_mnist(std::span<const std::uint8_t> raw28x28) { return pad_to_prime(raw28x28, 28, 28, 29); }

PermutationGroup torus_translation_group(int p) {
    const PrimeTorus torus(p);
    auto translation = [&](int v1, int v2) {
        std::vector<int> img(torus.x_size());
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) img[torus.cell_index(a, b)] = torus.cell_index((a + v1) % p, (b + v2) % p);
        return Permutation(std::move(img));
    };
    return PermutationGroup::closure(torus.x_size(), {translation(1, 0), translation(0, 1)});
}

PermutationGroup line_translation_group(int p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    return cyclic_group(p);
}

Homomorphism torus_homomorphism(int p, const UnitVector& w) {
    if (w.p != p) throw ShapeMismatch("unit vector belongs to a different torus");
    PermutationGroup g = torus_translation_group(p);
    PermutationGroup k = line_translation_group(p);
    auto line_shift = [&](int c) {
        std::vector<int> img(p);
        for (int z = 0; z < p; ++z) img[z] = (z + c) % p;
        return Permutation(std::move(img));
    };
    // generators of G are the unit steps (1,0) and (0,1); T(g_v) = k_{v.w}
    std::vector<Permutation> images{line_shift(w.w1 % p), line_shift(w.w2 % p)};
    return Homomorphism::build(std::move(g), std::move(k), std::move(images));
}

GeoProblem torus_problem(const TorusGeneo& geneo) {
    return GeoProblem(torus_homomorphism(geneo.p(), geneo.unit()), matrix_of_measure(geneo.measure()));
}

}  // namespace geneo
