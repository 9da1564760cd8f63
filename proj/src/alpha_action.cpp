#include "geneo/alpha_action.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace geneo {

FnYX act(const Permutation& g, const Permutation& image_of_g, const FnYX& h) {
    const Permutation tg_inv = image_of_g.inverse();
    FnYX r;
    r.values.resize(h.values.size());
    for (std::size_t i = 0; i < h.values.size(); ++i) r.values[i] = g(h.values[tg_inv(static_cast<int>(i))]);
    return r;
}

FnYX act(const Homomorphism& t, std::size_t g_index, const FnYX& h) {
    return act(t.source().element(g_index), t.image(g_index), h);
}

Orbit orbit_of(const FnYX& h, const Homomorphism& t) {
    if (h.source_size() != t.target().degree()) throw ShapeMismatch("function source does not match Y");
    for (int v : h.values)
        if (v < 0 || v >= t.source().degree()) throw ShapeMismatch("function value outside X");

    Orbit orbit;
    orbit.stabilizer_size = 0;
    for (std::size_t gi = 0; gi < t.source().order(); ++gi) {
        FnYX moved = act(t, gi, h);
        if (moved == h) ++orbit.stabilizer_size;
        orbit.members.push_back(std::move(moved));
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    orbit.members.erase(std::unique(orbit.members.begin(), orbit.members.end()), orbit.members.end());

    if (orbit.members.size() * static_cast<std::size_t>(orbit.stabilizer_size) != t.source().order())
        throw Error("orbit-stabilizer identity violated");  // cannot happen
    return orbit;
}

namespace {

// Lexicographic rank of the value array in 0..n^m-1.
std::size_t rank_of(const std::vector<int>& values, int n) {
    std::size_t r = 0;
    for (int v : values) r = r * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
    return r;
}

}  // namespace

std::vector<Orbit> all_orbits(const Homomorphism& t, std::size_t guard) {
    const int n = t.source().degree();
    const int m = t.target().degree();

    std::size_t total = 1;
    for (int i = 0; i < m; ++i) {
        if (total > guard / static_cast<std::size_t>(n)) throw DomainTooLarge("|X|^|Y| exceeds the orbit guard");
        total *= static_cast<std::size_t>(n);
    }
    if (total > guard) throw DomainTooLarge("|X|^|Y| exceeds the orbit guard");

    std::vector<bool> visited(total, false);
    std::vector<Orbit> orbits;
    FnYX h;
    h.values.assign(m, 0);
    for (std::size_t r = 0; r < total; ++r) {
        if (!visited[r]) {
            Orbit orbit = orbit_of(h, t);
            for (const auto& member : orbit.members) visited[rank_of(member.values, n)] = true;
            orbits.push_back(std::move(orbit));
        }
        // odometer step to the next function in lexicographic order
        for (int i = m - 1; i >= 0; --i) {
            if (++h.values[i] < n) break;
            h.values[i] = 0;
        }
    }
    return orbits;
}

double SignedMeasure::total_variation() const {
    double tv = 0.0;
    for (const auto& [h, v] : values) tv += std::abs(v);
    return tv;
}

SignedMeasure subtract(const SignedMeasure& a, const SignedMeasure& b) {
    if (a.x_size != b.x_size || a.y_size != b.y_size) throw ShapeMismatch("measures live on different domains");
    SignedMeasure out;
    out.x_size = a.x_size;
    out.y_size = a.y_size;
    out.values = a.values;
    for (const auto& [h, v] : b.values) {
        double& slot = out.values[h];
        slot -= v;
        if (slot == 0.0) out.values.erase(h);
    }
    return out;
}

bool is_permutant(const SignedMeasure& mu, const Homomorphism& t, double tol) {
    if (mu.x_size != t.source().degree() || mu.y_size != t.target().degree())
        throw ShapeMismatch("measure domain does not match the action");
    const auto& gens = t.source().generators();
    const auto& images = t.generator_images();
    for (const auto& [h, v] : mu.values) {
        for (std::size_t s = 0; s < gens.size(); ++s) {
            if (std::abs(mu.at(act(gens[s], images[s], h)) - v) > tol) return false;
        }
    }
    return true;
}

}  // namespace geneo
