#include "geneo/finite_group.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "geneo/rng.hpp"

namespace geneo {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = degree();
    if (n < 1) throw ShapeMismatch("permutation must have degree >= 1");
    std::vector<char> seen(n, 0);
    for (int v : image_) {
        if (v < 0 || v >= n) throw ShapeMismatch("permutation image out of range");
        if (seen[v]) throw ShapeMismatch("permutation image is not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = i;
    return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& rhs) const {
    if (degree() != rhs.degree()) throw ShapeMismatch("composing permutations of different degree");
    std::vector<int> img(degree());
    for (int j = 0; j < degree(); ++j) img[j] = image_[rhs.image_[j]];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(degree());
    for (int j = 0; j < degree(); ++j) img[image_[j]] = j;
    return Permutation(std::move(img));
}

Permutation transposition(int degree, int a, int b) {
    auto img = Permutation::identity(degree).image();
    std::swap(img[a], img[b]);
    return Permutation(std::move(img));
}

Permutation cycle_shift(int degree) {
    std::vector<int> img(degree);
    for (int j = 0; j < degree; ++j) img[j] = (j + 1) % degree;
    return Permutation(std::move(img));
}

PermutationGroup PermutationGroup::closure(int degree, std::vector<Permutation> generators,
                                           std::size_t max_elements) {
    if (degree < 1) throw ShapeMismatch("group carrier must have at least one element");
    for (const auto& g : generators)
        if (g.degree() != degree) throw ShapeMismatch("generator degree does not match carrier");

    PermutationGroup group;
    group.degree_ = degree;
    group.generators_ = std::move(generators);

    std::unordered_set<std::vector<int>, IntVectorHash> seen;
    auto push = [&](std::vector<Permutation>& out, Permutation p) {
        if (seen.insert(p.image()).second) out.push_back(std::move(p));
    };

    std::vector<Permutation> frontier;
    push(frontier, Permutation::identity(degree));
    while (!frontier.empty()) {
        if (group.elements_.size() + frontier.size() > max_elements)
            throw GroupTooLarge("group closure exceeds " + std::to_string(max_elements) + " elements");
        std::sort(frontier.begin(), frontier.end());
        std::vector<Permutation> next;
        for (const auto& e : frontier) {
            for (const auto& g : group.generators_) push(next, e.compose(g));
        }
        for (auto& e : frontier) group.elements_.push_back(std::move(e));
        frontier = std::move(next);
    }

    group.index_.reserve(group.elements_.size());
    for (std::size_t i = 0; i < group.elements_.size(); ++i)
        group.index_.emplace(group.elements_[i].image(), static_cast<int>(i));
    return group;
}

std::ptrdiff_t PermutationGroup::index_of(const Permutation& p) const {
    auto it = index_.find(p.image());
    return it == index_.end() ? -1 : it->second;
}

PermutationGroup trivial_group(int degree) { return PermutationGroup::closure(degree, {}); }

PermutationGroup cyclic_group(int degree) {
    if (degree == 1) return trivial_group(1);
    return PermutationGroup::closure(degree, {cycle_shift(degree)});
}

PermutationGroup symmetric_group(int degree) {
    if (degree == 1) return trivial_group(1);
    std::vector<Permutation> gens{transposition(degree, 0, 1)};
    if (degree > 2) gens.push_back(cycle_shift(degree));
    return PermutationGroup::closure(degree, std::move(gens));
}

namespace {

std::vector<std::vector<int>> partition_by_generators(const std::vector<Permutation>& gens, int size) {
    std::vector<int> block_of(size, -1);
    std::vector<std::vector<int>> blocks;
    for (int start = 0; start < size; ++start) {
        if (block_of[start] >= 0) continue;
        std::vector<int> block{start};
        block_of[start] = static_cast<int>(blocks.size());
        for (std::size_t q = 0; q < block.size(); ++q) {
            for (const auto& g : gens) {
                int y = g(block[q]);
                if (block_of[y] < 0) {
                    block_of[y] = static_cast<int>(blocks.size());
                    block.push_back(y);
                }
            }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return blocks;
}

}  // namespace

bool is_transitive(const PermutationGroup& g, FiniteSet on) {
    if (g.degree() != on.size) throw ShapeMismatch("group does not act on a set of this size");
    return orbit_partition(g, on).size() == 1;
}

std::vector<std::vector<int>> orbit_partition(const PermutationGroup& g, FiniteSet on) {
    if (g.degree() != on.size) throw ShapeMismatch("group does not act on a set of this size");
    return partition_by_generators(g.generators(), on.size);
}

Homomorphism Homomorphism::build(PermutationGroup source, PermutationGroup target,
                                 std::vector<Permutation> generator_images) {
    if (generator_images.size() != source.generators().size())
        throw InconsistentHomomorphism("one image per source generator is required");
    for (const auto& k : generator_images) {
        if (k.degree() != target.degree()) throw ShapeMismatch("generator image degree does not match target");
        if (!target.contains(k)) throw InconsistentHomomorphism("generator image does not belong to the target group");
    }

    Homomorphism t;
    t.source_ = std::move(source);
    t.target_ = std::move(target);
    t.generator_images_ = std::move(generator_images);

    const auto& G = t.source_;
    const auto& K = t.target_;
    const std::size_t n_gens = G.generators().size();

    // Walk the Cayley graph in the group's stored (BFS) element order. Every
    // edge g -> g*s either defines the image or must agree with it; agreement
    // on all edges is exactly the homomorphism property.
    t.table_.assign(G.order(), -1);
    t.table_[G.identity_index()] = static_cast<int>(K.identity_index());
    for (std::size_t i = 0; i < G.order(); ++i) {
        if (t.table_[i] < 0)
            throw InconsistentHomomorphism("source element unreachable from generators");  // cannot happen
        for (std::size_t s = 0; s < n_gens; ++s) {
            const std::ptrdiff_t product = G.index_of(G.element(i).compose(G.generators()[s]));
            const std::ptrdiff_t image =
                K.index_of(K.element(t.table_[i]).compose(t.generator_images_[s]));
            if (product < 0 || image < 0) throw InconsistentHomomorphism("closure lookup failed");
            if (t.table_[product] < 0)
                t.table_[product] = static_cast<int>(image);
            else if (t.table_[product] != image)
                throw InconsistentHomomorphism("generator images are inconsistent along group relations");
        }
    }

    auto check_pair = [&](std::size_t a, std::size_t b) {
        const std::ptrdiff_t ab = G.index_of(G.element(a).compose(G.element(b)));
        const std::ptrdiff_t im = K.index_of(K.element(t.table_[a]).compose(K.element(t.table_[b])));
        if (t.table_[ab] != im)
            throw InconsistentHomomorphism("map is not multiplicative");
    };
    if (G.order() <= 1000) {
        for (std::size_t a = 0; a < G.order(); ++a)
            for (std::size_t b = 0; b < G.order(); ++b) check_pair(a, b);
    } else {
        SplitMix64 rng(0x5eed5eed5eed5eedULL);
        for (int k = 0; k < 10000; ++k)
            check_pair(static_cast<std::size_t>(rng.next_below(G.order())),
                       static_cast<std::size_t>(rng.next_below(G.order())));
    }
    return t;
}

Homomorphism identity_homomorphism(const PermutationGroup& g) {
    return Homomorphism::build(g, g, g.generators());
}

Homomorphism trivial_homomorphism(PermutationGroup source, PermutationGroup target) {
    std::vector<Permutation> images(source.generators().size(), Permutation::identity(target.degree()));
    return Homomorphism::build(std::move(source), std::move(target), std::move(images));
}

std::vector<std::vector<int>> image_orbit_partition(const Homomorphism& t) {
    if (t.generator_images().empty()) {
        // T(G) is trivial; every point is its own orbit.
        std::vector<std::vector<int>> blocks;
        for (int y = 0; y < t.target().degree(); ++y) blocks.push_back({y});
        return blocks;
    }
    return partition_by_generators(t.generator_images(), t.target().degree());
}

bool image_is_transitive(const Homomorphism& t) { return image_orbit_partition(t).size() == 1; }

}  // namespace geneo
