#include "geneo/geo_repr.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "geneo/stochastic_decomp.hpp"

namespace geneo {

namespace {

bool cell_identity_holds(const Matrix& b, const Permutation& g, const Permutation& tg, double tol) {
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j)
            if (std::abs(b(i, j) - b(tg(i), g(j))) > tol) return false;
    return true;
}

}  // namespace

bool check_equivariance(const GeoProblem& p, double tol) {
    const auto& gens = p.T.source().generators();
    const auto& images = p.T.generator_images();
    for (std::size_t s = 0; s < gens.size(); ++s)
        if (!cell_identity_holds(p.B, gens[s], images[s], tol)) return false;
    if (p.T.source().order() <= 1000) {
        for (std::size_t gi = 0; gi < p.T.source().order(); ++gi)
            if (!cell_identity_holds(p.B, p.T.source().element(gi), p.T.image(gi), tol)) return false;
    }
    return true;
}

std::optional<std::vector<double>> check_row_permutation(const Matrix& b, double tol) {
    if (b.rows == 0 || b.cols == 0) return std::nullopt;
    std::vector<double> beta(b.cols);
    for (int j = 0; j < b.cols; ++j) beta[j] = b(0, j);

    std::vector<double> first_sorted = beta;
    std::sort(first_sorted.begin(), first_sorted.end());
    std::vector<double> row(b.cols);
    for (int i = 1; i < b.rows; ++i) {
        for (int j = 0; j < b.cols; ++j) row[j] = b(i, j);
        std::sort(row.begin(), row.end());
        for (int j = 0; j < b.cols; ++j)
            if (std::abs(row[j] - first_sorted[j]) > tol) return std::nullopt;
    }
    return beta;
}

SplitParts split_pos_neg(const Matrix& b, double tol) {
    SplitParts parts;
    parts.plus = Matrix(b.rows, b.cols);
    parts.minus = Matrix(b.rows, b.cols);
    for (std::size_t k = 0; k < b.data.size(); ++k) {
        parts.plus.data[k] = std::max(b.data[k], 0.0);
        parts.minus.data[k] = std::max(-b.data[k], 0.0);
    }
    parts.beta_plus = check_row_permutation(parts.plus, tol);
    parts.beta_minus = check_row_permutation(parts.minus, tol);
    return parts;
}

CoeffFn extract_coeffs(const Matrix& part, double tol) {
    for (double v : part.data)
        if (v < -tol) throw NotStochastic("sign part must be nonnegative");
    if (part.rows == 0) return {};

    const double scale = row_sum(part, 0);
    for (int i = 1; i < part.rows; ++i)
        if (std::abs(row_sum(part, i) - scale) > tol)
            throw UnequalRowSums("rows of the sign part have different sums");
    if (scale <= tol) return {};  // zero operator contributes nothing

    Matrix scaled = part;
    for (double& v : scaled.data) v /= scale;
    CoeffFn coeffs;
    for (const auto& term : decompose_stochastic(std::move(scaled), tol).terms)
        coeffs[FnYX{term.perm.row_choice}] += scale * term.weight;
    return coeffs;
}

SignedMeasure orbit_average(const CoeffFn& c, const Homomorphism& t) {
    SignedMeasure mu;
    mu.x_size = t.source().degree();
    mu.y_size = t.target().degree();
    mu.permutant = true;

    std::set<FnYX> absorbed;
    for (const auto& [h, weight] : c) {
        if (absorbed.count(h)) continue;
        const Orbit orbit = orbit_of(h, t);
        double orbit_mass = 0.0;
        for (const auto& member : orbit.members) {
            auto it = c.find(member);
            if (it != c.end()) {
                orbit_mass += it->second;
                absorbed.insert(member);
            }
        }
        const double value = orbit_mass / static_cast<double>(orbit.size());
        for (const auto& member : orbit.members) mu.values[member] = value;
    }
    return mu;
}

MeasureTriple represent(const GeoProblem& p, double tol) {
    if (!check_equivariance(p, tol)) throw NotEquivariant("matrix is not equivariant for the given actions");
    if (!image_is_transitive(p.T))
        throw NotTransitive("T(G) does not act transitively on Y; split_by_target_orbits first");

    const SplitParts parts = split_pos_neg(p.B, tol);
    MeasureTriple triple;
    triple.mu_plus = orbit_average(extract_coeffs(parts.plus, tol), p.T);
    triple.mu_minus = orbit_average(extract_coeffs(parts.minus, tol), p.T);
    triple.mu = subtract(triple.mu_plus, triple.mu_minus);
    triple.mu.permutant = true;

    if (max_abs_diff(matrix_of_measure(triple.mu), p.B) > tol)
        throw Error("represented measure fails to reproduce the matrix");
    if (!check_mutual_singularity(triple, tol))
        throw Error("positive and negative measures are not mutually singular");
    return triple;
}

std::vector<double> apply_measure(const SignedMeasure& mu, std::span<const double> phi) {
    if (static_cast<int>(phi.size()) != mu.x_size) throw ShapeMismatch("function length does not match |X|");
    std::vector<double> psi(mu.y_size, 0.0);
    for (const auto& [h, v] : mu.values)
        for (int i = 0; i < mu.y_size; ++i) psi[i] += phi[h.values[i]] * v;
    return psi;
}

Matrix matrix_of_measure(const SignedMeasure& mu) {
    Matrix b(mu.y_size, mu.x_size);
    for (const auto& [h, v] : mu.values)
        for (int i = 0; i < mu.y_size; ++i) b(i, h.values[i]) += v;
    return b;
}

double operator_norm_inf(const Matrix& b) {
    double norm = 0.0;
    for (int i = 0; i < b.rows; ++i) norm = std::max(norm, row_abs_sum(b, i));
    return norm;
}

std::vector<double> norm_witness(const Matrix& b) {
    std::vector<double> phi(b.cols, 0.0);
    for (int j = 0; j < b.cols; ++j) {
        if (b(0, j) > 0.0) phi[j] = 1.0;
        else if (b(0, j) < 0.0) phi[j] = -1.0;
    }
    return phi;
}

std::pair<bool, MeasureTriple> is_geneo(const GeoProblem& p, double tol) {
    MeasureTriple triple = represent(p, tol);
    const double tv = triple.mu.total_variation();
    const double norm = operator_norm_inf(p.B);
    if (std::abs(tv - norm) > tol)
        throw Error("total variation does not match the operator norm");
    return {tv <= 1.0 + tol, std::move(triple)};
}

bool check_mutual_singularity(const MeasureTriple& t, double tol) {
    for (const auto& [h, v] : t.mu_plus.values)
        if (v > tol && t.mu_minus.at(h) > tol) return false;
    return true;
}

std::vector<GeoProblem> split_by_target_orbits(const GeoProblem& p, double tol) {
    if (!check_equivariance(p, tol)) throw NotEquivariant("matrix is not equivariant for the given actions");

    const auto blocks = image_orbit_partition(p.T);
    if (blocks.size() == 1) return {p};

    std::vector<GeoProblem> subproblems;
    for (const auto& block : blocks) {
        const int size = static_cast<int>(block.size());
        std::vector<int> local(p.y_size(), -1);
        for (int l = 0; l < size; ++l) local[block[l]] = l;

        std::vector<Permutation> restricted;
        for (const auto& k : p.T.generator_images()) {
            std::vector<int> img(size);
            for (int l = 0; l < size; ++l) img[l] = local[k(block[l])];
            restricted.emplace_back(std::move(img));
        }
        PermutationGroup target = PermutationGroup::closure(size, restricted);
        Homomorphism t = Homomorphism::build(p.T.source(), std::move(target), std::move(restricted));

        Matrix b(size, p.x_size());
        for (int l = 0; l < size; ++l)
            for (int j = 0; j < p.x_size(); ++j) b(l, j) = p.B(block[l], j);
        subproblems.emplace_back(std::move(t), std::move(b));
    }
    return subproblems;
}

}  // namespace geneo
