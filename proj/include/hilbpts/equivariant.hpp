#pragma once

// Torus-fixed points of Hilb^n(C²), Hilb^n(P²) and the punctual locus, and
// the Bialynicki-Birula cell dimensions that turn them into Betti numbers.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilbpts/error.hpp"
#include "hilbpts/partition.hpp"
#include "hilbpts/poincare.hpp"

namespace hilb {

/// Character a·ε₁ + b·ε₂ of the two-dimensional torus.
struct CharVector {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend CharVector operator+(CharVector l, CharVector r) noexcept { return {l.a + r.a, l.b + r.b}; }
    friend CharVector operator-(CharVector l, CharVector r) noexcept { return {l.a - r.a, l.b - r.b}; }
    friend CharVector operator*(std::int64_t k, CharVector v) noexcept { return {k * v.a, k * v.b}; }
    friend auto operator<=>(const CharVector&, const CharVector&) = default;

    std::string to_string() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

inline std::int64_t pairing(CharVector rho, CharVector w) noexcept { return rho.a * w.a + rho.b * w.b; }

using TangentWeightList = std::vector<CharVector>;

/// Tangent weights at the monomial ideal λ in a chart whose coordinates
/// carry weights (u, v): per box, (arm+1)·u − leg·v and −arm·u + (leg+1)·v.
inline TangentWeightList tangent_weights(const Partition& lambda, CharVector u, CharVector v) {
    if (u.a * v.b - u.b * v.a == 0)
        throw invalid_input("degenerate chart");
    TangentWeightList out;
    out.reserve(2 * static_cast<std::size_t>(lambda.size()));
    for (const Box& b : lambda.boxes()) {
        const std::int64_t a = arm(lambda, b);
        const std::int64_t l = leg(lambda, b);
        out.push_back((a + 1) * u - l * v);
        out.push_back((-a) * u + (l + 1) * v);
    }
    return out;
}

/// First weight pairing to zero with rho, if any.
inline std::optional<CharVector> find_wall(const TangentWeightList& weights, CharVector rho) {
    for (const CharVector& w : weights)
        if (pairing(rho, w) == 0)
            return w;
    return std::nullopt;
}

/// Attracting-cell dimension: number of weights pairing NEGATIVELY with rho.
inline int cell_dimension(const TangentWeightList& weights, CharVector rho) {
    int negative = 0;
    for (const CharVector& w : weights) {
        const std::int64_t p = pairing(rho, w);
        if (p == 0)
            throw invalid_input("non-generic one-parameter subgroup: weight " + w.to_string() +
                                " pairs to zero with rho " + rho.to_string());
        if (p < 0)
            ++negative;
    }
    return negative;
}

/// A Poincaré polynomial together with the one-parameter subgroup used and
/// the number of automatic retries needed to reach a generic one.
struct BettiResult {
    PoincarePoly poly;
    CharVector rho;
    int retries = 0;
};

// ---------------------------------------------------------------------------
// Affine plane

inline constexpr CharVector kAffineU{1, 0};
inline constexpr CharVector kAffineV{0, 1};

inline PoincarePoly poincare_affine(int n, CharVector rho) {
    if (n < 0)
        throw invalid_input("n must be non-negative");
    if (rho.a <= 0 || rho.b <= 0)
        throw invalid_input("rho must lie in the open positive quadrant");
    PoincarePoly poly;
    for (const Partition& lambda : enumerate_partitions(n))
        poly.add_cell(2 * cell_dimension(tangent_weights(lambda, kAffineU, kAffineV), rho));
    return poly;
}

// ---------------------------------------------------------------------------
// Projective plane

/// Coordinate weights of the three standard affine charts of toric P².
inline constexpr std::array<std::array<CharVector, 2>, 3> kP2Charts{{
    {{{1, 0}, {0, 1}}},
    {{{-1, 0}, {-1, 1}}},
    {{{0, -1}, {1, -1}}},
}};

/// A torus-fixed point of Hilb^n(P²): one monomial ideal per chart.
struct ChartTuple {
    std::array<Partition, 3> partitions;
    std::array<std::array<CharVector, 2>, 3> chart_weights = kP2Charts;

    int size() const noexcept {
        return partitions[0].size() + partitions[1].size() + partitions[2].size();
    }

    TangentWeightList weights() const {
        TangentWeightList out;
        for (std::size_t c = 0; c < 3; ++c) {
            TangentWeightList w = tangent_weights(partitions[c], chart_weights[c][0], chart_weights[c][1]);
            out.insert(out.end(), w.begin(), w.end());
        }
        return out;
    }
};

/// Triples ordered by (|λ⁰|, |λ¹|) descending, then by partition order.
inline std::vector<ChartTuple> fixed_points_p2(int n) {
    if (n < 0)
        throw invalid_input("n must be non-negative");
    std::vector<std::vector<Partition>> by_size;
    for (int k = 0; k <= n; ++k)
        by_size.push_back(enumerate_partitions(k));
    std::vector<ChartTuple> out;
    for (int n0 = n; n0 >= 0; --n0)
        for (int n1 = n - n0; n1 >= 0; --n1) {
            const int n2 = n - n0 - n1;
            for (const Partition& p0 : by_size[static_cast<std::size_t>(n0)])
                for (const Partition& p1 : by_size[static_cast<std::size_t>(n1)])
                    for (const Partition& p2 : by_size[static_cast<std::size_t>(n2)])
                        out.push_back(ChartTuple{{p0, p1, p2}});
        }
    return out;
}

inline PoincarePoly poincare_p2(int n, CharVector rho) {
    PoincarePoly poly;
    for (const ChartTuple& t : fixed_points_p2(n))
        poly.add_cell(2 * cell_dimension(t.weights(), rho));
    return poly;
}

/// Default one-parameter subgroup (1, K), K = 2n² + 1, bumped until no
/// tangent weight at any fixed point lies on its wall.
inline BettiResult poincare_p2_default(int n) {
    const std::vector<ChartTuple> points = fixed_points_p2(n);
    BettiResult result;
    result.rho = {1, 2 * static_cast<std::int64_t>(n) * n + 1};
    for (;;) {
        bool generic = true;
        for (const ChartTuple& t : points)
            if (find_wall(t.weights(), result.rho)) {
                generic = false;
                break;
            }
        if (generic)
            break;
        ++result.rho.b;
        ++result.retries;
    }
    for (const ChartTuple& t : points)
        result.poly.add_cell(2 * cell_dimension(t.weights(), result.rho));
    return result;
}

inline BettiResult poincare_affine_default(int n) {
    BettiResult result;
    result.rho = {1, 2 * static_cast<std::int64_t>(n) * n + 1};
    const std::vector<Partition> points = enumerate_partitions(n);
    for (;;) {
        bool generic = true;
        for (const Partition& p : points)
            if (find_wall(tangent_weights(p, kAffineU, kAffineV), result.rho)) {
                generic = false;
                break;
            }
        if (generic)
            break;
        ++result.rho.b;
        ++result.retries;
    }
    result.poly = poincare_affine(n, result.rho);
    return result;
}

// ---------------------------------------------------------------------------
// Punctual Hilbert scheme M_n(P)

/// Cell dimensions n − λ₁, one per partition of n (enumeration order).
inline std::vector<int> punctual_cell_dims(int n) {
    if (n < 1)
        throw invalid_input("punctual locus undefined");
    std::vector<int> dims;
    for (const Partition& lambda : enumerate_partitions(n))
        dims.push_back(n - lambda.largest());
    return dims;
}

inline PoincarePoly poincare_punctual(int n) {
    PoincarePoly poly;
    for (int d : punctual_cell_dims(n))
        poly.add_cell(2 * d);
    return poly;
}

} // namespace hilb
