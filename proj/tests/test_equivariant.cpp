#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "hilbpts/equivariant.hpp"

using hilb::CharVector;
using hilb::Partition;
using hilb::PoincarePoly;

namespace {

std::multiset<CharVector> ms(const hilb::TangentWeightList& w) { return {w.begin(), w.end()}; }

PoincarePoly poly(std::map<int, int> coeffs) {
    PoincarePoly p;
    for (auto [d, c] : coeffs)
        p.add(d, c);
    return p;
}

// Frozen from an independent expansion of the product
// Π_m (1 − t^m u^{2m−2})^{-1} (1 − t^m u^{2m})^{-1} (1 − t^m u^{2m+2})^{-1}
// (binomial series, not prefix sums), t-slices 0..6.
const std::vector<std::map<int, int>> kP2Betti{
    {{0, 1}},
    {{0, 1}, {2, 1}, {4, 1}},
    {{0, 1}, {2, 2}, {4, 3}, {6, 2}, {8, 1}},
    {{0, 1}, {2, 2}, {4, 5}, {6, 6}, {8, 5}, {10, 2}, {12, 1}},
    {{0, 1}, {2, 2}, {4, 6}, {6, 10}, {8, 13}, {10, 10}, {12, 6}, {14, 2}, {16, 1}},
    {{0, 1}, {2, 2}, {4, 6}, {6, 12}, {8, 21}, {10, 24}, {12, 21}, {14, 12}, {16, 6}, {18, 2}, {20, 1}},
    {{0, 1}, {2, 2}, {4, 6}, {6, 13}, {8, 26}, {10, 39}, {12, 47}, {14, 39}, {16, 26}, {18, 13}, {20, 6},
     {22, 2}, {24, 1}},
};

} // namespace

TEST(TangentWeights, Examples) {
    const CharVector u{1, 0}, v{0, 1};
    EXPECT_EQ(ms(hilb::tangent_weights(Partition({1}), u, v)), (std::multiset<CharVector>{{1, 0}, {0, 1}}));
    EXPECT_EQ(ms(hilb::tangent_weights(Partition({2}), u, v)),
              (std::multiset<CharVector>{{2, 0}, {-1, 1}, {1, 0}, {0, 1}}));
    EXPECT_EQ(ms(hilb::tangent_weights(Partition({1, 1}), u, v)),
              (std::multiset<CharVector>{{0, 2}, {1, -1}, {0, 1}, {1, 0}}));
}

TEST(TangentWeights, DegenerateChart) {
    try {
        (void)hilb::tangent_weights(Partition({1}), {1, 2}, {2, 4});
        FAIL();
    } catch (const hilb::invalid_input& e) {
        EXPECT_STREQ(e.what(), "degenerate chart");
    }
}

TEST(TangentWeights, CountAndConjugationSymmetry) {
    for (const auto& chart : hilb::kP2Charts)
        for (int n = 0; n <= 20; ++n)
            for (const Partition& l : hilb::enumerate_partitions(n)) {
                const auto w = hilb::tangent_weights(l, chart[0], chart[1]);
                ASSERT_EQ(w.size(), 2u * static_cast<std::size_t>(n));
                ASSERT_EQ(ms(w), ms(hilb::tangent_weights(hilb::conjugate(l), chart[1], chart[0]))) << l;
            }
}

// No tangent weight at a fixed point of Hilb^n(C²) is zero: the fixed points
// are isolated.
TEST(TangentWeights, IsolatedFixedPoints) {
    for (int n = 1; n <= 14; ++n)
        for (const Partition& l : hilb::enumerate_partitions(n))
            for (const CharVector& w : hilb::tangent_weights(l, {1, 0}, {0, 1}))
                ASSERT_NE(w, (CharVector{0, 0})) << l;
}

TEST(CellDimension, Examples) {
    const CharVector u{1, 0}, v{0, 1};
    EXPECT_EQ(hilb::cell_dimension(hilb::tangent_weights(Partition({2}), u, v), {3, 1}), 1);
    EXPECT_EQ(hilb::cell_dimension(hilb::tangent_weights(Partition({1, 1}), u, v), {3, 1}), 0);
    EXPECT_EQ(hilb::cell_dimension(hilb::tangent_weights(Partition({1}), u, v), {2, 5}), 0);
}

TEST(CellDimension, NonGeneric) {
    const auto w = hilb::tangent_weights(Partition({2}), {1, 0}, {0, 1});
    EXPECT_THROW((void)hilb::cell_dimension(w, {1, 1}), hilb::invalid_input); // (−1,1)·(1,1) = 0
}

TEST(PoincareAffine, Examples) {
    EXPECT_EQ(hilb::poincare_affine(1, {1, 3}), poly({{0, 1}}));
    EXPECT_EQ(hilb::poincare_affine(2, {3, 1}), poly({{0, 1}, {2, 1}}));
    EXPECT_EQ(hilb::poincare_affine(3, {1, 19}), poly({{0, 1}, {2, 1}, {4, 1}}));
    EXPECT_EQ(hilb::poincare_affine_default(0).poly, poly({{0, 1}}));
    EXPECT_THROW((void)hilb::poincare_affine(2, {-1, 3}), hilb::invalid_input);
}

// Closed form Σ_λ q^{2(n − ℓ(λ))} via partition lengths.
TEST(PoincareAffine, MatchesLengthStatistic) {
    for (int n = 0; n <= 12; ++n) {
        PoincarePoly oracle;
        for (const Partition& l : hilb::enumerate_partitions(n))
            oracle.add_cell(2 * (n - l.length()));
        EXPECT_EQ(hilb::poincare_affine_default(n).poly, oracle) << n;
    }
}

TEST(PoincareAffine, ChamberIndependent) {
    for (int n = 1; n <= 12; ++n) {
        const std::int64_t k = n + 1;
        const std::vector<CharVector> rhos{{1, k}, {k, 1}, {2, 2 * k + 1}};
        const PoincarePoly first = hilb::poincare_affine(n, rhos[0]);
        for (const CharVector& r : rhos)
            EXPECT_EQ(hilb::poincare_affine(n, r), first) << n << " " << r.to_string();
    }
}

TEST(FixedPointsP2, Counts) {
    EXPECT_EQ(hilb::fixed_points_p2(0).size(), 1u);
    EXPECT_EQ(hilb::fixed_points_p2(1).size(), 3u);
    EXPECT_EQ(hilb::fixed_points_p2(2).size(), 9u);
    EXPECT_EQ(hilb::fixed_points_p2(3).size(), 22u);
    // Brute force: all triples over partitions of size ≤ n, filtered by total.
    for (int n = 0; n <= 6; ++n) {
        std::vector<Partition> all;
        for (int k = 0; k <= n; ++k)
            for (const Partition& p : hilb::enumerate_partitions(k))
                all.push_back(p);
        std::size_t count = 0;
        for (const auto& a : all)
            for (const auto& b : all)
                for (const auto& c : all)
                    count += a.size() + b.size() + c.size() == n;
        const auto pts = hilb::fixed_points_p2(n);
        EXPECT_EQ(pts.size(), count) << n;
        for (const auto& t : pts) {
            EXPECT_EQ(t.size(), n);
            EXPECT_EQ(t.weights().size(), 2u * static_cast<std::size_t>(n));
        }
    }
}

TEST(PoincareP2, Examples) {
    EXPECT_EQ(hilb::poincare_p2_default(0).poly, poly({{0, 1}}));
    EXPECT_EQ(hilb::poincare_p2_default(1).poly, poly({{0, 1}, {2, 1}, {4, 1}}));
    EXPECT_EQ(hilb::poincare_p2_default(2).poly, poly({{0, 1}, {2, 2}, {4, 3}, {6, 2}, {8, 1}}));
}

TEST(PoincareP2, MatchesFrozenProductExpansion) {
    for (int n = 0; n <= 6; ++n)
        EXPECT_EQ(hilb::poincare_p2_default(n).poly, poly(kP2Betti[static_cast<std::size_t>(n)])) << n;
}

TEST(PoincareP2, ChamberIndependentAndPoincareDual) {
    for (int n = 1; n <= 8; ++n) {
        const std::int64_t k = n + 1;
        const std::vector<CharVector> rhos{{1, 2 * k * k + 1}, {2 * k * k + 1, 3}, {3, 7 * k + 2}, {5, 11 * k + 3}};
        const PoincarePoly first = hilb::poincare_p2(n, rhos[0]);
        for (const CharVector& r : rhos)
            EXPECT_EQ(hilb::poincare_p2(n, r), first) << n << " " << r.to_string();
        for (const auto& [deg, c] : first.coefficients())
            EXPECT_EQ(first.coefficient(4 * n - deg), c);
        EXPECT_EQ(first.top_degree(), 4 * n);
        EXPECT_EQ(first.at_one(), hilb::BigInt(hilb::fixed_points_p2(n).size()));
    }
}

TEST(PoincareP2, ReportsOffendingWeight) {
    // rho = (1,1) kills the chart-1 weight (−1, 1) at n = 1.
    try {
        (void)hilb::poincare_p2(1, {1, 1});
        FAIL();
    } catch (const hilb::invalid_input& e) {
        EXPECT_NE(std::string(e.what()).find("(-1,1)"), std::string::npos) << e.what();
    }
}

TEST(Punctual, CellDims) {
    EXPECT_EQ(hilb::punctual_cell_dims(1), std::vector<int>{0});
    auto d2 = hilb::punctual_cell_dims(2);
    std::sort(d2.begin(), d2.end());
    EXPECT_EQ(d2, (std::vector<int>{0, 1}));
    auto d3 = hilb::punctual_cell_dims(3);
    std::sort(d3.begin(), d3.end());
    EXPECT_EQ(d3, (std::vector<int>{0, 1, 2}));
    try {
        (void)hilb::punctual_cell_dims(0);
        FAIL();
    } catch (const hilb::invalid_input& e) {
        EXPECT_STREQ(e.what(), "punctual locus undefined");
    }
}

TEST(Punctual, Polynomials) {
    EXPECT_EQ(hilb::poincare_punctual(2), poly({{0, 1}, {2, 1}}));
    EXPECT_EQ(hilb::poincare_punctual(3), poly({{0, 1}, {2, 1}, {4, 1}}));
    EXPECT_EQ(hilb::poincare_punctual(4), poly({{0, 1}, {2, 1}, {4, 2}, {6, 1}}));
    EXPECT_EQ(hilb::poincare_punctual(3).to_string(), "1 + q^2 + q^4");
    EXPECT_EQ(hilb::poincare_punctual(4).to_string(), "1 + q^2 + 2q^4 + q^6");
}

TEST(Punctual, TopDimensionAndEuler) {
    for (int n = 1; n <= 25; ++n) {
        const auto dims = hilb::punctual_cell_dims(n);
        EXPECT_EQ(*std::max_element(dims.begin(), dims.end()), n - 1);
        EXPECT_EQ(*std::min_element(dims.begin(), dims.end()), 0);
        EXPECT_EQ(dims.size(), hilb::enumerate_partitions(n).size());
        std::multiset<int> by_length;
        for (const Partition& l : hilb::enumerate_partitions(n))
            by_length.insert(n - l.length());
        EXPECT_EQ(std::multiset<int>(dims.begin(), dims.end()), by_length);
        // exactly one top-dimensional cell: M_n(P) is irreducible
        EXPECT_EQ(std::count(dims.begin(), dims.end(), n - 1), 1);
    }
}

TEST(PoincarePoly, RejectsOddDegree) {
    PoincarePoly p;
    EXPECT_THROW(p.add(3, 1), hilb::invalid_input);
    EXPECT_EQ(p.to_string(), "0");
}
