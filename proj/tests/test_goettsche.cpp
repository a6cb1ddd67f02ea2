#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "hilbpts/equivariant.hpp"
#include "hilbpts/goettsche.hpp"

using hilb::BigInt;
using hilb::GradedSeries;
using hilb::SurfaceModel;

namespace {

std::map<int, BigInt> slice_map(const GradedSeries& s, int n) {
    return s.slice(n).coefficients();
}

std::map<int, BigInt> m(std::initializer_list<std::pair<const int, BigInt>> l) { return l; }

} // namespace

TEST(Surface, ProjectivePlane) {
    const auto s = SurfaceModel::projective_plane();
    EXPECT_EQ(s.dimension(), 3);
    EXPECT_EQ(s.index_of("H"), 1);
    EXPECT_EQ(s.pairing(0, 2), 1);
    EXPECT_EQ(s.pairing(1, 1), 1);
    EXPECT_EQ(s.pairing(0, 0), 0);
    EXPECT_EQ(s.euler(), 3);
}

TEST(Surface, Validation) {
    EXPECT_THROW(SurfaceModel::from_betti({1, 2, 2, 2, 1}), hilb::invalid_input);
    EXPECT_THROW(SurfaceModel::from_betti({1, 1, 2, 0, 1}), hilb::invalid_input);
    EXPECT_THROW(SurfaceModel::from_betti({2, 0, 1, 0, 1}), hilb::invalid_input);
    EXPECT_THROW(SurfaceModel::from_betti({1, 0, 2, 0, 1}, hilb::IntersectionLattice::projective_plane()),
                 hilb::invalid_input);
    try {
        SurfaceModel::from_betti({1, 4, 6, 4, 1});
        FAIL();
    } catch (const hilb::invalid_input& e) {
        EXPECT_STREQ(e.what(), "odd cohomology unsupported");
    }
}

TEST(Goettsche, ProjectivePlaneMatchesFixedPoints) {
    const auto s = hilb::goettsche_series(SurfaceModel::projective_plane(), 7);
    for (int n = 0; n <= 7; ++n)
        EXPECT_EQ(s.slice(n), hilb::poincare_p2_default(n).poly) << n;
}

TEST(Goettsche, ProjectivePlaneSlices) {
    const auto s = hilb::goettsche_series(SurfaceModel::projective_plane(), 3);
    EXPECT_EQ(slice_map(s, 0), m({{0, 1}}));
    EXPECT_EQ(slice_map(s, 1), m({{0, 1}, {2, 1}, {4, 1}}));
    EXPECT_EQ(slice_map(s, 2), m({{0, 1}, {2, 2}, {4, 3}, {6, 2}, {8, 1}}));
    EXPECT_EQ(slice_map(s, 3), m({{0, 1}, {2, 2}, {4, 5}, {6, 6}, {8, 5}, {10, 2}, {12, 1}}));
}

TEST(Goettsche, K3Slices) {
    const auto s = hilb::goettsche_series(SurfaceModel::from_betti({1, 0, 22, 0, 1}), 3);
    EXPECT_EQ(slice_map(s, 1), m({{0, 1}, {2, 22}, {4, 1}}));
    EXPECT_EQ(slice_map(s, 2), m({{0, 1}, {2, 23}, {4, 276}, {6, 23}, {8, 1}}));
    EXPECT_EQ(slice_map(s, 3), m({{0, 1}, {2, 23}, {4, 299}, {6, 2554}, {8, 299}, {10, 23}, {12, 1}}));
    EXPECT_EQ(s.at_u_one(), (std::vector<BigInt>{1, 24, 324, 3200}));
}

TEST(Goettsche, QuadricSlices) {
    const auto s = hilb::goettsche_series(SurfaceModel::from_betti({1, 0, 2, 0, 1}), 3);
    EXPECT_EQ(slice_map(s, 2), m({{0, 1}, {2, 3}, {4, 6}, {6, 3}, {8, 1}}));
    EXPECT_EQ(slice_map(s, 3), m({{0, 1}, {2, 3}, {4, 9}, {6, 14}, {8, 9}, {10, 3}, {12, 1}}));
}

TEST(Goettsche, EulerNumbersOfProjectivePlane) {
    const auto s = hilb::goettsche_series(SurfaceModel::projective_plane(), 6);
    EXPECT_EQ(s.at_u_one(), (std::vector<BigInt>{1, 3, 9, 22, 51, 108, 221}));
}

TEST(Goettsche, PoincareDualityOfSlices) {
    const auto s = hilb::goettsche_series(SurfaceModel::from_betti({1, 0, 5, 0, 1}), 6);
    for (int n = 0; n <= 6; ++n)
        for (int d = 0; d <= 4 * n; ++d)
            EXPECT_EQ(s.coefficient(n, d), s.coefficient(n, 4 * n - d));
}

TEST(Goettsche, TruncationErrors) {
    EXPECT_THROW(GradedSeries(-1), hilb::invalid_input);
    const auto s = hilb::goettsche_series(SurfaceModel::projective_plane(), 2);
    EXPECT_THROW(s.slice(3), hilb::invalid_input);
}

TEST(Fock, CharacterEqualsProduct) {
    for (const auto& surface : {SurfaceModel::projective_plane(), SurfaceModel::from_betti({1, 0, 22, 0, 1}),
                                SurfaceModel::from_betti({1, 0, 0, 0, 1})}) {
        for (int t : {0, 1, 4, 8})
            EXPECT_EQ(hilb::fock_character(surface, t), hilb::goettsche_series(surface, t)) << t;
    }
}
