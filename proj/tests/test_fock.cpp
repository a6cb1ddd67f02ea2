#include <gtest/gtest.h>

#include "hilbpts/fock.hpp"

using hilb::BigInt;
using hilb::FockMonomial;
using hilb::FockSpace;
using hilb::FockState;
using hilb::SurfaceModel;

namespace {

const FockSpace& p2() {
    static const FockSpace space(SurfaceModel::projective_plane());
    return space;
}

constexpr int kOne = 0, kH = 1, kPt = 2;

} // namespace

TEST(FockSpace, CreateAndBidegree) {
    const FockState s = p2().create(FockSpace::vacuum(), 2, kOne);
    ASSERT_EQ(s.size(), 1u);
    const FockMonomial& mono = s.begin()->first;
    EXPECT_EQ(p2().bidegree(mono), (hilb::Bidegree{2, 2}));
    EXPECT_EQ(p2().bidegree(hilb::Generator{1, kPt}), (hilb::Bidegree{1, 4}));
    EXPECT_EQ(p2().to_string(s), "1*a_{-2}(1)");
}

TEST(FockSpace, AnnihilateVacuumAndPairs) {
    EXPECT_TRUE(p2().annihilate(FockSpace::vacuum(), 1, kH).empty());
    // a_1(pt) a_{-1}(1)|0> = ⟨pt, 1⟩ |0>
    const FockState one = p2().annihilate(p2().create(FockSpace::vacuum(), 1, kOne), 1, kPt);
    EXPECT_EQ(one, FockSpace::vacuum());
    // a_2(H) a_{-2}(H)|0> = −2 |0>
    const FockState two = p2().annihilate(p2().create(FockSpace::vacuum(), 2, kH), 2, kH);
    EXPECT_EQ(two, hilb::scaled(FockSpace::vacuum(), BigInt(-2)));
    // repeated factors: a_1(pt) a_{-1}(1)²|0> = 2 a_{-1}(1)|0>
    const FockState sq = p2().create(p2().create(FockSpace::vacuum(), 1, kOne), 1, kOne);
    EXPECT_EQ(p2().annihilate(sq, 1, kPt), hilb::scaled(p2().create(FockSpace::vacuum(), 1, kOne), BigInt(2)));
}

TEST(FockSpace, OperatorErrors) {
    EXPECT_THROW(p2().create(FockSpace::vacuum(), 0, kOne), hilb::invalid_input);
    EXPECT_THROW(p2().annihilate(FockSpace::vacuum(), 1, 3), hilb::invalid_input);
}

TEST(FockSpace, MonomialCountsMatchCharacter) {
    const auto series = hilb::fock_character(SurfaceModel::projective_plane(), 5);
    const auto monos = p2().monomials_through(5);
    std::vector<BigInt> by_t(6, 0);
    for (const auto& m : monos)
        by_t[static_cast<std::size_t>(p2().bidegree(m).t)] += 1;
    EXPECT_EQ(by_t, series.at_u_one());
    for (std::size_t i = 1; i < monos.size(); ++i)
        EXPECT_LE(p2().bidegree(monos[i - 1]).t, p2().bidegree(monos[i]).t);
}

TEST(Commutator, Scalars) {
    const auto probes = p2().monomials_through(3);
    const auto a = hilb::commutator_check(p2(), 1, 1, kOne, kPt, probes);
    EXPECT_EQ(a.expected, 1);
    EXPECT_TRUE(a.ok());
    const auto b = hilb::commutator_check(p2(), 2, 1, kH, kH, probes);
    EXPECT_EQ(b.expected, 0);
    EXPECT_TRUE(b.ok());
    const auto c = hilb::commutator_check(p2(), 2, 2, kH, kH, probes);
    EXPECT_EQ(c.expected, -2);
    EXPECT_TRUE(c.ok());
    EXPECT_EQ(c.probes, probes.size());
}

TEST(Commutator, FullSweep) {
    const auto probes = p2().monomials_through(4);
    for (int m = 1; m <= 5; ++m)
        for (int k = 1; k <= 5; ++k)
            for (int alpha = 0; alpha < 3; ++alpha)
                for (int beta = 0; beta < 3; ++beta) {
                    const auto r = hilb::commutator_check(p2(), m, k, alpha, beta, probes);
                    EXPECT_TRUE(r.ok()) << m << " " << k << " " << alpha << " " << beta << ": "
                                        << (r.failures.empty() ? "" : r.failures.front());
                    const BigInt want = m == k ? BigInt(m % 2 ? m : -m) * BigInt((alpha + beta == 2) ? 1 : 0)
                                               : BigInt(0);
                    EXPECT_EQ(r.expected, want);
                }
}

TEST(Commutator, BlownUpSurface) {
    const FockSpace space(SurfaceModel::from_betti({1, 0, 3, 0, 1}));
    const auto probes = space.monomials_through(3);
    const int e1 = space.surface().index_of("E1");
    const auto r = hilb::commutator_check(space, 3, 3, e1, e1, probes);
    EXPECT_EQ(r.expected, -3); // c_3 · E1² = 3 · (−1)
    EXPECT_TRUE(r.ok());
}
