#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "hilbpts/intersection.hpp"

using hilb::BigInt;
using hilb::DivisorClass;
using hilb::IntersectionLattice;

TEST(Lattice, Construction) {
    EXPECT_THROW(IntersectionLattice({{1, 0}}, {"A"}), hilb::invalid_input);
    EXPECT_THROW(IntersectionLattice({{1, 2}, {3, 1}}, {"A", "B"}), hilb::invalid_input);
    EXPECT_THROW(IntersectionLattice({{1}}, {"A", "B"}), hilb::invalid_input);
    EXPECT_EQ(IntersectionLattice::empty().rank(), 0);
}

TEST(Lattice, BlowUp) {
    const auto p2 = IntersectionLattice::projective_plane();
    const auto l = hilb::blow_up(p2, 2);
    EXPECT_EQ(l.rank(), 3);
    EXPECT_EQ(l.labels(), (std::vector<std::string>{"H", "E1", "E2"}));
    EXPECT_EQ(l.entry(1, 1), -1);
    EXPECT_EQ(l.entry(0, 1), 0);
    const DivisorClass conic = 2 * l.basis(0) - l.basis(1) - l.basis(2);
    EXPECT_EQ(hilb::pair(l, conic, conic), 2);
    EXPECT_EQ(hilb::blow_up(p2, 0).gram(), p2.gram());
    EXPECT_THROW(hilb::blow_up(p2, -1), hilb::invalid_input);
}

TEST(Lattice, Pair) {
    const auto l = hilb::blow_up(IntersectionLattice::projective_plane(), 1);
    const DivisorClass fiber = l.basis(l.index_of("H")) - l.basis(l.index_of("E1"));
    EXPECT_EQ(hilb::pair(l, fiber, fiber), 0);
    EXPECT_EQ(hilb::pair(l, l.basis(0), fiber), 1);
    EXPECT_THROW(hilb::pair(l, DivisorClass{{1}}, fiber), hilb::invalid_input);
}

TEST(Lattice, RandomizedBilinearity) {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::int64_t> coef(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = static_cast<int>(rng() % 8);
        const auto l = hilb::blow_up(IntersectionLattice::projective_plane(), k);
        auto random_class = [&] {
            DivisorClass d = l.zero();
            for (auto& c : d.coords)
                c = coef(rng);
            return d;
        };
        const DivisorClass a = random_class(), b = random_class(), c = random_class();
        const std::int64_t s = coef(rng);
        EXPECT_EQ(hilb::pair(l, a, b), hilb::pair(l, b, a));
        EXPECT_EQ(hilb::pair(l, a + b, c), hilb::pair(l, a, c) + hilb::pair(l, b, c));
        EXPECT_EQ(hilb::pair(l, s * a, c), s * hilb::pair(l, a, c));
        // diag(1, −1, …): the square is a difference of sums of squares
        std::int64_t expect = a.coords[0] * a.coords[0];
        for (std::size_t i = 1; i < a.coords.size(); ++i)
            expect -= a.coords[i] * a.coords[i];
        EXPECT_EQ(hilb::pair(l, a, a), expect);
    }
}

TEST(Lattice, ExceptionalSquare) {
    const IntersectionLattice bases[] = {IntersectionLattice::projective_plane(), IntersectionLattice::empty(),
                                         IntersectionLattice({{0, 1}, {1, 0}}, {"A", "B"})};
    for (const auto& base : bases)
        for (int n = 1; n <= 50; ++n)
            EXPECT_EQ(hilb::exceptional_total_square(n, base), -n);
    EXPECT_THROW(hilb::exceptional_total_square(0, bases[0]), hilb::invalid_input);
}

TEST(Nakajima, ClosedForm) {
    EXPECT_EQ(hilb::nakajima_closed_form(1), 1);
    EXPECT_EQ(hilb::nakajima_closed_form(2), -2);
    EXPECT_EQ(hilb::nakajima_closed_form(41), 41);
    EXPECT_EQ(hilb::nakajima_closed_form(100), -100);
    EXPECT_THROW(hilb::nakajima_closed_form(0), hilb::invalid_input);
}

TEST(Nakajima, RecurrenceMatchesClosedForm) {
    const auto seq = hilb::nakajima_recurrence(200);
    ASSERT_EQ(seq.values.size(), 200u);
    for (int n = 1; n <= 200; ++n)
        EXPECT_EQ(seq.c(n), hilb::nakajima_closed_form(n)) << n;
}

TEST(Nakajima, ReplayScalars) {
    const auto steps = hilb::nakajima_replay(4);
    ASSERT_EQ(steps.size(), 3u);
    EXPECT_EQ(steps[0].e_square, -1);
    EXPECT_EQ(steps[0].c_next, -2);
    EXPECT_EQ(steps[2].degree_g, 4);
    EXPECT_EQ(steps[2].mult_lower, 3);
    EXPECT_EQ(steps[2].c_next, -4);
    EXPECT_TRUE(hilb::nakajima_replay(1).empty());
    EXPECT_THROW(hilb::nakajima_replay(0), hilb::invalid_input);
}

TEST(Nakajima, ReplayIndependentOfBase) {
    const auto a = hilb::nakajima_replay(30, IntersectionLattice::empty());
    const auto b = hilb::nakajima_replay(30);
    for (std::size_t i = 0; i < a.size(); ++i)
        EXPECT_EQ(a[i].c_next, b[i].c_next);
}

TEST(Dimensions, Complementary) {
    for (int n = 1; n <= 100; ++n)
        EXPECT_EQ(hilb::dim_single_support_locus(n) + hilb::dim_punctual_locus(n), hilb::dim_hilbert_scheme(n));
}
