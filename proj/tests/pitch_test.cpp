#include "quanta/pitch.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "quanta/error.hpp"

namespace quanta {
namespace {

const PitchClassSet kCMajor(12, {0, 2, 4, 5, 7, 9, 11});

PitchClassSet random_set(std::mt19937& rng, int n) {
    std::uniform_int_distribution<std::uint64_t> bits;
    const auto mask = n == 64 ? bits(rng) : bits(rng) & ((std::uint64_t{1} << n) - 1);
    return PitchClassSet::from_mask(n, mask);
}

AffineSymmetry random_symmetry(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> shift(0, n - 1);
    std::bernoulli_distribution flip;
    return AffineSymmetry(shift(rng), flip(rng) ? -1 : 1, n);
}

oracle::Tones as_tones(const PitchClassSet& s) {
    const auto m = s.members();
    return {m.begin(), m.end()};
}

TEST(PitchClassSet, MembersAscendingAndReduced) {
    const PitchClassSet s(12, {7, 11, 2, 5, 2});
    EXPECT_EQ(s.members(), (std::vector<int>{2, 5, 7, 11}));
    EXPECT_EQ(s.size(), 4);
    EXPECT_EQ(s.to_string(), "2,5,7,11");
    EXPECT_EQ(s.to_string(';'), "2;5;7;11");
}

TEST(PitchClassSet, RejectsUnreducedResidues) {
    EXPECT_THROW(PitchClassSet(12, {12}), InvalidInput);
    EXPECT_THROW(PitchClassSet(12, {-1}), InvalidInput);
    EXPECT_THROW(PitchClass(12, 12), InvalidInput);
}

TEST(PitchClassSet, ModulusCapacity) {
    EXPECT_THROW(PitchClassSet(2), InvalidInput);
    EXPECT_THROW(PitchClassSet(65), InvalidInput);
    const auto full = PitchClassSet::full(64);
    EXPECT_EQ(full.size(), 64);
    EXPECT_TRUE(full.contains(63));
}

TEST(PitchClassSet, MixedModuliAreRejected) {
    EXPECT_THROW((void)(PitchClassSet(12, {0}) | PitchClassSet(7, {0})), InvalidInput);
}

TEST(AffineSymmetry, InversionFiveMapsCMajorUpASemitone) {
    const auto g = AffineSymmetry::inversion(5, 12);
    EXPECT_EQ(apply_symmetry(g, kCMajor), PitchClassSet(12, {0, 1, 3, 5, 6, 8, 10}));
}

TEST(AffineSymmetry, IdentityAndTransposition) {
    EXPECT_EQ(apply_symmetry(AffineSymmetry::identity(12), kCMajor), kCMajor);
    EXPECT_EQ(apply_symmetry(AffineSymmetry::transposition(3, 12), PitchClassSet(12, {7, 11, 2, 5})),
              PitchClassSet(12, {2, 5, 8, 10}));
}

TEST(AffineSymmetry, ApplyRejectsModulusMismatch) {
    EXPECT_THROW(apply_symmetry(AffineSymmetry::transposition(1, 7), kCMajor), InvalidInput);
}

TEST(AffineSymmetry, Compose) {
    const auto i5 = AffineSymmetry::inversion(5, 12);
    EXPECT_TRUE(compose(i5, i5).is_identity());
    EXPECT_EQ(compose(AffineSymmetry::transposition(3, 12), AffineSymmetry::transposition(3, 12)),
              AffineSymmetry::transposition(6, 12));
    EXPECT_EQ(compose(AffineSymmetry::transposition(2, 12), AffineSymmetry::inversion(0, 12)),
              AffineSymmetry::inversion(2, 12));
    EXPECT_THROW(compose(i5, AffineSymmetry::identity(7)), InvalidInput);
}

TEST(AffineSymmetry, CanonicalText) {
    EXPECT_EQ(AffineSymmetry::inversion(5, 12).to_string(), "T5.11");
    EXPECT_EQ(AffineSymmetry::transposition(3, 12).to_string(), "T3");
    EXPECT_EQ(AffineSymmetry::inversion(0, 20).to_string(), "T0.19");
    EXPECT_EQ(AffineSymmetry::inversion(4, 12).sign(), -1);
}

TEST(AffineSymmetry, Parse) {
    EXPECT_EQ(AffineSymmetry::parse("T6.11", 12), AffineSymmetry::inversion(6, 12));
    EXPECT_EQ(AffineSymmetry::parse("T6.-1", 12), AffineSymmetry::inversion(6, 12));
    EXPECT_EQ(AffineSymmetry::parse("T6", 12), AffineSymmetry::transposition(6, 12));
    EXPECT_EQ(AffineSymmetry::parse("T0.5", 12), AffineSymmetry(0, 5, 12));
    for (const char* bad : {"", "T", "6", "T12", "T-1", "T6.", "T6.x", "T6.2", "X6", "T6.11.1"}) {
        EXPECT_THROW(AffineSymmetry::parse(bad, 12), InvalidInput) << bad;
    }
}

TEST(SymmetryGroup, GeneratedGroups) {
    const auto t3 = generated_group(AffineSymmetry::transposition(3, 12));
    EXPECT_EQ(t3.order(), 4u);
    for (int a : {0, 3, 6, 9}) EXPECT_TRUE(t3.contains(AffineSymmetry::transposition(a, 12)));

    const auto inv = generated_group(AffineSymmetry::inversion(5, 12));
    EXPECT_EQ(inv.order(), 2u);
    EXPECT_TRUE(inv.contains(AffineSymmetry::identity(12)));
    EXPECT_TRUE(inv.contains(AffineSymmetry::inversion(5, 12)));

    EXPECT_EQ(generated_group(AffineSymmetry::transposition(1, 12)).order(), 12u);
}

TEST(SymmetryGroup, SpecialAndFullAffineOrders) {
    EXPECT_EQ(special_affine_group(12).order(), 24u);
    EXPECT_EQ(full_affine_group(12).order(), 48u);
    EXPECT_EQ(special_affine_group(20).order(), 40u);
}

TEST(Stabilizer, CMajorIsFixedByInversionFour) {
    const auto stab = stabilizer(kCMajor);
    EXPECT_EQ(stab.elements(),
              (std::vector<AffineSymmetry>{AffineSymmetry::identity(12), AffineSymmetry::inversion(4, 12)}));
    EXPECT_FALSE(is_rigid(kCMajor));
}

TEST(Stabilizer, FullAndEmptySetsAreNotRigid) {
    EXPECT_EQ(stabilizer(PitchClassSet::full(12)).order(), 24u);
    EXPECT_FALSE(is_rigid(PitchClassSet::full(12)));
    EXPECT_FALSE(is_rigid(PitchClassSet(12)));
}

TEST(Stabilizer, TraceOfSecondDegreeDominantRowIsRigid) {
    const PitchClassSet m(12, {1, 2, 4, 7, 9, 11});
    EXPECT_EQ(oracle::fixing(as_tones(m), 12).size(), 1u);
    EXPECT_TRUE(is_rigid(m));
}

TEST(Stabilizer, ExplicitGroupArgument) {
    // x -> 5x and x -> 7x also permute the diminished seventh chord.
    const PitchClassSet s(12, {0, 3, 6, 9});
    EXPECT_GT(stabilizer(s, full_affine_group(12)).order(), stabilizer(s).order());
}

// ---------------------------------------------------------------------------
// Properties over random instances

TEST(PitchProperties, AgreeWithBruteForce) {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = std::uniform_int_distribution<int>(3, 64)(rng);
        const auto x = random_set(rng, n);
        const auto g = random_symmetry(rng, n);

        const auto image = apply_symmetry(g, x);
        EXPECT_EQ(image.size(), x.size());
        EXPECT_EQ(as_tones(image), oracle::map(g.shift(), g.sign(), as_tones(x), n));

        EXPECT_TRUE(compose(g, g.inverse()).is_identity());
        EXPECT_TRUE(compose(g.inverse(), g).is_identity());
        if (g.sign() == -1) EXPECT_TRUE(compose(g, g).is_identity());

        const auto h = random_symmetry(rng, n);
        const auto k = random_symmetry(rng, n);
        EXPECT_EQ(compose(compose(g, h), k), compose(g, compose(h, k)));
        EXPECT_EQ(apply_symmetry(compose(g, h), x), apply_symmetry(g, apply_symmetry(h, x)));

        const auto group = generated_group(g);
        EXPECT_EQ((2 * n) % static_cast<int>(group.order()), 0);
        for (const auto& a : group)
            for (const auto& b : group) EXPECT_TRUE(group.contains(compose(a, b)));

        // orbit under <g> equals the fixed point of repeated application
        PitchClassSet orbit(n);
        for (const auto& e : group) orbit = orbit | apply_symmetry(e, x);
        EXPECT_EQ(as_tones(orbit), oracle::closure(g.shift(), g.sign(), as_tones(x), n));

        const auto stab = stabilizer(x);
        EXPECT_TRUE(stab.contains(AffineSymmetry::identity(n)));
        for (const auto& a : stab)
            for (const auto& b : stab) EXPECT_TRUE(stab.contains(compose(a, b)));
        EXPECT_EQ(stab.order(), oracle::fixing(as_tones(x), n).size());
    }
}

TEST(PitchProperties, EveryTwelveToneSetStabilizerMatchesBruteForce) {
    for (std::uint64_t mask = 0; mask < (1u << 12); ++mask) {
        const auto x = PitchClassSet::from_mask(12, mask);
        ASSERT_EQ(stabilizer(x).order(), oracle::fixing(as_tones(x), 12).size()) << x.to_string();
    }
}

}  // namespace
}  // namespace quanta
