#include "naive_oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace biposet;
using support::make;

TEST(CheckAxioms, IdentityPairPasses)
{
    EXPECT_TRUE(check_axioms(support::delta(2)).valid());
    EXPECT_TRUE(check_axioms(support::delta(1)).valid());
}

TEST(CheckAxioms, FullPairFailsAntisymmetryWithLeastWitness)
{
    Diamond d(Rel::full(2), Rel::full(2));
    AxiomVerdict v = check_axioms(d);
    EXPECT_TRUE(v.reflexive());
    ASSERT_TRUE(v.antisymmetric_violation);
    EXPECT_EQ(*v.antisymmetric_violation, (AntisymmetricWitness{0, 0, 1}));
    EXPECT_TRUE(violates(d, *v.antisymmetric_violation));
    EXPECT_TRUE(v.transitive());
    EXPECT_FALSE(is_pobr(d));
}

TEST(CheckAxioms, FullIdentityPairPasses)
{
    EXPECT_TRUE(check_axioms(Diamond(Rel::full(2), Rel::identity(2))).valid());
}

TEST(CheckAxioms, DivisibilityPasses) { EXPECT_TRUE(check_axioms(support::d2().diamond()).valid()); }

TEST(CheckAxioms, MissingLoopReported)
{
    Diamond d = make(2, {{0, 0}, {1, 1}}, {{0, 0}});
    AxiomVerdict v = check_axioms(d);
    ASSERT_TRUE(v.reflexive_violation);
    EXPECT_EQ(v.reflexive_violation->a, 1u);
    EXPECT_TRUE(violates(d, *v.reflexive_violation));
}

TEST(CheckAxioms, TransitivityWitnessFlagsFailingConclusion)
{
    // dual of the least duality counterexample at n = 3
    Diamond d = make(3, {{0, 0}, {0, 1}, {1, 1}, {2, 0}, {2, 2}}, {{0, 0}, {1, 0}, {1, 1}, {2, 2}});
    AxiomVerdict v = check_axioms(d);
    ASSERT_TRUE(v.transitive_violation);
    EXPECT_EQ(*v.transitive_violation, (TransitiveWitness{2, 0, 0, 1, 0, true, false}));
    EXPECT_TRUE(violates(d, *v.transitive_violation));
    EXPECT_EQ(v, naive::check_axioms(d));
}

TEST(CheckAxioms, AgreesWithNaiveOnEveryDiamondUpToTwo)
{
    for (std::size_t n : {1u, 2u})
        for (const Diamond& d : naive::all_diamonds(n)) {
            ASSERT_EQ(check_axioms(d), naive::check_axioms(d));
            ASSERT_EQ(is_pobr(d), naive::valid(d));
        }
}

TEST(CheckAxioms, AgreesWithNaiveOnReflexiveThree)
{
    for (const Diamond& d : naive::all_reflexive(3)) {
        ASSERT_EQ(check_axioms(d), naive::check_axioms(d));
        ASSERT_EQ(is_pobr(d), naive::valid(d));
    }
}

TEST(CheckAxioms, AgreesWithNaiveOnRandomLargerDiamonds)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 4 + trial % 4;
        const unsigned density = 40 + trial % 50;
        auto pick = [&](Index a, Index b) { return a == b || rng() % 100 < density; };
        Diamond d(Rel::from_predicate(n, pick), Rel::from_predicate(n, pick));
        ASSERT_EQ(check_axioms(d), naive::check_axioms(d)) << "trial " << trial;
    }
}

TEST(CheckAxioms, ManyWordsPerRow)
{
    Rel le = Rel::from_predicate(130, [](Index a, Index b) { return a <= b; });
    EXPECT_TRUE(is_pobr(Diamond(le, le)));
    EXPECT_TRUE(is_pobr(Diamond(le, Rel::identity(130))));
    Rel broken = le;
    broken.set(129, 0);
    EXPECT_EQ(check_axioms(Diamond(broken, broken)).valid(), false);
}

TEST(RequireValid, RejectsUncertifiedAndInvalid)
{
    BiPoset raw(GroundSet({"a", "b"}), support::delta(2));
    EXPECT_THROW(require_valid(raw), UsageError);
    EXPECT_NO_THROW(require_valid(certify(raw)));
    BiPoset bad = certify(BiPoset(GroundSet({"a", "b"}), Diamond(Rel::full(2), Rel::full(2))));
    EXPECT_THROW(require_valid(bad), UsageError);
}

TEST(ClassicalPor, Examples)
{
    EXPECT_TRUE(check_classical_por(Rel::identity(4)).valid());
    EXPECT_TRUE(check_classical_por(Rel::from_predicate(3, [](Index a, Index b) { return a <= b; })).valid());
    ClassicalVerdict v = check_classical_por(Rel::full(2));
    ASSERT_TRUE(v.antisymmetric_violation);
    EXPECT_EQ(*v.antisymmetric_violation, (std::array<Index, 2>{0, 1}));
    EXPECT_TRUE(v.transitive());

    ClassicalVerdict t = check_classical_por(Rel::from_pairs(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}}));
    ASSERT_TRUE(t.transitive_violation);
    EXPECT_EQ(*t.transitive_violation, (std::array<Index, 3>{0, 1, 2}));

    ClassicalVerdict r = check_classical_por(Rel(2));
    EXPECT_EQ(r.reflexive_violation, Index{0});
}

TEST(ClassicalPor, ComponentsOfAValidStructureNeedNotBePartialOrders)
{
    Diamond d(Rel::full(2), Rel::identity(2));
    EXPECT_TRUE(is_pobr(d));
    EXPECT_FALSE(check_classical_por(d.r1()).valid());
}
