#include "naive_oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace biposet;

namespace {

Index idx(const BiPoset& bp, const std::string& label) { return *bp.ground().find(label); }

// Every g with a R g for all a (greatest) or g R a for all a (least).
std::vector<Index> brute_extreme(const Rel& r, bool greatest)
{
    std::vector<Index> out;
    for (Index g = 0; g < r.size(); ++g) {
        bool ok = true;
        for (Index a = 0; a < r.size(); ++a)
            ok = ok && (greatest ? r.test(a, g) : r.test(g, a));
        if (ok)
            out.push_back(g);
    }
    return out;
}

} // namespace

TEST(SidedExtreme, DivisorsOfSix)
{
    BiPoset b = divisors_biposet(6);
    EXPECT_EQ(sided_extreme(b, 1, Direction::greatest).unique(), idx(b, "6"));
    EXPECT_EQ(sided_extreme(b, 2, Direction::greatest).unique(), idx(b, "6"));
    EXPECT_EQ(sided_extreme(b, 1, Direction::least).unique(), idx(b, "1"));
    EXPECT_EQ(sided_extreme(b, 2, Direction::least).unique(), idx(b, "1"));
}

TEST(SidedExtreme, NoElementDivisibleByTwoAndThree)
{
    EXPECT_TRUE(sided_extreme(support::d2(), 2, Direction::greatest).absent());
}

TEST(SidedExtreme, SingletonIsEverything)
{
    BiPoset one = divisibility_biposet(1);
    for (int c : {1, 2})
        for (Direction dir : {Direction::greatest, Direction::least})
            EXPECT_EQ(sided_extreme(one, c, dir).unique(), Index{0});
}

TEST(SidedExtreme, UnvalidatedRejected)
{
    BiPoset raw(GroundSet({"a"}), support::delta(1));
    EXPECT_THROW(sided_extreme(raw, 1, Direction::greatest), UsageError);
    EXPECT_THROW(extremal_report(raw), UsageError);
}

TEST(SidedExtreme, AnomalousWhenComponentIsNotAntisymmetric)
{
    BiPoset b = certify(BiPoset(GroundSet({"a", "b"}), Diamond(Rel::full(2), Rel::identity(2))));
    ASSERT_TRUE(b.certified_valid());
    SidedExtreme s = sided_extreme(b, 1, Direction::greatest);
    EXPECT_TRUE(s.anomalous());
    EXPECT_EQ(s.qualifiers, (std::vector<Index>{0, 1}));
    ExtremalReport r = extremal_report(b);
    EXPECT_FALSE(r.x);
    EXPECT_FALSE(r.notes.empty());
    EXPECT_FALSE(r.bounded);
}

TEST(ExtremalReport, DivisorsOfSixBounded)
{
    BiPoset b = divisors_biposet(6);
    ExtremalReport r = extremal_report(b);
    Index six = idx(b, "6"), one = idx(b, "1");
    EXPECT_EQ(r.x, six);
    EXPECT_EQ(r.y, six);
    EXPECT_EQ(r.g_max, six);
    EXPECT_EQ(r.g_min, six);
    EXPECT_EQ(r.u, one);
    EXPECT_EQ(r.v, one);
    EXPECT_EQ(r.l_max, one);
    EXPECT_EQ(r.l_min, one);
    EXPECT_TRUE(r.bounded);
    EXPECT_TRUE(r.notes.empty());
}

TEST(ExtremalReport, DivisibilityUnbounded)
{
    BiPoset b = support::d2();
    ExtremalReport r = extremal_report(b);
    EXPECT_EQ(r.x, idx(b, "3"));
    EXPECT_FALSE(r.y);
    EXPECT_FALSE(r.g_max);
    EXPECT_FALSE(r.g_min);
    EXPECT_EQ(r.l_max, idx(b, "1"));
    EXPECT_EQ(r.l_min, idx(b, "1"));
    EXPECT_FALSE(r.bounded);
}

TEST(ExtremalReport, PowersetOfTwo)
{
    BiPoset b = powerset_biposet(2);
    ExtremalReport r = extremal_report(b);
    Index full = idx(b, "s3"), empty = idx(b, "s0");
    EXPECT_EQ(r.x, full);
    EXPECT_EQ(r.y, full);
    EXPECT_EQ(r.g_max, full);
    EXPECT_EQ(r.g_min, full);
    EXPECT_EQ(r.l_max, empty);
    EXPECT_EQ(r.l_min, empty);
    EXPECT_TRUE(r.bounded);
}

TEST(ExtremalReport, IncomparableSidesLeaveGapsWithNote)
{
    // x = a (r1 top) and y = b (r2 top), neither <> the other
    Diamond d = support::make(2, {{0, 0}, {1, 1}, {1, 0}}, {{0, 0}, {1, 1}, {0, 1}});
    BiPoset b = certify(BiPoset(GroundSet({"a", "b"}), d));
    ASSERT_TRUE(b.certified_valid());
    ExtremalReport r = extremal_report(b);
    EXPECT_EQ(r.x, Index{0});
    EXPECT_EQ(r.y, Index{1});
    EXPECT_FALSE(r.g_max);
    EXPECT_FALSE(r.g_min);
    EXPECT_FALSE(r.notes.empty());
}

TEST(Extremal, SidedAgreesWithBruteForceAtThree)
{
    for (const Diamond& d : valid_structures(3))
        for (int c : {1, 2})
            for (bool greatest : {true, false}) {
                auto got = sided_extreme(d, c, greatest ? Direction::greatest : Direction::least).qualifiers;
                ASSERT_EQ(got, brute_extreme(d.component(c), greatest));
            }
}

TEST(Extremal, CandidatesAtMostOneAtThree)
{
    for (const Diamond& d : valid_structures(3)) {
        ExtremalCandidates c = extremal_candidates(d);
        ASSERT_LE(c.g_max.size(), 1u);
        ASSERT_LE(c.g_min.size(), 1u);
        ASSERT_LE(c.l_max.size(), 1u);
        ASSERT_LE(c.l_min.size(), 1u);
    }
}

TEST(Extremal, PairSupInf)
{
    Diamond d = support::d2().diamond();
    EXPECT_EQ(pair_sup(d, 0, 1), (std::vector<Index>{1}));
    EXPECT_EQ(pair_inf(d, 0, 1), (std::vector<Index>{0}));
    EXPECT_TRUE(pair_sup(d, 1, 2).empty());
    EXPECT_EQ(pair_sup(d, 2, 2), (std::vector<Index>{2}));
}
