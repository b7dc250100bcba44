#include "support.hpp"

#include <gtest/gtest.h>

using namespace biposet;

namespace {

std::string parse_error_of(const std::string& text)
{
    try {
        parse_structure(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST(ParseStructure, SingleElement)
{
    BiPoset b = parse_structure("elements: a\nr1: a a\nr2: a a");
    EXPECT_EQ(b.size(), 1u);
    EXPECT_EQ(b.diamond(), support::delta(1));
    EXPECT_FALSE(b.certificate());
}

TEST(ParseStructure, CommentsBlankLinesAndRepeats)
{
    BiPoset b = parse_structure("# top\n\n  elements:  x  y \r\n# mid\nr1: x y\nr1: x y\nr2: y y\n");
    EXPECT_EQ(b.ground().labels(), (std::vector<std::string>{"x", "y"}));
    EXPECT_EQ(b.diamond().r1().count(), 1u);
    EXPECT_TRUE(b.diamond().r2().test(1, 1));
}

TEST(ParseStructure, Errors)
{
    EXPECT_EQ(parse_error_of("elements: a b\nr1: a c"), "undeclared element c, line 2");
    EXPECT_EQ(parse_error_of("elements: a a"), "duplicate element a, line 1");
    EXPECT_EQ(parse_error_of("# only comments\n"), "missing 'elements:' line");
    EXPECT_EQ(parse_error_of("r1: a a"), "expected 'elements:' as the first declaration, line 1");
    EXPECT_EQ(parse_error_of("elements: a/b"), "invalid element name 'a/b', line 1");
    EXPECT_EQ(parse_error_of("elements: a\n\nr3: a a"), "expected 'r1:' or 'r2:', line 3");
    EXPECT_EQ(parse_error_of("elements: a\nr1: a"), "a relation line needs exactly two element names, line 2");
    EXPECT_EQ(parse_error_of("elements:"), "a structure needs at least one element, line 1");
    EXPECT_EQ(parse_error_of("elements: a\nelements: b"), "elements declared twice, line 2");
}

TEST(ParseStructure, SubsetStyleNames)
{
    BiPoset b = parse_structure("elements: {} {0_1}\nr1: {} {0_1}\n");
    EXPECT_TRUE(b.diamond().r1().test(0, 1));
}

TEST(Serialize, RoundTripDivisibility)
{
    BiPoset d = support::d2();
    std::string text = serialize_structure(d);
    BiPoset back = parse_structure(text);
    EXPECT_EQ(back, d);
    EXPECT_EQ(serialize_structure(back), text);
}

TEST(Serialize, RoundTripWholeEnumerationAtTwo)
{
    std::size_t count = 0;
    enumerate_biposets(2, [&](std::uint64_t, const Diamond& d) {
        BiPoset b = as_structure(d);
        std::string text = serialize_structure(b);
        BiPoset back = parse_structure(text);
        ASSERT_EQ(back, b);
        ASSERT_EQ(serialize_structure(back), text);
        ++count;
    });
    EXPECT_EQ(count, 11u);
}

TEST(Serialize, RoundTripPowerset)
{
    BiPoset p = powerset_biposet(3);
    EXPECT_EQ(parse_structure(serialize_structure(p)), p);
}

TEST(Mapping, ParseAndSerialize)
{
    GroundSet src({"a", "b"}), dst({"x", "y", "z"});
    Mapping m = parse_mapping("# map\na -> z\nb -> x\na -> z\n", src, dst);
    EXPECT_EQ(m, Mapping(3, {2, 0}));
    EXPECT_EQ(serialize_mapping(m, src, dst), "a -> z\nb -> x\n");
    EXPECT_EQ(parse_mapping(serialize_mapping(m, src, dst), src, dst), m);
}

TEST(Mapping, ParseErrors)
{
    GroundSet src({"a", "b"}), dst({"x"});
    auto err = [&](const std::string& t) {
        try {
            parse_mapping(t, src, dst);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    EXPECT_EQ(err("a -> x\n"), "mapping is not total: no image for b");
    EXPECT_EQ(err("a -> x\nb -> q\n"), "undeclared element q, line 2");
    EXPECT_EQ(err("a => x\n"), "expected '<source> -> <target>', line 1");
    GroundSet two({"x", "y"});
    EXPECT_THROW(parse_mapping("a -> x\na -> y\nb -> x\n", src, two), ParseError);
    EXPECT_THROW(serialize_mapping(Mapping::identity(3), src, dst), UsageError);
}

TEST(GaloisPairFile, RoundTrip)
{
    GaloisInstance g = singleton_example(powerset_biposet(1), 1);
    std::string text = serialize_galois_pair(g.pair, g.p.ground(), g.q.ground());
    EXPECT_EQ(text, "f:\ns0 -> 0\ns1 -> 0\ng:\n0 -> s1\n");
    EXPECT_EQ(parse_galois_pair(text, g.p.ground(), g.q.ground()), g.pair);
    EXPECT_THROW(parse_galois_pair("f:\ns0 -> 0\ns1 -> 0\n", g.p.ground(), g.q.ground()), ParseError);
    EXPECT_THROW(parse_galois_pair("s0 -> 0\n", g.p.ground(), g.q.ground()), ParseError);
    EXPECT_THROW(parse_galois_pair("f:\nf:\n", g.p.ground(), g.q.ground()), ParseError);
}

TEST(Dot, IdentityPairHasNoEdges)
{
    BiPoset b(GroundSet({"a", "b"}), support::delta(2));
    std::size_t edges = 99;
    std::string dot = emit_dot(b, DotComponent::both);
    EXPECT_EQ(support::dot_problem(dot, &edges), "");
    EXPECT_EQ(edges, 0u);
}

TEST(Dot, DivisibilityCoveringEdges)
{
    std::string dot = emit_dot(support::d2(), DotComponent::one);
    EXPECT_EQ(support::dot_problem(dot), "");
    EXPECT_NE(dot.find("\"1\" -> \"2\" [style=solid"), std::string::npos);
    EXPECT_NE(dot.find("\"2\" -> \"3\" [style=solid"), std::string::npos);
    EXPECT_EQ(dot.find("\"1\" -> \"3\""), std::string::npos);
    EXPECT_NE(dot.find("// r1: covering relation"), std::string::npos);
}

TEST(Dot, NonPartialOrderComponentDrawnRaw)
{
    BiPoset b(GroundSet({"a", "b"}), Diamond(Rel::full(2), Rel::identity(2)));
    std::string dot = emit_dot(b, DotComponent::one);
    EXPECT_EQ(support::dot_problem(dot), "");
    EXPECT_NE(dot.find("not a partial order"), std::string::npos);
    EXPECT_NE(dot.find("\"a\" -> \"b\""), std::string::npos);
    EXPECT_NE(dot.find("\"b\" -> \"a\""), std::string::npos);
}

TEST(Dot, WellFormedAcrossEnumerationAtThree)
{
    for (const Diamond& d : valid_structures(3))
        for (DotComponent c : {DotComponent::one, DotComponent::two, DotComponent::both})
            ASSERT_EQ(support::dot_problem(emit_dot(as_structure(d), c)), "");
}

TEST(Dot, ValidatorRejectsBrokenText)
{
    EXPECT_NE(support::dot_problem("digraph g {\n  \"a\";\n"), "");
    EXPECT_NE(support::dot_problem("digraph g {\n  \"a\" -> \"b\" [style=solid];\n}\n"), "");
    EXPECT_NE(support::dot_problem("graph g {\n}\n"), "");
}

TEST(CoveringPairs, ChainOfFour)
{
    Rel le = Rel::from_predicate(4, [](Index a, Index b) { return a <= b; });
    EXPECT_EQ(covering_pairs(le), (std::vector<std::pair<Index, Index>>{{0, 1}, {1, 2}, {2, 3}}));
}
