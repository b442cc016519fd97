#include "bdist/error.hpp"
#include "bdist/label_distance.hpp"
#include "bdist/lts.hpp"

#include "support/generators.hpp"

#include <catch_amalgamated.hpp>

using namespace bdist;

TEST_CASE("parse_lts reads the smallest non-blocking system")
{
    Lts lts = parse_lts("states: s\ninit: s\ntrans: s a s");
    REQUIRE(lts.states() == std::set<std::string>{"s"});
    REQUIRE(lts.initial() == "s");
    REQUIRE(lts.transitions().size() == 1);
    REQUIRE(validate(lts).empty());
}

TEST_CASE("parse_lts deduplicates transitions")
{
    Lts once = parse_lts("states: s\ninit: s\ntrans: s a s");
    Lts twice = parse_lts("states: s\ninit: s\ntrans: s a s\ntrans: s a s");
    REQUIRE(once == twice);
}

TEST_CASE("parse_lts accepts comments, cumulative state lines and any order")
{
    Lts lts = parse_lts("# two states\n"
                        "trans: q p q   # back\n"
                        "states: p\n"
                        "states: q\n"
                        "init: q\n"
                        "trans: p p q\n");
    REQUIRE(lts.states().size() == 2);
    REQUIRE(lts.alphabet() == std::set<Label>{Label::symbol("p")});
}

TEST_CASE("parse_lts rejects invalid documents")
{
    SECTION("blocking state")
    {
        try {
            parse_lts("states: s t\ninit: s\ntrans: s a t");
            FAIL("expected a validation error");
        } catch (const ValidationError& e) {
            REQUIRE(e.problems().size() == 1);
            REQUIRE_THAT(e.problems()[0], Catch::Matchers::ContainsSubstring("'t'"));
        }
    }
    SECTION("missing init")
    {
        REQUIRE_THROWS_AS(parse_lts("states: s\ntrans: s a s"), ParseError);
    }
    SECTION("undeclared state")
    {
        REQUIRE_THROWS_AS(parse_lts("states: s\ninit: s\ntrans: s a u"), ValidationError);
    }
    SECTION("mixed labels")
    {
        REQUIRE_THROWS_AS(parse_lts("states: s\ninit: s\ntrans: s a s\ntrans: s 1 s"), ValidationError);
    }
    SECTION("syntax error carries line and column")
    {
        try {
            parse_lts("states: s\ninit: s\ntrans: s a s extra");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            REQUIRE(e.line() == 3);
            REQUIRE(e.column() == 14);
        }
        REQUIRE_THROWS_AS(parse_lts("states: s\nstart: s\n"), ParseError);
        REQUIRE_THROWS_AS(parse_lts("states: s\ninit: s\ninit: s\ntrans: s a s"), ParseError);
    }
}

TEST_CASE("numeric labels are exact")
{
    Lts lts = parse_lts("states: s\ninit: s\ntrans: s 0.25 s\ntrans: s 1/4 s\ntrans: s -3 s");
    REQUIRE(lts.has_numeric_labels());
    // 0.25 and 1/4 are the same label.
    REQUIRE(lts.transitions().size() == 2);
    REQUIRE(lts.alphabet().begin()->number() == Rational(-3));
}

TEST_CASE("validate reports every violation")
{
    REQUIRE(validate(Lts({"s"}, "s", {{"s", Label::symbol("a"), "s"}})).empty());

    auto blocking = validate(Lts({"s", "t"}, "s", {{"s", Label::symbol("a"), "t"}}));
    REQUIRE(blocking == std::vector<Diagnostic>{{Diagnostic::Kind::Blocking, "t"}});

    auto bad_initial = validate(Lts({"s"}, "x", {{"s", Label::symbol("a"), "s"}}));
    REQUIRE(bad_initial == std::vector<Diagnostic>{{Diagnostic::Kind::BadInitial, "x"}});

    auto several = validate(Lts({"s"}, "x", {{"s", Label::symbol("a"), "u"}, {"s", Label::parse("2"), "s"}}));
    REQUIRE(several.size() == 3); // bad initial, undeclared u, mixed labels
}

TEST_CASE("serialize and parse_lts round-trip on random systems")
{
    std::mt19937_64 rng(7);
    testing::LtsShape shape{5, 3, testing::symbols(3)};
    for (int i = 0; i < 50; ++i) {
        Lts lts = testing::random_lts(rng, shape);
        Lts back = parse_lts(serialize(lts));
        REQUIRE(back == lts);
        REQUIRE(validate(back).empty());
    }
    testing::LtsShape numeric{4, 2, testing::numbers({-1, 0, 2})};
    for (int i = 0; i < 20; ++i) {
        Lts lts = testing::random_lts(rng, numeric);
        REQUIRE(parse_lts(serialize(lts)) == lts);
    }
}

TEST_CASE("IndexedLts orders states and successors deterministically")
{
    Lts lts = parse_lts("states: z a\ninit: z\ntrans: z b a\ntrans: z a z\ntrans: a a a");
    IndexedLts idx = IndexedLts::from(lts);
    REQUIRE(idx.names == std::vector<std::string>{"a", "z"});
    REQUIRE(idx.initial == 1);
    REQUIRE(idx.out[1].size() == 2);
    REQUIRE(idx.out[1][0].first == Label::symbol("a"));
}

TEST_CASE("parse_label_distance")
{
    std::set<Label> alphabet{Label::symbol("a"), Label::symbol("b")};
    const Label a = Label::symbol("a"), b = Label::symbol("b");

    SECTION("table plus default")
    {
        LabelDistance d = parse_label_distance("default: eq0-else1\nd a b 1", alphabet);
        REQUIRE(d(a, b) == ExtValue(1));
        REQUIRE(d(b, a) == ExtValue(1));
        REQUIRE(d(a, a) == ExtValue(0));
    }
    SECTION("directional entries")
    {
        LabelDistance d = parse_label_distance("d a b 1/2\nd b a 3", alphabet);
        REQUIRE(d(a, b) == ExtValue(Rational(1, 2)));
        REQUIRE(d(b, a) == ExtValue(3));
    }
    SECTION("empty document with infinite default")
    {
        LabelDistance d = parse_label_distance("default: eq0-elseinf\n", alphabet);
        REQUIRE(d(a, b).is_infinite());
        REQUIRE(d(b, b) == ExtValue(0));
    }
    SECTION("infinite entries")
    {
        REQUIRE(parse_label_distance("d a b inf", alphabet)(a, b).is_infinite());
    }
    SECTION("errors")
    {
        REQUIRE_THROWS_AS(parse_label_distance("d a a 2", alphabet), ParseError);
        REQUIRE_THROWS_AS(parse_label_distance("d a b -1", alphabet), ParseError);
        REQUIRE_THROWS_AS(parse_label_distance("d a c 1", alphabet), ParseError);
        REQUIRE_THROWS_AS(parse_label_distance("default: sometimes", alphabet), ParseError);
        REQUIRE_THROWS_AS(parse_label_distance("d a b", alphabet), ParseError);
    }
    SECTION("numeric labels match by value")
    {
        std::set<Label> numeric{Label::parse("1"), Label::parse("2")};
        LabelDistance d = parse_label_distance("d 1.0 4/2 5", numeric);
        REQUIRE(d(Label::parse("1"), Label::parse("2")) == ExtValue(5));
    }
}

TEST_CASE("rationals parse exactly")
{
    REQUIRE(parse_rational("0.1") == Rational(1, 10));
    REQUIRE(parse_rational("-7/14") == Rational(-1, 2));
    REQUIRE(parse_rational("+3") == Rational(3));
    REQUIRE_FALSE(try_parse_rational("1/0"));
    REQUIRE_FALSE(try_parse_rational("1e3"));
    REQUIRE_FALSE(try_parse_rational("."));
    REQUIRE(to_string(parse_rational("6/4")) == "3/2");
}
