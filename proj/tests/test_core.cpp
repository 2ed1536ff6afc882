#include <doctest.h>

#include <set>

#include "invrel/core.hpp"
#include "invrel/enumerate.hpp"

using namespace invrel;

namespace {

InversionSequence seq(const char* s) { return parse_inversion_sequence(s); }

std::vector<int> word(std::initializer_list<int> w) { return std::vector<int>(w); }

} // namespace

TEST_CASE("inversion sequence validation and text form") {
    CHECK(InversionSequence::is_valid(word({0, 1, 0, 3})));
    CHECK_FALSE(InversionSequence::is_valid(word({1})));
    CHECK_FALSE(InversionSequence::is_valid(word({0, 2})));
    CHECK_FALSE(InversionSequence::is_valid(word({0, -1})));
    CHECK_THROWS_AS(InversionSequence({0, 0, 3}), DomainError);

    const auto e = seq("002241250");
    CHECK(e.size() == 9);
    CHECK(e.entry(1) == 0);
    CHECK(e.entry(5) == 4);
    CHECK(e.last() == 0);
    CHECK(to_string(e) == "002241250");
    CHECK_THROWS(e.entry(0));
    CHECK_THROWS(e.entry(10));

    const auto long_e = parse_inversion_sequence("0,1,2,3,4,5,6,7,8,9,10");
    CHECK(long_e.last() == 10);
    CHECK(to_string(long_e) == "0,1,2,3,4,5,6,7,8,9,10");
    CHECK_THROWS_AS(parse_inversion_sequence("0a1"), ParseError);
    CHECK_THROWS_AS(parse_inversion_sequence("02"), ParseError);
    CHECK(parse_inversion_sequence("").empty());
}

TEST_CASE("reduction") {
    CHECK(reduce(word({4, 2, 4})) == word({1, 0, 1}));
    CHECK(reduce(word({0, 0, 0})) == word({0, 0, 0}));
    CHECK(reduce(word({3, 1, 4, 1, 5})) == word({1, 0, 2, 0, 3}));
    CHECK(reduce(word({})).empty());
    CHECK(reduction(word({7, 7, 2})) == WordPattern{1, 1, 0});
    CHECK_THROWS_AS(WordPattern({0, 2}), DomainError);
}

TEST_CASE("relation semantics") {
    CHECK(relation_holds(Relation::GE, 2, 2));
    CHECK(relation_holds(Relation::DASH, 7, 0));
    CHECK_FALSE(relation_holds(Relation::NE, 3, 3));
    CHECK(relation_holds(Relation::LT, 1, 2));
    CHECK_FALSE(relation_holds(Relation::GT, 1, 2));
    CHECK(relation_holds(Relation::EQ, 5, 5));
    CHECK(relation_holds(Relation::LE, 5, 5));
}

TEST_CASE("pattern parsing and indexing") {
    const auto all = all_relation_patterns();
    REQUIRE(all.size() == 36);
    std::set<std::string> names;
    for (int i = 0; i < 36; ++i) {
        CHECK(all[static_cast<std::size_t>(i)].index() == i);
        CHECK(RelationPattern::from_index(i) == all[static_cast<std::size_t>(i)]);
        names.insert(all[static_cast<std::size_t>(i)].to_string());
        CHECK(parse_pattern(all[static_cast<std::size_t>(i)].to_string()) == all[static_cast<std::size_t>(i)]);
    }
    CHECK(names.size() == 36);

    CHECK(parse_pattern(">=,<") == RelationPattern(Relation::GE, Relation::LT));
    CHECK(parse_pattern(" != , <= ") == RelationPattern(Relation::NE, Relation::LE));
    CHECK_THROWS_AS(parse_pattern("-,<"), ParseError);
    CHECK_THROWS_AS(parse_pattern(">=,<,<"), ParseError);
    CHECK_THROWS_AS(parse_pattern("=>,<"), ParseError);

    const auto t = parse_triple(">,<=,-");
    CHECK(t.r1 == Relation::GT);
    CHECK(t.r2 == Relation::LE);
    CHECK(t.r3 == Relation::DASH);
    CHECK(t.to_string() == ">,<=,-");
    CHECK_THROWS_AS(parse_triple(">,<="), ParseError);
}

TEST_CASE("occurrence sets") {
    const auto e = seq("002241250");
    CHECK(occurrence_set(e, parse_pattern(">,<")) == word({5}));
    CHECK(occurrence_set(e, parse_pattern("=,>")).empty());
    CHECK(avoids(e, parse_pattern("=,>")));
    CHECK(occurrence_set(seq("0100"), parse_pattern("!=,>=")) == word({1, 2}));
    CHECK(occurrence_mask(seq("0100"), parse_pattern("!=,>=")) == 0b11);
    CHECK(avoids(seq("0012234"), parse_pattern(">,=")));
    for (const auto& p : all_relation_patterns()) {
        CHECK(avoids(seq("0"), p));
        CHECK(avoids(seq("01"), p));
        CHECK(occurrence_set(seq(""), p).empty());
    }
}

TEST_CASE("word pattern avoidance") {
    const auto e = seq("002241250");
    CHECK(avoids_word(e, WordPattern{2, 1, 0}));
    CHECK_FALSE(avoids_word(e, WordPattern{2, 0, 1}));
    CHECK(word_occurrences(e, WordPattern{2, 0, 1}) == word({5}));
    CHECK(avoids_word(seq("00"), WordPattern{0, 0, 0}));
}

TEST_CASE("triple avoidance") {
    CHECK_FALSE(avoids_triple(seq("0012234"), parse_triple(">=,<=,<=")));
    CHECK(avoids_triple(seq("0"), parse_triple(">=,<=,<=")));
    CHECK(avoids_triple(seq("012"), parse_triple(">,<=,-")));
    CHECK_FALSE(avoids_triple(seq("0101"), parse_triple(">,<=,-")));
}

TEST_CASE("complement and dist") {
    CHECK(complement(seq("0")) == seq("0"));
    CHECK(complement(seq("012")) == seq("000"));
    CHECK(complement(seq("002241250")) == seq("010104428"));
    CHECK(dist(seq("011344421")) == 5);
    CHECK(dist(seq("0000000")) == 1);
    CHECK(dist(seq("01032")) == 4);
    CHECK(dist(seq("")) == 0);
}

// Exhaustive properties over I_n for small n.
TEST_CASE("complement and pattern dictionary properties") {
    const auto ge_lt = parse_pattern(">=,<");
    const auto lt_ge = parse_pattern("<,>=");
    const auto ge_ge = parse_pattern(">=,>=");
    const auto lt_lt = parse_pattern("<,<");
    const auto ne_ge = parse_pattern("!=,>=");
    for (int n = 0; n <= 7; ++n) {
        for_each_inversion_sequence(n, [&](std::span<const int> s) {
            const auto e = InversionSequence::from_span(s);
            const auto c = complement(e);
            REQUIRE(complement(c) == e);
            CHECK(occurrence_set(e, ge_lt) == occurrence_set(c, lt_ge));
            CHECK(occurrence_set(e, ge_ge) == occurrence_set(c, lt_lt));
            CHECK(avoids(e, lt_lt) == avoids_word(e, WordPattern{0, 1, 2}));
            CHECK(avoids(e, parse_pattern("=,=")) == avoids_word(e, WordPattern{0, 0, 0}));
            CHECK(avoids(e, parse_pattern(">,>")) == avoids_word(e, WordPattern{2, 1, 0}));
            CHECK(avoids(e, lt_ge) == avoids(e, ne_ge));
        });
    }
}

TEST_CASE("occurrence set is the union of word-pattern occurrences") {
    // Every reduced word of length 3.
    const std::vector<WordPattern> words = {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0},
                                            {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : all_relation_patterns()) {
        std::vector<WordPattern> matching;
        for (const auto& w : words)
            if (p.matches(w.letters()[0], w.letters()[1], w.letters()[2])) matching.push_back(w);
        for (int n = 3; n <= 6; ++n) {
            for_each_inversion_sequence(n, [&](std::span<const int> e) {
                std::set<int> expected;
                for (const auto& w : matching)
                    for (int i : word_occurrences(e, w)) expected.insert(i);
                const auto got = occurrence_set(e, p);
                CHECK(std::vector<int>(expected.begin(), expected.end()) == got);
            });
        }
    }
}
