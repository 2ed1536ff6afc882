#include <doctest.h>

#include "invrel/bijections.hpp"
#include "invrel/enumerate.hpp"
#include "invrel/permutations.hpp"

using namespace invrel;

TEST_CASE("permutation basics") {
    const auto pi = parse_permutation("42513");
    CHECK(pi.size() == 5);
    CHECK(pi(1) == 4);
    CHECK(to_string(reverse(parse_permutation("123"))) == "321");
    CHECK(to_string(reverse_complement(pi)) == "35142");
    CHECK(reverse_complement(reverse_complement(pi)) == pi);
    CHECK(reverse_complement(Permutation::identity(6)) == Permutation::identity(6));
    CHECK(is_involution(pi));
    CHECK_FALSE(is_involution(parse_permutation("231")));
    CHECK(pi.inverse() == pi);
    CHECK_THROWS_AS(Permutation({1, 1}), DomainError);
    CHECK_THROWS_AS(parse_permutation("12a"), ParseError);
}

TEST_CASE("symmetries are involutions") {
    for (int n = 0; n <= 6; ++n) {
        for_each_permutation(n, [&](std::span<const int> s) {
            const Permutation pi(std::vector<int>(s.begin(), s.end()));
            CHECK(reverse(reverse(pi)) == pi);
            CHECK(complement(complement(pi)) == pi);
            CHECK(reverse_complement(pi) == complement(reverse(pi)));
        });
    }
}

TEST_CASE("vincular grammar") {
    const auto v = parse_vincular("(124)3");
    CHECK(v.size() == 4);
    CHECK(v.adjacent(1));
    CHECK(v.adjacent(2));
    CHECK_FALSE(v.adjacent(3));
    CHECK(v.to_string() == "(124)3");
    CHECK(parse_vincular("2(134)").to_string() == "2(134)");
    CHECK(parse_vincular("(321)") == VincularPattern::consecutive({3, 2, 1}));
    CHECK(parse_vincular("213") == VincularPattern::classical({2, 1, 3}));
    CHECK_THROWS_AS(parse_vincular("(12"), ParseError);
    CHECK_THROWS_AS(parse_vincular("113"), ParseError);
}

TEST_CASE("vincular avoidance") {
    CHECK(count_vincular_avoiders(parse_vincular("(124)3"), 6) == 584);
    CHECK(avoids_vincular(Permutation::identity(3), VincularPattern::consecutive({3, 2, 1})));
    CHECK(count_vincular_avoiders(VincularPattern::consecutive({3, 2, 1}), 5) == 70);
    CHECK_FALSE(avoids_vincular(parse_permutation("1243"), parse_vincular("(124)3")));
    CHECK(avoids_vincular(parse_permutation("1423"), parse_vincular("(124)3")));
    CHECK(avoids_vincular(parse_permutation("14253"), parse_vincular("(124)3")));
    CHECK_FALSE(avoids_vincular(parse_permutation("14253"), parse_vincular("1(24)3")));
}

TEST_CASE("vincular classes and inversion sequences") {
    const std::uint64_t expected[] = {1, 2, 6, 23, 107, 584, 3660, 25910};
    for (int n = 1; n <= 8; ++n) {
        for (const char* v : {"(124)3", "2(134)", "(421)3", "3(124)"})
            CHECK(count_vincular_avoiders(parse_vincular(v), n) == expected[n - 1]);
        CHECK(count_avoiders(parse_pattern(">,>="), n).total == expected[n - 1]);
        CHECK(count_avoiders(parse_pattern(">=,>"), n).total == expected[n - 1]);
    }
}

TEST_CASE("theta maps 2(134) and 3(124) avoiders onto the two classes") {
    const auto a = parse_vincular("2(134)");
    const auto b = parse_vincular("3(124)");
    for (int n = 0; n <= 7; ++n) {
        for_each_permutation(n, [&](std::span<const int> s) {
            const auto e = theta(Permutation(std::vector<int>(s.begin(), s.end())));
            CHECK(avoids_vincular(s, a) == avoids(e, parse_pattern(">,>=")));
            CHECK(avoids_vincular(s, b) == avoids(e, parse_pattern(">=,>")));
        });
    }
}

TEST_CASE("classical avoidance") {
    CHECK(count_avoiders_classical({parse_permutation("213"), parse_permutation("321")}, 6) == 16);
    CHECK(count_avoiders_classical(
              {parse_permutation("2143"), parse_permutation("3142"), parse_permutation("4132")}, 4) == 21);
    CHECK(count_avoiders_classical({parse_permutation("12")}, 1) == 1);
    CHECK(count_avoiders_classical({parse_permutation("12")}, 5) == 1);
}

TEST_CASE("involution counts") {
    const std::uint64_t expected[] = {1, 1, 2, 4, 10, 26, 76, 232, 764, 2620};
    for (int n = 0; n <= 9; ++n) CHECK(count_involutions(n) == expected[n]);
    if (!guards_disabled()) CHECK_THROWS_AS(count_involutions(11), ResourceLimitError);
}
