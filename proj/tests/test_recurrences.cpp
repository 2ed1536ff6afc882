#include <doctest.h>

#include "invrel/enumerate.hpp"
#include "invrel/recurrences.hpp"
#include "invrel/reference.hpp"

using namespace invrel;

namespace {

mpz_class big(std::uint64_t v) { return mpz_class(std::to_string(v)); }

} // namespace

TEST_CASE("number helpers") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(fibonacci(10) == 55);
    CHECK(catalan_number(5) == 42);
    CHECK(big_factorial(6) == 720);
    const long d[] = {1, 0, 1, 2, 9, 44, 265};
    for (long n = 0; n <= 6; ++n) CHECK(derangements(n) == d[n]);
    for (long n = 1; n <= 20; ++n) CHECK((big_factorial(n + 1) - derangements(n + 1)) % n == 0);
}

TEST_CASE("closed form examples") {
    CHECK(closed_form("ge_ne", 9) == 37);
    CHECK(closed_form("eq_eq", 9) == 254871);
    CHECK(closed_form("ne_eq", 1) == 1);
    CHECK(closed_form("le_ne", 1) == 1);
    CHECK(closed_form("le_ne", 5) == 2);
    CHECK_THROWS_AS(closed_form("nope", 3), DomainError);
    CHECK_THROWS_AS(closed_form("ge_ne", 0), DomainError);
}

TEST_CASE("closed forms agree with brute force") {
    for (const auto& cf : closed_form_catalog()) {
        const bool triple = std::count(cf.pattern.begin(), cf.pattern.end(), ',') == 2;
        for (int n = 1; n <= 9; ++n) {
            const auto want = triple ? count_avoiders_triple(parse_triple(cf.pattern), n).total
                                     : count_avoiders(parse_pattern(cf.pattern), n).total;
            CHECK_MESSAGE(closed_form(cf.name, n) == big(want), cf.name << " n=" << n);
        }
    }
}

TEST_CASE("rec_ne_ne and rec_eq_eq") {
    const auto a = rec_ne_ne(10);
    CHECK(a.at(0) == 1);
    CHECK(a.at(1) == 1);
    CHECK(a.at(4) == 10);
    CHECK(a.at(8) == 764);
    const auto b = rec_eq_eq(9);
    CHECK(b.at(2) == 2);
    CHECK(b.at(3) == 5);
    CHECK(b.at(7) == 3641);
    for (int n = 1; n <= 9; ++n) {
        CHECK(a.at(n) == big(count_avoiders(parse_pattern("!=,!="), n).total));
        CHECK(b.at(n) == big(count_avoiders(parse_pattern("=,="), n).total));
        CHECK(b.at(n) == closed_form("eq_eq", n));
    }
}

TEST_CASE("refined (>,>=) table") {
    const auto t = rec_refined_gt_ge(10);
    const long sums[] = {1, 2, 6, 23, 107, 584, 3660, 25910, 204564};
    for (int n = 1; n <= 9; ++n) CHECK(t.total(n) == sums[n - 1]);
    CHECK(t.total(0) == 1);
    for (int k = 0; k < 1; ++k) CHECK(t.refined(1, k) == 0);
    for (int n = 1; n <= 10; ++n) {
        CHECK(t.all(n, n - 1) == t.total(n - 1));
        CHECK(t.refined(n, n - 1) == 0);
        CHECK(t.all(n, n) == 0);
        CHECK(t.all(n, -1) == 0);
    }
    const auto g = rec_refined_generic(parse_pattern(">,>="), 10);
    for (int n = 1; n <= 10; ++n)
        for (int k = 0; k < n; ++k) {
            CHECK(t.all(n, k) == g.all(n, k));
            CHECK(t.refined(n, k) == g.refined(n, k));
        }
    CHECK(t.to_csv().rfind("n,k,all,refined\n", 0) == 0);
}

TEST_CASE("generic refined tables agree with brute force") {
    for (const auto& p : all_relation_patterns()) {
        const auto t = rec_refined_generic(p, 8);
        for (int n = 1; n <= 8; ++n) {
            const auto c = count_avoiders(p, n);
            CHECK(t.total(n) == big(c.total));
            for (int k = 0; k < n; ++k) {
                const auto it = c.by_last_entry.find(k);
                CHECK(t.all(n, k) == big(it == c.by_last_entry.end() ? 0 : it->second));
            }
        }
    }
}

TEST_CASE("cross refinement identity") {
    const auto a = rec_refined_generic(parse_pattern(">,>="), 10);
    const auto b = rec_refined_generic(parse_pattern(">=,>"), 10);
    for (int n = 1; n <= 10; ++n)
        for (int k = 0; k < n; ++k) CHECK(a.refined(n, k) == b.refined(n, k + 1));
}

TEST_CASE("refined guard") {
    if (guards_disabled()) return;
    CHECK_THROWS_AS(rec_refined_generic(parse_pattern("<,<"), 15), ResourceLimitError);
}

TEST_CASE("reference data") {
    int rows = 0;
    for (const auto& r : reference_sequences()) {
        if (!r.table_row) continue;
        ++rows;
        CHECK(r.terms.size() == 9);
        CHECK(r.offset == 1);
    }
    CHECK(rows == 14);
    REQUIRE(find_reference("A071356") != nullptr);
    CHECK(find_reference("A071356")->terms.back() == 17504);
    CHECK(find_reference("A999999") == nullptr);
    CHECK(unimodal_triples().size() == 10);
    CHECK(reference_partition(EquivalenceLevel::wilf).size() == 30);
    CHECK(reference_partition(EquivalenceLevel::strong).size() == 31);
}
