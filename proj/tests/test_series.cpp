#include <doctest.h>

#include "invrel/bijections.hpp"
#include "invrel/enumerate.hpp"
#include "invrel/series.hpp"

using namespace invrel;

namespace {

TruncatedSeries ts(int order, std::initializer_list<long> c) {
    std::vector<mpq_class> v;
    for (long x : c) v.emplace_back(x);
    return TruncatedSeries(order, v);
}

std::vector<std::string> ints(const TruncatedSeries& s) {
    std::vector<std::string> out;
    for (const auto& c : integer_coefficients(s)) out.push_back(c.get_str());
    return out;
}

} // namespace

TEST_CASE("poly arithmetic") {
    const Poly t = Poly::t();
    const Poly p = Poly(1) + t;
    CHECK((p * p).to_string() == "1 + 2*t + t^2");
    CHECK((p - p).is_zero());
    CHECK((p * p).evaluate(2) == 9);
    CHECK(Poly({0, 0, 3}).degree() == 2);
    CHECK(Poly().degree() == -1);
    CHECK(Poly(mpq_class(-1, 3)).to_string() == "-1/3");
}

TEST_CASE("series arithmetic") {
    const auto one = TruncatedSeries::constant(6, 1);
    const auto geo = one / ts(6, {1, -1});
    CHECK(geo == TruncatedSeries::geometric(6));
    CHECK(ts(6, {1, -1}) * ts(6, {1, 1}) == ts(6, {1, 0, -1}));
    CHECK(TruncatedSeries::z(6) * geo == geo.shift_up(1));
    CHECK(ts(4, {0, 2, 3}).divide_by_z() == ts(3, {2, 3}));
    CHECK_THROWS_AS(one / ts(6, {0, 1}), DomainError);
    CHECK_THROWS_AS(one.divide_by_z(), DomainError);
    CHECK((ts(3, {1, 2}) + ts(5, {1})).order() == 3);
}

TEST_CASE("series sqrt") {
    CHECK(TruncatedSeries::constant(5, 1).sqrt() == TruncatedSeries::constant(5, 1));
    const auto s = ts(8, {1, -4}).sqrt();
    CHECK(s * s == ts(8, {1, -4}));
    CHECK(s[1] == -2);
    CHECK(s[2] == -2);
    CHECK(s[3] == -4);
    CHECK(ts(8, {1, 2, 1}).sqrt() == ts(8, {1, 1}));
    CHECK_THROWS_AS(ts(4, {2}).sqrt(), DomainError);
    const auto b = BivariateSeries(6, {Poly(1), Poly({0, -4})}).sqrt();
    CHECK(b * b == BivariateSeries(6, {Poly(1), Poly({0, -4})}));
}

TEST_CASE("series composition") {
    const auto c = evaluate_t(gf_catalog("catalan", 8), 1);
    const auto p = compose(c, ts(8, {0, 1, 1}));
    CHECK(ints(p) == std::vector<std::string>{"1", "1", "3", "9", "31", "113", "431", "1697", "6847"});
    for (int n = 0; n <= 5; ++n) CHECK(p[n] == static_cast<long>(marked_dyck_paths(n, 2, false).size()));
    CHECK(compose(c, TruncatedSeries::z(8)) == c);
    CHECK(compose(TruncatedSeries::geometric(8), ts(8, {0, 0, 1})) == ts(8, {1, 0, 1, 0, 1, 0, 1, 0, 1}));
    CHECK_THROWS_AS(compose(c, ts(8, {1, 1})), DomainError);
}

TEST_CASE("exp and integral") {
    const auto e = TruncatedSeries::z(6).exp();
    CHECK(egf_to_counts(e).size() == 7);
    for (const auto& v : egf_to_counts(e)) CHECK(v == 1);
    CHECK(e.integral() + TruncatedSeries::constant(6, 1) == e.truncated(6));
}

TEST_CASE("printing") {
    CHECK(evaluate_t(gf_catalog("thm_1_3", 6), 1).to_string() == "1 + z + 2*z^2 + 6*z^3 + 20*z^4 + 72*z^5 + 272*z^6");
    CHECK(evaluate_t(gf_catalog("catalan", 4), 1).to_string() == "1 + z + 2*z^2 + 5*z^3 + 14*z^4");
    CHECK(ts(3, {1, -1}).to_string() == "1 - z");
    CHECK(TruncatedSeries(3, {mpq_class(1, 2)}).to_string() == "1/2");
    CHECK(gf_catalog("I_gt_le", 2).to_string() == "1 + [t]*z + [t + t^2]*z^2");
}

TEST_CASE("catalog examples") {
    CHECK(ints(evaluate_t(gf_catalog("thm_1_3", 9), 1)) ==
          std::vector<std::string>{"1", "1", "2", "6", "20", "72", "272", "1064", "4272", "17504"});
    CHECK(ints(evaluate_t(gf_catalog("I_eq_le", 5), 1)) == std::vector<std::string>{"1", "1", "2", "3", "5", "8"});
    const auto r4 = gf_catalog("R_zt", 4)[4];
    CHECK(r4.evaluate(1) == 20);
    for (int d = 1; d <= 4; ++d) CHECK(r4.coeff(d) == r4.coeff(5 - d));

    std::vector<std::string> ne_ne;
    for (const auto& v : egf_to_counts(evaluate_t(gf_catalog("egf_ne_ne", 6), 1))) ne_ne.push_back(v.get_str());
    CHECK(ne_ne == std::vector<std::string>{"1", "1", "2", "4", "10", "26", "76"});
    std::vector<std::string> lt_lt;
    for (const auto& v : egf_to_counts(evaluate_t(gf_catalog("egf_lt_lt", 6), 1))) lt_lt.push_back(v.get_str());
    CHECK(lt_lt == std::vector<std::string>{"1", "1", "2", "5", "17", "70", "349"});

    CHECK(series_catalog().size() == 15);
    CHECK_THROWS_AS(gf_catalog("nope"), DomainError);
    CHECK_THROWS_AS(egf_to_counts(TruncatedSeries(3, {0, 0, mpq_class(1, 3)})), DomainError);
}

TEST_CASE("bivariate entries match joint (n, dist) counts") {
    for (const auto& e : series_catalog()) {
        if (e.triple.empty()) continue;
        const auto t = parse_triple(e.triple);
        const auto s = gf_catalog(e.name, 8);
        for (int n = 0; n <= 8; ++n) {
            const auto c = count_avoiders_triple(t, n);
            if (e.kind == SeriesKind::ogf) {
                CHECK(s[n] == Poly(static_cast<long>(c.total)));
                continue;
            }
            Poly expected;
            for (auto [d, v] : c.by_dist) {
                std::vector<mpq_class> coeffs(static_cast<std::size_t>(d) + 1);
                coeffs.back() = static_cast<long>(v);
                expected += Poly(coeffs);
            }
            CHECK(s[n] == expected);
        }
    }
}

TEST_CASE("symmetry identity t R(zt, 1/t) - t = R(z, t) - 1") {
    const int N = 11;
    const auto r = gf_catalog("R_zt", N);
    for (int n = 1; n <= N; ++n) {
        // Coefficient of z^n in t R(zt, 1/t) is t^{n+1} r_n(1/t).
        const auto& c = r[n];
        for (int d = 0; d <= n + 1; ++d) CHECK(c.coeff(n + 1 - d) == c.coeff(d));
    }
}

TEST_CASE("coefficient strings") {
    const auto s = gf_catalog("I_eq_lt", 2);
    const auto strs = coefficient_strings(s);
    REQUIRE(strs.size() == 3);
    CHECK(strs[0] == std::vector<std::string>{"1"});
    CHECK(strs[1] == std::vector<std::string>{"0", "1"});
    CHECK(coefficient_strings(ts(2, {1, 2})) == std::vector<std::string>{"1", "2", "0"});
}
