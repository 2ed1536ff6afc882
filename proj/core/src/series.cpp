#include "invrel/series.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace invrel {

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const mpq_class& c) : c_{c} { normalize(); }

Poly::Poly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) c_.emplace_back(c);
    normalize();
}

Poly::Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

void Poly::normalize() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

mpq_class Poly::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return c_[static_cast<std::size_t>(k)];
}

mpq_class Poly::evaluate(const mpq_class& t) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator*=(const mpq_class& s) {
    for (auto& c : c_) c *= s;
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= degree(); ++k) {
        const mpq_class& c = c_[static_cast<std::size_t>(k)];
        if (sgn(c) == 0) continue;
        mpq_class mag = abs(c);
        if (!out.empty()) {
            out += sgn(c) < 0 ? " - " : " + ";
        } else if (sgn(c) < 0) {
            out += "-";
        }
        const std::string mono = k == 1 ? "t" : "t^" + std::to_string(k);
        if (k == 0) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.get_str() + "*" + mono;
        }
    }
    return out;
}

namespace detail {

mpq_class unit_inverse(const mpq_class& c) { return mpq_class(1) / c; }

Poly unit_inverse(const Poly& c) {
    if (c.degree() != 0) throw DomainError("series division needs a constant leading coefficient in t");
    return Poly(mpq_class(1) / c.coeff(0));
}

std::string coeff_string(const mpq_class& c) { return c.get_str(); }

std::string coeff_string(const Poly& c) {
    if (c.degree() == 0) return c.coeff(0).get_str();
    return "[" + c.to_string() + "]";
}

} // namespace detail

// ---------------------------------------------------------------------------

TruncatedSeries evaluate_t(const BivariateSeries& s, const mpq_class& t) {
    std::vector<mpq_class> c;
    for (const auto& p : s.coeffs()) c.push_back(p.evaluate(t));
    return TruncatedSeries(s.order(), std::move(c));
}

BivariateSeries to_bivariate(const TruncatedSeries& s) {
    std::vector<Poly> c;
    for (const auto& q : s.coeffs()) c.emplace_back(q);
    return BivariateSeries(s.order(), std::move(c));
}

std::vector<mpz_class> integer_coefficients(const TruncatedSeries& s) {
    std::vector<mpz_class> out;
    for (int k = 0; k <= s.order(); ++k) {
        mpq_class c = s[k];
        c.canonicalize();
        if (c.get_den() != 1) {
            throw DomainError("coefficient of z^" + std::to_string(k) + " is not integral: " + c.get_str());
        }
        out.push_back(c.get_num());
    }
    return out;
}

std::vector<mpz_class> egf_to_counts(const TruncatedSeries& s) {
    std::vector<mpq_class> scaled;
    mpz_class fact = 1;
    for (int k = 0; k <= s.order(); ++k) {
        if (k > 0) fact *= k;
        scaled.push_back(s[k] * mpq_class(fact));
    }
    return integer_coefficients(TruncatedSeries(s.order(), std::move(scaled)));
}

std::vector<std::string> coefficient_strings(const TruncatedSeries& s) {
    std::vector<std::string> out;
    for (const auto& c : s.coeffs()) out.push_back(c.get_str());
    return out;
}

std::vector<std::vector<std::string>> coefficient_strings(const BivariateSeries& s) {
    std::vector<std::vector<std::string>> out;
    for (const auto& p : s.coeffs()) {
        std::vector<std::string> row;
        for (const auto& c : p.coeffs()) row.push_back(c.get_str());
        if (row.empty()) row.emplace_back("0");
        out.push_back(std::move(row));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Catalog

std::string_view to_string(SeriesKind kind) noexcept {
    switch (kind) {
    case SeriesKind::ogf: return "ogf";
    case SeriesKind::egf: return "egf";
    case SeriesKind::bivariate: return "bivariate";
    }
    return "?";
}

namespace {

using BS = BivariateSeries;

/// Series with the given t-polynomial coefficients of z^0, z^1, ...
BS zpoly(int order, std::vector<Poly> coeffs) { return BS(order, std::move(coeffs)); }

const Poly T = Poly::t();

BS one(int order) { return BS::constant(order, Poly(1)); }

BS fixed_point(int order, const std::function<BS(const BS&)>& step) {
    // Each iteration fixes at least one more coefficient.
    BS p = one(order);
    for (int i = 0; i <= order + 1; ++i) p = step(p);
    return p;
}

BS catalan(int order) {
    const int m = order + 1;
    const BS inner = zpoly(m, {1, -4});
    return (one(m) - inner.sqrt()).divide_by_z() * BS::constant(order, Poly(mpq_class(1, 2)));
}

BS thm_1_3(int order) {
    const int m = order + 1;
    const BS num = zpoly(m, {1, 2}) - zpoly(m, {1, -4, -4}).sqrt();
    return num.divide_by_z() * BS::constant(order, Poly(mpq_class(1, 4)));
}

BS i_gt_le(int order) {
    const int m = order + 1;
    // 1 + z(3 - t) - sqrt(1 - z(2 + 2t - z + 6zt - zt^2)), over 4z
    const BS inside = zpoly(m, {1, Poly({-2, -2}), Poly({1, -6, 1})});
    const BS num = zpoly(m, {1, Poly({3, -1})}) - inside.sqrt();
    return num.divide_by_z() * BS::constant(order, Poly(mpq_class(1, 4)));
}

BS i_gt_lt(int order) {
    const int m = order + 1;
    const BS one_minus_z = zpoly(m, {1, -1});
    // (1 + z - zt)^2 - 4z(1 - z + zt)/(1 - z)
    const BS a = zpoly(m, {1, Poly({1, -1})});
    const BS inside = a * a - zpoly(m, {0, 4, Poly({-4, 4})}) / one_minus_z;
    const BS num = zpoly(m, {1, Poly({2, -1}), Poly({-1, 1})}) - one_minus_z * inside.sqrt();
    // divide by 2z(2 - z)
    return num.divide_by_z() / zpoly(order, {4, -2});
}

BS i_gt_ne(int order) {
    const BS a = zpoly(order, {1, Poly({1, -1})});
    const BS s = (a * a - zpoly(order, {0, 4})).sqrt();
    const BS num = zpoly(order, {1, -2, Poly({1, -2, 1})}) + zpoly(order, {1, Poly({-1, 1})}) * s;
    const BS den = zpoly(order, {2, -2}) * s;
    return num / den;
}

BS rational(int order, std::vector<Poly> num, const std::vector<std::vector<Poly>>& den_factors) {
    BS den = one(order);
    for (const auto& f : den_factors) den = den * zpoly(order, f);
    return zpoly(order, std::move(num)) / den;
}

BS i_lt_dash_lt(int order) {
    return rational(order, {1, Poly({-3, 1}), Poly({3, -2, 1}), Poly({-1, 1})},
                    {{1, -1}, {1, -1}, {1, -1}});
}

BS i_ne_lt(int order) {
    return rational(order, {1, Poly({-4, 1}), Poly({6, -4, 1}), Poly({-4, 5, -1}), Poly({1, -2, 1})},
                    {{1, -1}, {1, -1}, {1, -2, Poly({1, -1})}});
}

BS i_ne_le(int order) {
    return rational(order, {1, Poly({-2, 1}), Poly({1, -2, 1}), T}, {{1, -1}, {1, -1, -T}});
}

BS i_ge_ne(int order) {
    return rational(order, {1, Poly({-1, -1}), Poly({0, 2})}, {{1, -1}, {1, -T}, {1, -T}});
}

BS i_eq_lt(int order) { return rational(order, {1, -1}, {{1, Poly({-1, -1})}}); }

BS i_eq_le(int order) { return rational(order, {1}, {{1, -T, -T}}); }

BS i_ge_le_ne(int order) { return rational(order, {1, -1, 0, T}, {{1, -1}, {1, -T, -T}}); }

BS egf_ne_ne(int order) { return zpoly(order, {0, 1, Poly(mpq_class(1, 2))}).exp(); }

BS egf_lt_lt(int order) {
    // h = f'/f solves h' = h^2 - h + 1 with h(0) = 1; then f' = h f, f(0) = 1.
    BS h = one(order);
    for (int i = 0; i <= order; ++i) h = one(order) + (h * h - h + Poly(1)).integral();
    BS f = one(order);
    for (int i = 0; i <= order; ++i) f = one(order) + (h * f).integral();
    return f;
}

BS r_zt(int order) { return unmarked_tail_gf(marked_paths_gf(order)); }

struct Builder {
    CatalogEntry entry;
    BS (*build)(int);
};

const std::vector<Builder>& builders() {
    static const std::vector<Builder> table = {
        {{"catalan", SeriesKind::ogf, "", "(1 - sqrt(1 - 4z)) / (2z)"}, catalan},
        {{"thm_1_3", SeriesKind::ogf, ">,<=,-", "(1 + 2z - sqrt(1 - 4z - 4z^2)) / (4z)"}, thm_1_3},
        {{"R_zt", SeriesKind::bivariate, ">,<=,-", "(1 - z(1-t)P) / (1 - zP), P from its fixed point"}, r_zt},
        {{"I_lt_dash_lt", SeriesKind::bivariate, "<,-,<",
          "(1 - 3z + zt + 3z^2 - 2z^2t + z^2t^2 - z^3 + z^3t) / (1-z)^3"},
         i_lt_dash_lt},
        {{"I_ne_lt", SeriesKind::bivariate, "!=,<,-",
          "(1 - 4z + zt + 6z^2 - 4z^2t + z^2t^2 - 4z^3 + 5z^3t - z^3t^2 + z^4 - 2z^4t + z^4t^2) / "
          "((1-z)^2 (1 - 2z + z^2 - z^2t))"},
         i_ne_lt},
        {{"I_ne_le", SeriesKind::bivariate, "!=,<=,-",
          "(1 - 2z + zt + z^2 - 2z^2t + z^2t^2 + z^3t) / ((1-z)(1 - z - z^2t))"},
         i_ne_le},
        {{"I_gt_lt", SeriesKind::bivariate, ">,<,-",
          "(1 + z(2-t) - z^2(1-t) - (1-z) sqrt((1+z-zt)^2 - 4z(1-z+zt)/(1-z))) / (2z(2-z))"},
         i_gt_lt},
        {{"I_gt_le", SeriesKind::bivariate, ">,<=,-",
          "(1 + z(3-t) - sqrt(1 - z(2 + 2t - z + 6zt - zt^2))) / (4z)"},
         i_gt_le},
        {{"I_gt_ne", SeriesKind::bivariate, ">,!=,-",
          "(1 - 2z + z^2(1-t)^2 + (1-z+zt) S) / (2(1-z) S), S = sqrt((1+z-zt)^2 - 4z)"},
         i_gt_ne},
        {{"I_ge_ne", SeriesKind::bivariate, ">=,!=,-", "(1 - z - zt + 2z^2t) / ((1-z)(1-zt)^2)"}, i_ge_ne},
        {{"I_eq_lt", SeriesKind::bivariate, "=,<,-", "(1 - z) / (1 - z - zt)"}, i_eq_lt},
        {{"I_eq_le", SeriesKind::bivariate, "=,<=,-", "1 / (1 - zt - z^2t)"}, i_eq_le},
        {{"I_ge_le_ne", SeriesKind::bivariate, ">=,<=,!=", "(1 - z + z^3t) / ((1-z)(1 - zt - z^2t))"},
         i_ge_le_ne},
        {{"egf_ne_ne", SeriesKind::egf, "", "exp(z + z^2/2)"}, egf_ne_ne},
        {{"egf_lt_lt", SeriesKind::egf, "",
          "sqrt(3)/2 exp(z/2) / cos(pi/6 + sqrt(3) z/2), via f' = h f, h' = h^2 - h + 1"},
         egf_lt_lt},
    };
    return table;
}

const Builder& find_builder(std::string_view name) {
    for (const auto& b : builders())
        if (b.entry.name == name) return b;
    throw DomainError("unknown series '" + std::string(name) + "'");
}

} // namespace

const std::vector<CatalogEntry>& series_catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        for (const auto& b : builders()) out.push_back(b.entry);
        return out;
    }();
    return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) { return find_builder(name).entry; }

BivariateSeries gf_catalog(std::string_view name, int order) {
    if (order < 0) throw DomainError("series order must be nonnegative");
    return find_builder(name).build(order);
}

BivariateSeries marked_paths_gf(int order) {
    // P = 1 / (1 - [zt + z^2t + (z + z^2t)(P - 1)])
    const BS elbow = zpoly(order, {0, T, T});
    const BS lift = zpoly(order, {0, 1, T});
    return fixed_point(order, [&](const BS& p) {
        return one(order) / (one(order) - (elbow + lift * (p - one(order))));
    });
}

BivariateSeries multi_marked_paths_gf(int order) {
    // P~ = 1 / (1 - [z(t-1) + (z + z^2t/(1-z)) P~])
    const BS marks = zpoly(order, {0, 0, T}) / zpoly(order, {1, -1});
    const BS lift = zpoly(order, {0, 1}) + marks;
    const BS shift = zpoly(order, {0, Poly({-1, 1})});
    return fixed_point(order, [&](const BS& p) {
        return one(order) / (one(order) - (shift + lift * p));
    });
}

BivariateSeries unmarked_tail_gf(const BivariateSeries& paths) {
    const int order = paths.order();
    const BS zp = paths.shift_up(1);
    return (one(order) - zpoly(order, {0, Poly({1, -1})}) * paths) / (one(order) - zp);
}

TruncatedSeries thm_1_3_via_composition(int order) {
    const auto c = evaluate_t(gf_catalog("catalan", order), 1);
    const auto p = compose(c, TruncatedSeries(order, {0, 1, 1}));
    return TruncatedSeries::constant(order, 1) / (TruncatedSeries::constant(order, 1) - p.shift_up(1));
}

TruncatedSeries gt_lt_dash_ogf(int order) {
    using TS = TruncatedSeries;
    const int m = order + 1;
    const TS num = TS(m, {1, 1}) - TS(m, {1, -6, 5}).sqrt();
    return num.divide_by_z() / TS(order, {4, -2});
}

} // namespace invrel
