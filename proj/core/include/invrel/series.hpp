#pragma once

// Exact truncated power series in z. Coefficients are rationals
// (TruncatedSeries) or polynomials in t with rational coefficients
// (BivariateSeries). No floating point anywhere.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "invrel/core.hpp"

namespace invrel {

/// Polynomial in t over Q, dense, without trailing zeros.
class Poly {
public:
    Poly() = default;
    Poly(long c) : Poly(mpq_class(c)) {}
    Poly(const mpq_class& c);
    Poly(std::initializer_list<long> coeffs);
    explicit Poly(std::vector<mpq_class> coeffs);

    static Poly t() { return Poly({0, 1}); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    mpq_class coeff(int k) const;
    const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
    mpq_class evaluate(const mpq_class& t) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const mpq_class& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= mpq_class(-1); }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// "1 + 2*t - t^2/3"; "0" for zero.
    std::string to_string() const;

private:
    void normalize();
    std::vector<mpq_class> c_;
};

namespace detail {
inline bool is_zero(const mpq_class& c) { return sgn(c) == 0; }
inline bool is_zero(const Poly& c) { return c.is_zero(); }
inline bool is_one(const mpq_class& c) { return c == 1; }
inline bool is_one(const Poly& c) { return c == Poly(1); }
mpq_class unit_inverse(const mpq_class& c);
Poly unit_inverse(const Poly& c);
std::string coeff_string(const mpq_class& c);
std::string coeff_string(const Poly& c);
} // namespace detail

/// Power series c_0 + c_1 z + ... + c_N z^N, every operation truncated at N.
template <class C>
class Series {
public:
    Series() = default;
    /// Zero series of order N.
    explicit Series(int order) : c_(static_cast<std::size_t>(check_order(order)) + 1) {}
    Series(int order, std::vector<C> coeffs) : Series(order) {
        for (std::size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = std::move(coeffs[k]);
    }

    static Series constant(int order, const C& value) { return Series(order, {value}); }
    static Series z(int order) { return Series(order, {C(0), C(1)}); }
    /// 1 / (1 - z) to the given order.
    static Series geometric(int order) { return Series(order, std::vector<C>(static_cast<std::size_t>(order) + 1, C(1))); }

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const C& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
    const std::vector<C>& coeffs() const noexcept { return c_; }

    Series truncated(int order) const {
        Series out(order);
        for (int k = 0; k <= std::min(order, this->order()); ++k) out.c_[static_cast<std::size_t>(k)] = (*this)[k];
        return out;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series out(std::min(a.order(), b.order()));
        for (int k = 0; k <= out.order(); ++k) out.at(k) = a[k] + b[k];
        return out;
    }
    friend Series operator-(const Series& a, const Series& b) {
        Series out(std::min(a.order(), b.order()));
        for (int k = 0; k <= out.order(); ++k) out.at(k) = a[k] - b[k];
        return out;
    }
    friend Series operator-(const Series& a) { return Series(a.order()) - a; }
    friend Series operator*(const Series& a, const Series& b) {
        Series out(std::min(a.order(), b.order()));
        for (int i = 0; i <= out.order(); ++i) {
            if (detail::is_zero(a[i])) continue;
            for (int j = 0; i + j <= out.order(); ++j) out.at(i + j) += a[i] * b[j];
        }
        return out;
    }
    friend Series operator*(const C& s, const Series& a) { return constant(a.order(), s) * a; }
    friend Series operator+(const Series& a, const C& s) { return a + constant(a.order(), s); }
    friend Series operator-(const C& s, const Series& a) { return constant(a.order(), s) - a; }

    /// Requires an invertible constant term of b.
    friend Series operator/(const Series& a, const Series& b) {
        if (detail::is_zero(b[0])) throw DomainError("series division by a series with zero constant term");
        const C inv = detail::unit_inverse(b[0]);
        Series out(std::min(a.order(), b.order()));
        for (int k = 0; k <= out.order(); ++k) {
            C acc = a[k];
            for (int i = 0; i < k; ++i) acc -= out[i] * b[k - i];
            out.at(k) = acc * inv;
        }
        return out;
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

    /// Multiplication by z^m (order kept).
    Series shift_up(int m = 1) const {
        Series out(order());
        for (int k = m; k <= order(); ++k) out.at(k) = (*this)[k - m];
        return out;
    }

    /// Division by z; requires c_0 = 0 and loses one order of precision.
    Series divide_by_z() const {
        if (!detail::is_zero(c_[0])) throw DomainError("divide_by_z: constant term is not zero");
        if (order() < 1) throw DomainError("divide_by_z: order too small");
        Series out(order() - 1);
        for (int k = 0; k <= out.order(); ++k) out.at(k) = (*this)[k + 1];
        return out;
    }

    /// s with s*s = a and s_0 = 1; requires a_0 = 1.
    Series sqrt() const {
        if (!detail::is_one(c_[0])) throw DomainError("sqrt: constant term must be 1");
        Series s(order());
        s.at(0) = C(1);
        const mpq_class half(1, 2);
        for (int k = 1; k <= order(); ++k) {
            C acc = (*this)[k];
            for (int i = 1; i < k; ++i) acc -= s[i] * s[k - i];
            acc *= half;
            s.at(k) = acc;
        }
        return s;
    }

    /// outer(inner) by Horner's rule; requires inner_0 = 0.
    friend Series compose(const Series& outer, const Series& inner) {
        if (!detail::is_zero(inner[0])) throw DomainError("compose: inner series has nonzero constant term");
        const int n = std::min(outer.order(), inner.order());
        Series out = constant(n, outer[n]);
        for (int k = n - 1; k >= 0; --k) out = out * inner.truncated(n) + outer[k];
        return out;
    }

    /// exp(a); requires a_0 = 0.
    Series exp() const {
        if (!detail::is_zero(c_[0])) throw DomainError("exp: constant term must be 0");
        Series g(order());
        g.at(0) = C(1);
        for (int k = 1; k <= order(); ++k) {
            C acc(0);
            for (int i = 1; i <= k; ++i) {
                C term = (*this)[i] * g[k - i];
                term *= mpq_class(i);
                acc += term;
            }
            acc *= mpq_class(1, k);
            g.at(k) = acc;
        }
        return g;
    }

    /// Formal integral with zero constant term (order kept).
    Series integral() const {
        Series out(order());
        for (int k = 1; k <= order(); ++k) {
            C v = (*this)[k - 1];
            v *= mpq_class(1, k);
            out.at(k) = v;
        }
        return out;
    }

    /// "c0 + c1*z + c2*z^2 + ..."; zero terms omitted.
    std::string to_string() const {
        std::string out;
        for (int k = 0; k <= order(); ++k) {
            if (detail::is_zero((*this)[k])) continue;
            std::string coeff = detail::coeff_string((*this)[k]);
            bool negative = !coeff.empty() && coeff[0] == '-';
            if (negative) coeff.erase(0, 1);
            if (!out.empty()) {
                out += negative ? " - " : " + ";
            } else if (negative) {
                out += "-";
            }
            if (k == 0) {
                out += coeff;
                continue;
            }
            const std::string mono = k == 1 ? "z" : "z^" + std::to_string(k);
            out += coeff == "1" ? mono : coeff + "*" + mono;
        }
        return out.empty() ? "0" : out;
    }

private:
    static int check_order(int order) {
        if (order < 0) throw DomainError("series order must be nonnegative");
        return order;
    }
    C& at(int k) { return c_.at(static_cast<std::size_t>(k)); }

    std::vector<C> c_;
};

using TruncatedSeries = Series<mpq_class>;
using BivariateSeries = Series<Poly>;

inline constexpr int kDefaultOrder = 16;

/// Substitutes a rational t.
TruncatedSeries evaluate_t(const BivariateSeries& s, const mpq_class& t);
/// Embeds a univariate series as t-free bivariate series.
BivariateSeries to_bivariate(const TruncatedSeries& s);

/// c_n * n!, each asserted integral (DomainError otherwise).
std::vector<mpz_class> egf_to_counts(const TruncatedSeries& s);
/// Coefficients as integers; DomainError when one is not integral.
std::vector<mpz_class> integer_coefficients(const TruncatedSeries& s);

/// JSON-ready strings: univariate -> one string per coefficient;
/// bivariate -> one array of t-coefficients per z-power.
std::vector<std::string> coefficient_strings(const TruncatedSeries& s);
std::vector<std::vector<std::string>> coefficient_strings(const BivariateSeries& s);

// ---------------------------------------------------------------------------
// Catalog

enum class SeriesKind { ogf, egf, bivariate };
std::string_view to_string(SeriesKind kind) noexcept;

struct CatalogEntry {
    std::string name;
    SeriesKind kind;
    /// Triple counted by the entry, empty if none.
    std::string triple;
    std::string formula;
};

const std::vector<CatalogEntry>& series_catalog();
const CatalogEntry& catalog_entry(std::string_view name);

/// Catalog series expanded to order N (univariate entries have t-degree 0).
BivariateSeries gf_catalog(std::string_view name, int order = kDefaultOrder);

/// P(z,t), from its fixed-point equation over marked Dyck paths.
BivariateSeries marked_paths_gf(int order);
/// P~(z,t), the multi-marked analogue, from its fixed-point equation.
BivariateSeries multi_marked_paths_gf(int order);
/// (1 - z(1-t)P) / (1 - zP) for a path series P.
BivariateSeries unmarked_tail_gf(const BivariateSeries& paths);

/// C(z + z^2)-based route to thm_1_3: 1 / (1 - z C(z + z^2)).
TruncatedSeries thm_1_3_via_composition(int order);

/// (1 + z - sqrt(1 - 6z + 5z^2)) / (2z(2 - z)), the t = 1 form of I_gt_lt.
TruncatedSeries gt_lt_dash_ogf(int order);

} // namespace invrel
