#include "invrel/recurrences.hpp"

#include <functional>
#include <sstream>

#include "invrel/enumerate.hpp"

namespace invrel {

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class big_factorial(long n) {
    if (n < 0) throw DomainError("factorial of a negative number");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class fibonacci(long n) {
    if (n < 0) throw DomainError("fibonacci of a negative index");
    mpz_class r;
    mpz_fib_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class catalan_number(long n) { return binomial(2 * n, n) / (n + 1); }

mpz_class derangements(long n) {
    if (n < 0) throw DomainError("derangements of a negative size");
    mpz_class a = 1;
    mpz_class b = 0;
    if (n == 0) return a;
    for (long m = 2; m <= n; ++m) {
        mpz_class c = (m - 1) * (a + b);
        a = b;
        b = c;
    }
    return b;
}

namespace {

struct Entry {
    ClosedForm info;
    std::function<mpz_class(long)> eval;
};

mpz_class involutions(long n) {
    mpz_class sum = 0;
    for (long k = 0; 2 * k <= n; ++k) {
        sum += big_factorial(n) / (mpz_class(1) << static_cast<mp_bitcnt_t>(k)) / big_factorial(k) /
               big_factorial(n - 2 * k);
    }
    return sum;
}

mpz_class pow2(long n) { return mpz_class(1) << static_cast<mp_bitcnt_t>(n); }

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = {
        {{"le_ne", "<=,!=", "1 if n = 1, else 2"}, [](long n) -> mpz_class { return mpz_class(n == 1 ? 1 : 2); }},
        {{"le_ge", "<=,>=", "n"}, [](long n) -> mpz_class { return mpz_class(n); }},
        {{"ge_ne", ">=,!=", "C(n,2) + 1"}, [](long n) -> mpz_class { return binomial(n, 2) + 1; }},
        {{"ge_le", ">=,<=", "F(n+1)"}, [](long n) -> mpz_class { return fibonacci(n + 1); }},
        {{"ne_le", "!=,<=", "F(n+2) - 1"}, [](long n) -> mpz_class { return fibonacci(n + 2) - 1; }},
        {{"ge_lt", ">=,<", "2^(n-1)"}, [](long n) -> mpz_class { return pow2(n - 1); }},
        {{"lt_ge", "<,>=", "2^(n-1)"}, [](long n) -> mpz_class { return pow2(n - 1); }},
        {{"ne_ge", "!=,>=", "2^(n-1)"}, [](long n) -> mpz_class { return pow2(n - 1); }},
        {{"ne_ne", "!=,!=", "sum_k n! / (2^k k! (n-2k)!)"}, involutions},
        {{"le_gt", "<=,>", "Catalan(n)"}, [](long n) -> mpz_class { return catalan_number(n); }},
        {{"eq_ne", "=,!=", "sum_{i=0}^{n-1} i!"},
         [](long n) -> mpz_class {
             mpz_class s = 0;
             for (long i = 0; i < n; ++i) s += big_factorial(i);
             return s;
         }},
        {{"ne_eq", "!=,=", "sum_{i=0}^{n-1} (n-1)!/i!"},
         [](long n) -> mpz_class {
             mpz_class s = 0;
             for (long i = 0; i < n; ++i) s += big_factorial(n - 1) / big_factorial(i);
             return s;
         }},
        {{"eq_eq", "=,=", "((n+1)! - d(n+1)) / n"},
         [](long n) -> mpz_class {
             const mpz_class num = big_factorial(n + 1) - derangements(n + 1);
             if (num % n != 0) throw DomainError("eq_eq: non-integral closed form");
             return mpz_class(num / n);
         }},
        {{"lt_dash_lt", "<,-,<", "1 + C(n,2)"}, [](long n) -> mpz_class { return binomial(n, 2) + 1; }},
        {{"ne_lt_dash", "!=,<,-", "2^n - n"}, [](long n) -> mpz_class { return pow2(n) - n; }},
        {{"ne_le_dash", "!=,<=,-", "F(n+2) - 1"}, [](long n) -> mpz_class { return fibonacci(n + 2) - 1; }},
        {{"gt_ne_dash", ">,!=,-", "1 + sum_{i=1}^{n-1} C(2i, i-1)"},
         [](long n) -> mpz_class {
             mpz_class s = 1;
             for (long i = 1; i < n; ++i) s += binomial(2 * i, i - 1);
             return s;
         }},
        {{"ge_ne_dash", ">=,!=,-", "1 + C(n,2)"}, [](long n) -> mpz_class { return binomial(n, 2) + 1; }},
        {{"eq_lt_dash", "=,<,-", "2^(n-1)"}, [](long n) -> mpz_class { return pow2(n - 1); }},
        {{"eq_le_dash", "=,<=,-", "F(n+1)"}, [](long n) -> mpz_class { return fibonacci(n + 1); }},
        {{"ge_le_ne", ">=,<=,!=", "F(n+2) - 1"}, [](long n) -> mpz_class { return fibonacci(n + 2) - 1; }},
    };
    return table;
}

} // namespace

const std::vector<ClosedForm>& closed_form_catalog() {
    static const std::vector<ClosedForm> out = [] {
        std::vector<ClosedForm> v;
        for (const auto& e : entries()) v.push_back(e.info);
        return v;
    }();
    return out;
}

mpz_class closed_form(std::string_view name, long n) {
    for (const auto& e : entries()) {
        if (e.info.name != name) continue;
        if (n < 1) throw DomainError("closed_form: n must be at least 1");
        return e.eval(n);
    }
    throw DomainError("unknown closed form '" + std::string(name) + "'");
}

SequenceTable rec_ne_ne(int N) {
    if (N < 0) throw DomainError("rec_ne_ne: N must be nonnegative");
    SequenceTable t{"ne_ne", Provenance::recurrence, {1}};
    for (int n = 1; n <= N; ++n) {
        t.terms.push_back(n == 1 ? mpz_class(1) : t.at(n - 1) + (n - 1) * t.at(n - 2));
    }
    return t;
}

SequenceTable rec_eq_eq(int N) {
    if (N < 0) throw DomainError("rec_eq_eq: N must be nonnegative");
    SequenceTable t{"eq_eq", Provenance::recurrence, {1}};
    for (int n = 1; n <= N; ++n) {
        if (n <= 2) {
            t.terms.emplace_back(n);
        } else {
            t.terms.push_back((n - 1) * t.at(n - 1) + (n - 2) * t.at(n - 2));
        }
    }
    return t;
}

// ---------------------------------------------------------------------------

RefinedTable::RefinedTable(RelationPattern p, int N) : pattern_(p) {
    if (N < 0) throw DomainError("refined table: N must be nonnegative");
    all_.resize(static_cast<std::size_t>(N) + 1);
    refined_.resize(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        all_[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n), 0);
        refined_[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n), 0);
    }
}

mpz_class RefinedTable::all(int n, int k) const {
    if (n < 0 || n > max_n() || k < 0 || k >= n) return 0;
    return all_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

mpz_class RefinedTable::refined(int n, int k) const {
    if (n < 0 || n > max_n() || k < 0 || k >= n) return 0;
    return refined_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

mpz_class RefinedTable::total(int n) const {
    if (n == 0) return 1;
    mpz_class s = 0;
    for (int k = 0; k < n; ++k) s += all(n, k);
    return s;
}

void RefinedTable::set(int n, int k, mpz_class all_value, mpz_class refined_value) {
    if (n < 1 || n > max_n() || k < 0 || k >= n) throw DomainError("refined table index out of range");
    all_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = std::move(all_value);
    refined_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = std::move(refined_value);
}

std::string RefinedTable::to_csv() const {
    std::ostringstream out;
    out << "n,k,all,refined\n";
    for (int n = 1; n <= max_n(); ++n)
        for (int k = 0; k < n; ++k) out << n << ',' << k << ',' << all(n, k) << ',' << refined(n, k) << '\n';
    return out.str();
}

RefinedTable rec_refined_gt_ge(int N) {
    RefinedTable t(RelationPattern(Relation::GT, Relation::GE), N);
    if (N >= 1) t.set(1, 0, 1, 0);
    for (int n = 2; n <= N; ++n) {
        t.set(n, n - 1, t.total(n - 1), 0);
        for (int k = n - 2; k >= 0; --k) {
            const mpz_class a = t.all(n, k + 1) - t.refined(n - 1, k);
            const mpz_class g = t.refined(n, k + 1) - t.refined(n - 1, k + 1) + t.all(n - 1, k + 1);
            t.set(n, k, a, g);
        }
    }
    return t;
}

RefinedTable rec_refined_generic(RelationPattern p, int N) {
    check_guard(N, kRefinedGuard, "rec_refined_generic");
    RefinedTable t(p, N);
    for (int n = 1; n <= N; ++n) {
        const mpz_class prev_total = t.total(n - 1);
        for (int k = 0; k < n; ++k) {
            mpz_class a = prev_total;
            mpz_class g = 0;
            for (int j = 0; j <= n - 2; ++j) {
                const bool r1 = relation_holds(p.first(), j, k);
                const bool r2 = relation_holds(p.second(), j, k);
                if (r2) a -= t.refined(n - 1, j);
                if (r1) g += t.all(n - 1, j);
                if (r1 && r2) g -= t.refined(n - 1, j);
            }
            t.set(n, k, std::move(a), std::move(g));
        }
    }
    return t;
}

} // namespace invrel
