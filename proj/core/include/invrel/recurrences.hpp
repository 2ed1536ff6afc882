#pragma once

// Closed forms and recurrences for the avoider counts, computed without
// enumerating anything.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "invrel/core.hpp"

namespace invrel {

mpz_class binomial(long n, long k);
mpz_class big_factorial(long n);
/// F_0 = 0, F_1 = 1.
mpz_class fibonacci(long n);
mpz_class catalan_number(long n);
/// d_0 = 1, d_1 = 0, d_n = (n-1)(d_{n-1} + d_{n-2}).
mpz_class derangements(long n);

struct ClosedForm {
    std::string name;
    /// Pattern "R1,R2" or triple "R1,R2,R3" whose avoiders it counts.
    std::string pattern;
    std::string formula;
};

const std::vector<ClosedForm>& closed_form_catalog();

/// Value for n >= 1; DomainError for unknown names or n < 1.
mpz_class closed_form(std::string_view name, long n);

enum class Provenance { closed_form, recurrence };

struct SequenceTable {
    std::string name;
    Provenance provenance = Provenance::recurrence;
    /// terms[n] for n = 0..N (terms[0] = 1 counts the empty sequence).
    std::vector<mpz_class> terms;

    const mpz_class& at(int n) const { return terms.at(static_cast<std::size_t>(n)); }
};

/// a_0 = a_1 = 1, a_n = a_{n-1} + (n-1) a_{n-2}.
SequenceTable rec_ne_ne(int N);
/// a_1 = 1, a_2 = 2, a_n = (n-1) a_{n-1} + (n-2) a_{n-2}.
SequenceTable rec_eq_eq(int N);

/// Triangles |I_{n,k}(p)| and |I^{R1}_{n,k}(p)| for 0 <= k < n <= N.
class RefinedTable {
public:
    RefinedTable(RelationPattern p, int N);

    RelationPattern pattern() const noexcept { return pattern_; }
    int max_n() const noexcept { return static_cast<int>(all_.size()) - 1; }

    /// |I_{n,k}(p)|; zero outside 0 <= k < n.
    mpz_class all(int n, int k) const;
    /// |I^{R1}_{n,k}(p)| (last two entries related by R1); zero outside 0 <= k < n.
    mpz_class refined(int n, int k) const;
    /// |I_n(p)|, with |I_0(p)| = 1.
    mpz_class total(int n) const;

    void set(int n, int k, mpz_class all_value, mpz_class refined_value);

    /// "n,k,all,refined" rows after a header line.
    std::string to_csv() const;

private:
    RelationPattern pattern_;
    std::vector<std::vector<mpz_class>> all_;
    std::vector<std::vector<mpz_class>> refined_;
};

/// The (>,>=) refinement, by the two difference recurrences that fill each
/// row from k = n-1 down to 0.
RefinedTable rec_refined_gt_ge(int N);

/// Any pattern, by the literal double sums over the previous row.
RefinedTable rec_refined_generic(RelationPattern p, int N);

inline constexpr int kRefinedGuard = 14;

} // namespace invrel
