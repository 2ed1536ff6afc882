#pragma once

// Exhaustive and pruned enumeration of inversion sequences, avoider counts,
// occurrence-position profiles and the Wilf / strong / super-strong
// classification of the 36 consecutive patterns of relations.

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "invrel/core.hpp"

namespace invrel {

/// Default bound on n for full scans of I_n (12! ~ 4.8e8 sequences).
inline constexpr int kEnumerationGuard = 12;

/// Environment variable that lifts every resource guard. Unsafe: the
/// guarded computations grow like n!.
inline constexpr const char* kUnsafeGuardOverrideEnv = "INVREL_UNSAFE_DISABLE_GUARDS";

bool guards_disabled() noexcept;

/// Throws ResourceLimitError when n > limit (unless guards are disabled).
void check_guard(int n, int limit, std::string_view what);

std::uint64_t factorial(int n);

/// Visits every e in I_n once, in lexicographic order. The span is only
/// valid for the duration of the call.
template <class Visitor>
void for_each_inversion_sequence(int n, Visitor&& visit) {
    check_guard(n, kEnumerationGuard, "enumerate_all");
    std::vector<int> e(static_cast<std::size_t>(n < 0 ? 0 : n), 0);
    for (;;) {
        visit(std::span<const int>(e));
        int i = n - 1;
        while (i >= 0 && e[static_cast<std::size_t>(i)] == i) {
            e[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) return;
        ++e[static_cast<std::size_t>(i)];
    }
}

/// Materialised I_n; meant for small n (tests, bijection images).
std::vector<InversionSequence> enumerate_all(int n);

struct AvoiderCount {
    int n = 0;
    std::uint64_t total = 0;
    std::map<int, std::uint64_t> by_last_entry; ///< k -> |I_{n,k}(p)|
    std::map<int, std::uint64_t> by_dist;       ///< d -> #avoiders with dist = d

    bool operator==(const AvoiderCount&) const = default;
};

/// Pruned depth-first count: a prefix is extended only while it still
/// avoids p, since a new entry can only complete the last window.
AvoiderCount count_avoiders(RelationPattern p, int n);

/// Same result by scanning all of I_n (ground-truth oracle).
AvoiderCount count_avoiders_exhaustive(RelationPattern p, int n);

/// Classical triple avoidance, pruned DFS (prefix-closed property).
AvoiderCount count_avoiders_triple(const TriplePattern& t, int n);
AvoiderCount count_avoiders_triple_exhaustive(const TriplePattern& t, int n);

/// All avoiders of p in lexicographic order.
std::vector<InversionSequence> list_avoiders(RelationPattern p, int n);
std::vector<InversionSequence> list_avoiders_triple(const TriplePattern& t, int n);

/// Largest n accepted by occurrence_profile / classify.
inline constexpr int kProfileGuard = 10;

struct OccurrenceProfile {
    int n = 0;
    /// Occurrence set (bit i-1 <-> position i) -> number of e in I_n.
    /// Sparse: absent keys are zero.
    std::map<std::uint64_t, std::uint64_t> per_set;

    std::uint64_t count(std::uint64_t set_mask) const;
    std::uint64_t avoiders() const { return count(0); }
    /// Strong-equivalence marginal: number of occurrences m -> count.
    std::map<int, std::uint64_t> by_occurrence_count() const;
    std::uint64_t total() const;

    bool operator==(const OccurrenceProfile&) const = default;
};

/// Bitmask helper for 1-based position sets.
std::uint64_t position_mask(std::initializer_list<int> positions);

OccurrenceProfile occurrence_profile(RelationPattern p, int n);

/// Profiles of all 36 patterns from a single scan of I_n, indexed by
/// RelationPattern::index(). The scan is split by the prefix e_2 e_3 and
/// the partial results are merged by pointwise addition.
std::array<OccurrenceProfile, 36> all_occurrence_profiles(int n);

enum class EquivalenceLevel { wilf, strong, superstrong };

std::string_view to_string(EquivalenceLevel level) noexcept;
EquivalenceLevel parse_level(std::string_view text);

using PatternClass = std::vector<RelationPattern>;

struct EquivalenceReport {
    EquivalenceLevel level = EquivalenceLevel::wilf;
    int n_max = 0;
    /// Classes ordered from least to most avoided at n_max; patterns inside
    /// a class ordered by index.
    std::vector<PatternClass> classes;
    /// Smallest n at which comparing data up to n already gives `classes`.
    int stable_from = 0;
};

/// Profiles for n = 0..n_max, reusable across levels.
class ProfileTable {
public:
    explicit ProfileTable(int n_max);

    int n_max() const noexcept { return n_max_; }
    const OccurrenceProfile& profile(RelationPattern p, int n) const;

private:
    int n_max_;
    std::vector<std::array<OccurrenceProfile, 36>> rows_;
};

EquivalenceReport classify(const ProfileTable& table, EquivalenceLevel level);
EquivalenceReport classify(EquivalenceLevel level, int n_max);

/// True if every class of `finer` lies inside a class of `coarser`.
bool refines(const std::vector<PatternClass>& finer, const std::vector<PatternClass>& coarser);

/// Same partition, ignoring the order of classes and of their members.
bool same_partition(const std::vector<PatternClass>& a, const std::vector<PatternClass>& b);

} // namespace invrel
