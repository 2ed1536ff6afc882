#include "invrel/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <future>
#include <string>

namespace invrel {

bool guards_disabled() noexcept {
    const char* v = std::getenv(kUnsafeGuardOverrideEnv);
    return v != nullptr && *v != '\0' && std::string_view(v) != "0";
}

void check_guard(int n, int limit, std::string_view what) {
    if (n < 0) throw DomainError(std::string(what) + ": negative length");
    if (n > kMaxLength) {
        throw ResourceLimitError(std::string(what) + ": n = " + std::to_string(n) +
                                 " exceeds the hard limit " + std::to_string(kMaxLength));
    }
    if (n > limit && !guards_disabled()) {
        throw ResourceLimitError(std::string(what) + ": n = " + std::to_string(n) +
                                 " exceeds the guard " + std::to_string(limit) + " (set " +
                                 kUnsafeGuardOverrideEnv + "=1 to override)");
    }
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw DomainError("factorial argument outside 0..20");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::vector<InversionSequence> enumerate_all(int n) {
    std::vector<InversionSequence> out;
    for_each_inversion_sequence(n, [&](std::span<const int> e) {
        out.push_back(InversionSequence::from_span(e));
    });
    return out;
}

namespace {

// Tally shared by the pruned and exhaustive counters.
class Tally {
public:
    explicit Tally(int n) { result_.n = n; }

    void add(std::span<const int> e, int distinct) {
        ++result_.total;
        if (!e.empty()) ++result_.by_last_entry[e.back()];
        ++result_.by_dist[distinct];
    }

    AvoiderCount take() { return std::move(result_); }

private:
    AvoiderCount result_;
};

// Depth-first extension of prefixes; `accept(e, k)` decides whether the
// prefix e[0..k] (just extended at index k) may be kept.
template <class Accept, class Leaf>
void extend_prefixes(int n, Accept&& accept, Leaf&& leaf) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    std::vector<int> multiplicity(static_cast<std::size_t>(n) + 1, 0);
    int distinct = 0;

    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            leaf(std::span<const int>(e), distinct);
            return;
        }
        for (int v = 0; v <= k; ++v) {
            e[static_cast<std::size_t>(k)] = v;
            if (!accept(std::span<const int>(e.data(), static_cast<std::size_t>(k) + 1), k)) {
                continue;
            }
            if (multiplicity[static_cast<std::size_t>(v)]++ == 0) ++distinct;
            self(self, k + 1);
            if (--multiplicity[static_cast<std::size_t>(v)] == 0) --distinct;
        }
    };
    rec(rec, 0);
}

} // namespace

AvoiderCount count_avoiders(RelationPattern p, int n) {
    if (n < 0) throw DomainError("count_avoiders: negative length");
    if (n > kMaxLength) throw ResourceLimitError("count_avoiders: n exceeds the hard limit");
    Tally tally(n);
    extend_prefixes(
        n,
        [p](std::span<const int> e, int k) {
            return k < 2 || !p.matches(e[static_cast<std::size_t>(k) - 2],
                                       e[static_cast<std::size_t>(k) - 1],
                                       e[static_cast<std::size_t>(k)]);
        },
        [&](std::span<const int> e, int distinct) { tally.add(e, distinct); });
    return tally.take();
}

AvoiderCount count_avoiders_exhaustive(RelationPattern p, int n) {
    Tally tally(n);
    for_each_inversion_sequence(n, [&](std::span<const int> e) {
        if (avoids(e, p)) tally.add(e, dist(e));
    });
    return tally.take();
}

namespace {

bool last_index_completes_triple(std::span<const int> e, int k, const TriplePattern& t) {
    const auto c = e[static_cast<std::size_t>(k)];
    for (int j = 1; j < k; ++j) {
        const auto b = e[static_cast<std::size_t>(j)];
        if (!relation_holds(t.r2, b, c)) continue;
        for (int i = 0; i < j; ++i) {
            const auto a = e[static_cast<std::size_t>(i)];
            if (relation_holds(t.r1, a, b) && relation_holds(t.r3, a, c)) return true;
        }
    }
    return false;
}

} // namespace

AvoiderCount count_avoiders_triple(const TriplePattern& t, int n) {
    check_guard(n, kEnumerationGuard, "count_avoiders_triple");
    Tally tally(n);
    extend_prefixes(
        n, [&t](std::span<const int> e, int k) { return !last_index_completes_triple(e, k, t); },
        [&](std::span<const int> e, int distinct) { tally.add(e, distinct); });
    return tally.take();
}

AvoiderCount count_avoiders_triple_exhaustive(const TriplePattern& t, int n) {
    Tally tally(n);
    for_each_inversion_sequence(n, [&](std::span<const int> e) {
        if (avoids_triple(e, t)) tally.add(e, dist(e));
    });
    return tally.take();
}

std::vector<InversionSequence> list_avoiders(RelationPattern p, int n) {
    check_guard(n, kEnumerationGuard, "list_avoiders");
    std::vector<InversionSequence> out;
    extend_prefixes(
        n,
        [p](std::span<const int> e, int k) {
            return k < 2 || !p.matches(e[static_cast<std::size_t>(k) - 2],
                                       e[static_cast<std::size_t>(k) - 1],
                                       e[static_cast<std::size_t>(k)]);
        },
        [&](std::span<const int> e, int) { out.push_back(InversionSequence::from_span(e)); });
    return out;
}

std::vector<InversionSequence> list_avoiders_triple(const TriplePattern& t, int n) {
    check_guard(n, kEnumerationGuard, "list_avoiders_triple");
    std::vector<InversionSequence> out;
    extend_prefixes(
        n, [&t](std::span<const int> e, int k) { return !last_index_completes_triple(e, k, t); },
        [&](std::span<const int> e, int) { out.push_back(InversionSequence::from_span(e)); });
    return out;
}

// ---------------------------------------------------------------------------
// Occurrence profiles

std::uint64_t OccurrenceProfile::count(std::uint64_t set_mask) const {
    auto it = per_set.find(set_mask);
    return it == per_set.end() ? 0 : it->second;
}

std::map<int, std::uint64_t> OccurrenceProfile::by_occurrence_count() const {
    std::map<int, std::uint64_t> out;
    for (const auto& [mask, c] : per_set) out[std::popcount(mask)] += c;
    return out;
}

std::uint64_t OccurrenceProfile::total() const {
    std::uint64_t t = 0;
    for (const auto& [mask, c] : per_set) t += c;
    return t;
}

std::uint64_t position_mask(std::initializer_list<int> positions) {
    std::uint64_t m = 0;
    for (int i : positions) {
        if (i < 1 || i > kMaxLength) throw DomainError("position outside 1..64");
        m |= std::uint64_t{1} << (i - 1);
    }
    return m;
}

namespace {

// Bit r set iff relation r holds for (a, b).
constexpr std::uint32_t relation_bits(int a, int b) noexcept {
    std::uint32_t bits = 0;
    for (int r = 0; r < 6; ++r) {
        if (relation_holds(static_cast<Relation>(r), a, b)) bits |= 1u << r;
    }
    return bits;
}

// Bit (6*r1 + r2) set iff (r1, r2) occurs at the window (a, b, c).
constexpr std::uint64_t window_bits(int a, int b, int c) noexcept {
    const auto first = relation_bits(a, b);
    const auto second = relation_bits(b, c);
    std::uint64_t out = 0;
    for (int r1 = 0; r1 < 6; ++r1) {
        if (first & (1u << r1)) out |= static_cast<std::uint64_t>(second) << (6 * r1);
    }
    return out;
}

using DenseProfiles = std::vector<std::vector<std::uint64_t>>; // [pattern][mask]

// Scans all e in I_n that start with `prefix`, adding to dense per-mask counts.
void scan_profiles(int n, std::span<const int> prefix, DenseProfiles& out) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    std::copy(prefix.begin(), prefix.end(), e.begin());
    // masks[k][p]: occurrence mask of pattern p within e[0..k-1].
    std::vector<std::array<std::uint32_t, 36>> masks(static_cast<std::size_t>(n) + 1);
    masks[0].fill(0);
    const int start = static_cast<int>(prefix.size());

    auto push = [&](int k) {
        // e[k] has just been placed; derive masks[k + 1] from masks[k].
        masks[static_cast<std::size_t>(k) + 1] = masks[static_cast<std::size_t>(k)];
        if (k < 2) return;
        std::uint64_t occ = window_bits(e[static_cast<std::size_t>(k) - 2],
                                        e[static_cast<std::size_t>(k) - 1],
                                        e[static_cast<std::size_t>(k)]);
        while (occ != 0) {
            const int p = std::countr_zero(occ);
            occ &= occ - 1;
            masks[static_cast<std::size_t>(k) + 1][static_cast<std::size_t>(p)] |= 1u << (k - 2);
        }
    };
    for (int k = 0; k < start; ++k) push(k);

    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            const auto& m = masks[static_cast<std::size_t>(n)];
            for (std::size_t p = 0; p < 36; ++p) ++out[p][m[p]];
            return;
        }
        for (int v = 0; v <= k; ++v) {
            e[static_cast<std::size_t>(k)] = v;
            push(k);
            self(self, k + 1);
        }
    };
    rec(rec, start);
}

} // namespace

std::array<OccurrenceProfile, 36> all_occurrence_profiles(int n) {
    check_guard(n, kProfileGuard, "occurrence_profile");
    // Dense tables of 2^(n-2) counters per pattern; not negotiable via the override.
    if (n > 24) throw ResourceLimitError("all_occurrence_profiles: n = " + std::to_string(n) + " exceeds hard limit 24");
    const std::size_t width = n >= 2 ? (std::size_t{1} << (n - 2)) : 1;

    // Independent sub-scans keyed by the prefix e_1 e_2 e_3.
    std::vector<std::vector<int>> prefixes;
    if (n >= 3) {
        for (int b = 0; b <= 1; ++b)
            for (int c = 0; c <= 2; ++c) prefixes.push_back({0, b, c});
    } else {
        prefixes.push_back({});
    }

    std::vector<std::future<DenseProfiles>> parts;
    for (const auto& prefix : prefixes) {
        parts.push_back(std::async(std::launch::async, [n, width, prefix] {
            DenseProfiles local(36, std::vector<std::uint64_t>(width, 0));
            scan_profiles(n, prefix, local);
            return local;
        }));
    }
    DenseProfiles merged(36, std::vector<std::uint64_t>(width, 0));
    for (auto& part : parts) {
        auto local = part.get();
        for (std::size_t p = 0; p < 36; ++p)
            for (std::size_t m = 0; m < width; ++m) merged[p][m] += local[p][m];
    }

    std::array<OccurrenceProfile, 36> out;
    for (std::size_t p = 0; p < 36; ++p) {
        out[p].n = n;
        for (std::size_t m = 0; m < width; ++m) {
            if (merged[p][m] != 0) out[p].per_set[m] = merged[p][m];
        }
    }
    return out;
}

OccurrenceProfile occurrence_profile(RelationPattern p, int n) {
    check_guard(n, kProfileGuard, "occurrence_profile");
    OccurrenceProfile out;
    out.n = n;
    for_each_inversion_sequence(n, [&](std::span<const int> e) { ++out.per_set[occurrence_mask(e, p)]; });
    return out;
}

// ---------------------------------------------------------------------------
// Classification

std::string_view to_string(EquivalenceLevel level) noexcept {
    switch (level) {
    case EquivalenceLevel::wilf: return "wilf";
    case EquivalenceLevel::strong: return "strong";
    case EquivalenceLevel::superstrong: return "superstrong";
    }
    return "?";
}

EquivalenceLevel parse_level(std::string_view text) {
    if (text == "wilf") return EquivalenceLevel::wilf;
    if (text == "strong") return EquivalenceLevel::strong;
    if (text == "superstrong" || text == "super-strong") return EquivalenceLevel::superstrong;
    throw ParseError("unknown equivalence level '" + std::string(text) + "'");
}

ProfileTable::ProfileTable(int n_max) : n_max_(n_max) {
    check_guard(n_max, kProfileGuard, "classify");
    rows_.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) rows_.push_back(all_occurrence_profiles(n));
}

const OccurrenceProfile& ProfileTable::profile(RelationPattern p, int n) const {
    if (n < 0 || n > n_max_) throw std::out_of_range("profile length outside the table");
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(p.index())];
}

namespace {

using Key = std::vector<std::uint64_t>;

// Flattened data compared at `level`, for lengths 1..upto.
Key equivalence_key(const ProfileTable& table, RelationPattern p, EquivalenceLevel level, int upto) {
    Key key;
    for (int n = 1; n <= upto; ++n) {
        const auto& prof = table.profile(p, n);
        key.push_back(static_cast<std::uint64_t>(n));
        switch (level) {
        case EquivalenceLevel::wilf:
            key.push_back(prof.avoiders());
            break;
        case EquivalenceLevel::strong:
            for (const auto& [m, c] : prof.by_occurrence_count()) {
                key.push_back(static_cast<std::uint64_t>(m));
                key.push_back(c);
            }
            break;
        case EquivalenceLevel::superstrong:
            for (const auto& [mask, c] : prof.per_set) {
                key.push_back(mask);
                key.push_back(c);
            }
            break;
        }
    }
    return key;
}

std::vector<PatternClass> partition_upto(const ProfileTable& table, EquivalenceLevel level,
                                         int upto) {
    std::map<Key, PatternClass> groups;
    for (const auto& p : all_relation_patterns()) {
        groups[equivalence_key(table, p, level, upto)].push_back(p);
    }
    std::vector<PatternClass> classes;
    for (auto& [key, members] : groups) classes.push_back(std::move(members));
    const int n = table.n_max();
    std::sort(classes.begin(), classes.end(), [&](const PatternClass& a, const PatternClass& b) {
        const auto ca = table.profile(a.front(), n).avoiders();
        const auto cb = table.profile(b.front(), n).avoiders();
        if (ca != cb) return ca < cb;
        return a.front().index() < b.front().index();
    });
    return classes;
}

} // namespace

EquivalenceReport classify(const ProfileTable& table, EquivalenceLevel level) {
    EquivalenceReport report;
    report.level = level;
    report.n_max = table.n_max();
    report.classes = partition_upto(table, level, table.n_max());
    report.stable_from = table.n_max();
    for (int upto = 0; upto < table.n_max(); ++upto) {
        if (partition_upto(table, level, upto).size() == report.classes.size()) {
            report.stable_from = upto;
            break;
        }
    }
    return report;
}

EquivalenceReport classify(EquivalenceLevel level, int n_max) {
    return classify(ProfileTable(n_max), level);
}

bool refines(const std::vector<PatternClass>& finer, const std::vector<PatternClass>& coarser) {
    std::array<int, 36> owner{};
    owner.fill(-1);
    for (std::size_t c = 0; c < coarser.size(); ++c)
        for (const auto& p : coarser[c]) owner[static_cast<std::size_t>(p.index())] = static_cast<int>(c);
    for (const auto& cls : finer) {
        if (cls.empty()) continue;
        const int o = owner[static_cast<std::size_t>(cls.front().index())];
        if (o < 0) return false;
        for (const auto& p : cls)
            if (owner[static_cast<std::size_t>(p.index())] != o) return false;
    }
    return true;
}

bool same_partition(const std::vector<PatternClass>& a, const std::vector<PatternClass>& b) {
    return a.size() == b.size() && refines(a, b) && refines(b, a);
}

} // namespace invrel
