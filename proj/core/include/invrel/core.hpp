#pragma once

// Inversion sequences, relation symbols and consecutive patterns of relations.
//
// An inversion sequence of length n is a word e_1 e_2 ... e_n with
// 0 <= e_i < i. Positions in every public result are 1-based.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace invrel {

/// Raised when a value violates the domain of an operation (bad entry,
/// pattern not avoided, position set not an occurrence set, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by the textual parsers.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive computation is asked for beyond its guard.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Longest sequence the library is willing to index with 64-bit masks.
inline constexpr int kMaxLength = 64;

class InversionSequence {
public:
    InversionSequence() = default;
    explicit InversionSequence(std::vector<int> entries);
    InversionSequence(std::initializer_list<int> entries);

    /// Validates and wraps; throws DomainError when some e_i >= i or < 0.
    static InversionSequence from_span(std::span<const int> entries);
    static bool is_valid(std::span<const int> entries) noexcept;

    int size() const noexcept { return static_cast<int>(entries_.size()); }
    bool empty() const noexcept { return entries_.empty(); }

    /// 1-based access: entry(1) == 0 for every non-empty sequence.
    int entry(int position) const;
    int last() const { return entry(size()); }

    std::span<const int> entries() const noexcept { return entries_; }

    auto operator<=>(const InversionSequence&) const = default;

private:
    std::vector<int> entries_;
};

enum class Relation : std::uint8_t { LE, GE, LT, GT, EQ, NE, DASH };

inline constexpr Relation kProperRelations[] = {Relation::LE, Relation::GE, Relation::LT,
                                                Relation::GT, Relation::EQ, Relation::NE};

constexpr bool relation_holds(Relation r, long long a, long long b) noexcept {
    switch (r) {
    case Relation::LE: return a <= b;
    case Relation::GE: return a >= b;
    case Relation::LT: return a < b;
    case Relation::GT: return a > b;
    case Relation::EQ: return a == b;
    case Relation::NE: return a != b;
    case Relation::DASH: return true;
    }
    return false;
}

/// ASCII token: "<=", ">=", "<", ">", "=", "!=", "-".
std::string_view to_token(Relation r) noexcept;
Relation parse_relation(std::string_view token);

/// Consecutive pattern of relations (R1,R2); DASH is not allowed.
class RelationPattern {
public:
    constexpr RelationPattern() = default;
    RelationPattern(Relation r1, Relation r2);

    constexpr Relation first() const noexcept { return r1_; }
    constexpr Relation second() const noexcept { return r2_; }

    /// Position of this pattern in all_relation_patterns(), 0..35.
    constexpr int index() const noexcept {
        return static_cast<int>(r1_) * 6 + static_cast<int>(r2_);
    }
    static RelationPattern from_index(int index);

    /// Whether e_i e_{i+1} e_{i+2} = (a, b, c) is an occurrence.
    constexpr bool matches(int a, int b, int c) const noexcept {
        return relation_holds(r1_, a, b) && relation_holds(r2_, b, c);
    }

    std::string to_string() const;
    auto operator<=>(const RelationPattern&) const = default;

private:
    Relation r1_ = Relation::LE;
    Relation r2_ = Relation::LE;
};

/// The 36 patterns, ordered by index().
std::vector<RelationPattern> all_relation_patterns();

/// Parses "R1,R2", e.g. ">=,<".
RelationPattern parse_pattern(std::string_view text);

/// Classical triple (R1,R2,R3) relating e_i, e_j, e_k for i < j < k.
struct TriplePattern {
    Relation r1 = Relation::DASH;
    Relation r2 = Relation::DASH;
    Relation r3 = Relation::DASH;

    constexpr bool matches(int a, int b, int c) const noexcept {
        return relation_holds(r1, a, b) && relation_holds(r2, b, c) && relation_holds(r3, a, c);
    }
    std::string to_string() const;
    auto operator<=>(const TriplePattern&) const = default;
};

/// Parses "R1,R2,R3", e.g. ">,<=,-".
TriplePattern parse_triple(std::string_view text);

/// Word pattern over 0..r-1 that equals its own reduction.
class WordPattern {
public:
    WordPattern() = default;
    explicit WordPattern(std::vector<int> letters);
    WordPattern(std::initializer_list<int> letters);

    int size() const noexcept { return static_cast<int>(letters_.size()); }
    std::span<const int> letters() const noexcept { return letters_; }
    std::string to_string() const;
    auto operator<=>(const WordPattern&) const = default;

private:
    std::vector<int> letters_;
};

/// Order-isomorphic relabelling of a word onto 0..k-1.
std::vector<int> reduce(std::span<const int> word);
WordPattern reduction(std::span<const int> word);

/// Positions i (1-based) with e_i R1 e_{i+1} and e_{i+1} R2 e_{i+2}.
std::vector<int> occurrence_set(std::span<const int> e, RelationPattern p);
std::vector<int> occurrence_set(const InversionSequence& e, RelationPattern p);

/// Same set as a bitmask: bit (i-1) set iff position i is an occurrence.
std::uint64_t occurrence_mask(std::span<const int> e, RelationPattern p);
std::uint64_t occurrence_mask(const InversionSequence& e, RelationPattern p);

bool avoids(std::span<const int> e, RelationPattern p) noexcept;
bool avoids(const InversionSequence& e, RelationPattern p) noexcept;

/// Positions (1-based) of consecutive occurrences of a word pattern.
std::vector<int> word_occurrences(std::span<const int> e, const WordPattern& p);
std::vector<int> word_occurrences(const InversionSequence& e, const WordPattern& p);
bool avoids_word(std::span<const int> e, const WordPattern& p);
bool avoids_word(const InversionSequence& e, const WordPattern& p);

/// Classical avoidance: no i < j < k (not necessarily adjacent) matching t.
bool avoids_triple(std::span<const int> e, const TriplePattern& t) noexcept;
bool avoids_triple(const InversionSequence& e, const TriplePattern& t) noexcept;

/// e^C_i = i - 1 - e_i.
InversionSequence complement(const InversionSequence& e);

/// Number of distinct entries.
int dist(std::span<const int> e);
int dist(const InversionSequence& e);

/// "002241250" when all entries are < 10, otherwise comma separated.
std::string to_string(std::span<const int> e);
std::string to_string(const InversionSequence& e);
InversionSequence parse_inversion_sequence(std::string_view text);

/// Parses "0110" / "0,1,10" into raw integers without the inversion bound check.
std::vector<int> parse_integer_word(std::string_view text);

} // namespace invrel
