#include "invrel/core.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace invrel {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return parts;
}

} // namespace

// ---------------------------------------------------------------------------
// InversionSequence

bool InversionSequence::is_valid(std::span<const int> entries) noexcept {
    if (entries.size() > static_cast<std::size_t>(kMaxLength)) return false;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] < 0 || entries[i] > static_cast<int>(i)) return false;
    }
    return true;
}

InversionSequence::InversionSequence(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.size() > static_cast<std::size_t>(kMaxLength)) {
        throw DomainError("inversion sequence longer than " + std::to_string(kMaxLength));
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 0 || entries_[i] > static_cast<int>(i)) {
            throw DomainError("entry " + std::to_string(i + 1) + " of " + invrel::to_string(entries_) +
                              " must lie in [0, " + std::to_string(i) + "]");
        }
    }
}

InversionSequence::InversionSequence(std::initializer_list<int> entries)
    : InversionSequence(std::vector<int>(entries)) {}

InversionSequence InversionSequence::from_span(std::span<const int> entries) {
    return InversionSequence(std::vector<int>(entries.begin(), entries.end()));
}

int InversionSequence::entry(int position) const {
    if (position < 1 || position > size()) {
        throw std::out_of_range("position " + std::to_string(position) + " outside 1.." +
                                std::to_string(size()));
    }
    return entries_[static_cast<std::size_t>(position - 1)];
}

// ---------------------------------------------------------------------------
// Relations and patterns

std::string_view to_token(Relation r) noexcept {
    switch (r) {
    case Relation::LE: return "<=";
    case Relation::GE: return ">=";
    case Relation::LT: return "<";
    case Relation::GT: return ">";
    case Relation::EQ: return "=";
    case Relation::NE: return "!=";
    case Relation::DASH: return "-";
    }
    return "?";
}

Relation parse_relation(std::string_view token) {
    token = trim(token);
    if (token == "<=") return Relation::LE;
    if (token == ">=") return Relation::GE;
    if (token == "<") return Relation::LT;
    if (token == ">") return Relation::GT;
    if (token == "=" || token == "==") return Relation::EQ;
    if (token == "!=") return Relation::NE;
    if (token == "-") return Relation::DASH;
    throw ParseError("unknown relation token '" + std::string(token) + "'");
}

RelationPattern::RelationPattern(Relation r1, Relation r2) : r1_(r1), r2_(r2) {
    if (r1 == Relation::DASH || r2 == Relation::DASH) {
        throw DomainError("consecutive patterns of relations do not use '-'");
    }
}

RelationPattern RelationPattern::from_index(int index) {
    if (index < 0 || index >= 36) throw std::out_of_range("pattern index outside 0..35");
    return {static_cast<Relation>(index / 6), static_cast<Relation>(index % 6)};
}

std::string RelationPattern::to_string() const {
    return std::string(to_token(r1_)) + "," + std::string(to_token(r2_));
}

std::vector<RelationPattern> all_relation_patterns() {
    std::vector<RelationPattern> out;
    out.reserve(36);
    for (int i = 0; i < 36; ++i) out.push_back(RelationPattern::from_index(i));
    return out;
}

RelationPattern parse_pattern(std::string_view text) {
    auto parts = split(trim(text), ',');
    if (parts.size() != 2) {
        throw ParseError("expected a pattern 'R1,R2', got '" + std::string(text) + "'");
    }
    Relation r1 = parse_relation(parts[0]);
    Relation r2 = parse_relation(parts[1]);
    if (r1 == Relation::DASH || r2 == Relation::DASH) {
        throw ParseError("'-' is not allowed in a consecutive pattern of relations");
    }
    return {r1, r2};
}

std::string TriplePattern::to_string() const {
    return std::string(to_token(r1)) + "," + std::string(to_token(r2)) + "," +
           std::string(to_token(r3));
}

TriplePattern parse_triple(std::string_view text) {
    auto parts = split(trim(text), ',');
    if (parts.size() != 3) {
        throw ParseError("expected a triple 'R1,R2,R3', got '" + std::string(text) + "'");
    }
    return {parse_relation(parts[0]), parse_relation(parts[1]), parse_relation(parts[2])};
}

// ---------------------------------------------------------------------------
// Word patterns

std::vector<int> reduce(std::span<const int> word) {
    std::vector<int> values(word.begin(), word.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<int> out;
    out.reserve(word.size());
    for (int w : word) {
        out.push_back(static_cast<int>(std::lower_bound(values.begin(), values.end(), w) -
                                       values.begin()));
    }
    return out;
}

WordPattern reduction(std::span<const int> word) { return WordPattern(reduce(word)); }

WordPattern::WordPattern(std::vector<int> letters) : letters_(std::move(letters)) {
    if (reduce(letters_) != letters_) {
        throw DomainError("word pattern must equal its reduction");
    }
}

WordPattern::WordPattern(std::initializer_list<int> letters)
    : WordPattern(std::vector<int>(letters)) {}

std::string WordPattern::to_string() const { return invrel::to_string(letters_); }

// ---------------------------------------------------------------------------
// Occurrences

std::vector<int> occurrence_set(std::span<const int> e, RelationPattern p) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 2 < e.size(); ++i) {
        if (p.matches(e[i], e[i + 1], e[i + 2])) out.push_back(static_cast<int>(i) + 1);
    }
    return out;
}

std::vector<int> occurrence_set(const InversionSequence& e, RelationPattern p) {
    return occurrence_set(e.entries(), p);
}

std::uint64_t occurrence_mask(std::span<const int> e, RelationPattern p) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i + 2 < e.size(); ++i) {
        if (p.matches(e[i], e[i + 1], e[i + 2])) mask |= std::uint64_t{1} << i;
    }
    return mask;
}

bool avoids(std::span<const int> e, RelationPattern p) noexcept {
    for (std::size_t i = 0; i + 2 < e.size(); ++i) {
        if (p.matches(e[i], e[i + 1], e[i + 2])) return false;
    }
    return true;
}

bool avoids(const InversionSequence& e, RelationPattern p) noexcept {
    return avoids(e.entries(), p);
}

std::uint64_t occurrence_mask(const InversionSequence& e, RelationPattern p) {
    return occurrence_mask(e.entries(), p);
}

std::vector<int> word_occurrences(std::span<const int> e, const WordPattern& p) {
    std::vector<int> out;
    const auto r = static_cast<std::size_t>(p.size());
    if (r == 0 || r > e.size()) return out;
    for (std::size_t i = 0; i + r <= e.size(); ++i) {
        auto red = reduce(e.subspan(i, r));
        if (std::equal(red.begin(), red.end(), p.letters().begin())) {
            out.push_back(static_cast<int>(i) + 1);
        }
    }
    return out;
}

bool avoids_word(std::span<const int> e, const WordPattern& p) {
    return word_occurrences(e, p).empty();
}

bool avoids_word(const InversionSequence& e, const WordPattern& p) {
    return avoids_word(e.entries(), p);
}

std::vector<int> word_occurrences(const InversionSequence& e, const WordPattern& p) {
    return word_occurrences(e.entries(), p);
}

bool avoids_triple(std::span<const int> e, const TriplePattern& t) noexcept {
    const std::size_t n = e.size();
    for (std::size_t k = 2; k < n; ++k) {
        for (std::size_t j = 1; j < k; ++j) {
            if (!relation_holds(t.r2, e[j], e[k])) continue;
            for (std::size_t i = 0; i < j; ++i) {
                if (t.matches(e[i], e[j], e[k])) return false;
            }
        }
    }
    return true;
}

bool avoids_triple(const InversionSequence& e, const TriplePattern& t) noexcept {
    return avoids_triple(e.entries(), t);
}

InversionSequence complement(const InversionSequence& e) {
    std::vector<int> out(static_cast<std::size_t>(e.size()));
    for (int i = 1; i <= e.size(); ++i) out[static_cast<std::size_t>(i - 1)] = i - 1 - e.entry(i);
    return InversionSequence(std::move(out));
}

int dist(std::span<const int> e) {
    std::set<int> seen(e.begin(), e.end());
    return static_cast<int>(seen.size());
}

int dist(const InversionSequence& e) { return dist(e.entries()); }

// ---------------------------------------------------------------------------
// Text

std::string to_string(std::span<const int> e) {
    const bool compact = std::all_of(e.begin(), e.end(), [](int v) { return v >= 0 && v < 10; });
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!compact && i > 0) out += ',';
        out += std::to_string(e[i]);
    }
    return out;
}

std::string to_string(const InversionSequence& e) { return to_string(e.entries()); }

std::vector<int> parse_integer_word(std::string_view text) {
    text = trim(text);
    std::vector<int> out;
    if (text.empty()) return out;
    if (text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw ParseError("unexpected character '" + std::string(1, c) + "' in '" +
                                 std::string(text) + "'");
            }
            out.push_back(c - '0');
        }
        return out;
    }
    for (auto part : split(text, ',')) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
            throw ParseError("bad integer '" + std::string(part) + "' in '" + std::string(text) +
                             "'");
        }
        out.push_back(value);
    }
    return out;
}

InversionSequence parse_inversion_sequence(std::string_view text) {
    auto word = parse_integer_word(text);
    if (!InversionSequence::is_valid(word)) {
        throw ParseError("'" + std::string(text) + "' is not an inversion sequence");
    }
    return InversionSequence(std::move(word));
}

} // namespace invrel
