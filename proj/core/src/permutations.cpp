#include "invrel/permutations.hpp"

#include <charconv>

#include "invrel/core.hpp"
#include "invrel/enumerate.hpp"

namespace invrel {

bool Permutation::is_valid(std::span<const int> values) noexcept {
    std::vector<bool> seen(values.size() + 1, false);
    for (int v : values) {
        if (v < 1 || v > static_cast<int>(values.size()) || seen[static_cast<std::size_t>(v)]) {
            return false;
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    if (!is_valid(values_)) throw DomainError("not a permutation of 1..n");
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values)) {}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        inv[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i) + 1;
    }
    return Permutation(std::move(inv));
}

std::string to_string(const Permutation& pi) { return to_string(pi.values()); }

Permutation parse_permutation(std::string_view text) {
    auto word = parse_integer_word(text);
    if (!Permutation::is_valid(word)) {
        throw ParseError("'" + std::string(text) + "' is not a permutation");
    }
    return Permutation(std::move(word));
}

Permutation reverse(const Permutation& pi) {
    std::vector<int> v(pi.values().rbegin(), pi.values().rend());
    return Permutation(std::move(v));
}

Permutation complement(const Permutation& pi) {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(pi.size()));
    for (int x : pi.values()) v.push_back(pi.size() + 1 - x);
    return Permutation(std::move(v));
}

Permutation reverse_complement(const Permutation& pi) { return complement(reverse(pi)); }

bool is_involution(const Permutation& pi) noexcept {
    const auto v = pi.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[static_cast<std::size_t>(v[i] - 1)] != static_cast<int>(i) + 1) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Vincular patterns

VincularPattern::VincularPattern(std::vector<int> letters, std::vector<int> adjacency)
    : letters_(std::move(letters)), adjacency_(std::move(adjacency)) {
    if (!Permutation::is_valid(letters_) || letters_.empty()) {
        throw DomainError("vincular pattern letters must be a permutation of 1..r");
    }
    std::sort(adjacency_.begin(), adjacency_.end());
    adjacency_.erase(std::unique(adjacency_.begin(), adjacency_.end()), adjacency_.end());
    for (int a : adjacency_) {
        if (a < 1 || a >= size()) throw DomainError("adjacency position outside 1..r-1");
        adjacency_mask_ |= std::uint64_t{1} << a;
    }
}

VincularPattern VincularPattern::classical(std::vector<int> letters) {
    return VincularPattern(std::move(letters), {});
}

VincularPattern VincularPattern::consecutive(std::vector<int> letters) {
    std::vector<int> adj;
    for (int i = 1; i < static_cast<int>(letters.size()); ++i) adj.push_back(i);
    return VincularPattern(std::move(letters), std::move(adj));
}

bool VincularPattern::adjacent(int position) const noexcept {
    return position >= 1 && position < 64 && (adjacency_mask_ >> position & 1u) != 0;
}

std::string VincularPattern::to_string() const {
    std::string out;
    const bool compact = size() < 10;
    int i = 1;
    while (i <= size()) {
        int j = i;
        while (adjacent(j)) ++j;
        if (!compact && !out.empty()) out += ',';
        if (j > i) out += '(';
        for (int k = i; k <= j; ++k) {
            if (!compact && k > i) out += ',';
            out += std::to_string(letters_[static_cast<std::size_t>(k - 1)]);
        }
        if (j > i) out += ')';
        i = j + 1;
    }
    return out;
}

VincularPattern parse_vincular(std::string_view text) {
    std::vector<int> letters;
    std::vector<int> adjacency;
    bool in_group = false;
    int group_start = 0;
    for (char c : text) {
        if (c == ' ' || c == ',') continue;
        if (c == '(') {
            if (in_group) throw ParseError("nested '(' in vincular pattern");
            in_group = true;
            group_start = static_cast<int>(letters.size()) + 1;
        } else if (c == ')') {
            if (!in_group) throw ParseError("unbalanced ')' in vincular pattern");
            in_group = false;
            for (int p = group_start; p < static_cast<int>(letters.size()); ++p) adjacency.push_back(p);
        } else if (c >= '1' && c <= '9') {
            letters.push_back(c - '0');
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "' in vincular pattern");
        }
    }
    if (in_group) throw ParseError("unbalanced '(' in vincular pattern");
    if (!Permutation::is_valid(letters) || letters.empty()) {
        throw ParseError("'" + std::string(text) + "' does not spell a permutation");
    }
    return VincularPattern(std::move(letters), std::move(adjacency));
}

bool contains_vincular(std::span<const int> pi, const VincularPattern& v) {
    const int n = static_cast<int>(pi.size());
    const int r = v.size();
    if (r > n) return false;
    const auto letters = v.letters();
    std::vector<int> pos(static_cast<std::size_t>(r));

    // Place pattern letter k at some position, consistent with the letters
    // already placed.
    auto fits = [&](int k, int p) {
        const int value = pi[static_cast<std::size_t>(p)];
        for (int i = 0; i < k; ++i) {
            const bool below = pi[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])] < value;
            if (below != (letters[static_cast<std::size_t>(i)] < letters[static_cast<std::size_t>(k)])) {
                return false;
            }
        }
        return true;
    };
    auto rec = [&](auto&& self, int k) -> bool {
        if (k == r) return true;
        int lo = k == 0 ? 0 : pos[static_cast<std::size_t>(k - 1)] + 1;
        int hi = n - (r - k);
        if (k > 0 && v.adjacent(k)) hi = lo;
        for (int p = lo; p <= hi; ++p) {
            if (!fits(k, p)) continue;
            pos[static_cast<std::size_t>(k)] = p;
            if (self(self, k + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

bool avoids_vincular(std::span<const int> pi, const VincularPattern& v) {
    return !contains_vincular(pi, v);
}

bool avoids_vincular(const Permutation& pi, const VincularPattern& v) {
    return avoids_vincular(pi.values(), v);
}

std::uint64_t count_vincular_avoiders(const VincularPattern& v, int n) {
    check_guard(n, kPermutationGuard, "count_vincular_avoiders");
    std::uint64_t count = 0;
    for_each_permutation(n, [&](std::span<const int> pi) {
        if (avoids_vincular(pi, v)) ++count;
    });
    return count;
}

std::uint64_t count_avoiders_classical(const std::vector<Permutation>& patterns, int n) {
    check_guard(n, kPermutationGuard, "count_avoiders_classical");
    std::vector<VincularPattern> vs;
    for (const auto& p : patterns) {
        vs.push_back(VincularPattern::classical({p.values().begin(), p.values().end()}));
    }
    std::uint64_t count = 0;
    for_each_permutation(n, [&](std::span<const int> pi) {
        for (const auto& v : vs)
            if (contains_vincular(pi, v)) return;
        ++count;
    });
    return count;
}

std::vector<Permutation> list_vincular_avoiders(const VincularPattern& v, int n) {
    check_guard(n, kPermutationGuard, "list_vincular_avoiders");
    std::vector<Permutation> out;
    for_each_permutation(n, [&](std::span<const int> pi) {
        if (avoids_vincular(pi, v)) out.emplace_back(std::vector<int>(pi.begin(), pi.end()));
    });
    return out;
}

std::uint64_t count_involutions(int n) {
    check_guard(n, kPermutationGuard, "count_involutions");
    std::uint64_t count = 0;
    for_each_permutation(n, [&](std::span<const int> pi) {
        for (std::size_t i = 0; i < pi.size(); ++i)
            if (pi[static_cast<std::size_t>(pi[i] - 1)] != static_cast<int>(i) + 1) return;
        ++count;
    });
    return count;
}

} // namespace invrel
