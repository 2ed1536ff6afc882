#pragma once

// Permutations in one-line notation and classical / consecutive / vincular
// pattern avoidance.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace invrel {

class Permutation {
public:
    Permutation() = default;
    /// Values must be a rearrangement of 1..n; throws DomainError otherwise.
    explicit Permutation(std::vector<int> values);
    Permutation(std::initializer_list<int> values);

    static Permutation identity(int n);
    static bool is_valid(std::span<const int> values) noexcept;

    int size() const noexcept { return static_cast<int>(values_.size()); }
    /// 1-based.
    int operator()(int position) const { return values_.at(static_cast<std::size_t>(position - 1)); }
    std::span<const int> values() const noexcept { return values_; }

    Permutation inverse() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> values_;
};

/// "42513" for n < 10, comma separated otherwise.
std::string to_string(const Permutation& pi);
Permutation parse_permutation(std::string_view text);

Permutation reverse(const Permutation& pi);
Permutation complement(const Permutation& pi);
/// pi^RC_i = n + 1 - pi_{n+1-i}.
Permutation reverse_complement(const Permutation& pi);

bool is_involution(const Permutation& pi) noexcept;

/// Vincular pattern: letters form a permutation of 1..r; adjacency holds the
/// 1-based positions i for which letters i and i+1 must be adjacent.
class VincularPattern {
public:
    VincularPattern() = default;
    VincularPattern(std::vector<int> letters, std::vector<int> adjacency);

    static VincularPattern classical(std::vector<int> letters);
    static VincularPattern consecutive(std::vector<int> letters);

    int size() const noexcept { return static_cast<int>(letters_.size()); }
    std::span<const int> letters() const noexcept { return letters_; }
    /// 1-based positions i with an adjacency constraint between i and i+1.
    const std::vector<int>& adjacency() const noexcept { return adjacency_; }
    bool adjacent(int position) const noexcept;

    /// Grammar used by the CLI: underlined groups in parentheses, e.g. "(124)3".
    std::string to_string() const;

    auto operator<=>(const VincularPattern&) const = default;

private:
    std::vector<int> letters_;
    std::vector<int> adjacency_;
    std::uint64_t adjacency_mask_ = 0;
};

VincularPattern parse_vincular(std::string_view text);

bool contains_vincular(std::span<const int> pi, const VincularPattern& v);
bool avoids_vincular(std::span<const int> pi, const VincularPattern& v);
bool avoids_vincular(const Permutation& pi, const VincularPattern& v);

/// Largest n accepted by the S_n scans.
inline constexpr int kPermutationGuard = 10;

/// |S_n(v)| by scanning S_n.
std::uint64_t count_vincular_avoiders(const VincularPattern& v, int n);

/// Number of permutations of length n avoiding every classical pattern in
/// the set (one-line words over 1..r, e.g. {213, 321}).
std::uint64_t count_avoiders_classical(const std::vector<Permutation>& patterns, int n);

/// All permutations of length n avoiding v.
std::vector<Permutation> list_vincular_avoiders(const VincularPattern& v, int n);

/// Calls visit(std::span<const int>) for each pi in S_n in lexicographic order.
template <class Visitor>
void for_each_permutation(int n, Visitor&& visit) {
    std::vector<int> pi(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 1);
    do {
        visit(std::span<const int>(pi));
    } while (std::next_permutation(pi.begin(), pi.end()));
}

std::uint64_t count_involutions(int n);

} // namespace invrel
