#pragma once

// Explicit bijections between avoidance classes of inversion sequences and
// permutations, compositions, subsets and lattice paths. Every map checks
// its domain and throws DomainError on inputs outside it.

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invrel/core.hpp"
#include "invrel/permutations.hpp"

namespace invrel {

// ---------------------------------------------------------------------------
// Permutations <-> inversion sequences

/// e_i = #{ j < i : pi_j > pi_i }.
InversionSequence theta(const Permutation& pi);
Permutation theta_inverse(const InversionSequence& e);

// ---------------------------------------------------------------------------
// Occurrence swaps used for the super-strong equivalences

enum class SwapVariant {
    EQGT_to_GTEQ, ///< (=,>)  -> (>,=)
    EQGE_to_GEEQ, ///< (=,>=) -> (>=,=)
    GEGT_to_GTGE, ///< (>=,>) -> (>,>=)
};

RelationPattern source_pattern(SwapVariant v);
RelationPattern target_pattern(SwapVariant v);
std::string_view to_string(SwapVariant v) noexcept;

/// Rewrites the source-pattern occurrences at positions S (1-based) into
/// target-pattern occurrences at the same positions. Requires
/// S subset of occurrence_set(e, source_pattern(v)).
InversionSequence swap_occurrences(const InversionSequence& e, const std::vector<int>& positions,
                                   SwapVariant v);

/// Inverse of swap_occurrences; requires S subset of occurrence_set(e, target).
InversionSequence unswap_occurrences(const InversionSequence& e, const std::vector<int>& positions,
                                     SwapVariant v);

// ---------------------------------------------------------------------------
// I_n(>=,>) <-> I_n(>,>=), last entry preserved

/// Replaces each maximal 1 0^r (r >= 2) by 1^r 0.
InversionSequence phi_last_preserving(const InversionSequence& e);
/// Replaces each maximal 1^r 0 (r >= 2) by 1 0^r.
InversionSequence phi_last_preserving_inverse(const InversionSequence& e);

/// S_n(124-3 with 124 adjacent) -> S_n(421-3 with 421 adjacent), through
/// reverse-complement, theta, phi^{-1}, theta^{-1} and reverse.
Permutation vincular_bijection(const Permutation& pi);
Permutation vincular_bijection_inverse(const Permutation& pi);

// ---------------------------------------------------------------------------
// I_n(!=,!=) <-> involutions

Permutation upsilon(const InversionSequence& e);
InversionSequence upsilon_inverse(const Permutation& involution);

// ---------------------------------------------------------------------------
// I_n(>=,!=) <-> subsets of {0..n-2} with at most two elements

std::set<int> gamma(const InversionSequence& e);
InversionSequence gamma_inverse(const std::set<int>& subset, int n);

// ---------------------------------------------------------------------------
// I_n(>=,<=) <-> compositions of n with parts in {1,2}

std::vector<int> to_composition(const InversionSequence& e);
InversionSequence from_composition(const std::vector<int>& parts);

// ---------------------------------------------------------------------------
// Lattice paths

enum class StepKind : unsigned char { E, N, Marked, D };

struct PathStep {
    StepKind kind = StepKind::E;
    int arity = 0; ///< t >= 2 for Marked (N*_t) and D (D_t = (t-1, t)); 0 otherwise.

    bool vertical() const noexcept { return kind == StepKind::N || kind == StepKind::Marked; }
    auto operator<=>(const PathStep&) const = default;
};

/// How marks are printed: "N*" / "D" for arity 2 (compact) or always with
/// the arity ("N*2", "D2").
enum class MarkNotation { compact, explicit_arity };

/// Underdiagonal path from the origin to a point on the diagonal with steps
/// E, N and marked N*_t (t >= 2). Size = #E + sum (t-1) #N*_t. Plain Dyck
/// paths have no marks; singly-marked paths only use t = 2.
class MarkedDyckPath {
public:
    MarkedDyckPath() = default;
    explicit MarkedDyckPath(std::vector<PathStep> steps);

    const std::vector<PathStep>& steps() const noexcept { return steps_; }
    int size() const noexcept { return size_; }
    int semilength() const noexcept { return east_; }
    int max_arity() const noexcept;
    bool has_unmarked_tail() const noexcept;
    bool has_marks() const noexcept;

    std::string to_string(MarkNotation notation = MarkNotation::compact) const;
    auto operator<=>(const MarkedDyckPath& other) const { return steps_ <=> other.steps_; }
    bool operator==(const MarkedDyckPath& other) const { return steps_ == other.steps_; }

private:
    std::vector<PathStep> steps_;
    int size_ = 0;
    int east_ = 0;
};

using MultiMarkedDyckPath = MarkedDyckPath;

/// Underdiagonal path from the origin to the line x = n with steps E, N and
/// D_t = (t-1, t).
class SlantedPath {
public:
    SlantedPath() = default;
    explicit SlantedPath(std::vector<PathStep> steps);

    const std::vector<PathStep>& steps() const noexcept { return steps_; }
    int horizontal_length() const noexcept { return x_; }
    int height() const noexcept { return y_; }
    int max_arity() const noexcept;

    std::string to_string(MarkNotation notation = MarkNotation::compact) const;
    auto operator<=>(const SlantedPath& other) const { return steps_ <=> other.steps_; }
    bool operator==(const SlantedPath& other) const { return steps_ == other.steps_; }

private:
    std::vector<PathStep> steps_;
    int x_ = 0;
    int y_ = 0;
};

/// Tokens: "E", "N", "N*" (arity 2), "N*k", "D" (arity 2), "Dk".
std::vector<PathStep> parse_steps(std::string_view text);
MarkedDyckPath parse_marked_path(std::string_view text);
SlantedPath parse_slanted_path(std::string_view text);

/// I_n(<=,>) (weakly increasing) <-> Dyck paths of semilength n.
MarkedDyckPath to_dyck_path(const InversionSequence& e);
InversionSequence from_dyck_path(const MarkedDyckPath& path);

/// I_n(>,<=,-) <-> R_n (marked Dyck paths of size n with unmarked tail).
MarkedDyckPath varphi(const InversionSequence& e);
InversionSequence varphi_inverse(const MarkedDyckPath& path);

/// I_n(>,<=,-) <-> R'_{n-1} (steps E, N, D = (1,2)).
SlantedPath varphi_prime(const InversionSequence& e);
InversionSequence varphi_prime_inverse(const SlantedPath& path);

/// I_n(>,<,-) <-> multi-marked Dyck paths of size n with unmarked tail.
MultiMarkedDyckPath varphi_multi(const InversionSequence& e);
InversionSequence varphi_multi_inverse(const MultiMarkedDyckPath& path);

/// I_n(>,<,-) <-> slanted paths with steps E, N, D_t of horizontal length n-1.
SlantedPath varphi_multi_prime(const InversionSequence& e);
InversionSequence varphi_multi_prime_inverse(const SlantedPath& path);

/// Elbows (E followed by a vertical step) plus marked steps not in an elbow.
int path_dist(const MarkedDyckPath& path);

/// Marked step -> D step, then drop the final run of N steps and the E before it.
SlantedPath slant(const MarkedDyckPath& path);
/// Inverse of slant.
MarkedDyckPath unslant(const SlantedPath& path);

// ---------------------------------------------------------------------------
// Target sets, listed directly (independently of the maps above)

/// Marked Dyck paths of size n with marks of arity 2..max_arity
/// (max_arity < 2: plain Dyck paths of semilength n).
std::vector<MarkedDyckPath> marked_dyck_paths(int n, int max_arity, bool unmarked_tail_only);

/// Slanted paths of horizontal length m with D_t for 2 <= t <= max_arity.
std::vector<SlantedPath> slanted_paths(int m, int max_arity);

/// Compositions of n with parts in {1,2}.
std::vector<std::vector<int>> compositions_with_parts_one_two(int n);

/// Subsets of {0..n-2} with at most two elements.
std::vector<std::set<int>> small_subsets(int n);

} // namespace invrel
