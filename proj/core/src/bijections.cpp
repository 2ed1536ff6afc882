#include "invrel/bijections.hpp"

#include <algorithm>
#include <map>

namespace invrel {

namespace {

using Vec = std::vector<int>;

int at(const Vec& v, int position) { return v[static_cast<std::size_t>(position - 1)]; }
int& at(Vec& v, int position) { return v[static_cast<std::size_t>(position - 1)]; }

Vec to_vec(const InversionSequence& e) { return Vec(e.entries().begin(), e.entries().end()); }

void require_avoids(const InversionSequence& e, RelationPattern p, std::string_view what) {
    if (!avoids(e, p)) {
        throw DomainError(std::string(what) + ": " + to_string(e) + " contains " + p.to_string());
    }
}

void require_avoids(const InversionSequence& e, const TriplePattern& t, std::string_view what) {
    if (!avoids_triple(e, t)) {
        throw DomainError(std::string(what) + ": " + to_string(e) + " contains " + t.to_string());
    }
}

const TriplePattern kGtLeDash{Relation::GT, Relation::LE, Relation::DASH};
const TriplePattern kGtLtDash{Relation::GT, Relation::LT, Relation::DASH};

/// Maximal runs of consecutive positions, as (start, last).
std::vector<std::pair<int, int>> blocks_of(Vec positions) {
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    std::vector<std::pair<int, int>> out;
    for (int p : positions) {
        if (!out.empty() && out.back().second + 1 == p) {
            out.back().second = p;
        } else {
            out.emplace_back(p, p);
        }
    }
    return out;
}

void require_subset(const Vec& positions, const InversionSequence& e, RelationPattern p,
                    std::string_view what) {
    const auto occ = occurrence_set(e, p);
    for (int s : positions) {
        if (!std::binary_search(occ.begin(), occ.end(), s)) {
            throw DomainError(std::string(what) + ": position " + std::to_string(s) +
                              " is not an occurrence of " + p.to_string() + " in " + to_string(e));
        }
    }
}

InversionSequence checked(Vec v, std::string_view what) {
    if (!InversionSequence::is_valid(v)) {
        throw DomainError(std::string(what) + ": result " + to_string(v) +
                          " is not an inversion sequence");
    }
    return InversionSequence(std::move(v));
}

} // namespace

// ---------------------------------------------------------------------------

InversionSequence theta(const Permutation& pi) {
    const auto v = pi.values();
    Vec e(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (v[j] > v[i]) ++e[i];
    }
    return InversionSequence(std::move(e));
}

Permutation theta_inverse(const InversionSequence& e) {
    const int n = e.size();
    Vec remaining(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) remaining[static_cast<std::size_t>(i)] = i + 1;
    Vec pi(static_cast<std::size_t>(n));
    for (int i = n; i >= 1; --i) {
        // remaining is ascending; the (e_i + 1)-th largest sits e_i from the end.
        const auto idx = remaining.size() - 1 - static_cast<std::size_t>(e.entry(i));
        at(pi, i) = remaining[idx];
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(pi));
}

// ---------------------------------------------------------------------------

RelationPattern source_pattern(SwapVariant v) {
    switch (v) {
    case SwapVariant::EQGT_to_GTEQ: return {Relation::EQ, Relation::GT};
    case SwapVariant::EQGE_to_GEEQ: return {Relation::EQ, Relation::GE};
    case SwapVariant::GEGT_to_GTGE: return {Relation::GE, Relation::GT};
    }
    throw DomainError("unknown swap variant");
}

RelationPattern target_pattern(SwapVariant v) {
    switch (v) {
    case SwapVariant::EQGT_to_GTEQ: return {Relation::GT, Relation::EQ};
    case SwapVariant::EQGE_to_GEEQ: return {Relation::GE, Relation::EQ};
    case SwapVariant::GEGT_to_GTGE: return {Relation::GT, Relation::GE};
    }
    throw DomainError("unknown swap variant");
}

std::string_view to_string(SwapVariant v) noexcept {
    switch (v) {
    case SwapVariant::EQGT_to_GTEQ: return "EQGT_to_GTEQ";
    case SwapVariant::EQGE_to_GEEQ: return "EQGE_to_GEEQ";
    case SwapVariant::GEGT_to_GTGE: return "GEGT_to_GTGE";
    }
    return "?";
}

InversionSequence swap_occurrences(const InversionSequence& e, const std::vector<int>& positions,
                                   SwapVariant v) {
    require_subset(positions, e, source_pattern(v), "swap_occurrences");
    const Vec src = to_vec(e);
    Vec out = src;
    switch (v) {
    case SwapVariant::EQGT_to_GTEQ:
        for (int s : positions) at(out, s + 1) = at(src, s + 2);
        break;
    case SwapVariant::EQGE_to_GEEQ:
        for (auto [a, last] : blocks_of(positions)) {
            if (at(src, last + 1) > at(src, last + 2)) {
                for (int i = a + 1; i <= last + 1; ++i) at(out, i) = at(src, last + 2);
            }
        }
        break;
    case SwapVariant::GEGT_to_GTGE:
        for (auto [a, last] : blocks_of(positions)) {
            if (at(src, a) == at(src, a + 1)) {
                for (int i = a + 1; i <= last + 1; ++i) at(out, i) = at(src, i + 1);
            }
        }
        break;
    }
    return checked(std::move(out), "swap_occurrences");
}

InversionSequence unswap_occurrences(const InversionSequence& e, const std::vector<int>& positions,
                                     SwapVariant v) {
    require_subset(positions, e, target_pattern(v), "unswap_occurrences");
    const Vec src = to_vec(e);
    Vec out = src;
    switch (v) {
    case SwapVariant::EQGT_to_GTEQ:
        for (int s : positions) at(out, s + 1) = at(src, s);
        break;
    case SwapVariant::EQGE_to_GEEQ:
        for (auto [a, last] : blocks_of(positions)) {
            if (at(src, a) > at(src, a + 1)) {
                for (int i = a + 1; i <= last + 1; ++i) at(out, i) = at(src, a);
            }
        }
        break;
    case SwapVariant::GEGT_to_GTGE:
        for (auto [a, last] : blocks_of(positions)) {
            if (at(src, last + 1) == at(src, last + 2)) {
                for (int i = a + 1; i <= last + 1; ++i) at(out, i) = at(src, i - 1);
            }
        }
        break;
    }
    return checked(std::move(out), "unswap_occurrences");
}

// ---------------------------------------------------------------------------

InversionSequence phi_last_preserving(const InversionSequence& e) {
    require_avoids(e, RelationPattern(Relation::GE, Relation::GT), "phi_last_preserving");
    Vec out = to_vec(e);
    const int n = e.size();
    for (int j = 1; j < n; ++j) {
        if (!(at(out, j) > at(out, j + 1))) continue;
        int r = 1;
        while (j + r + 1 <= n && at(out, j + r + 1) == at(out, j + 1)) ++r;
        if (r >= 2) {
            const int top = at(out, j);
            for (int i = j + 1; i <= j + r - 1; ++i) at(out, i) = top;
        }
        j += r - 1;
    }
    return checked(std::move(out), "phi_last_preserving");
}

InversionSequence phi_last_preserving_inverse(const InversionSequence& e) {
    require_avoids(e, RelationPattern(Relation::GT, Relation::GE), "phi_last_preserving_inverse");
    Vec out = to_vec(e);
    const int n = e.size();
    int j = 1;
    while (j <= n) {
        // Maximal run of equal values starting at j followed by a smaller value.
        int k = j;
        while (k < n && at(out, k + 1) == at(out, j)) ++k;
        const int r = k - j + 1;
        if (r >= 2 && k < n && at(out, k + 1) < at(out, j) && (j == 1 || at(out, j - 1) != at(out, j))) {
            const int bottom = at(out, k + 1);
            for (int i = j + 1; i <= k; ++i) at(out, i) = bottom;
        }
        j = k + 1;
    }
    return checked(std::move(out), "phi_last_preserving_inverse");
}

Permutation vincular_bijection(const Permutation& pi) {
    const auto from = parse_vincular("(124)3");
    if (!avoids_vincular(pi, from)) {
        throw DomainError("vincular_bijection: " + to_string(pi) + " contains " + from.to_string());
    }
    return reverse(theta_inverse(phi_last_preserving_inverse(theta(reverse_complement(pi)))));
}

Permutation vincular_bijection_inverse(const Permutation& pi) {
    const auto to = parse_vincular("(421)3");
    if (!avoids_vincular(pi, to)) {
        throw DomainError("vincular_bijection_inverse: " + to_string(pi) + " contains " +
                          to.to_string());
    }
    return reverse_complement(theta_inverse(phi_last_preserving(theta(reverse(pi)))));
}

// ---------------------------------------------------------------------------

namespace {

Vec upsilon_rec(const Vec& e, int m) {
    if (m == 0) return {};
    if (m == 1) return {1};
    int i = ((at(e, m) - at(e, m - 1)) % m + m) % m;
    if (i == 0) i = m;
    if (i == m) {
        Vec sigma = upsilon_rec(e, m - 1);
        sigma.push_back(m);
        return sigma;
    }
    Vec tau = upsilon_rec(e, m - 2);
    for (int& x : tau)
        if (x >= i) ++x;
    Vec out(tau.begin(), tau.begin() + (i - 1));
    out.push_back(m);
    out.insert(out.end(), tau.begin() + (i - 1), tau.end());
    out.push_back(i);
    return out;
}

Vec upsilon_inverse_rec(const Vec& pi) {
    const int m = static_cast<int>(pi.size());
    if (m == 0) return {};
    if (m == 1) return {0};
    if (at(pi, m) == m) {
        Vec e = upsilon_inverse_rec(Vec(pi.begin(), pi.end() - 1));
        e.push_back(e.back());
        return e;
    }
    const int i = at(pi, m);
    Vec tau;
    for (int p = 1; p < m; ++p) {
        if (p == i) continue;
        const int x = at(pi, p);
        tau.push_back(x > i ? x - 1 : x);
    }
    Vec e = upsilon_inverse_rec(tau);
    e.push_back(e.empty() ? 0 : e.back());
    e.push_back((e.back() + i) % m);
    return e;
}

} // namespace

Permutation upsilon(const InversionSequence& e) {
    require_avoids(e, RelationPattern(Relation::NE, Relation::NE), "upsilon");
    return Permutation(upsilon_rec(to_vec(e), e.size()));
}

InversionSequence upsilon_inverse(const Permutation& involution) {
    if (!is_involution(involution)) {
        throw DomainError("upsilon_inverse: " + to_string(involution) + " is not an involution");
    }
    const auto v = involution.values();
    return checked(upsilon_inverse_rec(Vec(v.begin(), v.end())), "upsilon_inverse");
}

// ---------------------------------------------------------------------------

std::set<int> gamma(const InversionSequence& e) {
    require_avoids(e, RelationPattern(Relation::GE, Relation::NE), "gamma");
    const int n = e.size();
    if (n == 0 || e.last() == n - 1) return {};
    const auto es = e.entries();
    return {*std::max_element(es.begin(), es.end()), e.last()};
}

InversionSequence gamma_inverse(const std::set<int>& subset, int n) {
    if (n < 0) throw DomainError("gamma_inverse: negative length");
    if (subset.size() > 2) throw DomainError("gamma_inverse: subset has more than two elements");
    for (int x : subset) {
        if (x < 0 || x > n - 2) {
            throw DomainError("gamma_inverse: element " + std::to_string(x) + " outside 0..n-2");
        }
    }
    Vec e(static_cast<std::size_t>(n));
    if (subset.empty()) {
        for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i;
    } else {
        const int a = *subset.rbegin();
        const int b = *subset.begin();
        for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i <= a ? i : b;
    }
    return checked(std::move(e), "gamma_inverse");
}

// ---------------------------------------------------------------------------

std::vector<int> to_composition(const InversionSequence& e) {
    require_avoids(e, RelationPattern(Relation::GE, Relation::LE), "to_composition");
    if (e.empty()) return {};
    const auto es = e.entries();
    const int j = *std::max_element(es.begin(), es.end()) + 1;
    Vec parts(static_cast<std::size_t>(j), 0);
    for (int x : es) ++parts[static_cast<std::size_t>(x)];
    return parts;
}

InversionSequence from_composition(const std::vector<int>& parts) {
    int n = 0;
    for (int a : parts) {
        if (a != 1 && a != 2) throw DomainError("from_composition: parts must be 1 or 2");
        n += a;
    }
    const int j = static_cast<int>(parts.size());
    Vec e(static_cast<std::size_t>(n), -1);
    for (int i = 1; i <= j; ++i) at(e, i) = i - 1;
    int free = n;
    for (int i = 1; i <= j; ++i) {
        if (at(parts, i) == 2) {
            while (at(e, free) != -1) --free;
            at(e, free) = i - 1;
        }
    }
    return checked(std::move(e), "from_composition");
}

// ---------------------------------------------------------------------------
// Paths

namespace {

std::string step_token(const PathStep& s, MarkNotation notation) {
    switch (s.kind) {
    case StepKind::E: return "E";
    case StepKind::N: return "N";
    case StepKind::Marked:
        return notation == MarkNotation::compact && s.arity == 2 ? "N*"
                                                                 : "N*" + std::to_string(s.arity);
    case StepKind::D:
        return notation == MarkNotation::compact && s.arity == 2 ? "D"
                                                                 : "D" + std::to_string(s.arity);
    }
    return "?";
}

PathStep east() { return {StepKind::E, 0}; }
PathStep north() { return {StepKind::N, 0}; }
PathStep marked(int t) { return {StepKind::Marked, t}; }
PathStep diagonal(int t) { return {StepKind::D, t}; }

} // namespace

MarkedDyckPath::MarkedDyckPath(std::vector<PathStep> steps) : steps_(std::move(steps)) {
    int x = 0;
    int y = 0;
    for (const auto& s : steps_) {
        switch (s.kind) {
        case StepKind::E:
            ++x;
            ++size_;
            break;
        case StepKind::Marked:
            if (s.arity < 2) throw DomainError("marked step needs arity >= 2");
            size_ += s.arity - 1;
            [[fallthrough]];
        case StepKind::N:
            ++y;
            if (y > x) throw DomainError("path goes above the diagonal");
            break;
        case StepKind::D: throw DomainError("D steps are not allowed in a marked Dyck path");
        }
    }
    if (x != y) throw DomainError("path does not end on the diagonal");
    east_ = x;
}

int MarkedDyckPath::max_arity() const noexcept {
    int m = 0;
    for (const auto& s : steps_) m = std::max(m, s.arity);
    return m;
}

bool MarkedDyckPath::has_unmarked_tail() const noexcept {
    for (auto it = steps_.rbegin(); it != steps_.rend() && it->vertical(); ++it) {
        if (it->kind == StepKind::Marked) return false;
    }
    return true;
}

bool MarkedDyckPath::has_marks() const noexcept { return max_arity() > 0; }

std::string MarkedDyckPath::to_string(MarkNotation notation) const {
    std::string out;
    for (const auto& s : steps_) out += step_token(s, notation);
    return out;
}

SlantedPath::SlantedPath(std::vector<PathStep> steps) : steps_(std::move(steps)) {
    for (const auto& s : steps_) {
        switch (s.kind) {
        case StepKind::E: ++x_; break;
        case StepKind::N: ++y_; break;
        case StepKind::D:
            if (s.arity < 2) throw DomainError("D step needs arity >= 2");
            x_ += s.arity - 1;
            y_ += s.arity;
            break;
        case StepKind::Marked: throw DomainError("marked steps are not allowed in a slanted path");
        }
        if (y_ > x_) throw DomainError("path goes above the diagonal");
    }
}

int SlantedPath::max_arity() const noexcept {
    int m = 0;
    for (const auto& s : steps_) m = std::max(m, s.arity);
    return m;
}

std::string SlantedPath::to_string(MarkNotation notation) const {
    std::string out;
    for (const auto& s : steps_) out += step_token(s, notation);
    return out;
}

std::vector<PathStep> parse_steps(std::string_view text) {
    std::vector<PathStep> out;
    std::size_t i = 0;
    auto read_arity = [&]() {
        std::size_t j = i;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
        if (j == i) return 2;
        const int t = std::stoi(std::string(text.substr(i, j - i)));
        i = j;
        if (t < 2) throw ParseError("step arity must be at least 2");
        return t;
    };
    while (i < text.size()) {
        const char c = text[i++];
        if (c == ' ' || c == ',') continue;
        if (c == 'E') {
            out.push_back(east());
        } else if (c == 'N') {
            if (i < text.size() && text[i] == '*') {
                ++i;
                out.push_back(marked(read_arity()));
            } else {
                out.push_back(north());
            }
        } else if (c == 'D') {
            out.push_back(diagonal(read_arity()));
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "' in path");
        }
    }
    return out;
}

MarkedDyckPath parse_marked_path(std::string_view text) {
    try {
        return MarkedDyckPath(parse_steps(text));
    } catch (const DomainError& err) {
        throw ParseError(std::string(text) + ": " + err.what());
    }
}

SlantedPath parse_slanted_path(std::string_view text) {
    try {
        return SlantedPath(parse_steps(text));
    } catch (const DomainError& err) {
        throw ParseError(std::string(text) + ": " + err.what());
    }
}

MarkedDyckPath to_dyck_path(const InversionSequence& e) {
    require_avoids(e, RelationPattern(Relation::LE, Relation::GT), "to_dyck_path");
    for (int i = 2; i <= e.size(); ++i) {
        if (e.entry(i) < e.entry(i - 1)) {
            throw DomainError("to_dyck_path: " + to_string(e) + " is not weakly increasing");
        }
    }
    std::vector<PathStep> steps;
    int prev = 0;
    for (int x : e.entries()) {
        steps.insert(steps.end(), static_cast<std::size_t>(x - prev), north());
        steps.push_back(east());
        prev = x;
    }
    steps.insert(steps.end(), static_cast<std::size_t>(e.size() - prev), north());
    return MarkedDyckPath(std::move(steps));
}

InversionSequence from_dyck_path(const MarkedDyckPath& path) {
    if (path.has_marks()) throw DomainError("from_dyck_path: path has marked steps");
    Vec e;
    int y = 0;
    for (const auto& s : path.steps()) {
        if (s.kind == StepKind::E) {
            e.push_back(y);
        } else {
            ++y;
        }
    }
    return checked(std::move(e), "from_dyck_path");
}

namespace {

/// Shared construction: ascending part read as a path, each descending value
/// v (with multiplicity c) marks the step from v to v+1 with arity c + 1.
MarkedDyckPath marked_path_of(const InversionSequence& e) {
    const int n = e.size();
    if (n == 0) return {};
    int j = 1;
    while (j < n && e.entry(j) <= e.entry(j + 1)) ++j;
    std::map<int, int> multiplicity;
    for (int i = j + 1; i <= n; ++i) ++multiplicity[e.entry(i)];
    std::vector<PathStep> steps;
    int prev = 0;
    for (int i = 1; i <= j; ++i) {
        for (int h = prev; h < e.entry(i); ++h) {
            const auto it = multiplicity.find(h);
            steps.push_back(it == multiplicity.end() ? north() : marked(it->second + 1));
        }
        steps.push_back(east());
        prev = e.entry(i);
    }
    steps.insert(steps.end(), static_cast<std::size_t>(j - prev), north());
    return MarkedDyckPath(std::move(steps));
}

InversionSequence sequence_of_marked_path(const MarkedDyckPath& path, std::string_view what) {
    if (!path.has_unmarked_tail()) {
        throw DomainError(std::string(what) + ": " + path.to_string() + " has a marked tail");
    }
    Vec ascending;
    Vec descending;
    int y = 0;
    for (const auto& s : path.steps()) {
        if (s.kind == StepKind::E) {
            ascending.push_back(y);
            continue;
        }
        if (s.kind == StepKind::Marked) {
            descending.insert(descending.end(), static_cast<std::size_t>(s.arity - 1), y);
        }
        ++y;
    }
    std::sort(descending.begin(), descending.end(), std::greater<>());
    ascending.insert(ascending.end(), descending.begin(), descending.end());
    return checked(std::move(ascending), what);
}

} // namespace

MarkedDyckPath varphi(const InversionSequence& e) {
    require_avoids(e, kGtLeDash, "varphi");
    return marked_path_of(e);
}

InversionSequence varphi_inverse(const MarkedDyckPath& path) {
    if (path.max_arity() > 2) throw DomainError("varphi_inverse: marks must have arity 2");
    return sequence_of_marked_path(path, "varphi_inverse");
}

MultiMarkedDyckPath varphi_multi(const InversionSequence& e) {
    require_avoids(e, kGtLtDash, "varphi_multi");
    return marked_path_of(e);
}

InversionSequence varphi_multi_inverse(const MultiMarkedDyckPath& path) {
    return sequence_of_marked_path(path, "varphi_multi_inverse");
}

SlantedPath slant(const MarkedDyckPath& path) {
    if (!path.has_unmarked_tail()) throw DomainError("slant: path has a marked tail");
    std::vector<PathStep> steps = path.steps();
    if (steps.empty()) throw DomainError("slant: empty path");
    while (!steps.empty() && steps.back().kind == StepKind::N) steps.pop_back();
    steps.pop_back(); // the E before the final run
    for (auto& s : steps)
        if (s.kind == StepKind::Marked) s.kind = StepKind::D;
    return SlantedPath(std::move(steps));
}

MarkedDyckPath unslant(const SlantedPath& path) {
    std::vector<PathStep> steps = path.steps();
    int x = 0;
    int y = 0;
    for (auto& s : steps) {
        if (s.kind == StepKind::D) s.kind = StepKind::Marked;
        if (s.kind == StepKind::E) {
            ++x;
        } else {
            ++y;
        }
    }
    steps.push_back(east());
    ++x;
    steps.insert(steps.end(), static_cast<std::size_t>(x - y), north());
    return MarkedDyckPath(std::move(steps));
}

SlantedPath varphi_prime(const InversionSequence& e) { return slant(varphi(e)); }

InversionSequence varphi_prime_inverse(const SlantedPath& path) {
    if (path.max_arity() > 2) throw DomainError("varphi_prime_inverse: D steps must have arity 2");
    return varphi_inverse(unslant(path));
}

SlantedPath varphi_multi_prime(const InversionSequence& e) { return slant(varphi_multi(e)); }

InversionSequence varphi_multi_prime_inverse(const SlantedPath& path) {
    return varphi_multi_inverse(unslant(path));
}

int path_dist(const MarkedDyckPath& path) {
    const auto& s = path.steps();
    int d = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i].kind == StepKind::E && i + 1 < s.size() && s[i + 1].vertical()) ++d;
        if (s[i].kind == StepKind::Marked && (i == 0 || s[i - 1].kind != StepKind::E)) ++d;
    }
    return d;
}

// ---------------------------------------------------------------------------

std::vector<MarkedDyckPath> marked_dyck_paths(int n, int max_arity, bool unmarked_tail_only) {
    if (n < 0) return {};
    std::vector<MarkedDyckPath> out;
    std::vector<PathStep> steps;
    auto rec = [&](auto&& self, int x, int y, int size) -> void {
        if (size == n && x == y) {
            MarkedDyckPath p(steps);
            if (!unmarked_tail_only || p.has_unmarked_tail()) out.push_back(std::move(p));
            return;
        }
        if (size < n) {
            steps.push_back(east());
            self(self, x + 1, y, size + 1);
            steps.pop_back();
        }
        if (y < x) {
            steps.push_back(north());
            self(self, x, y + 1, size);
            steps.pop_back();
            for (int t = 2; t <= max_arity && size + t - 1 <= n; ++t) {
                steps.push_back(marked(t));
                self(self, x, y + 1, size + t - 1);
                steps.pop_back();
            }
        }
    };
    rec(rec, 0, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SlantedPath> slanted_paths(int m, int max_arity) {
    if (m < 0) return {};
    std::vector<SlantedPath> out;
    std::vector<PathStep> steps;
    auto rec = [&](auto&& self, int x, int y) -> void {
        if (x == m) out.emplace_back(steps);
        if (x < m) {
            steps.push_back(east());
            self(self, x + 1, y);
            steps.pop_back();
        }
        if (y < x) {
            steps.push_back(north());
            self(self, x, y + 1);
            steps.pop_back();
            for (int t = 2; t <= max_arity && x + t - 1 <= m; ++t) {
                steps.push_back(diagonal(t));
                self(self, x + t - 1, y + t);
                steps.pop_back();
            }
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> compositions_with_parts_one_two(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part : {1, 2}) {
            if (part > rest) break;
            cur.push_back(part);
            self(self, rest - part);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(rec, n);
    return out;
}

std::vector<std::set<int>> small_subsets(int n) {
    std::vector<std::set<int>> out{{}};
    for (int a = 0; a <= n - 2; ++a) {
        out.push_back({a});
        for (int b = 0; b < a; ++b) out.push_back({b, a});
    }
    return out;
}

} // namespace invrel
