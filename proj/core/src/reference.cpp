#include "invrel/reference.hpp"

#include <algorithm>

namespace invrel {

const std::vector<ReferenceSequence>& reference_sequences() {
    static const std::vector<ReferenceSequence> table = {
        {"A040000", "2 for n > 1", {"<=,!="}, 1, {1, 2, 2, 2, 2, 2, 2, 2, 2}, true},
        {"A000027", "n", {"<=,>="}, 1, {1, 2, 3, 4, 5, 6, 7, 8, 9}, true},
        {"A000124", "C(n,2) + 1", {">=,!="}, 1, {1, 2, 4, 7, 11, 16, 22, 29, 37}, true},
        {"A000045", "F(n+1)", {">=,<="}, 1, {1, 2, 3, 5, 8, 13, 21, 34, 55}, true},
        {"A000071", "F(n+2) - 1", {"!=,<="}, 1, {1, 2, 4, 7, 12, 20, 33, 54, 88}, true},
        {"A000079", "2^(n-1)", {">=,<", "<,>=", "!=,>="}, 1, {1, 2, 4, 8, 16, 32, 64, 128, 256}, true},
        {"A000085", "involutions of [n]", {"!=,!="}, 1, {1, 2, 4, 10, 26, 76, 232, 764, 2620}, true},
        {"A000108", "Catalan numbers", {"<=,>"}, 1, {1, 2, 5, 14, 42, 132, 429, 1430, 4862}, true},
        {"A071356", "underdiagonal paths to x = n with steps (0,1), (1,0), (1,2)", {">,<="}, 1,
         {1, 2, 6, 20, 72, 272, 1064, 4272, 17504}, true},
        {"A003422", "left factorial 0! + ... + (n-1)!", {"=,!="}, 1,
         {1, 2, 4, 10, 34, 154, 874, 5914, 46234}, true},
        {"A049774", "permutations avoiding consecutive 321", {">=,>=", "<,<"}, 1,
         {1, 2, 5, 17, 70, 349, 2017, 13358, 99377}, true},
        {"A000522", "sum (n-1)!/i!", {"!=,="}, 1, {1, 2, 5, 16, 65, 326, 1957, 13700, 109601}, true},
        {"A200403", "permutations avoiding 124-3 with 124 adjacent", {">=,>", ">,>="}, 1,
         {1, 2, 6, 23, 107, 584, 3660, 25910, 204564}, true},
        {"A052169", "((n+1)! - d(n+1)) / n", {"=,="}, 1, {1, 2, 5, 19, 91, 531, 3641, 28673, 254871}, true},
        // Frozen from this library's pruned and exhaustive counts of (>,<,-).
        {"A033321", "OGF (1 + z - sqrt(1 - 6z + 5z^2)) / (2z(2 - z))", {">,<,-"}, 1,
         {1, 2, 6, 21, 79, 311, 1265, 5275, 22431}, false},
    };
    return table;
}

const ReferenceSequence* find_reference(std::string_view oeis_id) {
    for (const auto& r : reference_sequences())
        if (r.oeis_id == oeis_id) return &r;
    return nullptr;
}

const std::vector<UnimodalTriple>& unimodal_triples() {
    static const std::vector<UnimodalTriple> table = {
        {"<,-,<", "lt_dash_lt", "I_lt_dash_lt"}, {"!=,<,-", "ne_lt_dash", "I_ne_lt"},
        {"!=,<=,-", "ne_le_dash", "I_ne_le"},    {">,<,-", "", "I_gt_lt"},
        {">,<=,-", "", "I_gt_le"},               {">,!=,-", "gt_ne_dash", "I_gt_ne"},
        {">=,!=,-", "ge_ne_dash", "I_ge_ne"},    {"=,<,-", "eq_lt_dash", "I_eq_lt"},
        {"=,<=,-", "eq_le_dash", "I_eq_le"},     {">=,<=,!=", "ge_le_ne", "I_ge_le_ne"},
    };
    return table;
}

std::vector<PatternClass> reference_partition(EquivalenceLevel level) {
    std::vector<std::vector<std::string>> groups = {
        {">=,<", "<,>="}, {">=,>=", "<,<"}, {">=,=", "=,>="}, {">=,>", ">,>="}, {">,=", "=,>"},
    };
    if (level == EquivalenceLevel::wilf) groups[0].push_back("!=,>=");

    std::vector<PatternClass> out;
    std::vector<bool> used(36, false);
    for (const auto& g : groups) {
        PatternClass cls;
        for (const auto& s : g) {
            const auto p = parse_pattern(s);
            cls.push_back(p);
            used[static_cast<std::size_t>(p.index())] = true;
        }
        std::sort(cls.begin(), cls.end(), [](auto a, auto b) { return a.index() < b.index(); });
        out.push_back(std::move(cls));
    }
    for (int i = 0; i < 36; ++i)
        if (!used[static_cast<std::size_t>(i)]) out.push_back({RelationPattern::from_index(i)});
    return out;
}

} // namespace invrel
