#pragma once

// Embedded reference data: OEIS terms for the enumerated avoidance classes
// and the expected equivalence partition. Offline; nothing is fetched.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "invrel/enumerate.hpp"

namespace invrel {

struct ReferenceSequence {
    std::string oeis_id;
    std::string description;
    /// Patterns "R1,R2" or triples "R1,R2,R3" counted by the sequence.
    std::vector<std::string> patterns;
    /// Index of terms[0].
    int offset = 1;
    std::vector<std::uint64_t> terms;
    /// True for the rows of the classification table of enumerated classes.
    bool table_row = false;
};

/// Table rows in order from least to most avoided, then extra sequences.
const std::vector<ReferenceSequence>& reference_sequences();
/// nullptr if unknown.
const ReferenceSequence* find_reference(std::string_view oeis_id);

/// Triple whose avoiders satisfy a unimodality condition, with its count
/// formula (closed_form name, or empty when only an OGF is known) and the
/// bivariate catalog series.
struct UnimodalTriple {
    std::string triple;
    std::string closed_form;
    std::string series;
};

const std::vector<UnimodalTriple>& unimodal_triples();

/// Expected partition of the 36 patterns at the given level.
std::vector<PatternClass> reference_partition(EquivalenceLevel level);

} // namespace invrel
