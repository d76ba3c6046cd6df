#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "abjadi/glyph_map.hpp"

namespace abjadi {

// One manuscript sheet as catalogued.
struct FolioRecord {
    std::size_t index;  // 0-based physical position
    std::string label;  // digit string in `system`
    NumeralSystem system;
    long value;         // decoded label
    std::optional<std::string> catchword;
    std::optional<std::string> first_word;
};

enum class AnomalyKind {
    Gap,
    Duplicate,
    NonMonotone,
    SuspectMisread,
    CatchwordMismatch
};

std::string_view to_string(AnomalyKind kind);

struct Anomaly {
    AnomalyKind kind;
    std::size_t index = 0;  // first record index involved

    std::vector<long> missing;          // Gap: the skipped values
    long number = 0;                    // Duplicate: the repeated value
    std::vector<std::size_t> indices;   // Duplicate: all occurrences
    long expected = 0;                  // NonMonotone / SuspectMisread
    long found = 0;                     // NonMonotone / SuspectMisread
    long suggested = 0;                 // SuspectMisread
    ConfusionPair pair{};               // SuspectMisread
    std::string catchword;              // CatchwordMismatch
    std::string next_first_word;        // CatchwordMismatch

    std::string describe() const;
};

struct AuditReport {
    std::vector<Anomaly> anomalies;  // ordered by first-occurrence index

    bool clean() const { return anomalies.empty(); }
    std::size_t count(AnomalyKind kind) const;
};

// Parses "label[TAB catchword[TAB first_word]]" lines. Blank lines and
// lines starting with '#' are skipped. Throws ParseError with the 1-based
// line number on malformed input.
std::vector<FolioRecord> parse_folios(const std::vector<std::string>& lines,
                                      NumeralSystem system);

// Checks that the labels form the consecutive run start, start+1, ...
// where start is the first record's value. Reports one Gap per maximal
// missing interval, Duplicate for repeated values, NonMonotone for
// out-of-order values, and SuspectMisread when a confusion-pair digit
// substitution turns a NonMonotone value into the expected one.
AuditReport audit_sequence(const std::vector<FolioRecord>& records);

// Compares each record's catchword against the next record's first word
// (after normalization); pairs with a missing field are skipped.
std::vector<Anomaly> audit_catchwords(
    const std::vector<FolioRecord>& records);

}  // namespace abjadi
