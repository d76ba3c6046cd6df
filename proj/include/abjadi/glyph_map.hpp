#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "abjadi/abjad_core.hpp"
#include "abjadi/errors.hpp"

namespace abjadi {

// Ghubari has no Unicode block; Ghubari text carries Western digit glyphs
// under a Ghubari system tag, and shape history lives in LineageRecord.
enum class NumeralSystem { ModernWestern, EasternArabic, Ghubari };

std::string_view system_name(NumeralSystem system);

bool is_digit(char32_t ch, NumeralSystem system);
int digit_value(char32_t ch, NumeralSystem system);  // throws NotADigit
char32_t digit_char(int value, NumeralSystem system);

// Replaces each digit of `from` with the same-value digit of `to`.
// Everything else passes through unchanged.
std::string transliterate(std::string_view text, NumeralSystem from,
                          NumeralSystem to);

enum class GhubariTransform {
    None,
    UpSideDown,
    DotModification,
    TailBound,
    FinalShape,
    SadInitial
};

enum class MashrikiTransform {
    None,
    LegForDot,
    RotationRightQuarter,
    RotationLeftQuarter,
    UpSideDown,
    HebrewBorrowing
};

std::string_view to_string(GhubariTransform t);
std::string_view to_string(MashrikiTransform t);

struct SourceLetter {
    char32_t codepoint;
    Script script;
    std::string sound;
    int abjadi_value;
};

// Glyph ancestry of one digit value in both descendant systems.
struct LineageRecord {
    int value;
    SourceLetter ghubari_source;
    GhubariTransform ghubari_transformation;
    SourceLetter mashriki_source;
    MashrikiTransform mashriki_transformation;
    int modern_shape_twin;  // 4 and 5 are swapped; all others map to self
    std::string note;
};

const LineageRecord& shape_lineage(int value);

// A historically attested mis-transcription between two digit systems.
struct ConfusionPair {
    NumeralSystem system_a;
    int value_a;
    NumeralSystem system_b;
    int value_b;
    std::string note;
};

const std::vector<ConfusionPair>& confusion_pairs();

}  // namespace abjadi
