#include "abjadi/glyph_map.hpp"

#include "abjadi/utf8.hpp"

namespace abjadi {

namespace {
constexpr char32_t kEasternZero = 0x0660;  // ٠
}

std::string_view system_name(NumeralSystem system) {
    switch (system) {
        case NumeralSystem::ModernWestern: return "western";
        case NumeralSystem::EasternArabic: return "eastern";
        case NumeralSystem::Ghubari: return "ghubari";
    }
    return "?";
}

bool is_digit(char32_t ch, NumeralSystem system) {
    if (system == NumeralSystem::EasternArabic)
        return ch >= kEasternZero && ch <= kEasternZero + 9;
    return ch >= U'0' && ch <= U'9';
}

int digit_value(char32_t ch, NumeralSystem system) {
    if (!is_digit(ch, system))
        throw NotADigit(utf8::encode(ch) + " is not a " +
                        std::string(system_name(system)) + " digit");
    if (system == NumeralSystem::EasternArabic)
        return static_cast<int>(ch - kEasternZero);
    return static_cast<int>(ch - U'0');
}

char32_t digit_char(int value, NumeralSystem system) {
    if (value < 0 || value > 9)
        throw NotADigit(std::to_string(value) + " is not a digit value");
    if (system == NumeralSystem::EasternArabic)
        return kEasternZero + static_cast<char32_t>(value);
    return U'0' + static_cast<char32_t>(value);
}

std::string transliterate(std::string_view text, NumeralSystem from,
                          NumeralSystem to) {
    std::string out;
    out.reserve(text.size());
    for (char32_t cp : utf8::decode(text)) {
        if (is_digit(cp, from))
            cp = digit_char(digit_value(cp, from), to);
        utf8::append(out, cp);
    }
    return out;
}

std::string_view to_string(GhubariTransform t) {
    switch (t) {
        case GhubariTransform::None: return "none";
        case GhubariTransform::UpSideDown: return "up-side-down";
        case GhubariTransform::DotModification: return "dot-modification";
        case GhubariTransform::TailBound: return "tail-bound";
        case GhubariTransform::FinalShape: return "final-shape";
        case GhubariTransform::SadInitial: return "sad-initial";
    }
    return "?";
}

std::string_view to_string(MashrikiTransform t) {
    switch (t) {
        case MashrikiTransform::None: return "none";
        case MashrikiTransform::LegForDot: return "leg-for-dot";
        case MashrikiTransform::RotationRightQuarter:
            return "rotation-right-quarter";
        case MashrikiTransform::RotationLeftQuarter:
            return "rotation-left-quarter";
        case MashrikiTransform::UpSideDown: return "up-side-down";
        case MashrikiTransform::HebrewBorrowing: return "hebrew-borrowing";
    }
    return "?";
}

namespace {

const std::vector<LineageRecord>& lineage_table() {
    using G = GhubariTransform;
    using M = MashrikiTransform;
    // Ghubari: digit shapes taken from the Arabic letter of equal Abjadi
    // value, except 2 (final Yaa, value 10) and 0 (initial Sad, value 90).
    // Mashriki: redrawn along the Abjadi order, with Hebrew Vav and Yodh
    // borrowed for 6 and 0 to avoid clashing with Ghubari shapes.
    static const std::vector<LineageRecord> records = {
        {0,
         {U'ص', Script::Arabic, "Sad", 90},
         G::SadInitial,
         {U'י', Script::Hebrew, "Yodh", 10},
         M::HebrewBorrowing,
         0,
         "zero has no Abjadi value; Ghubari 0 takes the initial Sad of "
         "\"Sifr\", Mashriki 0 borrows Hebrew Yodh"},
        {1,
         {U'ا', Script::Arabic, "Alif", 1},
         G::None,
         {U'ا', Script::Arabic, "Alif", 1},
         M::None,
         1,
         ""},
        {2,
         {U'ي', Script::Arabic, "Yaa", 10},
         G::FinalShape,
         {U'ب', Script::Arabic, "Baa", 2},
         M::LegForDot,
         2,
         "Ghubari 2 is the final Maghribi Yaa with its two dots, not Baa"},
        {3,
         {U'ج', Script::Arabic, "Jim", 3},
         G::FinalShape,
         {U'ج', Script::Arabic, "Jim", 3},
         M::RotationRightQuarter,
         3,
         ""},
        {4,
         {U'د', Script::Arabic, "Del", 4},
         G::None,
         {U'د', Script::Arabic, "Del", 4},
         M::None,
         5,
         "the Ghubari 4 shape became the modern 5"},
        {5,
         {U'ه', Script::Arabic, "Haa", 5},
         G::FinalShape,
         {U'ه', Script::Arabic, "Haa", 5},
         M::None,
         4,
         "the Ghubari 5 shape became the modern 4"},
        {6,
         {U'و', Script::Arabic, "Waw", 6},
         G::UpSideDown,
         {U'ו', Script::Hebrew, "Vav", 6},
         M::HebrewBorrowing,
         6,
         "Mashriki 6 borrows Hebrew Vav; Arabic Waw would clash with "
         "Ghubari 9"},
        {7,
         {U'ز', Script::Arabic, "Zin", 7},
         G::DotModification,
         {U'ز', Script::Arabic, "Zin", 7},
         M::LegForDot,
         7,
         ""},
        {8,
         {U'ح', Script::Arabic, "H'aa", 8},
         G::TailBound,
         {U'ح', Script::Arabic, "H'aa", 8},
         M::RotationLeftQuarter,
         8,
         "the rotated H'aa also resembles Hebrew Cheth of value 8"},
        {9,
         {U'ط', Script::Arabic, "T'aa", 9},
         G::UpSideDown,
         {U'ط', Script::Arabic, "T'aa", 9},
         M::UpSideDown,
         9,
         ""},
    };
    return records;
}

}  // namespace

const LineageRecord& shape_lineage(int value) {
    if (value < 0 || value > 9)
        throw NotADigit(std::to_string(value) + " is not a digit value");
    return lineage_table()[static_cast<std::size_t>(value)];
}

const std::vector<ConfusionPair>& confusion_pairs() {
    static const std::vector<ConfusionPair> pairs = {
        {NumeralSystem::Ghubari, 5, NumeralSystem::EasternArabic, 6,
         "manuscript date transcription: the Ghubari 5 was taken for a "
         "Mashriki 6"},
        {NumeralSystem::Ghubari, 5, NumeralSystem::ModernWestern, 4,
         "manuscript date transcription: the Ghubari 5 was read as a "
         "modern 4"},
    };
    return pairs;
}

}  // namespace abjadi
