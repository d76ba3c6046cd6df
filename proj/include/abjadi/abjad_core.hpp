#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "abjadi/errors.hpp"

namespace abjadi {

enum class Script { Arabic, Hebrew };

std::string_view script_name(Script script);

// One letter of the Abjadi order with its numerical value.
struct AbjadLetter {
    char32_t codepoint;
    std::string sound;
    int value;
    int order;  // 1-based position in the Abjadi order
    Script script;
    std::vector<char32_t> variants;  // codepoints that fold to this letter
};

// Embedded per-script value table. Arabic has 28 letters (1..1000),
// Hebrew 22 (1..400).
class AbjadTable {
public:
    static const AbjadTable& get(Script script);

    Script script() const { return script_; }
    const std::vector<AbjadLetter>& letters() const { return letters_; }

    // nullptr when absent
    const AbjadLetter* find_by_value(int value) const;
    const AbjadLetter* find_by_codepoint(char32_t cp) const;

    // throwing lookups
    const AbjadLetter& by_value(int value) const;
    const AbjadLetter& by_codepoint(char32_t cp) const;

    int max_value() const;          // 1000 Arabic, 400 Hebrew
    long single_word_max() const;   // 1999 Arabic, 499 Hebrew
    char32_t conjunction() const;   // و / ו
    std::string_view multiplier_word() const;  // the "thousand" word

private:
    explicit AbjadTable(Script script);

    Script script_;
    std::vector<AbjadLetter> letters_;
};

struct NormalizeOptions {
    // ة folds to ه (value 5) by default; set to fold to ت (value 400).
    bool taa_marbuta_as_taa = false;
};

// Strips combining diacritics and tatweel, folds variant codepoints to
// their base letters. Characters outside the script pass through.
std::string normalize(std::string_view text, Script script,
                      const NormalizeOptions& opts = {});

// Abjadi numerical value of a single letter, after variant folding.
int value_of(char32_t letter, Script script);

// Splits a single-word value into its per-place letter values, units
// first: 1245 -> {5, 40, 200, 1000}. Range: 1..1999 Arabic, 1..499 Hebrew.
std::vector<int> decompose_class(long value, Script script);

// Letters of decompose_class(value) concatenated in logical order.
std::string encode_class_word(long value, Script script);

// Sum of letter values of a class word. Strict mode additionally requires
// the canonical form: one letter per decimal place, ascending.
long decode_class_word(std::string_view word, Script script,
                       bool strict = false);

// A number as class groups with thousand-power exponents, units first.
struct NumberExpression {
    struct Group {
        long class_value;
        int exponent;  // 0 units, 1 thousands, 2 millions, ...
    };
    std::vector<Group> groups;
    Script script;

    long long value() const;
    static NumberExpression from_integer(long long n, Script script);
};

// Letter-word form of n. Single word up to the script's single-word
// range; beyond that, class words units-first, joined by the conjunction
// letter, non-units classes followed by the multiplier word per exponent.
std::string encode_number(long long n, Script script);

// Parses a number expression; accepts classes in any exponent order and
// parenthesized multiplier words, rejects duplicate exponents.
NumberExpression parse_number(std::string_view text, Script script);
long long decode_number(std::string_view text, Script script);

enum class GematriaMode { Lenient, Strict };

// Sum of Abjadi values of the letters of normalize(text). Lenient mode
// skips valueless characters; strict mode throws UnknownLetter on them.
long long guematria(std::string_view text, Script script,
                    GematriaMode mode = GematriaMode::Lenient);

}  // namespace abjadi
