#include "abjadi/abjad_core.hpp"

#include <algorithm>
#include <unordered_map>

#include "abjadi/utf8.hpp"

namespace abjadi {

namespace {

struct LetterSpec {
    char32_t cp;
    const char* sound;
    int value;
    std::vector<char32_t> variants;
};

// Abjadi order: ascending numerical value.
const std::vector<LetterSpec>& arabic_specs() {
    static const std::vector<LetterSpec> specs = {
        {U'ا', "Alif", 1, {U'أ', U'إ', U'آ', U'ٱ'}},
        {U'ب', "Baa", 2, {}},
        {U'ج', "Jim", 3, {}},
        {U'د', "Del", 4, {}},
        {U'ه', "Haa", 5, {U'ة'}},
        {U'و', "Waw", 6, {}},
        {U'ز', "Zin", 7, {}},
        {U'ح', "H'aa", 8, {}},
        {U'ط', "T'aa", 9, {}},
        {U'ي', "Yaa", 10, {U'ى'}},
        {U'ك', "Kef", 20, {}},
        {U'ل', "Lem", 30, {}},
        {U'م', "Mim", 40, {}},
        {U'ن', "Noun", 50, {}},
        {U'س', "Sin", 60, {}},
        {U'ع', "A'in", 70, {}},
        {U'ف', "Faa", 80, {}},
        {U'ص', "Sad", 90, {}},
        {U'ق', "K'af", 100, {}},
        {U'ر', "Raa", 200, {}},
        {U'ش', "Shin", 300, {}},
        {U'ت', "Taa", 400, {}},
        {U'ث', "Thaa", 500, {}},
        {U'خ', "Kh'aa", 600, {}},
        {U'ذ', "Dhel", 700, {}},
        {U'ض', "Dzad", 800, {}},
        {U'ظ', "Dzaa", 900, {}},
        {U'غ', "Ghin", 1000, {}},
    };
    return specs;
}

const std::vector<LetterSpec>& hebrew_specs() {
    static const std::vector<LetterSpec> specs = {
        {U'א', "Aleph", 1, {}},
        {U'ב', "Beth", 2, {}},
        {U'ג', "Gimel", 3, {}},
        {U'ד', "Daleth", 4, {}},
        {U'ה', "He", 5, {}},
        {U'ו', "Vav", 6, {}},
        {U'ז', "Zayin", 7, {}},
        {U'ח', "Cheth", 8, {}},
        {U'ט', "Teth", 9, {}},
        {U'י', "Yodh", 10, {}},
        {U'כ', "Kaph", 20, {U'ך'}},
        {U'ל', "Lamedh", 30, {}},
        {U'מ', "Mem", 40, {U'ם'}},
        {U'נ', "Nun", 50, {U'ן'}},
        {U'ס', "Samek", 60, {}},
        {U'ע', "Ayin", 70, {}},
        {U'פ', "Fe", 80, {U'ף'}},
        {U'צ', "Tsahde", 90, {U'ץ'}},
        {U'ק', "Q'oph", 100, {}},
        {U'ר', "Regh", 200, {}},
        {U'ש', "Shin", 300, {}},
        {U'ת', "Tav", 400, {}},
    };
    return specs;
}

constexpr char32_t kTatweel = U'ـ';
constexpr char32_t kTaaMarbuta = U'ة';
constexpr char32_t kArabicTaa = U'ت';

bool is_arabic_mark(char32_t cp) {
    return (cp >= 0x0610 && cp <= 0x061A) || (cp >= 0x064B && cp <= 0x065F) ||
           cp == 0x0670 || (cp >= 0x06D6 && cp <= 0x06DC) ||
           (cp >= 0x06DF && cp <= 0x06E4) || cp == 0x06E7 || cp == 0x06E8 ||
           (cp >= 0x06EA && cp <= 0x06ED);
}

bool is_hebrew_mark(char32_t cp) {
    return (cp >= 0x0591 && cp <= 0x05BD) || cp == 0x05BF || cp == 0x05C1 ||
           cp == 0x05C2 || cp == 0x05C4 || cp == 0x05C5 || cp == 0x05C7;
}

bool is_stripped(char32_t cp, Script script) {
    if (script == Script::Arabic) return is_arabic_mark(cp) || cp == kTatweel;
    return is_hebrew_mark(cp);
}

int place_of(int value) {
    if (value < 10) return 0;
    if (value < 100) return 1;
    if (value < 1000) return 2;
    return 3;
}

}  // namespace

std::string_view script_name(Script script) {
    return script == Script::Arabic ? "arabic" : "hebrew";
}

AbjadTable::AbjadTable(Script script) : script_(script) {
    const auto& specs =
        script == Script::Arabic ? arabic_specs() : hebrew_specs();
    int order = 1;
    for (const auto& s : specs) {
        letters_.push_back(
            {s.cp, s.sound, s.value, order++, script, s.variants});
    }
}

const AbjadTable& AbjadTable::get(Script script) {
    static const AbjadTable arabic(Script::Arabic);
    static const AbjadTable hebrew(Script::Hebrew);
    return script == Script::Arabic ? arabic : hebrew;
}

const AbjadLetter* AbjadTable::find_by_value(int value) const {
    for (const auto& l : letters_)
        if (l.value == value) return &l;
    return nullptr;
}

const AbjadLetter* AbjadTable::find_by_codepoint(char32_t cp) const {
    for (const auto& l : letters_) {
        if (l.codepoint == cp) return &l;
        if (std::find(l.variants.begin(), l.variants.end(), cp) !=
            l.variants.end())
            return &l;
    }
    return nullptr;
}

const AbjadLetter& AbjadTable::by_value(int value) const {
    const AbjadLetter* l = find_by_value(value);
    if (!l)
        throw OutOfRange("no letter of value " + std::to_string(value) +
                         " in the " + std::string(script_name(script_)) +
                         " table");
    return *l;
}

const AbjadLetter& AbjadTable::by_codepoint(char32_t cp) const {
    const AbjadLetter* l = find_by_codepoint(cp);
    if (!l)
        throw UnknownLetter("codepoint U+" + std::to_string(cp) +
                            " has no Abjadi value in the " +
                            std::string(script_name(script_)) + " table");
    return *l;
}

int AbjadTable::max_value() const {
    return script_ == Script::Arabic ? 1000 : 400;
}

long AbjadTable::single_word_max() const {
    return script_ == Script::Arabic ? 1999 : 499;
}

char32_t AbjadTable::conjunction() const {
    return script_ == Script::Arabic ? U'و' : U'ו';
}

std::string_view AbjadTable::multiplier_word() const {
    return script_ == Script::Arabic ? "ألف"    // ألف
                                     : "אלף";   // אלף
}

std::string normalize(std::string_view text, Script script,
                      const NormalizeOptions& opts) {
    const AbjadTable& table = AbjadTable::get(script);
    std::string out;
    out.reserve(text.size());
    for (char32_t cp : utf8::decode(text)) {
        if (is_stripped(cp, script)) continue;
        if (script == Script::Arabic && cp == kTaaMarbuta &&
            opts.taa_marbuta_as_taa) {
            utf8::append(out, kArabicTaa);
            continue;
        }
        if (script == Script::Arabic) {
            const AbjadLetter* l = table.find_by_codepoint(cp);
            utf8::append(out, l ? l->codepoint : cp);
        } else {
            // Hebrew final forms are positional orthography, kept as
            // written; value lookups fold them regardless.
            utf8::append(out, cp);
        }
    }
    return out;
}

int value_of(char32_t letter, Script script) {
    return AbjadTable::get(script).by_codepoint(letter).value;
}

std::vector<int> decompose_class(long value, Script script) {
    const AbjadTable& table = AbjadTable::get(script);
    if (value < 1 || value > table.single_word_max())
        throw OutOfRange(std::to_string(value) + " is outside the " +
                         std::string(script_name(script)) +
                         " single-word range 1.." +
                         std::to_string(table.single_word_max()));
    std::vector<int> parts;
    long v = value;
    long place = 1;
    while (v > 0) {
        int digit = static_cast<int>(v % 10);
        if (digit != 0) parts.push_back(static_cast<int>(digit * place));
        v /= 10;
        place *= 10;
    }
    return parts;
}

std::string encode_class_word(long value, Script script) {
    const AbjadTable& table = AbjadTable::get(script);
    std::string word;
    for (int part : decompose_class(value, script))
        utf8::append(word, table.by_value(part).codepoint);
    return word;
}

long decode_class_word(std::string_view word, Script script, bool strict) {
    const AbjadTable& table = AbjadTable::get(script);
    long sum = 0;
    int prev_value = 0;
    bool places[4] = {false, false, false, false};
    for (char32_t cp : utf8::decode(normalize(word, script))) {
        const AbjadLetter& letter = table.by_codepoint(cp);
        if (strict) {
            if (letter.value <= prev_value)
                throw NonCanonical(
                    "letter values must be strictly increasing in a "
                    "canonical class word");
            int place = place_of(letter.value);
            if (places[place])
                throw NonCanonical(
                    "more than one letter for decimal place " +
                    std::to_string(place));
            places[place] = true;
            prev_value = letter.value;
        }
        sum += letter.value;
    }
    return sum;
}

long long NumberExpression::value() const {
    long long total = 0;
    for (const auto& g : groups) {
        long long scale = 1;
        for (int i = 0; i < g.exponent; ++i) scale *= 1000;
        total += g.class_value * scale;
    }
    return total;
}

NumberExpression NumberExpression::from_integer(long long n, Script script) {
    const AbjadTable& table = AbjadTable::get(script);
    if (n < 1) throw OutOfRange("no letter representation for " +
                                std::to_string(n));
    NumberExpression expr;
    expr.script = script;
    if (n <= table.single_word_max()) {
        expr.groups.push_back({static_cast<long>(n), 0});
        return expr;
    }
    int exponent = 0;
    while (n > 0) {
        long cls = static_cast<long>(n % 1000);
        if (cls != 0) {
            if (cls > table.single_word_max())
                throw UnrepresentableClass(
                    "class " + std::to_string(cls) + " exceeds the " +
                    std::string(script_name(script)) + " class maximum " +
                    std::to_string(table.single_word_max()));
            expr.groups.push_back({cls, exponent});
        }
        n /= 1000;
        ++exponent;
    }
    return expr;
}

std::string encode_number(long long n, Script script) {
    const AbjadTable& table = AbjadTable::get(script);
    NumberExpression expr = NumberExpression::from_integer(n, script);
    std::string conj = utf8::encode(table.conjunction());
    std::string out;
    for (std::size_t i = 0; i < expr.groups.size(); ++i) {
        if (i > 0) out += " " + conj + " ";
        out += encode_class_word(expr.groups[i].class_value, script);
        for (int k = 0; k < expr.groups[i].exponent; ++k) {
            out += " ";
            out += table.multiplier_word();
        }
    }
    return out;
}

namespace {

std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

std::string strip_parens(const std::string& token) {
    std::string t = token;
    while (!t.empty() && t.front() == '(') t.erase(t.begin());
    while (!t.empty() && t.back() == ')') t.pop_back();
    return t;
}

}  // namespace

NumberExpression parse_number(std::string_view text, Script script) {
    const AbjadTable& table = AbjadTable::get(script);
    const std::string mult_norm =
        normalize(table.multiplier_word(), script);
    const char32_t conj = table.conjunction();

    struct RawGroup {
        std::string word;
        int exponent = 0;
    };
    std::vector<RawGroup> raw;
    bool have_word = false;  // current group holds a class word

    std::vector<std::string> tokens = split_tokens(text);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        std::string tok = strip_parens(tokens[i]);
        if (tok.empty())
            throw ParseError("empty token in number expression");
        std::string norm = normalize(tok, script);
        if (norm == mult_norm) {
            if (!have_word)
                throw ParseError(
                    "multiplier word without a preceding class word");
            raw.back().exponent += 1;
            continue;
        }
        std::vector<char32_t> cps = utf8::decode(norm);
        bool is_conj_glyph = cps.size() == 1 && cps[0] == conj;
        // A standalone conjunction letter separates class groups, but only
        // between a completed group and a following token; elsewhere it is
        // an ordinary value-6 letter.
        if (is_conj_glyph && have_word && i + 1 < tokens.size()) {
            have_word = false;
            continue;
        }
        if (have_word)
            throw ParseError("class words must be separated by the "
                             "conjunction letter");
        raw.push_back({tok, 0});
        have_word = true;
    }
    if (raw.empty()) throw ParseError("empty number expression");
    if (!have_word) throw ParseError("dangling conjunction");

    NumberExpression expr;
    expr.script = script;
    for (const auto& g : raw) {
        long cls = decode_class_word(g.word, script, /*strict=*/false);
        for (const auto& seen : expr.groups)
            if (seen.exponent == g.exponent)
                throw DuplicateClass("two class groups at thousand power " +
                                     std::to_string(g.exponent));
        expr.groups.push_back({cls, g.exponent});
    }
    std::sort(expr.groups.begin(), expr.groups.end(),
              [](const auto& a, const auto& b) {
                  return a.exponent < b.exponent;
              });
    return expr;
}

long long decode_number(std::string_view text, Script script) {
    return parse_number(text, script).value();
}

long long guematria(std::string_view text, Script script, GematriaMode mode) {
    const AbjadTable& table = AbjadTable::get(script);
    long long sum = 0;
    for (char32_t cp : utf8::decode(normalize(text, script))) {
        const AbjadLetter* l = table.find_by_codepoint(cp);
        if (l) {
            sum += l->value;
        } else if (mode == GematriaMode::Strict) {
            throw UnknownLetter("character without Abjadi value: " +
                                utf8::encode(cp));
        }
    }
    return sum;
}

}  // namespace abjadi
