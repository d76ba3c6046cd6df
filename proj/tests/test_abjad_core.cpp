#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"

#include "abjadi/abjad_core.hpp"
#include "abjadi/utf8.hpp"

using namespace abjadi;

namespace {

std::set<int> value_set(Script script) {
    std::set<int> values;
    for (const auto& l : AbjadTable::get(script).letters())
        values.insert(l.value);
    return values;
}

std::set<int> expected_values(int max) {
    std::set<int> values;
    for (int v = 1; v <= 9; ++v) values.insert(v);
    for (int v = 10; v <= 90; v += 10) values.insert(v);
    for (int v = 100; v <= std::min(max, 900); v += 100) values.insert(v);
    if (max >= 1000) values.insert(1000);
    return values;
}

}  // namespace

TEST_CASE("table cardinality and value sets") {
    const auto& arabic = AbjadTable::get(Script::Arabic);
    const auto& hebrew = AbjadTable::get(Script::Hebrew);
    CHECK(arabic.letters().size() == 28);
    CHECK(hebrew.letters().size() == 22);
    CHECK(value_set(Script::Arabic) == expected_values(1000));
    CHECK(value_set(Script::Hebrew) == expected_values(400));

    long sum = 0;
    for (const auto& l : arabic.letters()) sum += l.value;
    CHECK(sum == 5995);
}

TEST_CASE("order ascends with value and lookups are consistent") {
    for (Script s : {Script::Arabic, Script::Hebrew}) {
        const auto& table = AbjadTable::get(s);
        int prev_value = 0;
        int prev_order = 0;
        for (const auto& l : table.letters()) {
            CHECK(l.value > prev_value);
            CHECK(l.order == prev_order + 1);
            prev_value = l.value;
            prev_order = l.order;
            CHECK(&table.by_value(l.value) == &l);
            CHECK(&table.by_codepoint(l.codepoint) == &l);
            for (char32_t v : l.variants)
                CHECK(&table.by_codepoint(v) == &l);
        }
    }
}

TEST_CASE("named table entries") {
    CHECK(AbjadTable::get(Script::Arabic).by_value(3).sound == "Jim");
    CHECK(AbjadTable::get(Script::Arabic).by_value(3).codepoint == U'ج');
    CHECK(AbjadTable::get(Script::Hebrew).by_value(400).sound == "Tav");
    CHECK(AbjadTable::get(Script::Hebrew).by_value(400).codepoint == U'ת');
    CHECK(AbjadTable::get(Script::Arabic).by_value(1000).sound == "Ghin");
}

TEST_CASE("normalize strips diacritics and folds variants") {
    CHECK(normalize("أَحْمَد", Script::Arabic) == "احمد");
    CHECK(normalize("", Script::Arabic) == "");
    CHECK(normalize("שלום", Script::Hebrew) == "שלום");
    // final forms stay as written; cantillation/points are stripped
    CHECK(normalize("ךםןףץ", Script::Hebrew) == "ךםןףץ");
    CHECK(normalize("שָׁלוֹם", Script::Hebrew) == "שלום");
    // tatweel stripped, non-letters untouched
    CHECK(normalize("بـاب 12", Script::Arabic) == "باب 12");
    // hamza carriers fold to alif, alif maqsura to yaa
    CHECK(normalize("أإآٱى", Script::Arabic) == "ااااي");
    // taa marbuta: haa by default, taa on request
    CHECK(normalize("ة", Script::Arabic) == "ه");
    CHECK(normalize("ة", Script::Arabic, {.taa_marbuta_as_taa = true}) ==
          "ت");
}

TEST_CASE("normalize is idempotent") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, 5);
    const std::vector<std::string> pieces = {
        "أَ", "بّ", "שָׁ", "ى", "ـ", "x "};
    for (int trial = 0; trial < 200; ++trial) {
        std::string text;
        for (int i = 0; i < 8; ++i) text += pieces[pick(rng)];
        for (Script s : {Script::Arabic, Script::Hebrew}) {
            std::string once = normalize(text, s);
            CHECK(normalize(once, s) == once);
        }
    }
}

TEST_CASE("value_of") {
    CHECK(value_of(U'غ', Script::Arabic) == 1000);
    CHECK(value_of(U'ا', Script::Arabic) == 1);
    CHECK(value_of(U'أ', Script::Arabic) == 1);
    CHECK(value_of(U'ך', Script::Hebrew) == 20);
    CHECK_THROWS_AS(value_of(U'x', Script::Arabic), UnknownLetter);
    CHECK_THROWS_AS(value_of(U'ا', Script::Hebrew), UnknownLetter);
}

TEST_CASE("decompose_class") {
    CHECK(decompose_class(1245, Script::Arabic) ==
          std::vector<int>{5, 40, 200, 1000});
    CHECK(decompose_class(1, Script::Arabic) == std::vector<int>{1});
    auto hebrew = decompose_class(499, Script::Hebrew);
    CHECK(hebrew == std::vector<int>{9, 90, 400});
    CHECK(std::accumulate(hebrew.begin(), hebrew.end(), 0) == 499);
    CHECK_THROWS_AS(decompose_class(0, Script::Arabic), OutOfRange);
    CHECK_THROWS_AS(decompose_class(2000, Script::Arabic), OutOfRange);
    CHECK_THROWS_AS(decompose_class(500, Script::Hebrew), OutOfRange);
}

TEST_CASE("encode_class_word") {
    CHECK(encode_class_word(1245, Script::Arabic) == "همرغ");
    CHECK(encode_class_word(789, Script::Arabic) == "طفذ");
    // 6 + 50 + 400; the letter of value 400 is ت per the value table
    CHECK(encode_class_word(456, Script::Arabic) == "ونت");
    CHECK(encode_class_word(23, Script::Arabic) == "جك");
    CHECK(encode_class_word(499, Script::Hebrew) == "טצת");
}

TEST_CASE("canonical class words are short and ascending") {
    for (long v = 1; v <= 1999; ++v) {
        auto cps = utf8::decode(encode_class_word(v, Script::Arabic));
        CHECK(cps.size() <= 4);
        int prev = 0;
        for (char32_t cp : cps) {
            int value = value_of(cp, Script::Arabic);
            CHECK(value > prev);
            prev = value;
        }
    }
    for (long v = 1; v <= 499; ++v)
        CHECK(utf8::decode(encode_class_word(v, Script::Hebrew)).size() <= 3);
}

TEST_CASE("decode_class_word") {
    CHECK(decode_class_word("همرغ", Script::Arabic, true) == 1245);
    CHECK(decode_class_word("جك", Script::Arabic, true) == 23);
    CHECK_THROWS_AS(decode_class_word("اا", Script::Arabic, true),
                    NonCanonical);
    CHECK(decode_class_word("اا", Script::Arabic, false) == 2);
    // descending order passes lenient, fails strict
    CHECK(decode_class_word("غه", Script::Arabic, false) == 1005);
    CHECK_THROWS_AS(decode_class_word("غه", Script::Arabic, true),
                    NonCanonical);
    CHECK_THROWS_AS(decode_class_word("xy", Script::Arabic, false),
                    UnknownLetter);
    // Hebrew finals accepted on decode
    CHECK(decode_class_word("ך", Script::Hebrew, true) == 20);
}

TEST_CASE("encode_number") {
    CHECK(encode_number(1245, Script::Arabic) == "همرغ");
    CHECK(encode_number(23456789, Script::Arabic) ==
          "طفذ و ونت ألف و جك ألف ألف");
    CHECK(encode_number(1000005, Script::Arabic) == "ه و ا ألف ألف");
    CHECK(encode_number(6, Script::Arabic) == "و");
    CHECK(encode_number(6006, Script::Arabic) == "و و و ألف");
    CHECK(encode_number(2000, Script::Arabic) == "ب ألف");
    CHECK(encode_number(1999, Script::Arabic) == "طصظغ");
    CHECK(encode_number(6, Script::Hebrew) == "ו");
    CHECK(encode_number(1000, Script::Hebrew) == "א אלף");
    CHECK_THROWS_AS(encode_number(0, Script::Arabic), OutOfRange);
    CHECK_THROWS_AS(encode_number(-3, Script::Arabic), OutOfRange);
    CHECK_THROWS_AS(encode_number(500, Script::Hebrew),
                    UnrepresentableClass);
    CHECK_THROWS_AS(encode_number(500000, Script::Hebrew),
                    UnrepresentableClass);
}

TEST_CASE("decode_number") {
    CHECK(decode_number("همرغ", Script::Arabic) == 1245);
    CHECK(decode_number("ا", Script::Arabic) == 1);
    CHECK(decode_number("و", Script::Arabic) == 6);
    CHECK(decode_number("طفذ و ونت (ألف) و جك (ألف ألف)", Script::Arabic) ==
          23456789);
    CHECK(decode_number("طفذ و ونت ألف و جك ألف ألف", Script::Arabic) ==
          23456789);
    // the letter values of the reference typographic string sum higher: the
    // printed 456-class word carries a 500-letter
    CHECK(decode_number("طفذ و ونث (ألف) و جك (ألف ألف)", Script::Arabic) ==
          23556789);
    // classes accepted in any exponent order
    CHECK(decode_number("جك ألف ألف و طفذ", Script::Arabic) == 23000789);
    CHECK(decode_number("א אלף", Script::Hebrew) == 1000);

    CHECK_THROWS_AS(decode_number("", Script::Arabic), ParseError);
    CHECK_THROWS_AS(decode_number("ألف", Script::Arabic), ParseError);
    CHECK_THROWS_AS(decode_number("ا ا", Script::Arabic), ParseError);
    CHECK_THROWS_AS(decode_number("ا و", Script::Arabic), ParseError);
    CHECK_THROWS_AS(decode_number("ا و ب", Script::Arabic), DuplicateClass);
    CHECK_THROWS_AS(decode_number("ا ألف و ب ألف", Script::Arabic),
                    DuplicateClass);
    CHECK_THROWS_AS(decode_number("xyz", Script::Arabic), UnknownLetter);
}

TEST_CASE("round-trip: single-word ranges exhaustively") {
    for (long long n = 1; n <= 1999; ++n)
        CHECK(decode_number(encode_number(n, Script::Arabic),
                            Script::Arabic) == n);
    for (long long n = 1; n <= 499; ++n)
        CHECK(decode_number(encode_number(n, Script::Hebrew),
                            Script::Hebrew) == n);
}

TEST_CASE("round-trip: sampled grouped values") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long long> dist(2000, 2000000000LL);
    for (int i = 0; i < 2000; ++i) {
        long long n = dist(rng);
        CHECK(decode_number(encode_number(n, Script::Arabic),
                            Script::Arabic) == n);
    }
}

TEST_CASE("guematria") {
    CHECK(guematria("احمد زينب", Script::Arabic) == 122);
    CHECK(guematria("احمد", Script::Arabic) == 53);
    CHECK(guematria("", Script::Arabic) == 0);
    CHECK(guematria("a1 ،", Script::Arabic) == 0);  // lenient skips
    CHECK_THROWS_AS(
        guematria("a1", Script::Arabic, GematriaMode::Strict),
        UnknownLetter);
    CHECK_THROWS_AS(
        guematria("احمد زينب", Script::Arabic, GematriaMode::Strict),
        UnknownLetter);  // the space has no value
    CHECK(guematria("שלום", Script::Hebrew) == 300 + 30 + 6 + 40);
}

TEST_CASE("guematria of a class word equals its value") {
    for (long v = 1; v <= 1999; ++v)
        CHECK(guematria(encode_class_word(v, Script::Arabic),
                        Script::Arabic) == v);
    for (long v = 1; v <= 499; ++v)
        CHECK(guematria(encode_class_word(v, Script::Hebrew),
                        Script::Hebrew) == v);
}

TEST_CASE("guematria additivity") {
    std::mt19937 rng(123);
    for (Script s : {Script::Arabic, Script::Hebrew}) {
        const auto& letters = AbjadTable::get(s).letters();
        std::uniform_int_distribution<std::size_t> pick(0,
                                                        letters.size() - 1);
        std::uniform_int_distribution<int> len(0, 12);
        auto random_word = [&] {
            std::string w;
            int k = len(rng);
            for (int i = 0; i < k; ++i)
                utf8::append(w, letters[pick(rng)].codepoint);
            return w;
        };
        for (int trial = 0; trial < 500; ++trial) {
            std::string a = random_word();
            std::string b = random_word();
            CHECK(guematria(a + b, s) == guematria(a, s) + guematria(b, s));
        }
    }
}
