#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "abjadi/abjad_core.hpp"
#include "abjadi/folio_audit.hpp"
#include "abjadi/glyph_map.hpp"
#include "abjadi/number_format.hpp"
#include "abjadi/utf8.hpp"

using json = nlohmann::json;

namespace {

constexpr const char* kSchemaVersion = "1";

enum class OutputMode { Plain, Structured };

struct Options {
    OutputMode output = OutputMode::Plain;
    bool strict = false;
};

std::string read_stdin() {
    std::ostringstream os;
    os << std::cin.rdbuf();
    std::string s = os.str();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

// Positional argument if given, standard input otherwise.
std::string input_or_stdin(const std::string& arg) {
    return arg.empty() ? read_stdin() : arg;
}

long long parse_integer(const std::string& text) {
    std::size_t pos = 0;
    long long n;
    try {
        n = std::stoll(text, &pos);
    } catch (const std::exception&) {
        throw abjadi::ParseError("not an integer: \"" + text + "\"");
    }
    if (pos != text.size())
        throw abjadi::ParseError("not an integer: \"" + text + "\"");
    return n;
}

abjadi::Script parse_script(const std::string& name) {
    if (name == "arabic") return abjadi::Script::Arabic;
    if (name == "hebrew") return abjadi::Script::Hebrew;
    throw CLI::ValidationError("--script", "expected arabic or hebrew");
}

abjadi::NumeralSystem parse_system(const std::string& name) {
    if (name == "western") return abjadi::NumeralSystem::ModernWestern;
    if (name == "eastern") return abjadi::NumeralSystem::EasternArabic;
    if (name == "ghubari") return abjadi::NumeralSystem::Ghubari;
    throw CLI::ValidationError("system",
                               "expected western, eastern or ghubari");
}

void emit(const Options& opts, const std::string& plain, json structured) {
    if (opts.output == OutputMode::Plain) {
        std::cout << plain << "\n";
    } else {
        structured["schema"] = kSchemaVersion;
        std::cout << structured.dump() << "\n";
    }
}

json source_letter_json(const abjadi::SourceLetter& s) {
    return {{"letter", abjadi::utf8::encode(s.codepoint)},
            {"script", std::string(abjadi::script_name(s.script))},
            {"sound", s.sound},
            {"abjadi_value", s.abjadi_value}};
}

json anomaly_json(const abjadi::Anomaly& a) {
    json j{{"kind", std::string(abjadi::to_string(a.kind))},
           {"index", a.index}};
    switch (a.kind) {
        case abjadi::AnomalyKind::Gap:
            j["missing"] = a.missing;
            break;
        case abjadi::AnomalyKind::Duplicate:
            j["number"] = a.number;
            j["indices"] = a.indices;
            break;
        case abjadi::AnomalyKind::NonMonotone:
            j["expected"] = a.expected;
            j["found"] = a.found;
            break;
        case abjadi::AnomalyKind::SuspectMisread:
            j["expected"] = a.expected;
            j["found"] = a.found;
            j["suggested"] = a.suggested;
            j["confusion"] = {
                {"a", {{"system", std::string(abjadi::system_name(
                                      a.pair.system_a))},
                       {"value", a.pair.value_a}}},
                {"b", {{"system", std::string(abjadi::system_name(
                                      a.pair.system_b))},
                       {"value", a.pair.value_b}}},
                {"note", a.pair.note}};
            break;
        case abjadi::AnomalyKind::CatchwordMismatch:
            j["catchword"] = a.catchword;
            j["next_first_word"] = a.next_first_word;
            break;
    }
    return j;
}

int run_audit(const Options& opts, const std::string& path,
              const std::string& system_name) {
    abjadi::NumeralSystem system = parse_system(system_name);
    std::ifstream in(path);
    if (!in) {
        std::cerr << "abjadi: cannot open " << path << "\n";
        return 2;
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);

    auto records = abjadi::parse_folios(lines, system);
    abjadi::AuditReport report = abjadi::audit_sequence(records);
    for (auto& a : abjadi::audit_catchwords(records))
        report.anomalies.push_back(std::move(a));
    std::stable_sort(report.anomalies.begin(), report.anomalies.end(),
                     [](const abjadi::Anomaly& a, const abjadi::Anomaly& b) {
                         return a.index < b.index;
                     });

    if (opts.output == OutputMode::Plain) {
        for (const auto& a : report.anomalies)
            std::cout << a.describe() << "\n";
        std::cout << "records: " << records.size()
                  << ", anomalies: " << report.anomalies.size() << "\n";
    } else {
        json j{{"schema", kSchemaVersion},
               {"command", "audit"},
               {"system", system_name},
               {"records", records.size()},
               {"anomalies", json::array()},
               {"counts",
                {{"gap", report.count(abjadi::AnomalyKind::Gap)},
                 {"duplicate",
                  report.count(abjadi::AnomalyKind::Duplicate)},
                 {"non_monotone",
                  report.count(abjadi::AnomalyKind::NonMonotone)},
                 {"suspect_misread",
                  report.count(abjadi::AnomalyKind::SuspectMisread)},
                 {"catchword_mismatch",
                  report.count(abjadi::AnomalyKind::CatchwordMismatch)}}}};
        for (const auto& a : report.anomalies)
            j["anomalies"].push_back(anomaly_json(a));
        std::cout << j.dump() << "\n";
    }
    return report.clean() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abjadi numerals: letter-word encoding, Guematria, digit "
                 "transliteration and folio auditing"};
    app.require_subcommand(1);

    Options opts;
    std::string output_name = "plain";
    app.add_option("--output", output_name, "Output mode")
        ->check(CLI::IsMember({"plain", "structured"}));
    app.add_flag("--strict", opts.strict, "Strict mode");

    std::string arg_text, script_name = "arabic";
    std::string from_name, to_name, system_name = "western";
    std::string audit_file;

    auto* encode = app.add_subcommand("encode", "Integer to letter word");
    encode->add_option("n", arg_text, "Number to encode");
    encode->add_option("--script", script_name)
        ->check(CLI::IsMember({"arabic", "hebrew"}));

    auto* decode = app.add_subcommand("decode", "Letter word to integer");
    decode->add_option("text", arg_text, "Number expression");
    decode->add_option("--script", script_name)
        ->check(CLI::IsMember({"arabic", "hebrew"}));

    auto* gematria =
        app.add_subcommand("gematria", "Sum of Abjadi letter values");
    gematria->add_option("text", arg_text, "Text to evaluate");
    gematria->add_option("--script", script_name)
        ->check(CLI::IsMember({"arabic", "hebrew"}));

    auto* translit =
        app.add_subcommand("translit", "Digit-system transliteration");
    translit->add_option("text", arg_text, "Text to transliterate");
    translit->add_option("--from", from_name, "Source digit system")
        ->required()
        ->check(CLI::IsMember({"western", "eastern", "ghubari"}));
    translit->add_option("--to", to_name, "Target digit system")
        ->required()
        ->check(CLI::IsMember({"western", "eastern", "ghubari"}));

    auto* verbalize =
        app.add_subcommand("verbalize", "Units-first reading of a number");
    verbalize->add_option("n", arg_text, "Number to read");

    auto* group =
        app.add_subcommand("group", "3-digit class grouping of a number");
    group->add_option("n", arg_text, "Number to group");

    auto* lineage =
        app.add_subcommand("lineage", "Glyph ancestry of a digit value");
    lineage->add_option("value", arg_text, "Digit value 0..9");

    auto* audit =
        app.add_subcommand("audit", "Audit a folio catalog file");
    audit->add_option("file", audit_file, "TSV catalog file")->required();
    audit->add_option("--system", system_name, "Digit system of the labels")
        ->check(CLI::IsMember({"western", "eastern", "ghubari"}));

    // global flags may appear after the subcommand
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    opts.output = output_name == "structured" ? OutputMode::Structured
                                              : OutputMode::Plain;

    try {
        if (encode->parsed()) {
            abjadi::Script script = parse_script(script_name);
            long long n = parse_integer(input_or_stdin(arg_text));
            std::string word = abjadi::encode_number(n, script);
            emit(opts, word,
                 {{"command", "encode"},
                  {"number", n},
                  {"script", script_name},
                  {"word", word}});
        } else if (decode->parsed()) {
            abjadi::Script script = parse_script(script_name);
            std::string text = input_or_stdin(arg_text);
            long long n = abjadi::decode_number(text, script);
            emit(opts, std::to_string(n),
                 {{"command", "decode"},
                  {"text", text},
                  {"script", script_name},
                  {"value", n}});
        } else if (gematria->parsed()) {
            abjadi::Script script = parse_script(script_name);
            std::string text = input_or_stdin(arg_text);
            long long v = abjadi::guematria(
                text, script,
                opts.strict ? abjadi::GematriaMode::Strict
                            : abjadi::GematriaMode::Lenient);
            emit(opts, std::to_string(v),
                 {{"command", "gematria"},
                  {"text", text},
                  {"script", script_name},
                  {"strict", opts.strict},
                  {"value", v}});
        } else if (translit->parsed()) {
            std::string text = input_or_stdin(arg_text);
            std::string result = abjadi::transliterate(
                text, parse_system(from_name), parse_system(to_name));
            emit(opts, result,
                 {{"command", "translit"},
                  {"text", text},
                  {"from", from_name},
                  {"to", to_name},
                  {"result", result}});
        } else if (verbalize->parsed()) {
            long long n = parse_integer(input_or_stdin(arg_text));
            std::string reading = abjadi::verbalize_rl(n);
            emit(opts, reading,
                 {{"command", "verbalize"},
                  {"number", n},
                  {"reading", reading}});
        } else if (group->parsed()) {
            long long n = parse_integer(input_or_stdin(arg_text));
            if (n < 0) throw abjadi::OutOfRange("number must be >= 0");
            std::string grouped = abjadi::group_classes(n);
            emit(opts, grouped,
                 {{"command", "group"},
                  {"number", n},
                  {"grouped", grouped}});
        } else if (lineage->parsed()) {
            long long v = parse_integer(input_or_stdin(arg_text));
            if (v < 0 || v > 9)
                throw abjadi::NotADigit("value must be 0..9");
            const abjadi::LineageRecord& rec =
                abjadi::shape_lineage(static_cast<int>(v));
            std::ostringstream plain;
            plain << rec.value << ": ghubari from "
                  << abjadi::utf8::encode(rec.ghubari_source.codepoint)
                  << " (" << rec.ghubari_source.sound << ", "
                  << rec.ghubari_source.abjadi_value << ", "
                  << abjadi::to_string(rec.ghubari_transformation)
                  << "); mashriki from "
                  << abjadi::utf8::encode(rec.mashriki_source.codepoint)
                  << " (" << rec.mashriki_source.sound << ", "
                  << rec.mashriki_source.abjadi_value << ", "
                  << abjadi::to_string(rec.mashriki_transformation)
                  << "); modern shape twin " << rec.modern_shape_twin;
            emit(opts, plain.str(),
                 {{"command", "lineage"},
                  {"value", rec.value},
                  {"ghubari_source", source_letter_json(rec.ghubari_source)},
                  {"ghubari_transformation",
                   std::string(abjadi::to_string(rec.ghubari_transformation))},
                  {"mashriki_source",
                   source_letter_json(rec.mashriki_source)},
                  {"mashriki_transformation",
                   std::string(
                       abjadi::to_string(rec.mashriki_transformation))},
                  {"modern_shape_twin", rec.modern_shape_twin},
                  {"note", rec.note}});
        } else if (audit->parsed()) {
            return run_audit(opts, audit_file, system_name);
        }
    } catch (const abjadi::Error& e) {
        std::cerr << "abjadi: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "abjadi: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
