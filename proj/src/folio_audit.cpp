#include "abjadi/folio_audit.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "abjadi/abjad_core.hpp"
#include "abjadi/utf8.hpp"

namespace abjadi {

std::string_view to_string(AnomalyKind kind) {
    switch (kind) {
        case AnomalyKind::Gap: return "gap";
        case AnomalyKind::Duplicate: return "duplicate";
        case AnomalyKind::NonMonotone: return "non-monotone";
        case AnomalyKind::SuspectMisread: return "suspect-misread";
        case AnomalyKind::CatchwordMismatch: return "catchword-mismatch";
    }
    return "?";
}

std::string Anomaly::describe() const {
    std::ostringstream os;
    switch (kind) {
        case AnomalyKind::Gap:
            os << "gap: missing";
            for (long v : missing) os << ' ' << v;
            break;
        case AnomalyKind::Duplicate:
            os << "duplicate: " << number << " at records";
            for (std::size_t i : indices) os << ' ' << i;
            break;
        case AnomalyKind::NonMonotone:
            os << "non-monotone: record " << index << " has " << found
               << ", expected " << expected;
            break;
        case AnomalyKind::SuspectMisread:
            os << "suspect-misread: record " << index << " label reads "
               << found << ", likely " << suggested << " ("
               << system_name(pair.system_a) << ' ' << pair.value_a
               << " vs " << system_name(pair.system_b) << ' '
               << pair.value_b << ")";
            break;
        case AnomalyKind::CatchwordMismatch:
            os << "catchword-mismatch: record " << index << " catchword \""
               << catchword << "\" vs next first word \"" << next_first_word
               << "\"";
            break;
    }
    return os.str();
}

std::size_t AuditReport::count(AnomalyKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(anomalies.begin(), anomalies.end(),
                      [kind](const Anomaly& a) { return a.kind == kind; }));
}

namespace {

long decode_label(const std::string& label, NumeralSystem system) {
    long value = 0;
    std::vector<char32_t> cps = utf8::decode(label);
    if (cps.empty()) throw NotADigit("empty label");
    for (char32_t cp : cps) {
        if (value > 100000000L) throw NotADigit("label too long");
        value = value * 10 + digit_value(cp, system);
    }
    return value;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == '\t') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace

std::vector<FolioRecord> parse_folios(const std::vector<std::string>& lines,
                                      NumeralSystem system) {
    std::vector<FolioRecord> records;
    for (std::size_t lineno = 1; lineno <= lines.size(); ++lineno) {
        const std::string& line = lines[lineno - 1];
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields = split_fields(line);
        if (fields.size() > 3)
            throw ParseError("line " + std::to_string(lineno) +
                             ": too many fields");
        FolioRecord rec;
        rec.index = records.size();
        rec.label = fields[0];
        rec.system = system;
        try {
            rec.value = decode_label(rec.label, system);
        } catch (const NotADigit& e) {
            throw ParseError("line " + std::to_string(lineno) +
                             ": bad folio label \"" + rec.label +
                             "\": " + e.what());
        }
        if (rec.value < 1)
            throw ParseError("line " + std::to_string(lineno) +
                             ": folio label must be positive");
        if (fields.size() > 1 && !fields[1].empty())
            rec.catchword = fields[1];
        if (fields.size() > 2 && !fields[2].empty())
            rec.first_word = fields[2];
        records.push_back(std::move(rec));
    }
    return records;
}

namespace {

std::string normalize_word(const std::string& word) {
    return normalize(normalize(word, Script::Arabic), Script::Hebrew);
}

// Single-digit substitutions drawn from the built-in confusion pairs,
// restricted to pairs that involve the record's numeral system.
std::vector<std::pair<long, ConfusionPair>> misread_candidates(
    long value, NumeralSystem system) {
    std::vector<std::pair<long, ConfusionPair>> out;
    std::string digits = std::to_string(value);
    for (const ConfusionPair& pair : confusion_pairs()) {
        if (pair.system_a != system && pair.system_b != system) continue;
        for (std::size_t i = 0; i < digits.size(); ++i) {
            int d = digits[i] - '0';
            int subst = -1;
            if (d == pair.value_a) subst = pair.value_b;
            else if (d == pair.value_b) subst = pair.value_a;
            if (subst < 0) continue;
            std::string fixed = digits;
            fixed[i] = static_cast<char>('0' + subst);
            out.emplace_back(std::stol(fixed), pair);
        }
    }
    return out;
}

}  // namespace

AuditReport audit_sequence(const std::vector<FolioRecord>& records) {
    if (records.empty()) throw EmptyInput("no folio records to audit");
    AuditReport report;
    std::map<long, std::size_t> duplicate_anomaly;  // value -> anomaly slot
    std::map<long, std::size_t> first_seen;         // value -> record index

    long expected = records[0].value + 1;
    first_seen[records[0].value] = 0;

    for (std::size_t i = 1; i < records.size(); ++i) {
        long v = records[i].value;
        if (v == expected) {
            first_seen.emplace(v, i);
            ++expected;
            continue;
        }
        if (first_seen.count(v)) {
            auto slot = duplicate_anomaly.find(v);
            if (slot == duplicate_anomaly.end()) {
                Anomaly a;
                a.kind = AnomalyKind::Duplicate;
                a.index = i;
                a.number = v;
                a.indices = {first_seen[v], i};
                duplicate_anomaly[v] = report.anomalies.size();
                report.anomalies.push_back(std::move(a));
            } else {
                report.anomalies[slot->second].indices.push_back(i);
            }
            continue;
        }
        // A jump forward reads as a gap while the run keeps ascending; a
        // record the run immediately falls back under is out of order.
        bool descends_next =
            i + 1 < records.size() && records[i + 1].value < v;
        if (v > expected && !descends_next) {
            Anomaly a;
            a.kind = AnomalyKind::Gap;
            a.index = i;
            for (long m = expected; m < v; ++m)
                if (!first_seen.count(m)) a.missing.push_back(m);
            if (!a.missing.empty())
                report.anomalies.push_back(std::move(a));
            first_seen.emplace(v, i);
            expected = v + 1;
            continue;
        }
        Anomaly a;
        a.kind = AnomalyKind::NonMonotone;
        a.index = i;
        a.expected = expected;
        a.found = v;
        report.anomalies.push_back(a);
        for (const auto& [candidate, pair] :
             misread_candidates(v, records[i].system)) {
            if (candidate == expected) {
                Anomaly m;
                m.kind = AnomalyKind::SuspectMisread;
                m.index = i;
                m.expected = expected;
                m.found = v;
                m.suggested = candidate;
                m.pair = pair;
                report.anomalies.push_back(std::move(m));
                break;
            }
        }
        first_seen.emplace(v, i);
    }

    std::stable_sort(report.anomalies.begin(), report.anomalies.end(),
                     [](const Anomaly& a, const Anomaly& b) {
                         return a.index < b.index;
                     });
    return report;
}

std::vector<Anomaly> audit_catchwords(
    const std::vector<FolioRecord>& records) {
    std::vector<Anomaly> mismatches;
    for (std::size_t i = 0; i + 1 < records.size(); ++i) {
        if (!records[i].catchword || !records[i + 1].first_word) continue;
        if (normalize_word(*records[i].catchword) ==
            normalize_word(*records[i + 1].first_word))
            continue;
        Anomaly a;
        a.kind = AnomalyKind::CatchwordMismatch;
        a.index = i;
        a.catchword = *records[i].catchword;
        a.next_first_word = *records[i + 1].first_word;
        mismatches.push_back(std::move(a));
    }
    return mismatches;
}

}  // namespace abjadi
