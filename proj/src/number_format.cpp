#include "abjadi/number_format.hpp"

namespace abjadi {

std::string multiplier_name(int exponent) {
    if (exponent <= 0) return "";
    if (exponent == 1) return "thousand";
    // Millions are "one thousand thousands"; higher classes compose the
    // same way instead of introducing new words.
    std::string name = "million";
    for (int k = exponent; k > 2; --k) name = "thousand " + name;
    return name;
}

std::vector<ClassReading> class_readings(long long n) {
    if (n < 1) throw OutOfRange("no reading for " + std::to_string(n));
    std::vector<ClassReading> readings;
    int exponent = 0;
    while (n > 0) {
        long cls = static_cast<long>(n % 1000);
        if (cls != 0) {
            ClassReading reading;
            reading.exponent = exponent;
            reading.class_multiplier = multiplier_name(exponent);
            long place_value = 1;
            for (int place = 0; place < 3; ++place) {
                long digit = (cls / place_value) % 10;
                if (digit != 0)
                    reading.parts.push_back({digit * place_value, place});
                place_value *= 10;
            }
            readings.push_back(std::move(reading));
        }
        n /= 1000;
        ++exponent;
    }
    return readings;
}

std::string group_classes(long long n) {
    std::string digits = std::to_string(n);
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i > 0 && (digits.size() - i) % 3 == 0) out += ' ';
        out += digits[i];
    }
    return out;
}

std::string verbalize_rl(long long n) {
    std::string out;
    for (const ClassReading& reading : class_readings(n)) {
        for (const auto& part : reading.parts) {
            if (!out.empty()) out += " and ";
            out += std::to_string(part.value);
        }
        if (!reading.class_multiplier.empty()) {
            out += " ";
            out += reading.class_multiplier;
        }
    }
    return out;
}

}  // namespace abjadi
