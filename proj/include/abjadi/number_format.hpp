#pragma once

#include <string>
#include <vector>

#include "abjadi/errors.hpp"

namespace abjadi {

// One 3-digit class of a number, read units-first.
struct ClassReading {
    struct Part {
        long value;       // digit * 10^place, digit != 0
        int place;        // 0 units, 1 tens, 2 hundreds
    };
    std::vector<Part> parts;      // ascending place
    int exponent;                 // thousand power of the class
    std::string class_multiplier; // "", "thousand", "million", ...
};

// Multiplier name for thousand^exponent: "", "thousand", "million",
// "thousand million", "thousand thousand million", ...
std::string multiplier_name(int exponent);

// Units-first class breakdown of n.
std::vector<ClassReading> class_readings(long long n);

// Decimal digits of n grouped in threes from the right: 12457892 ->
// "12 457 892".
std::string group_classes(long long n);

// Units-first reading of n: digit contributions ascending within each
// class, classes ascending, everything joined by " and ", non-units
// classes suffixed by their multiplier name.
std::string verbalize_rl(long long n);

}  // namespace abjadi
