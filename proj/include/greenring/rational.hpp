#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

namespace greenring {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline Rat rat_from_string(const std::string& s) {
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

inline bool rat_is_integer(const Rat& r) { return denominator(r) == 1; }

// Requires an integer value that fits in long. Used for degrees and counts.
inline long rat_to_long(const Rat& r) {
    if (!rat_is_integer(r)) throw std::invalid_argument("rational is not an integer: " + rat_to_string(r));
    return static_cast<long>(numerator(r));
}

} // namespace greenring
