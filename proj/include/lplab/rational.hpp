#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "lplab/errors.hpp"

namespace lplab {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Serialize as "p/q" ("p" when q == 1).
inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

/// Parse "p/q" or "p".
inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw parse_error("invalid rational '" + s + "'");
    }
}

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace lplab
