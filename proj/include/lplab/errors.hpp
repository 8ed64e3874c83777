#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace lplab {

/// Structural misuse: bad indices, mismatched dimensions, invalid input objects.
struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An enumeration cap was exceeded. The message names the cap.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text input could not be parsed. Carries a 1-based line number when known.
struct parse_error : std::runtime_error {
    int line = 0;
    parse_error(const std::string& msg, int line_no)
        : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numeric failure: no root bracket, domain violation, unbounded LP.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Work-cap override from the LP_LAB_WORK_CAP environment variable.
inline std::optional<long long> work_cap_override() {
    const char* v = std::getenv("LP_LAB_WORK_CAP");
    if (!v || !*v) return std::nullopt;
    char* end = nullptr;
    long long x = std::strtoll(v, &end, 10);
    if (end == v || x <= 0) return std::nullopt;
    return x;
}

/// Effective cap: the built-in default unless LP_LAB_WORK_CAP overrides it.
inline long long effective_cap(long long default_cap) {
    if (auto o = work_cap_override()) return *o;
    return default_cap;
}

inline void require_cap(long long value, long long default_cap, const std::string& what) {
    long long cap = effective_cap(default_cap);
    if (value > cap)
        throw capacity_error(what + ": " + std::to_string(value) + " exceeds cap " +
                             std::to_string(cap) + " (override with LP_LAB_WORK_CAP)");
}

}  // namespace lplab
