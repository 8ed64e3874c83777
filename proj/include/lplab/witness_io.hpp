#pragma once

#include <string>

#include "lplab/polytope.hpp"
#include "lplab/witness.hpp"

namespace lplab {

/// {"n":., "m":., "edges": [[i, j, "p/q"], ...], "gamma": ["p/q", ...]}
std::string emit_witness_json(const EdgeWeighting& w, const LlrVector& gamma);

struct ParsedWitness {
    EdgeWeighting w;
    LlrVector gamma;
};

ParsedWitness parse_witness_json(const std::string& text);

}  // namespace lplab
