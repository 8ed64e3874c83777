#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lplab/bitvec.hpp"
#include "lplab/rational.hpp"
#include "lplab/tanner.hpp"
#include "lplab/witness.hpp"

namespace lplab {

/// Hyperflow over the all-redundant-checks universe: check nodes are dual
/// words, so the universe is closed under XOR and the switch operation can
/// materialize the word j ^ j'. Each active word carries one sink edge -P and
/// +P edges to the rest of its support.
struct GbarHyperflow {
    int n = 0;
    LlrVector gamma;
    std::map<BitVector, std::pair<int, Rat>> checks;  // word -> (sink var, P > 0)
};

/// Builds and validates; throws structural_error on a malformed entry
/// (zero word, sink outside the support, P <= 0, llr length mismatch).
GbarHyperflow make_gbar_hyperflow(int n, LlrVector gamma,
                                  std::vector<std::pair<BitVector, std::pair<int, Rat>>> entries);

/// Lifts a sink assignment found on an explicit graph (e.g. an augmented one)
/// into word-keyed form. Duplicate words with distinct sinks are rejected.
GbarHyperflow lift_hyperflow(const TannerGraph& g, const LlrVector& gamma,
                             const SinkAssignment& a);

Rat gbar_inflow(const GbarHyperflow& h, int i);
Rat gbar_outflow(const GbarHyperflow& h, int i);
int gbar_indegree(const GbarHyperflow& h, int i);
int gbar_outdegree(const GbarHyperflow& h, int i);

/// Variable inequalities F_i < gamma_i (the hyperflow shape holds by
/// representation).
bool gbar_valid(const GbarHyperflow& h);
bool gbar_acyclic(const GbarHyperflow& h);
bool gbar_is_primitive(const GbarHyperflow& h);

/// Renders onto a graph whose check rows cover every active word.
EdgeWeighting gbar_to_weighting(const GbarHyperflow& h, const TannerGraph& g);

struct SwitchEvent {
    BitVector j, jp, jpp;  // switched pair and their XOR
    int i = -1;            // path variable
    int ip = -1;           // sink of j' before the switch
    Rat p;
};

/// Switch along j -> i -> j': i is the sink of j and a non-sink member of j'.
/// Postconditions (validity, acyclicity, no flow increase anywhere, strict
/// degree drop at i) are always verified; violations raise std::logic_error.
SwitchEvent switch_path(GbarHyperflow& h, const BitVector& j, int i, const BitVector& jp);

/// Repeated switching until every variable has zero indegree or zero
/// outdegree, then removal of leftover inflow at gamma > 0 variables.
/// Deterministic pick: lexicographically smallest words. Final validity is
/// re-verified.
GbarHyperflow primitivize(GbarHyperflow h, std::vector<SwitchEvent>* trace = nullptr);

struct TrimReport {
    std::vector<int> risky;   // error variables receiving >= delta/8 from removed words
    bool flow_bounds_ok = false;  // F <= 0 on risky, < (-1)^x - delta/8 elsewhere
    bool size_bound_ok = false;   // |risky| <= 8n / (delta (k-1))
};

/// Removes every word of weight > k from a primitive hyperflow built for the
/// excess llr (-1)^x - delta/4.
std::pair<GbarHyperflow, TrimReport> trim_high_degree(const GbarHyperflow& h, int k,
                                                      const Rat& delta);

}  // namespace lplab
