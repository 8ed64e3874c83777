#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lplab/bitvec.hpp"
#include "lplab/polytope.hpp"
#include "lplab/rational.hpp"
#include "lplab/tanner.hpp"

namespace lplab {

/// Signed edge weights on a Tanner graph; absent edges weigh 0. Positive
/// weight orients variable->check, negative check->variable.
struct EdgeWeighting {
    int n = 0;
    int m = 0;
    std::map<std::pair<int, int>, Rat> w;  // (var, check) -> weight

    Rat get(int i, int j) const {
        auto it = w.find({i, j});
        return it == w.end() ? Rat(0) : it->second;
    }
    void set(int i, int j, const Rat& v) {
        if (v == 0)
            w.erase({i, j});
        else
            w[{i, j}] = v;
    }
    bool operator==(const EdgeWeighting&) const = default;
};

EdgeWeighting zero_weighting(const TannerGraph& g);

/// F_i(w) = sum over j in N(i) of w(i,j).
Rat flow(const TannerGraph& g, const EdgeWeighting& w, int i);
Rat inflow(const TannerGraph& g, const EdgeWeighting& w, int i);   // sum of -w over w<0
Rat outflow(const TannerGraph& g, const EdgeWeighting& w, int i);  // sum of w over w>0

struct WitnessViolation {
    enum class Kind { VariableFlow, CheckPair };
    Kind kind;
    int var = -1;    // VariableFlow: the variable; CheckPair: first variable
    int check = -1;  // CheckPair only
    int var2 = -1;   // CheckPair only
};

struct WitnessReport {
    bool valid = false;
    std::vector<WitnessViolation> violations;
};

/// Dual witness conditions: F_i(w) < gamma_i strictly for every variable and
/// w(i,j) + w(i',j) >= 0 for every check j and pair i != i' in N(j).
WitnessReport verify_dual_witness(const TannerGraph& g, const LlrVector& gamma,
                                  const EdgeWeighting& w);

/// Hyperflow: every active check j has exactly one negative edge -P_j and all
/// its other edges equal +P_j.
bool verify_hyperflow(const TannerGraph& g, const LlrVector& gamma, const EdgeWeighting& w);

/// Directed-cycle test on the orientation induced by w.
bool wdg_acyclic(const TannerGraph& g, const EdgeWeighting& w);

/// Primitive: hyperflow where gamma_i <= 0 implies zero outflow at i and
/// gamma_i > 0 implies zero inflow at i.
bool is_primitive(const TannerGraph& g, const LlrVector& gamma, const EdgeWeighting& w);

struct WitnessSearch {
    bool found = false;
    EdgeWeighting w;
    Rat slack;  // optimal strictness margin (found iff slack > 0)
};

/// Slack-maximizing LP over boxed edge weights; a witness exists iff the
/// optimal slack is strictly positive.
WitnessSearch find_dual_witness(const TannerGraph& g, const LlrVector& gamma);

/// Sink choice per check; sink[j] = -1 means check j is inert (P_j = 0).
struct SinkAssignment {
    std::vector<int> sink;
    std::vector<Rat> p;
};

struct HyperflowSearch {
    bool found = false;
    SinkAssignment assignment;
    EdgeWeighting w;
};

/// Enumerates sink assignments (product of (deg+1) over checks, capped at
/// 10^6) and solves the induced LP in the P_j; first feasible assignment in
/// enumeration order wins. With require_acyclic, assignments whose induced
/// orientation has a directed cycle are skipped.
HyperflowSearch find_hyperflow(const TannerGraph& g, const LlrVector& gamma, bool require_acyclic);

/// Edgewise sum; throws on graph shape mismatch.
EdgeWeighting superpose(const EdgeWeighting& w1, const EdgeWeighting& w2);

EdgeWeighting scale_weighting(const EdgeWeighting& w, const Rat& c);

/// gamma_i = -1 where y_i = 1, beta elsewhere.
LlrVector asymmetric_llr(const BitVector& y, const Rat& beta);

/// gamma_i = (-1)^{y_i} + shift.
LlrVector shifted_llr(const BitVector& y, const Rat& shift);

/// find_dual_witness for (-1)^y restricted to edges incident to checks that
/// neighbor the support of y; all other edges are pinned to zero.
WitnessSearch find_narrow_dual_witness(const TannerGraph& g, const BitVector& y);

/// Variables within t check-hops of U: N_var(U;0) = U, each step adds every
/// variable sharing a check with the current set.
std::vector<int> variable_neighborhood(const TannerGraph& g, const std::vector<int>& u, int t);

struct CascadeResult {
    bool found = false;
    EdgeWeighting w;
    std::vector<std::vector<int>> layers;  // U^0 .. U^{B-1}
};

/// Superposition of narrow witnesses for the nested layers U^t = N_var(U;t),
/// t = 0..B-1. On success the summed flow satisfies F_i < -(B - 2s) for
/// i in U^s \ U^{s-1} and F_i = 0 outside U^B (asserted).
CascadeResult cascade_superpose(const TannerGraph& g, const std::vector<int>& u, int b);

/// F_i(w) < 1 everywhere and F_i(w) < -1 at all but at most b positions with
/// y_i = 1.
bool verify_weak_dual_witness(const TannerGraph& g, const BitVector& y, const EdgeWeighting& w,
                              int b);

}  // namespace lplab
