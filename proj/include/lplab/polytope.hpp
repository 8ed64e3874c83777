#pragma once

#include <vector>

#include "lplab/rational.hpp"
#include "lplab/simplex.hpp"
#include "lplab/tanner.hpp"

namespace lplab {

using LlrVector = std::vector<Rat>;

/// Inequality description a.x <= b with the box rows 0 <= x_i <= 1 always present.
struct Polytope {
    int n = 0;
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;

    bool contains(const std::vector<Rat>& x) const;
};

using Pseudocodeword = std::vector<Rat>;

/// Box rows plus, per check j and each odd subset S of N(j), the cut
/// sum_{i in S} x_i - sum_{i in N(j)\S} x_i <= |S| - 1.
/// Rows are ordered: box rows (per variable: x_i >= 0 then x_i <= 1), then
/// cuts by (check index, subset mask in binary order). Check degree cap 14.
Polytope build_fundamental_polytope(const TannerGraph& g);

/// Exact minimum of <x, c> over P; the returned point is a vertex.
LpSolution minimize_over(const Polytope& p, const LlrVector& c);

struct DecodeResult {
    bool success = false;
    // On failure, a nonzero optimal point; reason records which failure case.
    Pseudocodeword certificate;
    enum class Reason { None, NonzeroOptimum, ZeroNotUnique } reason = Reason::None;
    Rat optimum;
};

/// All-zeros-codeword convention: Success iff min <x,gamma> = 0 over P(G) and
/// zero is the unique optimum (checked by a second-stage LP maximizing
/// sum x_i on the optimal face).
DecodeResult lp_decode(const TannerGraph& g, const LlrVector& gamma);

/// lp_decode against a prebuilt polytope (for callers that decode many times).
DecodeResult lp_decode_polytope(const Polytope& p, const LlrVector& gamma);

struct MlResult {
    std::vector<BitVector> minimizers;  // one entry = unique
    Rat optimum;
};

/// Brute force over the codeword set via a GF(2) nullspace basis; n <= 24.
MlResult ml_decode(const TannerGraph& g, const LlrVector& gamma);

/// All vertices of P, exactly, sorted lexicographically. Caps: n <= 12,
/// inequality count <= 200 (these bound the bitset sizes compiled in).
std::vector<Pseudocodeword> enumerate_vertices(const Polytope& p);

struct PseudoweightResult {
    bool infinite = false;  // no nonzero vertex
    int value = 0;          // 2 a*
};

/// BSC-pseudoweight 2a*: a* is the largest a such that every nonzero vertex
/// has top-a coordinate sum < half its coordinate total.
PseudoweightResult bsc_pseudoweight(const std::vector<Pseudocodeword>& vertices);

/// Max over nonzero vertices of (sum of the alpha_count largest coords)/(total).
Rat strength_ratio(const std::vector<Pseudocodeword>& vertices, int alpha_count);

}  // namespace lplab
