#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "lplab/errors.hpp"
#include "lplab/gf2.hpp"
#include "lplab/polytope.hpp"
#include "oracles.hpp"

using namespace lplab;

namespace {

std::set<std::string> integral_vertex_strings(const std::vector<Pseudocodeword>& vs) {
    std::set<std::string> out;
    for (const auto& v : vs) {
        std::string s;
        bool integral = true;
        for (const auto& c : v) {
            if (c == 0)
                s += '0';
            else if (c == 1)
                s += '1';
            else
                integral = false;
        }
        if (integral) out.insert(s);
    }
    return out;
}

std::set<std::string> codeword_strings(const TannerGraph& g) {
    std::set<std::string> out;
    for (const auto& c : oracle::codewords(g)) out.insert(c.to_string());
    return out;
}

LlrVector random_pm1(std::mt19937_64& rng, int n) {
    LlrVector g(n);
    for (int i = 0; i < n; ++i) g[i] = (rng() & 1) ? Rat(1) : Rat(-1);
    return g;
}

}  // namespace

TEST_CASE("build_fundamental_polytope rows") {
    auto g2 = TannerGraph::from_supports(2, {{0, 1}});
    auto p2 = build_fundamental_polytope(g2);
    // 4 box rows + 2 odd-subset cuts.
    CHECK(p2.a.size() == 6);
    // Degree-2 check forces x0 = x1 on the polytope.
    CHECK(p2.contains({Rat(1, 2), Rat(1, 2)}));
    CHECK(!p2.contains({Rat(1, 2), Rat(1, 4)}));

    auto g3 = TannerGraph::from_supports(3, {{0, 1, 2}});
    auto p3 = build_fundamental_polytope(g3);
    CHECK(p3.a.size() == 6 + 4);  // odd subsets of sizes 1 and 3

    std::vector<int> wide(15);
    for (int i = 0; i < 15; ++i) wide[i] = i;
    CHECK_THROWS_AS(build_fundamental_polytope(TannerGraph::from_supports(15, {wide})),
                    capacity_error);
}

TEST_CASE("polytope membership matches the subset-cut definition") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 20; ++rep) {
        auto g = oracle::random_graph(rng, 6, 3, 4);
        auto p = build_fundamental_polytope(g);
        for (int t = 0; t < 50; ++t) {
            std::vector<Rat> x(6);
            for (auto& c : x) c = Rat(static_cast<int>(rng() % 5), 4);  // in [0, 1]
            // Oracle: x in P(G) iff box plus every odd-subset cut holds.
            bool ok = true;
            for (const auto& c : x) ok = ok && c >= 0 && c <= 1;
            for (int j = 0; j < g.num_checks() && ok; ++j) {
                auto nb = g.check_neighbors(j);
                for (uint32_t mask = 1; mask < (1u << nb.size()) && ok; ++mask) {
                    if (std::popcount(mask) % 2 == 0) continue;
                    Rat lhs = 0;
                    for (std::size_t t2 = 0; t2 < nb.size(); ++t2)
                        lhs += ((mask >> t2) & 1) ? x[nb[t2]] : -x[nb[t2]];
                    if (lhs > std::popcount(mask) - 1) ok = false;
                }
            }
            CHECK(p.contains(x) == ok);
        }
    }
}

TEST_CASE("minimize_over basics and vertex oracle") {
    auto g = TannerGraph::from_supports(2, {{0, 1}});
    auto p = build_fundamental_polytope(g);
    auto r1 = minimize_over(p, {Rat(1), Rat(1)});
    CHECK(r1.value == 0);
    auto r2 = minimize_over(p, {Rat(-1), Rat(-1)});
    CHECK(r2.value == -2);
    CHECK(r2.x == std::vector<Rat>{Rat(1), Rat(1)});

    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 15; ++rep) {
        auto rg = oracle::random_graph(rng, 6, 3, 4);
        auto rp = build_fundamental_polytope(rg);
        auto vs = enumerate_vertices(rp);
        for (int t = 0; t < 5; ++t) {
            LlrVector c(6);
            for (int i = 0; i < 6; ++i) c[i] = Rat(static_cast<int>(rng() % 7) - 3);
            Rat best = oracle::cost(vs[0], c);
            for (const auto& v : vs) best = std::min(best, oracle::cost(v, c));
            CHECK(minimize_over(rp, c).value == best);
        }
    }
}

TEST_CASE("lp_decode basics") {
    auto g = TannerGraph::from_supports(3, {{0, 1, 2}});
    CHECK(lp_decode(g, {Rat(1), Rat(1), Rat(1)}).success);

    auto fail = lp_decode(g, {Rat(-1), Rat(1), Rat(1)});
    CHECK(!fail.success);
    CHECK(fail.optimum == 0);
    CHECK(fail.reason == DecodeResult::Reason::ZeroNotUnique);
    // Certificate is a nonzero optimal point.
    Rat tot = 0, cost = 0;
    for (int i = 0; i < 3; ++i) {
        tot += fail.certificate[i];
        cost += fail.certificate[i] * (i == 0 ? Rat(-1) : Rat(1));
    }
    CHECK(tot > 0);
    CHECK(cost == 0);
}

TEST_CASE("lp_decode is exact on acyclic graphs") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 30; ++rep) {
        auto g = oracle::random_forest(rng, 8, 4, 3);
        for (int t = 0; t < 10; ++t) {
            auto gamma = random_pm1(rng, 8);
            auto lp = lp_decode(g, gamma);
            auto ml = ml_decode(g, gamma);
            bool ml_zero_unique =
                ml.minimizers.size() == 1 && !ml.minimizers[0].any() && ml.optimum == 0;
            CHECK(lp.success == ml_zero_unique);
        }
    }
}

TEST_CASE("lp_decode verdict is invariant under positive scaling") {
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 20; ++rep) {
        auto g = oracle::random_graph(rng, 6, 3, 4);
        auto gamma = random_pm1(rng, 6);
        auto base = lp_decode(g, gamma);
        LlrVector scaled;
        for (const auto& v : gamma) scaled.push_back(v * Rat(7, 3));
        auto s = lp_decode(g, scaled);
        CHECK(base.success == s.success);
        CHECK(s.optimum == base.optimum * Rat(7, 3));
    }
}

TEST_CASE("ml_decode basics and brute-force oracle") {
    auto g = TannerGraph::from_supports(3, {{0, 1, 2}});
    auto all1 = ml_decode(g, {Rat(1), Rat(1), Rat(1)});
    CHECK(all1.minimizers.size() == 1);
    CHECK(!all1.minimizers[0].any());

    // Degree-2 chain: codewords are 0 and all-ones; majority of -1s wins.
    auto chain = TannerGraph::from_supports(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    auto maj = ml_decode(chain, {Rat(-1), Rat(-1), Rat(-1), Rat(1), Rat(1)});
    CHECK(maj.minimizers.size() == 1);
    CHECK(maj.minimizers[0].weight() == 5);

    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 20; ++rep) {
        auto rg = oracle::random_graph(rng, 7, 4, 4);
        auto gamma = random_pm1(rng, 7);
        auto ml = ml_decode(rg, gamma);
        // Oracle: scan all codewords.
        auto words = oracle::codewords(rg);
        Rat best = 0;
        std::set<std::string> mins;
        for (const auto& w : words) best = std::min(best, oracle::cost(oracle::to_point(w), gamma));
        for (const auto& w : words)
            if (oracle::cost(oracle::to_point(w), gamma) == best) mins.insert(w.to_string());
        CHECK(ml.optimum == best);
        std::set<std::string> got;
        for (const auto& w : ml.minimizers) got.insert(w.to_string());
        CHECK(got == mins);
    }
}

TEST_CASE("relaxation: polytope optimum never exceeds codeword optimum") {
    std::mt19937_64 rng(59);
    for (int rep = 0; rep < 25; ++rep) {
        auto g = oracle::random_graph(rng, 7, 4, 4);
        auto gamma = random_pm1(rng, 7);
        auto lp = minimize_over(build_fundamental_polytope(g), gamma);
        auto ml = ml_decode(g, gamma);
        CHECK(lp.value <= ml.optimum);
        // LP success implies ML decodes uniquely to zero.
        auto dec = lp_decode(g, gamma);
        if (dec.success) {
            CHECK(ml.minimizers.size() == 1);
            CHECK(!ml.minimizers[0].any());
        }
    }
}

TEST_CASE("enumerate_vertices basics") {
    auto g3 = TannerGraph::from_supports(3, {{0, 1, 2}});
    auto vs = enumerate_vertices(build_fundamental_polytope(g3));
    CHECK(vs.size() == 4);
    CHECK(integral_vertex_strings(vs) == std::set<std::string>{"000", "110", "101", "011"});

    auto g2 = TannerGraph::from_supports(2, {{0, 1}});
    auto vs2 = enumerate_vertices(build_fundamental_polytope(g2));
    CHECK(vs2.size() == 2);
    CHECK(integral_vertex_strings(vs2) == std::set<std::string>{"00", "11"});

    CHECK(std::is_sorted(vs.begin(), vs.end()));
}

TEST_CASE("integral vertices are exactly the codewords") {
    std::mt19937_64 rng(61);
    for (int rep = 0; rep < 15; ++rep) {
        auto g = oracle::random_graph(rng, 6, 3, 4);
        auto vs = enumerate_vertices(build_fundamental_polytope(g));
        CHECK(integral_vertex_strings(vs) == codeword_strings(g));
    }
}

TEST_CASE("enumerate_vertices dimension cap") {
    std::vector<std::vector<int>> supports{{0, 1}};
    Polytope p;
    p.n = 13;
    CHECK_THROWS_AS(enumerate_vertices(p), capacity_error);
}

TEST_CASE("polytope nesting under augmentation") {
    std::mt19937_64 rng(67);
    for (int rep = 0; rep < 10; ++rep) {
        auto g = oracle::random_graph(rng, 6, 3, 3, true);
        auto loose = build_fundamental_polytope(augmented_graph(g, 2));
        auto tight = build_fundamental_polytope(augmented_graph(g, 3));
        for (const auto& v : enumerate_vertices(tight)) CHECK(loose.contains(v));
    }
}

TEST_CASE("bsc_pseudoweight") {
    // Degree-2 chain on 6 variables: codewords {0, 111111}, no fractional
    // vertices, so a* = 2 and the pseudoweight is 4.
    auto chain = TannerGraph::from_supports(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    auto vs = enumerate_vertices(build_fundamental_polytope(chain));
    auto pw = bsc_pseudoweight(vs);
    CHECK(!pw.infinite);
    CHECK(pw.value == 4);

    // Permutation invariance.
    auto shuffled = vs;
    std::reverse(shuffled.begin(), shuffled.end());
    CHECK(bsc_pseudoweight(shuffled).value == 4);

    // Integral vertex of weight w forces a < w/2: a weight-2 codeword caps
    // the pseudoweight at 2·floor((w-1)/2) = 0 here.
    std::vector<Pseudocodeword> two = {{Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(0)}};
    CHECK(bsc_pseudoweight(two).value == 0);
    std::vector<Pseudocodeword> five(1, Pseudocodeword{Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)});
    five.push_back({Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
    CHECK(bsc_pseudoweight(five).value == 4);

    // No nonzero vertex: infinite by convention.
    std::vector<Pseudocodeword> only_zero = {{Rat(0), Rat(0)}};
    CHECK(bsc_pseudoweight(only_zero).infinite);
}

TEST_CASE("strength_ratio") {
    std::vector<Pseudocodeword> vs = {{Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)},
                                      {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)}};
    CHECK(strength_ratio(vs, 3) == Rat(1, 2));

    // One dominant coordinate.
    std::vector<Pseudocodeword> dom = {{Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1, 8), Rat(1, 8)}};
    CHECK(strength_ratio(dom, 1) == Rat(4, 5));

    // Non-decreasing in alpha_count.
    for (int a = 1; a < 6; ++a) CHECK(strength_ratio(vs, a) <= strength_ratio(vs, a + 1));
}
