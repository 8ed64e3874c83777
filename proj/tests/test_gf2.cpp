#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "lplab/errors.hpp"
#include "lplab/gf2.hpp"
#include "oracles.hpp"

using namespace lplab;

namespace {

BitVector bv(const std::string& s) { return BitVector::from_string(s); }

std::set<std::string> word_set(const RedundantCheckSet& r) {
    std::set<std::string> out;
    for (const auto& w : r.dual_words) out.insert(w.to_string());
    return out;
}

}  // namespace

TEST_CASE("rank_gf2 basics") {
    CHECK(rank_gf2({bv("100"), bv("010"), bv("001")}) == 3);
    CHECK(rank_gf2({bv("110"), bv("011"), bv("101")}) == 2);
    CHECK_THROWS_AS(rank_gf2({bv("10"), bv("100")}), structural_error);
}

TEST_CASE("rank_gf2 agrees with an independent elimination") {
    std::mt19937_64 rng(123);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<BitVector> rows;
        std::vector<std::vector<char>> dense;
        for (int r = 0; r < 20; ++r) {
            BitVector v(16);
            for (int i = 0; i < 16; ++i)
                if (rng() & 1) v.set(i, true);
            rows.push_back(v);
            dense.push_back(oracle::to_dense(v));
        }
        CHECK(rank_gf2(rows) == oracle::rank_gf2(dense));
    }
}

TEST_CASE("rank_gf2 invariances") {
    std::mt19937_64 rng(7);
    std::vector<BitVector> rows;
    for (int r = 0; r < 8; ++r) {
        BitVector v(10);
        for (int i = 0; i < 10; ++i)
            if (rng() & 1) v.set(i, true);
        rows.push_back(v);
    }
    int base = rank_gf2(rows);

    auto perm = rows;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(rank_gf2(perm) == base);

    auto added = rows;
    added[0] ^= added[3];  // row addition
    CHECK(rank_gf2(added) == base);
}

TEST_CASE("enumerate_dual_low_weight examples") {
    auto g1 = TannerGraph::from_supports(6, {{0, 1, 2}, {3, 4, 5}});
    auto r1 = enumerate_dual_low_weight(g1, 3);
    CHECK(word_set(r1) == std::set<std::string>{"111000", "000111"});

    auto g2 = TannerGraph::from_supports(4, {{0, 1}, {1, 2}, {2, 3}});
    auto r2 = enumerate_dual_low_weight(g2, 2);
    CHECK(word_set(r2) ==
          std::set<std::string>{"1100", "0110", "0011", "1010", "0101", "1001"});

    // k = n keeps every nonzero combination.
    auto r3 = enumerate_dual_low_weight(g2, 4);
    CHECK(r3.dual_words.size() == (1u << rank_gf2({bv("1100"), bv("0110"), bv("0011")})) - 1);
}

TEST_CASE("enumerate_dual_low_weight is order independent and sorted") {
    auto ga = TannerGraph::from_supports(5, {{0, 1, 2}, {2, 3}, {1, 3, 4}});
    auto gb = TannerGraph::from_supports(5, {{1, 3, 4}, {0, 1, 2}, {2, 3}});
    auto ra = enumerate_dual_low_weight(ga, 3);
    auto rb = enumerate_dual_low_weight(gb, 3);
    CHECK(word_set(ra) == word_set(rb));
    CHECK(std::is_sorted(ra.dual_words.begin(), ra.dual_words.end()));
    for (const auto& w : ra.dual_words) {
        CHECK(w.weight() >= 1);
        CHECK(w.weight() <= 3);
    }
}

TEST_CASE("enumerate_dual_low_weight span cap") {
    std::vector<std::vector<int>> supports;
    for (int j = 0; j < 23; ++j) supports.push_back({j});
    auto g = TannerGraph::from_supports(23, supports);
    CHECK_THROWS_AS(enumerate_dual_low_weight(g, 1), capacity_error);
}

TEST_CASE("augmented_graph contents") {
    auto g = TannerGraph::from_supports(4, {{0, 1}, {1, 2}, {2, 3}});
    auto gk = augmented_graph(g, 2);
    CHECK(gk.num_vars() == 4);
    CHECK(gk.num_checks() == 6);
    // Every word lies in the row span: appending it leaves the rank unchanged.
    std::vector<BitVector> base = {bv("1100"), bv("0110"), bv("0011")};
    for (int j = 0; j < gk.num_checks(); ++j) {
        auto rows = base;
        rows.push_back(gk.check(j));
        CHECK(rank_gf2(rows) == 3);
    }
    // Base checks of weight <= k all appear.
    std::set<std::string> words;
    for (int j = 0; j < gk.num_checks(); ++j) words.insert(gk.check(j).to_string());
    for (const auto& b : base) CHECK(words.count(b.to_string()) == 1);
}
