#pragma once

#include <vector>

#include "lplab/bitvec.hpp"
#include "lplab/errors.hpp"

namespace lplab {

/// Bipartite variable/check structure plus GF(2) biadjacency rows.
/// Immutable after construction; duplicate checks are allowed.
class TannerGraph {
  public:
    TannerGraph() = default;

    static TannerGraph from_rows(int n, std::vector<BitVector> rows) {
        TannerGraph g;
        g.n_ = n;
        g.checks_ = std::move(rows);
        g.build_adjacency();
        return g;
    }

    static TannerGraph from_supports(int n, const std::vector<std::vector<int>>& supports) {
        std::vector<BitVector> rows;
        rows.reserve(supports.size());
        for (const auto& s : supports) rows.push_back(BitVector::from_support(n, s));
        return from_rows(n, std::move(rows));
    }

    int num_vars() const { return n_; }
    int num_checks() const { return static_cast<int>(checks_.size()); }
    const std::vector<BitVector>& checks() const { return checks_; }
    const BitVector& check(int j) const { return checks_.at(j); }

    /// N(i): check indices adjacent to variable i.
    const std::vector<int>& var_neighbors(int i) const { return var_adj_.at(i); }
    /// N(j): variable indices adjacent to check j.
    const std::vector<int>& check_neighbors(int j) const { return check_adj_.at(j); }

    int check_degree(int j) const { return static_cast<int>(check_adj_.at(j).size()); }
    int var_degree(int i) const { return static_cast<int>(var_adj_.at(i).size()); }
    int max_check_degree() const { return max_deg_; }
    int min_check_degree() const { return min_deg_; }

    bool has_edge(int i, int j) const {
        return j >= 0 && j < num_checks() && i >= 0 && i < n_ && checks_[j].get(i);
    }

    int num_edges() const {
        int e = 0;
        for (const auto& a : check_adj_) e += static_cast<int>(a.size());
        return e;
    }

    friend bool operator==(const TannerGraph& a, const TannerGraph& b) {
        return a.n_ == b.n_ && a.checks_ == b.checks_;
    }

  private:
    void build_adjacency() {
        if (n_ < 0) throw structural_error("negative variable count");
        var_adj_.assign(n_, {});
        check_adj_.assign(checks_.size(), {});
        max_deg_ = 0;
        min_deg_ = checks_.empty() ? 0 : n_ + 1;
        for (std::size_t j = 0; j < checks_.size(); ++j) {
            if (checks_[j].size() != static_cast<std::size_t>(n_))
                throw structural_error("check row length mismatch");
            auto vars = checks_[j].ones();
            if (vars.empty()) throw structural_error("check node with degree 0");
            for (int i : vars) {
                var_adj_[i].push_back(static_cast<int>(j));
                check_adj_[j].push_back(i);
            }
            int d = static_cast<int>(vars.size());
            max_deg_ = std::max(max_deg_, d);
            min_deg_ = std::min(min_deg_, d);
        }
        if (checks_.empty()) min_deg_ = 0;
    }

    int n_ = 0;
    std::vector<BitVector> checks_;
    std::vector<std::vector<int>> var_adj_;
    std::vector<std::vector<int>> check_adj_;
    int max_deg_ = 0;
    int min_deg_ = 0;
};

}  // namespace lplab
