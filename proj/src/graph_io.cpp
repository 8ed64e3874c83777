#include "lplab/graph_io.hpp"

#include <json.hpp>

#include <sstream>
#include <vector>

#include "lplab/errors.hpp"

namespace lplab {

namespace {

struct LineReader {
    std::istringstream in;
    int line_no = 0;
    explicit LineReader(const std::string& text) : in(text) {}

    std::vector<long long> next_ints() {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream ls(line);
            std::vector<long long> vals;
            long long v;
            while (ls >> v) vals.push_back(v);
            std::string junk;
            if (ls.clear(), ls >> junk)
                throw parse_error("non-numeric token '" + junk + "'", line_no);
            if (!vals.empty()) return vals;
        }
        throw parse_error("unexpected end of alist input", line_no);
    }
};

}  // namespace

TannerGraph parse_alist(const std::string& text) {
    LineReader r(text);
    auto header = r.next_ints();
    if (header.size() != 2) throw parse_error("expected 'n m' header", r.line_no);
    long long n = header[0], m = header[1];
    if (n < 1 || m < 0 || n > 1000000 || m > 1000000)
        throw parse_error("implausible n/m header", r.line_no);
    auto maxdeg = r.next_ints();
    if (maxdeg.size() != 2) throw parse_error("expected max degree line", r.line_no);
    auto var_degs = r.next_ints();
    if (static_cast<long long>(var_degs.size()) != n)
        throw parse_error("expected " + std::to_string(n) + " variable degrees", r.line_no);
    auto check_degs = r.next_ints();
    if (static_cast<long long>(check_degs.size()) != m)
        throw parse_error("expected " + std::to_string(m) + " check degrees", r.line_no);
    // Variable adjacency lists (1-based check indices); consumed for validation.
    std::vector<std::vector<int>> var_adj(n);
    for (long long i = 0; i < n; ++i) {
        auto vals = r.next_ints();
        for (long long v : vals) {
            if (v == 0) continue;  // MacKay zero padding
            if (v < 1 || v > m)
                throw parse_error("check index " + std::to_string(v) + " out of range", r.line_no);
            var_adj[i].push_back(static_cast<int>(v - 1));
        }
        if (static_cast<long long>(var_adj[i].size()) != var_degs[i])
            throw parse_error("variable degree mismatch", r.line_no);
    }
    std::vector<std::vector<int>> checks(m);
    for (long long j = 0; j < m; ++j) {
        auto vals = r.next_ints();
        for (long long v : vals) {
            if (v == 0) continue;
            if (v < 1 || v > n)
                throw parse_error("variable index " + std::to_string(v) + " out of range",
                                  r.line_no);
            checks[j].push_back(static_cast<int>(v - 1));
        }
        if (static_cast<long long>(checks[j].size()) != check_degs[j])
            throw parse_error("check degree mismatch", r.line_no);
    }
    auto g = TannerGraph::from_supports(static_cast<int>(n), checks);
    // Cross-validate the two adjacency views.
    for (long long i = 0; i < n; ++i)
        if (g.var_neighbors(static_cast<int>(i)) != var_adj[i])
            throw parse_error("variable and check adjacency lists disagree at variable " +
                              std::to_string(i + 1));
    return g;
}

std::string emit_alist(const TannerGraph& g) {
    std::ostringstream out;
    int n = g.num_vars(), m = g.num_checks();
    int dv_max = 0, dc_max = 0;
    for (int i = 0; i < n; ++i) dv_max = std::max(dv_max, g.var_degree(i));
    for (int j = 0; j < m; ++j) dc_max = std::max(dc_max, g.check_degree(j));
    out << n << " " << m << "\n" << dv_max << " " << dc_max << "\n";
    for (int i = 0; i < n; ++i) out << g.var_degree(i) << (i + 1 < n ? " " : "\n");
    for (int j = 0; j < m; ++j) out << g.check_degree(j) << (j + 1 < m ? " " : "\n");
    if (n == 0) out << "\n";
    for (int i = 0; i < n; ++i) {
        const auto& adj = g.var_neighbors(i);
        for (int t = 0; t < dv_max; ++t)
            out << (t < static_cast<int>(adj.size()) ? adj[t] + 1 : 0)
                << (t + 1 < dv_max ? " " : "\n");
        if (dv_max == 0) out << "\n";
    }
    for (int j = 0; j < m; ++j) {
        const auto& adj = g.check_neighbors(j);
        for (int t = 0; t < dc_max; ++t)
            out << (t < static_cast<int>(adj.size()) ? adj[t] + 1 : 0)
                << (t + 1 < dc_max ? " " : "\n");
    }
    return out.str();
}

TannerGraph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("checks"))
        throw parse_error("graph JSON must contain 'n' and 'checks'");
    int n = j.at("n").get<int>();
    std::vector<std::vector<int>> checks = j.at("checks").get<std::vector<std::vector<int>>>();
    return TannerGraph::from_supports(n, checks);
}

std::string emit_graph_json(const TannerGraph& g) {
    nlohmann::json j;
    j["n"] = g.num_vars();
    auto checks = nlohmann::json::array();
    for (int c = 0; c < g.num_checks(); ++c) checks.push_back(g.check_neighbors(c));
    j["checks"] = checks;
    return j.dump() + "\n";
}

}  // namespace lplab
