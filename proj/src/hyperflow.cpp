#include "lplab/hyperflow.hpp"

#include <algorithm>
#include <stdexcept>

#include "lplab/errors.hpp"

namespace lplab {

namespace {

void validate_entry(int n, const LlrVector& gamma, const BitVector& word,
                    const std::pair<int, Rat>& sp) {
    if (static_cast<int>(word.size()) != n) throw structural_error("hyperflow word length mismatch");
    if (!word.any()) throw structural_error("hyperflow word is zero");
    if (sp.first < 0 || sp.first >= n || !word.get(sp.first))
        throw structural_error("hyperflow sink outside the word support");
    if (sp.second <= 0) throw structural_error("hyperflow magnitude must be positive");
    (void)gamma;
}

}  // namespace

GbarHyperflow make_gbar_hyperflow(int n, LlrVector gamma,
                                  std::vector<std::pair<BitVector, std::pair<int, Rat>>> entries) {
    if (static_cast<int>(gamma.size()) != n)
        throw structural_error("llr length does not match the dimension");
    GbarHyperflow h;
    h.n = n;
    h.gamma = std::move(gamma);
    for (auto& [word, sp] : entries) {
        validate_entry(n, h.gamma, word, sp);
        auto it = h.checks.find(word);
        if (it == h.checks.end()) {
            h.checks.emplace(word, sp);
        } else if (it->second.first == sp.first) {
            it->second.second += sp.second;
        } else {
            throw structural_error("duplicate hyperflow word with conflicting sinks");
        }
    }
    return h;
}

GbarHyperflow lift_hyperflow(const TannerGraph& g, const LlrVector& gamma,
                             const SinkAssignment& a) {
    if (static_cast<int>(a.sink.size()) != g.num_checks() ||
        static_cast<int>(a.p.size()) != g.num_checks())
        throw structural_error("sink assignment does not match the graph");
    std::vector<std::pair<BitVector, std::pair<int, Rat>>> entries;
    for (int j = 0; j < g.num_checks(); ++j) {
        if (a.sink[j] < 0 || a.p[j] == 0) continue;
        entries.push_back({g.check(j), {a.sink[j], a.p[j]}});
    }
    return make_gbar_hyperflow(g.num_vars(), gamma, std::move(entries));
}

Rat gbar_inflow(const GbarHyperflow& h, int i) {
    Rat f(0);
    for (const auto& [word, sp] : h.checks)
        if (sp.first == i) f += sp.second;
    return f;
}

Rat gbar_outflow(const GbarHyperflow& h, int i) {
    Rat f(0);
    for (const auto& [word, sp] : h.checks)
        if (sp.first != i && word.get(i)) f += sp.second;
    return f;
}

int gbar_indegree(const GbarHyperflow& h, int i) {
    int d = 0;
    for (const auto& [word, sp] : h.checks)
        if (sp.first == i) ++d;
    return d;
}

int gbar_outdegree(const GbarHyperflow& h, int i) {
    int d = 0;
    for (const auto& [word, sp] : h.checks)
        if (sp.first != i && word.get(i)) ++d;
    return d;
}

bool gbar_valid(const GbarHyperflow& h) {
    for (int i = 0; i < h.n; ++i)
        if (!(gbar_outflow(h, i) - gbar_inflow(h, i) < h.gamma[i])) return false;
    return true;
}

bool gbar_acyclic(const GbarHyperflow& h) {
    // Kahn over variables 0..n-1 and one node per active word.
    const int n = h.n;
    const int m = static_cast<int>(h.checks.size());
    std::vector<std::vector<int>> out(n + m);
    std::vector<int> indeg(n + m, 0);
    int c = 0;
    for (const auto& [word, sp] : h.checks) {
        for (int i : word.ones()) {
            int from = i == sp.first ? n + c : i;
            int to = i == sp.first ? i : n + c;
            out[from].push_back(to);
            ++indeg[to];
        }
        ++c;
    }
    std::vector<int> stack;
    for (int u = 0; u < n + m; ++u)
        if (indeg[u] == 0) stack.push_back(u);
    int seen = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++seen;
        for (int v : out[u])
            if (--indeg[v] == 0) stack.push_back(v);
    }
    return seen == n + m;
}

bool gbar_is_primitive(const GbarHyperflow& h) {
    if (!gbar_valid(h)) return false;
    for (int i = 0; i < h.n; ++i) {
        if (h.gamma[i] <= 0 && gbar_outflow(h, i) != 0) return false;
        if (h.gamma[i] > 0 && gbar_inflow(h, i) != 0) return false;
    }
    return true;
}

EdgeWeighting gbar_to_weighting(const GbarHyperflow& h, const TannerGraph& g) {
    if (g.num_vars() != h.n) throw structural_error("graph dimension mismatch");
    std::map<BitVector, int> row_index;
    for (int j = 0; j < g.num_checks(); ++j) row_index.emplace(g.check(j), j);
    EdgeWeighting w;
    w.n = h.n;
    w.m = g.num_checks();
    for (const auto& [word, sp] : h.checks) {
        auto it = row_index.find(word);
        if (it == row_index.end())
            throw structural_error("graph is missing a check for an active word");
        for (int i : word.ones())
            w.set(i, it->second, i == sp.first ? -sp.second : sp.second);
    }
    return w;
}

SwitchEvent switch_path(GbarHyperflow& h, const BitVector& j, int i, const BitVector& jp) {
    auto itj = h.checks.find(j);
    auto itp = h.checks.find(jp);
    if (itj == h.checks.end() || itp == h.checks.end())
        throw structural_error("switch endpoints are not active words");
    if (itj->second.first != i)
        throw structural_error("switch path: i is not the sink of j");
    if (!jp.get(i) || itp->second.first == i)
        throw structural_error("switch path: (i, j') is not an outgoing edge");
    if (!gbar_valid(h) || !gbar_acyclic(h))
        throw structural_error("switch requires a valid acyclic hyperflow");

    std::vector<Rat> pre_in(h.n), pre_out(h.n);
    for (int v = 0; v < h.n; ++v) {
        pre_in[v] = gbar_inflow(h, v);
        pre_out[v] = gbar_outflow(h, v);
    }
    int pre_deg = gbar_indegree(h, i) + gbar_outdegree(h, i);

    SwitchEvent ev;
    ev.j = j;
    ev.jp = jp;
    ev.i = i;
    ev.ip = itp->second.first;
    ev.p = std::min(itj->second.second, itp->second.second);
    ev.jpp = j ^ jp;

    if (!ev.jpp.get(ev.ip))
        throw std::logic_error("switch: the sink of j' cancelled in the XOR");

    Rat p = ev.p;
    int ip = ev.ip;
    if ((itj->second.second -= p) == 0) h.checks.erase(itj);
    if ((itp->second.second -= p) == 0) h.checks.erase(itp);
    auto itn = h.checks.find(ev.jpp);
    if (itn == h.checks.end()) {
        h.checks.emplace(ev.jpp, std::make_pair(ip, p));
    } else if (itn->second.first == ip) {
        itn->second.second += p;
    } else {
        throw std::logic_error("switch: XOR word already active with another sink");
    }

    if (!gbar_valid(h) || !gbar_acyclic(h))
        throw std::logic_error("switch broke hyperflow validity or acyclicity");
    for (int v = 0; v < h.n; ++v)
        if (gbar_inflow(h, v) > pre_in[v] || gbar_outflow(h, v) > pre_out[v])
            throw std::logic_error("switch increased a variable's flow");
    if (gbar_indegree(h, i) + gbar_outdegree(h, i) >= pre_deg)
        throw std::logic_error("switch did not reduce the path variable's degree");
    return ev;
}

GbarHyperflow primitivize(GbarHyperflow h, std::vector<SwitchEvent>* trace) {
    if (!gbar_valid(h) || !gbar_acyclic(h))
        throw structural_error("primitivize requires a valid acyclic hyperflow");
    for (int i = 0; i < h.n; ++i) {
        for (;;) {
            // Smallest in-word and out-word at i; maps iterate in word order.
            const BitVector* in_word = nullptr;
            const BitVector* out_word = nullptr;
            for (const auto& [word, sp] : h.checks) {
                if (sp.first == i && !in_word) in_word = &word;
                if (sp.first != i && word.get(i) && !out_word) out_word = &word;
                if (in_word && out_word) break;
            }
            if (!in_word || !out_word) break;
            auto ev = switch_path(h, *in_word, i, *out_word);
            if (trace) trace->push_back(std::move(ev));
        }
    }
    for (int i = 0; i < h.n; ++i) {
        if (!(h.gamma[i] > 0) || gbar_indegree(h, i) == 0) continue;
        // Inflow into a gamma > 0 variable is unnecessary once its outflow is
        // zero; drop the whole incoming checks.
        for (auto it = h.checks.begin(); it != h.checks.end();)
            it = it->second.first == i ? h.checks.erase(it) : std::next(it);
    }
    if (!gbar_is_primitive(h) || !gbar_acyclic(h))
        throw std::logic_error("primitivization postcondition failed");
    return h;
}

std::pair<GbarHyperflow, TrimReport> trim_high_degree(const GbarHyperflow& h, int k,
                                                      const Rat& delta) {
    if (delta <= 0) throw structural_error("trim needs delta > 0");
    if (!gbar_is_primitive(h)) throw structural_error("trim requires a primitive hyperflow");

    GbarHyperflow out;
    out.n = h.n;
    out.gamma = h.gamma;
    std::vector<Rat> lost_inflow(h.n, Rat(0));
    for (const auto& [word, sp] : h.checks) {
        if (static_cast<int>(word.weight()) > k)
            lost_inflow[sp.first] += sp.second;
        else
            out.checks.emplace(word, sp);
    }

    TrimReport rep;
    Rat eighth = delta / 8;
    for (int i = 0; i < h.n; ++i)
        if (h.gamma[i] <= 0 && lost_inflow[i] >= eighth) rep.risky.push_back(i);

    rep.flow_bounds_ok = true;
    std::vector<bool> risky(h.n, false);
    for (int i : rep.risky) risky[i] = true;
    for (int i = 0; i < h.n; ++i) {
        Rat f = gbar_outflow(out, i) - gbar_inflow(out, i);
        if (risky[i]) {
            if (f > 0) rep.flow_bounds_ok = false;
        } else {
            Rat bound = (h.gamma[i] <= 0 ? Rat(-1) : Rat(1)) - eighth;
            if (!(f < bound)) rep.flow_bounds_ok = false;
        }
    }
    rep.size_bound_ok =
        k <= 1 || Rat(rep.risky.size()) * delta * Rat(k - 1) <= Rat(8) * Rat(h.n);
    return {std::move(out), rep};
}

}  // namespace lplab
