#include "lplab/witness_io.hpp"

#include <json.hpp>

#include "lplab/errors.hpp"

namespace lplab {

std::string emit_witness_json(const EdgeWeighting& w, const LlrVector& gamma) {
    nlohmann::json j;
    j["n"] = w.n;
    j["m"] = w.m;
    auto edges = nlohmann::json::array();
    for (const auto& [e, v] : w.w)
        edges.push_back(nlohmann::json::array({e.first, e.second, rat_to_string(v)}));
    j["edges"] = edges;
    auto g = nlohmann::json::array();
    for (const auto& v : gamma) g.push_back(rat_to_string(v));
    j["gamma"] = g;
    return j.dump() + "\n";
}

ParsedWitness parse_witness_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("m") || !j.contains("edges") || !j.contains("gamma"))
        throw parse_error("witness JSON must contain 'n', 'm', 'edges' and 'gamma'");
    ParsedWitness out;
    out.w.n = j.at("n").get<int>();
    out.w.m = j.at("m").get<int>();
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3) throw parse_error("witness edge must be [i, j, w]");
        out.w.set(e[0].get<int>(), e[1].get<int>(), rat_from_string(e[2].get<std::string>()));
    }
    for (const auto& v : j.at("gamma")) out.gamma.push_back(rat_from_string(v.get<std::string>()));
    return out;
}

}  // namespace lplab
