#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lplab/calkin.hpp"
#include "lplab/diagnostics.hpp"
#include "lplab/errors.hpp"
#include "lplab/gf2.hpp"
#include "lplab/graph_io.hpp"
#include "lplab/hyperflow.hpp"
#include "lplab/polytope.hpp"
#include "lplab/sampling.hpp"
#include "lplab/simulator.hpp"
#include "lplab/stats.hpp"
#include "lplab/witness.hpp"
#include "lplab/witness_io.hpp"

using nlohmann::json;
using namespace lplab;

namespace {

constexpr const char* kVersion = "1.0.0";

// Input files read during this invocation, hashed for the manifest.
std::map<std::string, std::string> g_input_hashes;
std::vector<std::string> g_argv;

std::string fnv1a_hex(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string data = ss.str();
    g_input_hashes[path] = fnv1a_hex(data);
    return data;
}

json make_manifest() {
    json m;
    m["version"] = kVersion;
    m["argv"] = g_argv;
    m["inputs"] = g_input_hashes;
    return m;
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw parse_error("cannot write file '" + out_path + "'");
    out << text;
}

void emit_json(const std::string& out_path, json j) {
    j["manifest"] = make_manifest();
    write_output(out_path, j.dump(2) + "\n");
}

void emit_csv(const std::string& out_path, const std::string& header,
              const std::vector<std::string>& rows) {
    std::ostringstream os;
    os << "# " << make_manifest().dump() << "\n" << header << "\n";
    for (const auto& r : rows) os << r << "\n";
    write_output(out_path, os.str());
}

TannerGraph load_graph(const std::string& path) {
    std::string text = read_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);
    return parse_alist(text);
}

BitVector parse_bits(const std::string& s) {
    for (char c : s)
        if (c != '0' && c != '1') throw parse_error("bit string must be over {0,1}");
    return BitVector::from_string(s);
}

LlrVector parse_llr(const std::string& csv) {
    LlrVector g;
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) g.push_back(rat_from_string(tok));
    if (g.empty()) throw parse_error("empty llr list");
    return g;
}

LlrVector llr_from_options(const TannerGraph& g, const std::string& llr,
                           const std::string& received, const std::string& shift) {
    LlrVector gamma;
    if (!llr.empty() && !received.empty())
        throw parse_error("give either --llr or --received, not both");
    if (!llr.empty()) {
        gamma = parse_llr(llr);
    } else if (!received.empty()) {
        gamma = shifted_llr(parse_bits(received), Rat(0));
    } else {
        throw parse_error("one of --llr or --received is required");
    }
    if (static_cast<int>(gamma.size()) != g.num_vars())
        throw parse_error("llr length does not match the graph");
    if (!shift.empty()) {
        Rat s = rat_from_string(shift);
        for (auto& v : gamma) v += s;
    }
    return gamma;
}

json decode_to_json(const DecodeResult& r) {
    json j;
    j["status"] = r.success ? "success" : "failure";
    j["optimum"] = rat_to_string(r.optimum);
    if (!r.success) {
        j["reason"] = r.reason == DecodeResult::Reason::NonzeroOptimum ? "nonzero_optimum"
                                                                       : "zero_not_unique";
        json cert = json::array();
        for (const auto& c : r.certificate) cert.push_back(rat_to_string(c));
        j["certificate"] = cert;
    }
    return j;
}

std::string bits_to_string(const BitVector& v) { return v.to_string(); }

int run(std::vector<std::string> args);

int dispatch(CLI::App& app, std::vector<std::string> args) {
    // CLI11 wants reversed argv without the program name.
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        // Prints help for --help (exit 0); usage errors map to exit 2.
        return app.exit(e) == 0 ? 0 : 2;
    }
    return 0;
}

int run(std::vector<std::string> args) {
    g_argv = args;

    CLI::App app{"LP decoding laboratory for LDPC codes"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string manifest_out;
    app.add_option("--manifest", manifest_out, "write the invocation manifest to this file");

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "sample a random Tanner graph ensemble");
    std::string gen_kind = "check-regular", gen_out, gen_format = "alist";
    int gen_n = 0, gen_m = 0, gen_d = 3;
    uint64_t gen_seed = 0;
    gen->add_option("--kind", gen_kind, "check-regular | variable-regular")
        ->check(CLI::IsMember({"check-regular", "variable-regular"}));
    gen->add_option("-n", gen_n, "variable count")->required();
    gen->add_option("-m", gen_m, "check count")->required();
    gen->add_option("-d", gen_d, "row weight (check-regular) or variable degree");
    gen->add_option("--seed", gen_seed, "master seed");
    gen->add_option("--out", gen_out, "output path (default stdout)");
    gen->add_option("--format", gen_format, "alist | json")
        ->check(CLI::IsMember({"alist", "json"}));

    // ---- augment ----
    auto* aug = app.add_subcommand("augment", "emit the redundant-check graph of weight <= k");
    std::string aug_graph, aug_out, aug_format = "alist";
    int aug_k = 0;
    aug->add_option("--graph", aug_graph, "input graph (alist or JSON)")->required();
    aug->add_option("-k", aug_k, "max redundant-check weight")->required();
    aug->add_option("--out", aug_out, "output path (default stdout)");
    aug->add_option("--format", aug_format, "alist | json")
        ->check(CLI::IsMember({"alist", "json"}));

    // ---- diag ----
    auto* diag = app.add_subcommand("diag", "structural diagnostics");
    std::string diag_graph, diag_kappa, diag_out;
    int diag_s = -1, diag_k = -1, diag_maxset = -1;
    uint64_t diag_seed = 0;
    diag->add_option("--graph", diag_graph)->required();
    diag->add_option("--s", diag_s, "nondegeneracy subset size threshold");
    diag->add_option("--k", diag_k, "nondegeneracy weight threshold");
    diag->add_option("--max-set", diag_maxset, "expansion set size bound");
    diag->add_option("--kappa", diag_kappa, "expansion factor (rational)");
    diag->add_option("--seed", diag_seed);
    diag->add_option("--out", diag_out);

    // ---- decode ----
    auto* dec = app.add_subcommand("decode", "LP (and optionally ML) decode");
    std::string dec_graph, dec_llr, dec_received, dec_out;
    bool dec_ml = false;
    dec->add_option("--graph", dec_graph)->required();
    dec->add_option("--llr", dec_llr, "comma-separated rationals");
    dec->add_option("--received", dec_received, "bit string y, llr = (-1)^y");
    dec->add_flag("--ml", dec_ml, "also brute-force the ML decoder");
    dec->add_option("--out", dec_out);

    // ---- witness ----
    auto* wit = app.add_subcommand("witness", "dual-witness search, verification, primitivization");
    wit->require_subcommand(1);
    auto* wfind = wit->add_subcommand("find", "search for a dual witness");
    std::string wf_graph, wf_llr, wf_received, wf_shift, wf_out;
    bool wf_narrow = false;
    wfind->add_option("--graph", wf_graph)->required();
    wfind->add_option("--llr", wf_llr);
    wfind->add_option("--received", wf_received);
    wfind->add_option("--shift", wf_shift, "rational added to every llr entry");
    wfind->add_flag("--narrow", wf_narrow, "restrict support to checks near the error set");
    wfind->add_option("--out", wf_out);

    auto* wver = wit->add_subcommand("verify", "verify a witness file");
    std::string wv_graph, wv_witness, wv_out;
    wver->add_option("--graph", wv_graph)->required();
    wver->add_option("--witness", wv_witness, "witness JSON file")->required();
    wver->add_option("--out", wv_out);

    auto* wprim = wit->add_subcommand("primitivize",
                                      "acyclic hyperflow on the all-redundant-checks graph, "
                                      "made primitive");
    std::string wp_graph, wp_llr, wp_received, wp_trace, wp_out;
    wprim->add_option("--graph", wp_graph)->required();
    wprim->add_option("--llr", wp_llr);
    wprim->add_option("--received", wp_received);
    wprim->add_option("--trace", wp_trace, "write the switch-event trace to this file");
    wprim->add_option("--out", wp_out);

    // ---- vertices ----
    auto* vert = app.add_subcommand("vertices", "pseudocodeword enumeration");
    std::string vert_graph, vert_out;
    int vert_alpha = 1;
    vert->add_option("--graph", vert_graph)->required();
    vert->add_option("--alpha-count", vert_alpha, "top-coordinate count for the strength ratio");
    vert->add_option("--out", vert_out);

    // ---- calkin ----
    auto* cal = app.add_subcommand("calkin", "threshold numerics");
    cal->require_subcommand(1);
    auto* cbeta = cal->add_subcommand("beta", "critical row ratio beta_d");
    int cb_d = 3;
    double cb_tol = 1e-10;
    std::string cb_out;
    cbeta->add_option("-d", cb_d)->required();
    cbeta->add_option("--tol", cb_tol);
    cbeta->add_option("--out", cb_out);

    auto* ceig = cal->add_subcommand("eigen", "weight-walk eigensystem residuals");
    int ce_n = 0, ce_d = 0;
    std::string ce_out;
    ceig->add_option("-n", ce_n)->required();
    ceig->add_option("-d", ce_d)->required();
    ceig->add_option("--out", ce_out);

    auto* cbound = cal->add_subcommand("bound", "analytic degeneracy probability bound");
    int bo_n = 0, bo_m = 0, bo_d = 3, bo_g = 1, bo_k = 0;
    std::string bo_out;
    cbound->add_option("-n", bo_n)->required();
    cbound->add_option("-m", bo_m)->required();
    cbound->add_option("-d", bo_d);
    cbound->add_option("-g", bo_g)->required();
    cbound->add_option("-k", bo_k)->required();
    cbound->add_option("--out", bo_out);

    auto* cdeg = cal->add_subcommand("degeneracy", "empirical degeneracy frequency");
    int dg_n = 0, dg_m = 0, dg_d = 3, dg_s = 1, dg_k = 0, dg_g = -1;
    long long dg_trials = 100;
    uint64_t dg_seed = 0;
    std::string dg_out, dg_format = "json";
    cdeg->add_option("-n", dg_n)->required();
    cdeg->add_option("-m", dg_m)->required();
    cdeg->add_option("-d", dg_d);
    cdeg->add_option("--s", dg_s)->required();
    cdeg->add_option("--k", dg_k)->required();
    cdeg->add_option("--g", dg_g, "g for the analytic bound column (default 2 ceil(log2 n))");
    cdeg->add_option("--trials", dg_trials);
    cdeg->add_option("--seed", dg_seed);
    cdeg->add_option("--format", dg_format)->check(CLI::IsMember({"json", "csv"}));
    cdeg->add_option("--out", dg_out);

    // ---- sim ----
    auto* sim = app.add_subcommand("sim", "Monte-Carlo experiments");
    sim->require_subcommand(1);
    auto* swer = sim->add_subcommand("wer", "word error rate at one crossover probability");
    std::string sw_graph, sw_out, sw_format = "csv";
    double sw_eps = 0.0;
    long long sw_trials = 1000;
    uint64_t sw_seed = 0;
    int sw_jobs = 1;
    swer->add_option("--graph", sw_graph)->required();
    swer->add_option("--epsilon", sw_eps)->required();
    swer->add_option("--trials", sw_trials);
    swer->add_option("--seed", sw_seed);
    swer->add_option("--jobs", sw_jobs);
    swer->add_option("--format", sw_format)->check(CLI::IsMember({"json", "csv"}));
    swer->add_option("--out", sw_out);

    auto* sscan = sim->add_subcommand("scan", "paired threshold scan over graph variants");
    std::string sc_graph, sc_eps_list, sc_k_list, sc_out, sc_format = "csv";
    bool sc_full = false;
    long long sc_trials = 200;
    uint64_t sc_seed = 0;
    sscan->add_option("--graph", sc_graph)->required();
    sscan->add_option("--epsilons", sc_eps_list, "comma-separated grid")->required();
    sscan->add_option("--ks", sc_k_list, "comma-separated augmentation weights");
    sscan->add_flag("--full", sc_full, "include the all-redundant-checks variant");
    sscan->add_option("--trials", sc_trials);
    sscan->add_option("--seed", sc_seed);
    sscan->add_option("--format", sc_format)->check(CLI::IsMember({"json", "csv"}));
    sscan->add_option("--out", sc_out);

    auto* shelp = sim->add_subcommand("help", "minimum-weight help-bit search");
    std::string sh_graph, sh_received, sh_out;
    int sh_b = 0;
    shelp->add_option("--graph", sh_graph)->required();
    shelp->add_option("--received", sh_received)->required();
    shelp->add_option("-b", sh_b, "max help bits")->required();
    shelp->add_option("--out", sh_out);

    auto* sexc = sim->add_subcommand("excess", "witness-excess vs crossover trade");
    auto* sdef = sim->add_subcommand("deficiency", "witness-deficiency vs crossover trade");
    std::string se_graph, se_delta = "1/4", se_out;
    double se_eps = 0.0;
    long long se_trials = 1000;
    uint64_t se_seed = 0;
    for (auto* s : {sexc, sdef}) {
        s->add_option("--graph", se_graph)->required();
        s->add_option("--epsilon", se_eps)->required();
        s->add_option("--delta", se_delta, "rational shift scale");
        s->add_option("--trials", se_trials);
        s->add_option("--seed", se_seed);
        s->add_option("--out", se_out);
    }

    if (int rc = dispatch(app, std::move(args)); rc != 0 || app.get_subcommands().empty())
        return rc;

    if (gen->parsed()) {
        TannerGraph g = gen_kind == "check-regular"
                            ? sample_check_regular(gen_n, gen_m, gen_d, gen_seed)
                            : sample_variable_regular(gen_n, gen_m, gen_d, gen_seed);
        write_output(gen_out, gen_format == "json" ? emit_graph_json(g) : emit_alist(g));
    } else if (aug->parsed()) {
        TannerGraph g = augmented_graph(load_graph(aug_graph), aug_k);
        write_output(aug_out, aug_format == "json" ? emit_graph_json(g) : emit_alist(g));
    } else if (diag->parsed()) {
        TannerGraph g = load_graph(diag_graph);
        json j;
        j["n"] = g.num_vars();
        j["m"] = g.num_checks();
        auto gi = girth(g);
        j["girth"] = gi ? json(*gi) : json("infinite");
        auto dr = delta_min_cyclic_sum(g);
        j["delta"] = dr.infinite ? json{{"value", "infinite"}, {"exact", dr.exact}}
                                 : json{{"value", dr.value}, {"exact", dr.exact}};
        if (diag_s >= 0 || diag_k >= 0) {
            if (diag_s < 1 || diag_k < 0) throw parse_error("nondegeneracy needs --s and --k");
            auto nd = is_nondegenerate(g, diag_s, diag_k, 24, diag_seed);
            json out;
            out["status"] = nd.status == NondegeneracyResult::Status::True    ? "true"
                            : nd.status == NondegeneracyResult::Status::False ? "false"
                                                                              : "unknown";
            if (nd.status == NondegeneracyResult::Status::False) out["witness"] = nd.witness;
            j["nondegenerate"] = out;
        }
        if (diag_maxset >= 0 || !diag_kappa.empty()) {
            if (diag_maxset < 1 || diag_kappa.empty())
                throw parse_error("expansion needs --max-set and --kappa");
            auto ex = check_expansion(g, diag_maxset, rat_from_string(diag_kappa), 10000000,
                                      diag_seed);
            json out;
            out["status"] = ex.status == ExpansionResult::Status::Certified  ? "certified"
                            : ex.status == ExpansionResult::Status::Violated ? "violated"
                                                                             : "unknown";
            if (ex.status == ExpansionResult::Status::Violated)
                out["violating_set"] = ex.violating_set;
            j["expansion"] = out;
        }
        emit_json(diag_out, std::move(j));
    } else if (dec->parsed()) {
        TannerGraph g = load_graph(dec_graph);
        LlrVector gamma = llr_from_options(g, dec_llr, dec_received, "");
        json j;
        j["lp"] = decode_to_json(lp_decode(g, gamma));
        if (dec_ml) {
            auto ml = ml_decode(g, gamma);
            json m;
            m["optimum"] = rat_to_string(ml.optimum);
            json mins = json::array();
            for (const auto& x : ml.minimizers) mins.push_back(bits_to_string(x));
            m["minimizers"] = mins;
            m["unique"] = ml.minimizers.size() == 1;
            j["ml"] = m;
        }
        emit_json(dec_out, std::move(j));
    } else if (wfind->parsed()) {
        TannerGraph g = load_graph(wf_graph);
        WitnessSearch ws;
        LlrVector gamma;
        if (wf_narrow) {
            if (wf_received.empty() || !wf_llr.empty() || !wf_shift.empty())
                throw parse_error("--narrow expects --received only");
            BitVector y = parse_bits(wf_received);
            gamma = shifted_llr(y, Rat(0));
            ws = find_narrow_dual_witness(g, y);
        } else {
            gamma = llr_from_options(g, wf_llr, wf_received, wf_shift);
            ws = find_dual_witness(g, gamma);
        }
        json j;
        j["found"] = ws.found;
        j["slack"] = rat_to_string(ws.slack);
        if (ws.found) j["witness"] = json::parse(emit_witness_json(ws.w, gamma));
        emit_json(wf_out, std::move(j));
    } else if (wver->parsed()) {
        TannerGraph g = load_graph(wv_graph);
        // Accept either a bare witness object or the wrapper `witness find` emits.
        json wj = json::parse(read_file(wv_witness));
        if (wj.contains("witness")) wj = wj["witness"];
        auto pw = parse_witness_json(wj.dump());
        auto rep = verify_dual_witness(g, pw.gamma, pw.w);
        json j;
        j["valid"] = rep.valid;
        json viol = json::array();
        for (const auto& v : rep.violations) {
            if (v.kind == WitnessViolation::Kind::VariableFlow)
                viol.push_back(json{{"kind", "variable_flow"}, {"var", v.var}});
            else
                viol.push_back(json{{"kind", "check_pair"},
                                    {"check", v.check},
                                    {"vars", json::array({v.var, v.var2})}});
        }
        j["violations"] = viol;
        j["hyperflow"] = verify_hyperflow(g, pw.gamma, pw.w);
        j["primitive"] = is_primitive(g, pw.gamma, pw.w);
        emit_json(wv_out, std::move(j));
    } else if (wprim->parsed()) {
        TannerGraph g = load_graph(wp_graph);
        LlrVector gamma = llr_from_options(g, wp_llr, wp_received, "");
        TannerGraph gbar = augmented_graph(g, g.num_vars());
        auto hs = find_hyperflow(gbar, gamma, true);
        json j;
        j["found"] = hs.found;
        if (hs.found) {
            auto h = lift_hyperflow(gbar, gamma, hs.assignment);
            std::vector<SwitchEvent> trace;
            auto prim = primitivize(std::move(h), wp_trace.empty() ? nullptr : &trace);
            j["primitive"] = true;
            json checks = json::array();
            for (const auto& [word, sp] : prim.checks)
                checks.push_back(json{{"word", word.to_string()},
                                      {"sink", sp.first},
                                      {"p", rat_to_string(sp.second)}});
            j["hyperflow"] = checks;
            if (!wp_trace.empty()) {
                json tj = json::array();
                for (const auto& ev : trace)
                    tj.push_back(json{{"j", ev.j.to_string()},
                                      {"i", ev.i},
                                      {"jp", ev.jp.to_string()},
                                      {"jpp", ev.jpp.to_string()},
                                      {"sink", ev.ip},
                                      {"p", rat_to_string(ev.p)}});
                write_output(wp_trace, tj.dump(2) + "\n");
            }
        }
        emit_json(wp_out, std::move(j));
    } else if (vert->parsed()) {
        TannerGraph g = load_graph(vert_graph);
        auto p = build_fundamental_polytope(g);
        auto vs = enumerate_vertices(p);
        json j;
        json list = json::array();
        for (const auto& x : vs) {
            json row = json::array();
            for (const auto& c : x) row.push_back(rat_to_string(c));
            list.push_back(row);
        }
        j["vertices"] = list;
        auto pw = bsc_pseudoweight(vs);
        j["bsc_pseudoweight"] = pw.infinite ? json("infinite") : json(pw.value);
        if (!pw.infinite) j["strength_ratio"] = rat_to_string(strength_ratio(vs, vert_alpha));
        emit_json(vert_out, std::move(j));
    } else if (cbeta->parsed()) {
        auto th = beta_d(cb_d, cb_tol);
        emit_json(cb_out, json{{"d", cb_d}, {"alpha", th.alpha}, {"beta", th.beta}});
    } else if (ceig->parsed()) {
        auto res = verify_decomposition(ce_n, ce_d);
        auto ke = eigen_krawtchouk(ce_n, ce_d);
        emit_json(ce_out, json{{"n", ce_n},
                               {"d", ce_d},
                               {"reconstruction_residual", res.reconstruction},
                               {"inversion_residual", res.inversion},
                               {"lambda", ke.lambda}});
    } else if (cbound->parsed()) {
        emit_json(bo_out, json{{"n", bo_n},
                               {"m", bo_m},
                               {"d", bo_d},
                               {"g", bo_g},
                               {"k", bo_k},
                               {"log2_bound", nondegeneracy_bound(bo_n, bo_m, bo_d, bo_g, bo_k)}});
    } else if (cdeg->parsed()) {
        if (dg_g < 0) dg_g = 2 * static_cast<int>(std::ceil(std::log2(double(dg_n))));
        auto est = empirical_degeneracy(dg_n, dg_m, dg_d, dg_s, dg_k, dg_trials, dg_seed);
        double bound = dg_g <= dg_m ? nondegeneracy_bound(dg_n, dg_m, dg_d, dg_g, dg_k)
                                    : -std::numeric_limits<double>::infinity();
        if (dg_format == "csv") {
            std::ostringstream row;
            row << dg_n << "," << dg_m << "," << dg_d << "," << dg_s << "," << dg_k << ","
                << est.trials << "," << est.violations << "," << est.freq << "," << est.ci_lo
                << "," << est.ci_hi << "," << bound;
            emit_csv(dg_out, "n,m,d,s,k,trials,violations,freq,ci_lo,ci_hi,log2_bound",
                     {row.str()});
        } else {
            emit_json(dg_out, json{{"n", dg_n},
                                   {"m", dg_m},
                                   {"d", dg_d},
                                   {"s", dg_s},
                                   {"k", dg_k},
                                   {"trials", est.trials},
                                   {"violations", est.violations},
                                   {"freq", est.freq},
                                   {"ci_lo", est.ci_lo},
                                   {"ci_hi", est.ci_hi},
                                   {"log2_bound", bound}});
        }
    } else if (swer->parsed()) {
        TannerGraph g = load_graph(sw_graph);
        auto rep = wer_estimate(g, sw_eps, sw_trials, sw_seed, sw_graph, sw_jobs);
        if (sw_format == "csv") {
            std::ostringstream row;
            row << rep.graph_id << ",base," << rep.epsilon << "," << rep.trials << ","
                << rep.failures << "," << rep.wer << "," << rep.ci_lo << "," << rep.ci_hi;
            emit_csv(sw_out, "graph_id,variant,epsilon,trials,failures,wer,ci_lo,ci_hi",
                     {row.str()});
        } else {
            emit_json(sw_out, json{{"graph_id", rep.graph_id},
                                   {"epsilon", rep.epsilon},
                                   {"trials", rep.trials},
                                   {"failures", rep.failures},
                                   {"wer", rep.wer},
                                   {"ci_lo", rep.ci_lo},
                                   {"ci_hi", rep.ci_hi}});
        }
    } else if (sscan->parsed()) {
        TannerGraph g = load_graph(sc_graph);
        std::vector<double> grid;
        {
            std::istringstream ss(sc_eps_list);
            std::string tok;
            while (std::getline(ss, tok, ',')) grid.push_back(std::stod(tok));
        }
        std::vector<std::pair<std::string, TannerGraph>> variants;
        variants.push_back({"base", g});
        if (!sc_k_list.empty()) {
            std::istringstream ss(sc_k_list);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                int k = std::stoi(tok);
                variants.push_back({"aug_k" + tok, augmented_graph(g, k)});
            }
        }
        if (sc_full) variants.push_back({"full", augmented_graph(g, g.num_vars())});
        auto res = threshold_scan(variants, grid, sc_trials, sc_seed);
        if (sc_format == "csv") {
            std::vector<std::string> rows;
            for (const auto& est : res.per_variant)
                for (size_t e = 0; e < est.grid.size(); ++e) {
                    std::ostringstream row;
                    auto [lo, hi] = wilson_interval(est.failures[e], res.trials_per_point);
                    row << sc_graph << "," << est.variant << "," << est.grid[e] << ","
                        << res.trials_per_point << "," << est.failures[e] << "," << est.wer[e]
                        << "," << lo << "," << hi;
                    rows.push_back(row.str());
                }
            emit_csv(sc_out, "graph_id,variant,epsilon,trials,failures,wer,ci_lo,ci_hi", rows);
        } else {
            json j;
            j["dominance_violations"] = res.dominance_violations;
            json vts = json::array();
            for (const auto& est : res.per_variant) {
                json v;
                v["variant"] = est.variant;
                v["grid"] = est.grid;
                v["wer"] = est.wer;
                v["failures"] = est.failures;
                if (est.crossing_half) v["crossing_wer_0.5"] = *est.crossing_half;
                if (est.crossing_tenth) v["crossing_wer_0.1"] = *est.crossing_tenth;
                vts.push_back(v);
            }
            j["variants"] = vts;
            emit_json(sc_out, std::move(j));
        }
    } else if (shelp->parsed()) {
        TannerGraph g = load_graph(sh_graph);
        auto z = decode_with_help(g, parse_bits(sh_received), sh_b);
        json j;
        j["found"] = z.has_value();
        if (z) j["z"] = bits_to_string(*z);
        emit_json(sh_out, std::move(j));
    } else if (sexc->parsed()) {
        TannerGraph g = load_graph(se_graph);
        auto rep = excess_experiment(g, se_eps, rat_from_string(se_delta), se_trials, se_seed);
        double d = static_cast<double>(rat_from_string(se_delta));
        emit_json(se_out, json{{"epsilon", rep.epsilon},
                               {"epsilon_prime", rep.epsilon_prime},
                               {"trials", rep.trials},
                               {"witness_freq", rep.witness_freq},
                               {"q_prime", rep.q_prime},
                               {"witness_freq_lower_bound", 1 - 2 * rep.q_prime / d}});
    } else if (sdef->parsed()) {
        TannerGraph g = load_graph(se_graph);
        auto rep = deficiency_experiment(g, se_eps, rat_from_string(se_delta), se_trials, se_seed);
        double d = static_cast<double>(rat_from_string(se_delta));
        emit_json(se_out, json{{"epsilon", rep.epsilon},
                               {"epsilon_prime", rep.epsilon_prime},
                               {"trials", rep.trials},
                               {"fail_rate", rep.fail_rate},
                               {"q_prime_delta", rep.q_prime_delta},
                               {"fail_rate_upper_bound", 2 * rep.q_prime_delta / d}});
    }

    if (!manifest_out.empty()) write_output(manifest_out, make_manifest().dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);

    try {
        if (!args.empty() && args[0] == "--replay") {
            if (args.size() != 2) {
                std::cerr << "--replay takes exactly one manifest file\n";
                return 2;
            }
            json m = json::parse(read_file(args[1]));
            if (!m.contains("argv")) {
                std::cerr << "manifest is missing 'argv'\n";
                return 2;
            }
            args = m["argv"].get<std::vector<std::string>>();
            if (!args.empty() && args[0] == "--replay") {
                std::cerr << "nested replay is not allowed\n";
                return 2;
            }
            // The manifest itself is not an input of the replayed command.
            g_input_hashes.clear();
        }
        return run(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 3;
    } catch (const numeric_error& e) {
        std::cerr << "numeric: " << e.what() << "\n";
        return 4;
    } catch (const parse_error& e) {
        std::cerr << "input: " << e.what() << "\n";
        return 2;
    } catch (const structural_error& e) {
        std::cerr << "input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
