// Command-line front door for the quadruple Roman domination toolkit.
// One JSON run report per invocation on stdout, logs on stderr.
// Exit codes: 0 success, 1 semantic negative, 2 input error,
//             3 budget/timeout, 4 precondition violation.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrd/qrd.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
    kOk = 0,
    kNegative = 1,
    kInputError = 2,
    kBudget = 3,
    kPrecondition = 4,
};

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qrd::parse_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct RunReport {
    std::string command;
    json inputs = json::object();
    json result = json::object();
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    std::string load(const std::string& path) {
        std::string data = slurp(path);
        inputs[path] = fnv1a_hex(data);
        return data;
    }

    void emit(int exit_code) const {
        json j;
        j["command"] = command;
        j["version"] = kVersion;
        j["inputs"] = inputs;
        j["exit_code"] = exit_code;
        j["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        j["result"] = result;
        std::cout << j.dump(2) << std::endl;
    }
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

json labeling_json(const qrd::Labeling& f) {
    json j;
    j["values"] = f.values;
    j["weight"] = qrd::weight(f);
    return j;
}

json verification_json(const qrd::VerificationReport& rep) {
    json j;
    j["valid"] = rep.valid;
    j["weight"] = rep.weight;
    j["violations"] = json::array();
    for (const auto& v : rep.violations)
        j["violations"].push_back({{"vertex", v.vertex}, {"lhs", v.lhs}, {"rhs", v.rhs}});
    return j;
}

json solve_json(const qrd::SolveReport& rep, bool labeling_witness) {
    json j;
    j["optimum"] = rep.optimum;
    j["status"] = qrd::to_string(rep.status);
    j["nodes_explored"] = rep.nodes_explored;
    j["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(rep.elapsed).count();
    if (labeling_witness)
        j["witness"] = rep.witness.values;
    else
        j["witness"] = rep.witness_set;
    return j;
}

json gadget_json(const qrd::GadgetGraph& gg) {
    json j;
    j["kind"] = qrd::to_string(gg.kind);
    if (gg.threshold)
        j["threshold"] = *gg.threshold;
    else
        j["threshold"] = nullptr;
    j["roles"] = json::object();
    for (const auto& [name, v] : gg.roles) j["roles"][name] = v;
    if (gg.planar_verdict) j["planar"] = *gg.planar_verdict;
    return j;
}

qrd::Graph load_graph(RunReport& rep, const std::string& path) {
    return qrd::parse_graph(rep.load(path));
}

int run(int argc, char** argv) {
    CLI::App app{"quadruple Roman domination toolkit"};
    app.require_subcommand(1);

    RunReport rep;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named graph family");
    std::string gen_kind;
    std::vector<int> gen_params;
    std::string gen_out;
    gen->add_option("--kind", gen_kind, "path|cycle|star|comb|complete|complete_bipartite")->required();
    gen->add_option("--params", gen_params, "family size parameters")->required();
    gen->add_option("-o,--output", gen_out, "graph file to write");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a labeling against a graph");
    std::string v_graph, v_labeling;
    verify_cmd->add_option("-g,--graph", v_graph)->required();
    verify_cmd->add_option("-l,--labeling", v_labeling)->required();

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "compute gamma_4R exactly");
    std::string s_graph, s_method = "bnb";
    int s_cap = 9;
    std::int64_t s_nodes = 0;
    double s_timeout = 0.0;
    solve_cmd->add_option("-g,--graph", s_graph)->required();
    solve_cmd->add_option("--method", s_method, "brute|bnb (default bnb)");
    solve_cmd->add_option("--cap", s_cap, "brute-force vertex cap (default 9)");
    solve_cmd->add_option("--nodes", s_nodes, "node budget for bnb (0 = unlimited)");
    solve_cmd->add_option("--timeout", s_timeout, "time budget in seconds (0 = unlimited)");

    // dom
    auto* dom_cmd = app.add_subcommand("dom", "compute the domination number exactly");
    std::string d_graph;
    int d_cap = 20;
    dom_cmd->add_option("-g,--graph", d_graph)->required();
    dom_cmd->add_option("--cap", d_cap, "vertex cap (default 20)");

    // eds
    auto* eds_cmd = app.add_subcommand("eds", "find an efficient dominating set and the gamma_4R bounds");
    std::string e_graph;
    eds_cmd->add_option("-g,--graph", e_graph)->required();

    // threshold
    auto* thr_cmd = app.add_subcommand("threshold", "recognize a threshold graph; weight-5 labeling when connected");
    std::string t_graph;
    thr_cmd->add_option("-g,--graph", t_graph)->required();

    // approx
    auto* ap_cmd = app.add_subcommand("approx", "greedy 4RDF approximation");
    std::string a_graph;
    int a_dsk = 0;
    bool a_exact_ratio = false;
    ap_cmd->add_option("-g,--graph", a_graph)->required();
    ap_cmd->add_option("--ds-k", a_dsk, "run DS-Approx with this k instead");
    ap_cmd->add_flag("--exact-ratio", a_exact_ratio, "also brute-force gamma_4R (small graphs)");

    // reduce
    auto* red_cmd = app.add_subcommand("reduce", "build a hardness gadget from an ETC instance");
    std::string r_gadget, r_etc, r_out;
    bool r_witness = false;
    red_cmd->add_option("--gadget", r_gadget, "star|comb|split|planar")->required();
    red_cmd->add_option("--etc", r_etc, "ETC instance JSON file")->required();
    red_cmd->add_flag("--witness", r_witness, "also emit the construction's witness labeling");
    red_cmd->add_option("-o,--output", r_out, "output prefix (PREFIX.graph.txt, PREFIX.json, PREFIX.witness.txt)");

    // family
    auto* fam_cmd = app.add_subcommand("family", "build an extremal family instance");
    auto* fam_f = fam_cmd->add_subcommand("f", "family F: gamma_4R = 4 gamma + 1");
    int ff_t = 2;
    std::string ff_out;
    fam_f->add_option("--t", ff_t, "number of copies (>= 2)")->required();
    fam_f->add_option("-o,--output", ff_out, "output prefix");
    auto* fam_fp = fam_cmd->add_subcommand("fprime", "family F': gamma_4R = 5 gamma");
    int fp_r = 5;
    std::string fp_graph, fp_out;
    fam_fp->add_option("--r", fp_r, "pendants per vertex (>= 5)")->required();
    fam_fp->add_option("-g,--graph", fp_graph, "base graph file (default K_2)");
    fam_fp->add_option("-o,--output", fp_out, "output prefix");
    fam_cmd->require_subcommand(1);

    // ilp
    auto* ilp_cmd = app.add_subcommand("ilp", "emit the 6-variable ILP model in LP format");
    std::string i_graph, i_out;
    ilp_cmd->add_option("-g,--graph", i_graph)->required();
    ilp_cmd->add_option("-o,--output", i_out, "LP file to write (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << std::endl;
        return kInputError;
    }

    try {
        if (*gen) {
            rep.command = "gen";
            auto kind = qrd::graph_kind_from_name(gen_kind);
            if (!kind) throw qrd::parse_error("unknown graph kind: " + gen_kind);
            qrd::Graph g = qrd::generate(*kind, gen_params);
            rep.result["n"] = g.n();
            rep.result["m"] = g.m();
            std::string text = qrd::serialize_graph(g);
            if (gen_out.empty())
                rep.result["graph"] = text;
            else {
                write_file(gen_out, text);
                rep.result["path"] = gen_out;
            }
            rep.emit(kOk);
            return kOk;
        }

        if (*verify_cmd) {
            rep.command = "verify";
            qrd::Graph g = load_graph(rep, v_graph);
            qrd::Labeling f = qrd::parse_labeling(rep.load(v_labeling), g.n());
            auto vr = qrd::verify(g, f);
            rep.result = verification_json(vr);
            int code = vr.valid ? kOk : kNegative;
            rep.emit(code);
            return code;
        }

        if (*solve_cmd) {
            rep.command = "solve";
            qrd::Graph g = load_graph(rep, s_graph);
            qrd::SolveReport sr;
            if (s_method == "brute") {
                sr = qrd::brute_force_4r(g, s_cap);
            } else if (s_method == "bnb") {
                qrd::Budget budget;
                budget.max_nodes = s_nodes;
                budget.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(s_timeout * 1000));
                sr = qrd::branch_and_bound_4r(g, budget);
            } else {
                throw qrd::parse_error("unknown method: " + s_method);
            }
            rep.result = solve_json(sr, true);
            int code = sr.status == qrd::SolveStatus::optimal ? kOk : kBudget;
            rep.emit(code);
            return code;
        }

        if (*dom_cmd) {
            rep.command = "dom";
            qrd::Graph g = load_graph(rep, d_graph);
            auto sr = qrd::domination_number(g, d_cap);
            rep.result = solve_json(sr, false);
            rep.emit(kOk);
            return kOk;
        }

        if (*eds_cmd) {
            rep.command = "eds";
            qrd::Graph g = load_graph(rep, e_graph);
            auto bounds = qrd::eds_bounds(g);
            if (!bounds) {
                rep.result["eds"] = nullptr;
                rep.emit(kNegative);
                return kNegative;
            }
            rep.result["eds"] = bounds->eds;
            rep.result["gamma"] = bounds->gamma;
            rep.result["lower"] = bounds->lower;
            rep.result["upper"] = bounds->upper;
            rep.result["upper_labeling"] = qrd::eds_upper_labeling(g, bounds->eds).values;
            rep.emit(kOk);
            return kOk;
        }

        if (*thr_cmd) {
            rep.command = "threshold";
            qrd::Graph g = load_graph(rep, t_graph);
            auto cert = qrd::recognize_threshold(g);
            if (!cert) {
                rep.result["threshold"] = false;
                rep.emit(kNegative);
                return kNegative;
            }
            rep.result["threshold"] = true;
            rep.result["clique_order"] = cert->clique_order;
            rep.result["independent_order"] = cert->independent_order;
            if (g.n() >= 2 && g.is_connected()) {
                auto f = qrd::threshold_gamma4r(g, *cert);
                rep.result["labeling"] = labeling_json(f);
                rep.result["gamma_4r"] = 5;
            }
            rep.emit(kOk);
            return kOk;
        }

        if (*ap_cmd) {
            rep.command = "approx";
            qrd::Graph g = load_graph(rep, a_graph);
            if (a_dsk > 0) {
                auto t = qrd::ds_approx(g, a_dsk, qrd::approx_backend());
                rep.result["dominating_set"] = t;
                rep.result["size"] = t.size();
                rep.emit(kOk);
                return kOk;
            }
            auto ar = qrd::qrd_approx(g);
            rep.result["labeling"] = labeling_json(ar.labeling);
            rep.result["weight"] = ar.weight;
            rep.result["ratio_bound"] = ar.ratio_bound;
            if (a_exact_ratio) {
                auto sr = qrd::brute_force_4r(g);
                rep.result["optimum"] = sr.optimum;
                rep.result["exact_ratio"] = static_cast<double>(ar.weight) / sr.optimum;
            }
            rep.emit(kOk);
            return kOk;
        }

        if (*red_cmd) {
            rep.command = "reduce";
            qrd::EtcInstance inst = qrd::parse_etc(rep.load(r_etc));
            qrd::GadgetGraph gg;
            if (r_gadget == "star")
                gg = qrd::build_star_convex(inst);
            else if (r_gadget == "comb")
                gg = qrd::build_comb_convex(inst);
            else if (r_gadget == "split")
                gg = qrd::build_split(inst);
            else if (r_gadget == "planar")
                gg = qrd::build_petc_graph(inst);
            else
                throw qrd::parse_error("unknown gadget kind: " + r_gadget);

            rep.result = gadget_json(gg);
            rep.result["n"] = gg.graph.n();
            rep.result["m"] = gg.graph.m();
            std::optional<qrd::Labeling> witness;
            if (r_witness) {
                auto cover = qrd::solve_etc(inst);
                if (!cover) {
                    rep.result["witness"] = nullptr;
                    std::cerr << "instance is not solvable; no witness" << std::endl;
                    rep.emit(kNegative);
                    return kNegative;
                }
                if (r_gadget == "star")
                    witness = qrd::star_witness(inst, *cover);
                else if (r_gadget == "comb")
                    witness = qrd::comb_witness(inst, *cover);
                else if (r_gadget == "split")
                    witness = qrd::split_witness(inst, *cover);
                else
                    throw std::invalid_argument("the planar incidence gadget has no witness labeling");
                rep.result["witness"] = labeling_json(*witness);
                rep.result["cover"] = *cover;
            }
            if (!r_out.empty()) {
                write_file(r_out + ".graph.txt", qrd::serialize_graph(gg.graph));
                write_file(r_out + ".json", gadget_json(gg).dump(2) + "\n");
                if (witness) write_file(r_out + ".witness.txt", qrd::format_labeling(*witness));
                rep.result["prefix"] = r_out;
            } else {
                rep.result["graph"] = qrd::serialize_graph(gg.graph);
            }
            rep.emit(kOk);
            return kOk;
        }

        if (*fam_cmd) {
            rep.command = "family";
            qrd::FamilyGraph fam;
            std::string out_prefix;
            if (*fam_f) {
                auto h = qrd::generate(qrd::GraphKind::complete, {1});
                auto gp = qrd::generate(qrd::GraphKind::complete, {2});
                fam = qrd::build_family_f(ff_t, h, gp, 0);
                rep.result["family"] = "f";
                rep.result["witness"] = labeling_json(fam.witness);
                out_prefix = ff_out;
            } else {
                qrd::Graph base = fp_graph.empty() ? qrd::generate(qrd::GraphKind::complete, {2})
                                                   : load_graph(rep, fp_graph);
                fam = qrd::build_family_fprime(base, fp_r);
                rep.result["family"] = "fprime";
                out_prefix = fp_out;
            }
            rep.result["n"] = fam.graph.n();
            rep.result["m"] = fam.graph.m();
            rep.result["roles"] = json::object();
            for (const auto& [name, v] : fam.roles) rep.result["roles"][name] = v;
            if (!out_prefix.empty()) {
                write_file(out_prefix + ".graph.txt", qrd::serialize_graph(fam.graph));
                write_file(out_prefix + ".json", rep.result.dump(2) + "\n");
                rep.result["prefix"] = out_prefix;
            } else {
                rep.result["graph"] = qrd::serialize_graph(fam.graph);
            }
            rep.emit(kOk);
            return kOk;
        }

        if (*ilp_cmd) {
            rep.command = "ilp";
            qrd::Graph g = load_graph(rep, i_graph);
            auto model = qrd::build_model(g);
            std::string lp = qrd::emit_lp(model);
            if (i_out.empty()) {
                std::cout << lp;  // raw LP, no JSON report
                return kOk;
            }
            write_file(i_out, lp);
            rep.result["path"] = i_out;
            rep.result["variables"] = model.num_vars();
            rep.result["constraints"] = model.constraints.size();
            rep.emit(kOk);
            return kOk;
        }
    } catch (const qrd::parse_error& e) {
        std::cerr << "input error: " << e.what() << std::endl;
        return kInputError;
    } catch (const qrd::budget_error& e) {
        std::cerr << "budget error: " << e.what() << std::endl;
        return kBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition violated: " << e.what() << std::endl;
        return kPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kInputError;
    }
    return kInputError;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
