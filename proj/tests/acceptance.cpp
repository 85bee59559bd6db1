// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "qrd/qrd.hpp"
#include "support.hpp"

namespace {

struct Criterion {
    int id;
    std::string summary;
    std::function<bool(std::string&)> run;
};

bool expect(bool cond, std::string& note, const std::string& msg) {
    if (!cond && note.empty()) note = msg;
    return cond;
}

// 1. gamma_4R(H) = 4n + gamma for 50 seeded connected graphs, n <= 6.
bool crit_pendant_identity(std::string& note) {
    qrd_test::Rng rng(1001);
    for (int trial = 0; trial < 50; ++trial) {
        qrd::Graph g = qrd_test::random_connected_graph(rng, 1 + rng.below(6));
        auto h = qrd::build_h_graph(g);
        int gamma = qrd::domination_number(g).optimum;
        int g4 = qrd::branch_and_bound_4r(h.graph).optimum;
        if (!expect(g4 == 4 * g.n() + gamma, note,
                    "trial " + std::to_string(trial) + ": got " + std::to_string(g4) +
                        ", expected " + std::to_string(4 * g.n() + gamma)))
            return false;
    }
    return true;
}

// 2. Connected threshold graphs have gamma_4R = 5.
bool crit_threshold(std::string& note) {
    qrd_test::Rng rng(2002);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + rng.below(11);
        qrd::Graph g = qrd_test::random_connected_threshold_graph(rng, n);
        auto cert = qrd::recognize_threshold(g);
        if (!expect(cert.has_value(), note, "recognition failed at trial " + std::to_string(trial)))
            return false;
        qrd::Labeling f = qrd::threshold_gamma4r(g, *cert);
        if (!expect(qrd::weight(f) == 5 && qrd::is_valid_4rdf(g, f), note,
                    "labeling invalid or not weight 5 at trial " + std::to_string(trial)))
            return false;
        if (g.n() <= 9 &&
            !expect(qrd::brute_force_4r(g).optimum == 5, note,
                    "brute force disagrees at trial " + std::to_string(trial)))
            return false;
    }
    return true;
}

// 3. 4*gamma + 1 <= gamma_4R <= 5*gamma on an EDS corpus; families F and F'
// attain the respective bounds.
bool crit_eds_bounds(std::string& note) {
    qrd_test::Rng rng(3003);
    int with_eds = 0;
    for (int trial = 0; trial < 150; ++trial) {
        qrd::Graph g = qrd_test::random_connected_graph(rng, 2 + rng.below(8));
        auto b = qrd::eds_bounds(g);
        if (!b) continue;
        ++with_eds;
        int opt = qrd::brute_force_4r(g).optimum;
        if (!expect(b->lower <= opt && opt <= b->upper, note,
                    "bounds violated on trial " + std::to_string(trial) + ": gamma=" +
                        std::to_string(b->gamma) + ", gamma_4R=" + std::to_string(opt)))
            return false;
    }
    if (!expect(with_eds >= 20, note, "corpus produced too few EDS graphs")) return false;

    auto fam = qrd::build_family_f(2, qrd::Graph::from_edges(1, {}),
                                   qrd::generate(qrd::GraphKind::complete, {2}), 0);
    int f_opt = qrd::branch_and_bound_4r(fam.graph).optimum;
    int f_gamma = qrd::domination_number(fam.graph).optimum;
    if (!expect(f_opt == 13 && f_opt == 4 * f_gamma + 1, note,
                "family F: gamma_4R=" + std::to_string(f_opt) + ", gamma=" + std::to_string(f_gamma)))
        return false;

    auto famp = qrd::build_family_fprime(qrd::generate(qrd::GraphKind::complete, {2}), 5);
    int p_opt = qrd::branch_and_bound_4r(famp.graph).optimum;
    int p_gamma = qrd::domination_number(famp.graph).optimum;
    return expect(p_opt == 10 && p_opt == 5 * p_gamma, note,
                  "family F': gamma_4R=" + std::to_string(p_opt) + ", gamma=" + std::to_string(p_gamma));
}

// 4. Split gadget threshold <=> ETC solvable, over >= 200 seeded instances.
bool crit_split_equivalence(std::string& note) {
    qrd_test::Rng rng(4004);
    int done = 0, solvable_seen = 0, unsolvable_seen = 0;
    while (done < 220) {
        int r = 1 + rng.below(2);
        int s = 1 + rng.below(6);
        qrd::EtcInstance inst;
        inst.r = r;
        while (inst.s() < s) {
            int a = rng.below(3 * r), b = rng.below(3 * r), c = rng.below(3 * r);
            if (a == b || a == c || b == c) continue;
            inst.sets.push_back({a, b, c});
        }
        ++done;
        bool solvable = qrd::solve_etc(inst).has_value();
        (solvable ? solvable_seen : unsolvable_seen)++;
        auto gg = qrd::build_split(inst);
        auto rep = qrd::branch_and_bound_4r(gg.graph);
        bool cheap = rep.optimum <= 5 * r;
        if (!expect(cheap == solvable, note,
                    "equivalence broken at instance " + std::to_string(done) + " (r=" +
                        std::to_string(r) + ", s=" + std::to_string(s) + ")"))
            return false;
        if (cheap) {
            auto cover = qrd::extract_cover_from_split(gg, rep.witness, inst);
            if (!expect(cover && qrd::is_exact_cover(inst, *cover), note,
                        "cover extraction failed at instance " + std::to_string(done)))
                return false;
        }
    }
    return expect(solvable_seen >= 20 && unsolvable_seen >= 20, note,
                  "corpus did not mix solvable and unsolvable instances");
}

// 5. Witness weights match the thresholds and structural certificates hold.
bool crit_witnesses(std::string& note) {
    qrd_test::Rng rng(5005);
    auto partition_instance = [&](int r, int extra) {
        qrd::EtcInstance inst;
        inst.r = r;
        for (int i = 0; i < r; ++i) inst.sets.push_back({3 * i, 3 * i + 1, 3 * i + 2});
        while (extra-- > 0) {
            int a = rng.below(3 * r), b = rng.below(3 * r), c = rng.below(3 * r);
            if (a == b || a == c || b == c) continue;
            inst.sets.push_back({a, b, c});
        }
        return inst;
    };

    for (int r = 1; r <= 3; ++r) {
        auto inst = partition_instance(r, r);
        auto cover = qrd::solve_etc(inst);
        if (!expect(cover.has_value(), note, "star corpus instance unexpectedly unsolvable"))
            return false;
        auto gg = qrd::build_star_convex(inst);
        auto w = qrd::star_witness(inst, *cover);
        if (!expect(qrd::weight(w) == 14 * r + 5 && qrd::is_valid_4rdf(gg.graph, w), note,
                    "star witness broken at r=" + std::to_string(r)))
            return false;
        if (!expect(qrd::check_tree_convexity(gg.graph, gg.convexity_part, *gg.convexity_tree),
                    note, "star convexity certificate failed at r=" + std::to_string(r)))
            return false;
    }
    for (int r = 4; r <= 5; ++r) {
        auto inst = partition_instance(r, 2);
        auto cover = qrd::solve_etc(inst);
        auto gg = qrd::build_comb_convex(inst);
        auto w = qrd::comb_witness(inst, *cover);
        if (!expect(qrd::weight(w) == 26 * r + 5 && qrd::is_valid_4rdf(gg.graph, w), note,
                    "comb witness broken at r=" + std::to_string(r)))
            return false;
        if (!expect(qrd::check_tree_convexity(gg.graph, gg.convexity_part, *gg.convexity_tree),
                    note, "comb convexity certificate failed at r=" + std::to_string(r)))
            return false;
    }
    for (int r = 1; r <= 3; ++r) {
        auto inst = partition_instance(r, r);
        auto cover = qrd::solve_etc(inst);
        auto gg = qrd::build_split(inst);
        auto w = qrd::split_witness(inst, *cover);
        if (!expect(qrd::weight(w) == 5 * r && qrd::is_valid_4rdf(gg.graph, w), note,
                    "split witness broken at r=" + std::to_string(r)))
            return false;
        std::vector<int> sets, elems;
        for (int j = 1; j <= inst.s(); ++j) sets.push_back(gg.roles.at("C" + std::to_string(j)));
        for (int i = 1; i <= 3 * r; ++i) elems.push_back(gg.roles.at("x" + std::to_string(i)));
        if (!expect(qrd::is_clique(gg.graph, sets) && qrd::is_independent_set(gg.graph, elems),
                    note, "split partition certificate failed at r=" + std::to_string(r)))
            return false;
    }
    return true;
}

// 6. Star gadget exact check at r=1 under a 10-minute budget; degrades to
// incumbent bounds on timeout.
bool crit_star_exact(std::string& note) {
    qrd::Budget budget{0, std::chrono::minutes(10)};

    qrd::EtcInstance solvable{1, {{{0, 1, 2}}}};
    auto gs = qrd::build_star_convex(solvable);
    auto rs = qrd::branch_and_bound_4r(gs.graph, budget);
    if (rs.status == qrd::SolveStatus::timeout) {
        note = "timeout on the solvable instance; incumbent " + std::to_string(rs.optimum);
        if (rs.optimum > 19) return false;
    } else if (!expect(rs.optimum == 19, note,
                       "solvable gadget optimum " + std::to_string(rs.optimum) + ", expected 19")) {
        return false;
    }

    qrd::EtcInstance unsolvable{1, {}};  // empty collection: no cover exists
    auto gu = qrd::build_star_convex(unsolvable);
    auto ru = qrd::branch_and_bound_4r(gu.graph, budget);
    if (ru.status == qrd::SolveStatus::timeout) {
        if (!note.empty()) note += "; ";
        note += "timeout on the unsolvable instance (degraded check only)";
        return true;
    }
    return expect(ru.optimum > 19, note,
                  "unsolvable gadget optimum " + std::to_string(ru.optimum) + ", expected > 19");
}

// 7. Greedy approximation stays within 5(1+ln(Delta+1)) of the optimum.
bool crit_approx_ratio(std::string& note) {
    qrd_test::Rng rng(7007);
    for (int trial = 0; trial < 200; ++trial) {
        qrd::Graph g = qrd_test::random_connected_graph(rng, 1 + rng.below(8));
        auto rep = qrd::qrd_approx(g);
        if (!expect(qrd::is_valid_4rdf(g, rep.labeling), note,
                    "approximation invalid at trial " + std::to_string(trial)))
            return false;
        int opt = qrd::brute_force_4r(g).optimum;
        double bound = rep.ratio_bound * static_cast<double>(opt) + 1e-9;
        if (!expect(static_cast<double>(rep.weight) <= bound, note,
                    "ratio exceeded at trial " + std::to_string(trial) + ": weight " +
                        std::to_string(rep.weight) + " vs bound " + std::to_string(bound)))
            return false;
    }
    return true;
}

// 8. ILP feasibility <=> verifier validity over every graph on <= 4
// vertices and every labeling; objective equals weight.
bool crit_ilp_sweep(std::string& note) {
    bool ok = true;
    for (int n = 1; n <= 4 && ok; ++n) {
        qrd_test::for_all_graphs(n, [&](const qrd::Graph& g) {
            if (!ok) return;
            auto m = qrd::build_model(g);
            qrd_test::for_all_labelings(g.n(), [&](const qrd::Labeling& f) {
                if (!ok) return;
                auto asg = qrd::encode_labeling(f);
                if (qrd::satisfies_all(m, asg) != qrd::is_valid_4rdf(g, f)) {
                    ok = expect(false, note, "feasibility mismatch on an n=" + std::to_string(g.n()) + " graph");
                }
                if (ok && qrd::objective_value(m, asg) != qrd::weight(f)) {
                    ok = expect(false, note, "objective mismatch on an n=" + std::to_string(g.n()) + " graph");
                }
            });
        });
    }
    return ok;
}

// 9. L-reduction inequalities on bounded-degree graphs.
bool crit_l_reduction(std::string& note) {
    qrd_test::Rng rng(9009);
    for (int trial = 0; trial < 50; ++trial) {
        qrd::Graph g = qrd_test::random_connected_maxdeg3(rng, 1 + rng.below(6));
        auto h = qrd::build_h_graph(g);
        int gamma = qrd::domination_number(g).optimum;
        int g4 = qrd::branch_and_bound_4r(h.graph).optimum;
        if (!expect(g4 == 4 * g.n() + gamma, note, "pendant identity failed at trial " + std::to_string(trial)))
            return false;
        if (!expect(g4 <= 17 * gamma, note,
                    "4n+gamma > 17 gamma at trial " + std::to_string(trial)))
            return false;
        for (int rep = 0; rep < 5; ++rep) {
            qrd::Labeling gl = qrd_test::random_valid_labeling(rng, h.graph);
            auto norm = qrd::normalize_pendant_labels(h, gl);
            auto t = qrd::extract_dominating_set(h, norm);
            if (!expect(static_cast<int>(t.size()) - gamma <= qrd::weight(gl) - g4, note,
                        "|T| - gamma exceeded the weight gap at trial " + std::to_string(trial)))
                return false;
        }
    }
    return true;
}

// 10. Branch and bound equals brute force: exhaustive n <= 5 plus 100
// seeded graphs on 6-7 vertices.
bool crit_oracle_agreement(std::string& note) {
    bool ok = true;
    for (int n = 1; n <= 5 && ok; ++n) {
        qrd_test::for_all_graphs(n, [&](const qrd::Graph& g) {
            if (!ok || !g.is_connected()) return;
            if (qrd::branch_and_bound_4r(g).optimum != qrd::brute_force_4r(g).optimum)
                ok = expect(false, note, "disagreement on an exhaustive n=" + std::to_string(g.n()) + " graph");
        });
    }
    if (!ok) return false;
    qrd_test::Rng rng(1010);
    for (int trial = 0; trial < 100; ++trial) {
        qrd::Graph g = qrd_test::random_connected_graph(rng, 6 + rng.below(2));
        if (!expect(qrd::branch_and_bound_4r(g).optimum == qrd::brute_force_4r(g).optimum, note,
                    "disagreement at seeded trial " + std::to_string(trial)))
            return false;
    }
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "pendant-graph identity gamma_4R(H) = 4n + gamma", crit_pendant_identity},
        {2, "connected threshold graphs have gamma_4R = 5", crit_threshold},
        {3, "efficient-domination bounds and extremal families", crit_eds_bounds},
        {4, "split gadget threshold equivalence with exact cover", crit_split_equivalence},
        {5, "gadget witness weights and structural certificates", crit_witnesses},
        {6, "star gadget exact optimum at r=1 (budgeted)", crit_star_exact},
        {7, "greedy approximation ratio 5(1+ln(Delta+1))", crit_approx_ratio},
        {8, "ILP feasibility matches the verifier exhaustively", crit_ilp_sweep},
        {9, "L-reduction inequalities on bounded-degree graphs", crit_l_reduction},
        {10, "branch-and-bound agrees with brute force", crit_oracle_agreement},
    };
    int failures = 0;
    for (auto& c : criteria) {
        std::string note;
        bool pass = false;
        try {
            pass = c.run(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        if (!pass) ++failures;
        std::printf("criterion %2d: %s - %s%s%s\n", c.id, pass ? "PASS" : "FAIL",
                    c.summary.c_str(), note.empty() ? "" : " | ", note.c_str());
        std::fflush(stdout);
    }
    return failures;
}
