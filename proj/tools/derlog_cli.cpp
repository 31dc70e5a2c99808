// derlog -- exact computations with logarithmic derivation modules of
// central hyperplane arrangements over Q.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "derlog/arrangement.hpp"
#include "derlog/derivations.hpp"
#include "derlog/errors.hpp"
#include "derlog/graphic.hpp"
#include "derlog/hypersolvable.hpp"
#include "derlog/lattice.hpp"
#include "derlog/restriction.hpp"

using json = nlohmann::ordered_json;
using namespace derlog;
namespace fs = std::filesystem;

namespace {

struct Options {
    int max_degree = -1;  // -1: use default cap
    bool emit_generators = false;
    bool crosscheck = false;
    bool derivations = false;
    long budget = 1000000;
    unsigned seed = 0;
    int verify_cap = 6;
    std::vector<std::string> hyperplanes;
};

json rat_vec_json(const RatVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_str(x));
    return a;
}

json int_vec_json(const std::vector<Integer>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

json derivation_json(const Derivation& th) {
    json vars = json::array();
    for (const auto& p : th.coeffs) {
        json terms = json::array();
        for (const auto& [m, c] : p.terms()) {
            json mj = json::array();
            for (auto e : m) mj.push_back(e);
            terms.push_back(json::array({mj, rat_str(c)}));
        }
        vars.push_back(terms);
    }
    return vars;
}

json sequence_json(const DegreeSequence& seq, const std::vector<GradedHistory>& hist,
                   bool emit_generators) {
    json out;
    out["degrees"] = seq.degrees;
    out["truncated"] = seq.truncated;
    out["cap"] = seq.cap;
    json h = json::array();
    for (const auto& g : hist)
        h.push_back({{"degree", g.degree},
                     {"dim", g.dim},
                     {"module_dim", g.dim_module},
                     {"new_generators", g.new_generators}});
    out["graded"] = h;
    if (emit_generators) {
        json gens = json::array();
        for (size_t i = 0; i < seq.generators.size(); ++i)
            gens.push_back({{"degree", seq.degrees[i]},
                            {"coeffs", derivation_json(seq.generators[i])},
                            {"text", seq.generators[i].str()}});
        out["generators"] = gens;
    }
    return out;
}

int cap_for(const Arrangement& a, const Options& o) {
    return o.max_degree >= 0 ? o.max_degree : default_degree_cap(a);
}

// ------------------------------------------------------------- subcommands

json run_lattice(const Arrangement& a, const Options&) {
    Lattice lat(a);
    json out;
    out["dim"] = a.ambient_dim();
    out["size"] = a.size();
    json flats = json::array();
    for (const auto& f : lat.flats()) {
        json fj;
        fj["codim"] = f.codim;
        fj["members"] = f.members;
        fj["moebius"] = f.moebius.get_str();
        json eq = json::array();
        for (const auto& row : f.equations) eq.push_back(rat_vec_json(row));
        fj["equations"] = eq;
        flats.push_back(fj);
    }
    out["flats"] = flats;
    out["codim2_count"] = static_cast<int>(lat.codim2_flats().size());
    return out;
}

json run_charpoly(const Arrangement& a, const Options&) {
    auto cp = char_poly(a);
    json out;
    out["coefficients"] = int_vec_json(cp);
    out["text"] = int_poly_str(cp);
    auto roots = integer_roots(cp);
    if (roots)
        out["integer_roots"] = int_vec_json(*roots);
    else
        out["integer_roots"] = nullptr;
    return out;
}

json run_derivations(const Arrangement& a, const Options& o) {
    DerivationModule mod(a);
    DegreeSequence seq = mod.degree_sequence(cap_for(a, o));
    if (seq.truncated)
        std::cerr << "warning: degree sequence truncated at cap " << seq.cap << "\n";
    return sequence_json(seq, mod.history(), o.emit_generators);
}

json run_freeness(const Arrangement& a, const Options& o) {
    DerivationModule mod(a);
    DegreeSequence seq = mod.degree_sequence(cap_for(a, o));
    json out;
    out["degrees"] = seq.degrees;
    out["essential"] = a.is_essential();
    if (!a.is_essential()) {
        out["free"] = nullptr;
        out["note"] = "freeness via Saito requires an essential arrangement";
        return out;
    }
    FreenessCertificate cert = is_free(a, seq);
    out["free"] = cert.free;
    if (cert.free) {
        out["exponents"] = cert.exponents;
        out["saito_scalar"] = rat_str(cert.scalar);
        out["saito_det"] = cert.saito_det.str();
        // Terao factorization must hold for a certified free arrangement
        auto roots = integer_roots(char_poly(a));
        std::vector<Integer> expect;
        for (int d : cert.exponents) expect.push_back(d);
        std::sort(expect.begin(), expect.end());
        if (!roots || *roots != expect)
            throw invariant_error("Terao factorization violated: chi(A) does not factor as "
                                  "prod (t - d_i) for a Saito-certified free arrangement");
        out["terao_factorization"] = true;
    } else {
        out["note"] = cert.note;
    }
    return out;
}

json run_tnumber(const Arrangement& a, const Options& o) {
    RestrictionReport rep = minimal_restriction(a);
    json out;
    out["t"] = rep.t_value;
    out["witness"] = rat_vec_json(rep.witness.coeffs());
    out["r"] = rep.r_value;
    out["weighted_r"] = rep.weighted_value;
    out["candidates"] = rep.candidates_tried;
    if (rep.r_value != rep.weighted_value)
        out["note"] = "a candidate contains a flat with 3 or more hyperplanes; the unweighted "
                      "count r differs from the weighted one that determines t";

    DerivationModule mod(a);
    DegreeSequence seq = mod.degree_sequence(cap_for(a, o));
    if (!seq.truncated) {
        UnequalReport uq = check_unequal(a, seq);
        out["restriction_inequality"] = {{"size", uq.size}, {"d_max", uq.d_max}, {"t", uq.t_value},
                       {"slack", uq.slack}, {"holds", uq.holds}, {"equality", uq.equality}};
        if (!uq.holds)
            throw invariant_error("t_A >= |A| - d_A violated");
        if (a.ambient_dim() == 3) {
            TwoPointsReport tp = check_two_points(a, seq);
            out["two_points"] = {{"hypothesis", tp.hypothesis}};
            if (tp.hypothesis) {
                out["two_points"]["flat1"] = tp.flat1;
                out["two_points"]["flat2"] = tp.flat2;
                out["two_points"]["t_is_two"] = tp.t_is_two;
                out["two_points"]["degree_bound_holds"] = tp.degree_bound_holds;
                if (!tp.t_is_two || !tp.degree_bound_holds)
                    throw invariant_error("two-points criterion violated: hypothesis holds but "
                                          "t != 2 or d_A < |A| - 2");
            }
        }
    } else {
        out["restriction_inequality"] = nullptr;
    }

    if (o.crosscheck) {
        // random hyperplanes must never beat the candidate minimum
        std::mt19937 rng(o.seed);
        std::uniform_int_distribution<int> coef(-5, 5);
        int samples = 1000, beaten = 0;
        for (int s = 0; s < samples; ++s) {
            RatVec v(a.ambient_dim());
            bool nz = false;
            for (auto& x : v) { x = coef(rng); nz = nz || x != 0; }
            if (!nz) continue;
            Hyperplane h(v);
            if (a.contains(h)) continue;
            if (a.restriction_size(h) < rep.t_value) ++beaten;
        }
        out["crosscheck"] = {{"samples", samples}, {"beaten", beaten}};
        if (beaten > 0)
            throw invariant_error("candidate search missed a better hyperplane");
    }
    return out;
}

json run_addition(const Arrangement& ap, const Options& o) {
    if (o.hyperplanes.empty())
        throw std::invalid_argument("addition: pass at least one --hyperplane \"c1 c2 ... cl\"");
    std::vector<Hyperplane> hs;
    for (const auto& s : o.hyperplanes) hs.push_back(Hyperplane::parse(s, ap.ambient_dim()));
    DerivationModule mod(ap);
    DegreeSequence seq = mod.degree_sequence(cap_for(ap, o));
    AdditionResult res = addition_generators(ap, hs, seq, o.verify_cap);
    json out;
    out["input_degrees"] = seq.degrees;
    out["degrees"] = res.degrees;
    json bs = json::array();
    for (const auto& b : res.b_polys) bs.push_back(b.str());
    out["b_polys"] = bs;
    out["verified"] = res.verified;
    json ver = json::array();
    for (const auto& v : res.verify)
        ver.push_back({{"degree", v.degree}, {"dim", v.dim}, {"generated", v.dim_module}});
    out["verify"] = ver;
    if (o.emit_generators) {
        json gens = json::array();
        for (const auto& g : res.generators)
            gens.push_back({{"degree", g.degree()}, {"text", g.str()}});
        out["generators"] = gens;
    }
    if (!res.verified)
        throw invariant_error("addition construction failed graded verification");
    return out;
}

json run_graph_analyze(const Graph& g, const Options& o) {
    json out;
    out["vertices"] = g.num_vertices();
    json ej = json::array();
    for (auto [u, v] : g.edges()) ej.push_back(json::array({u + 1, v + 1}));
    out["edges"] = ej;
    TriReport tri = tri_count(g);
    out["tri"] = tri.tri;
    if (tri.witness_edge)
        out["tri_witness"] = json::array({tri.witness_edge->first + 1, tri.witness_edge->second + 1});
    out["has_4cycle"] = tri.has_4cycle;
    out["t_formula"] = graphic_t(g);
    out["max_clique"] = g.max_clique();

    if (o.crosscheck) {
        GraphicCrosscheck cc = crosscheck_graphic_t(g);
        out["crosscheck"] = {{"search_t", cc.search_t}, {"agree", cc.agree}};
        if (!cc.agree) {
            out["crosscheck"]["note"] =
                "formula and candidate search disagree; a hyperplane through the flat of a "
                "triangle of G collapses three edges at once, a case the four-case formula "
                "does not cover";
            std::cerr << "warning: graphic t formula (" << cc.formula_t
                      << ") != general search (" << cc.search_t << ")\n";
        }
    }
    if (o.derivations) {
        Arrangement ag = graphic_arrangement(g);
        DerivationModule mod(ag);
        DegreeSequence seq = mod.degree_sequence(cap_for(ag, o));
        json sj = sequence_json(seq, mod.history(), o.emit_generators);
        out["derivations"] = sj;
        int zeros = 0;
        std::vector<int> positive;
        for (int d : seq.degrees) {
            if (d == 0) ++zeros;
            else positive.push_back(d);
        }
        out["zero_generators"] = zeros;   // one per dimension of the common center
        out["positive_degrees"] = positive;
        if (!seq.truncated && tri.tri > 0) {
            TriBoundReport tb = check_tri_bound(g, seq);
            out["tri_bound"] = {{"tri", tb.tri}, {"d_max", tb.d_max},
                                {"holds", tb.holds}, {"tight", tb.tight}};
            if (!tb.holds) throw invariant_error("d_{A_G} >= Tri(G) violated");
        }
    }
    return out;
}

json run_hyp_analyze(const Arrangement& a, const Options& o) {
    json out;
    FiltrationResult fr = find_filtration(a, o.budget);
    if (fr.status == FiltrationStatus::budget_exhausted) {
        out["hypersolvable"] = nullptr;
        out["note"] = "filtration search budget exhausted; verdict unknown";
        out["nodes"] = fr.nodes;
        return out;
    }
    if (fr.status == FiltrationStatus::not_hypersolvable) {
        out["hypersolvable"] = false;
        out["nodes"] = fr.nodes;
        return out;
    }
    out["hypersolvable"] = true;
    Hyperexponents hyp = hyperexponents(a, o.budget);
    json chain = json::array();
    for (const auto& level : hyp.filtration.chain) chain.push_back(level);
    out["filtration"] = chain;
    out["steps"] = hyp.filtration.steps;
    out["hyperexponents"] = hyp.values;
    out["independence_checked"] = hyp.independence_checked;

    // the solvable-step restriction identity at every step of the filtration
    bool lemma57 = true;
    for (size_t i = 0; i + 1 < hyp.filtration.chain.size(); ++i) {
        Arrangement upper = a.subset(hyp.filtration.chain[i + 1]);
        for (int idx : hyp.filtration.chain[i + 1]) {
            bool in_lower = false;
            for (int j : hyp.filtration.chain[i]) in_lower = in_lower || j == idx;
            if (in_lower) continue;
            if (upper.restriction_size(a[idx]) != static_cast<int>(hyp.filtration.chain[i].size()))
                lemma57 = false;
        }
    }
    out["restriction_identity"] = lemma57;
    if (!lemma57)
        throw invariant_error("|A^H| = |B| violated at a solvable filtration step");

    out["qp"] = int_vec_json(quadratic_poincare(a, QpMethod::filtration, o.budget));
    if (o.crosscheck && a.size() <= 12) {
        auto direct = quadratic_poincare(a, QpMethod::direct);
        out["qp_direct"] = int_vec_json(direct);
        bool agree = out["qp"] == out["qp_direct"];
        out["qp_agree"] = agree;
        if (!agree) throw invariant_error("QP product formula disagrees with the direct computation");
    }

    SupersolvableReport ss = supersolvable_exponents(a, o.budget);
    out["supersolvable"] = ss.supersolvable;
    if (ss.supersolvable) out["exponents"] = ss.exponents;

    DerivationModule mod(a);
    DegreeSequence seq = mod.degree_sequence(cap_for(a, o));
    if (!seq.truncated) {
        HypboundReport hb = check_hypbound(a, seq, o.budget);
        out["hypbound"] = {{"rho", hb.rho}, {"d", hb.d_full}, {"slack", hb.slack_full},
                           {"deleted_d", hb.d_deleted},
                           {"min_deleted_slack", hb.min_slack_deleted}, {"holds", hb.holds}};
        if (!hb.holds) throw invariant_error("hyperexponent lower bound violated");
    }
    return out;
}

// ------------------------------------------------------------------ corpus

json dispatch(const std::string& command, const std::string& input, const Options& o);

json run_corpus(const std::string& dir, const Options&) {
    json out;
    json cases = json::array();
    int failures = 0, errors = 0;
    std::vector<fs::path> files;
    if (fs::is_directory(dir))
        for (const auto& e : fs::directory_iterator(dir))
            if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
        std::cerr << "warning: corpus directory has no *.json cases\n";
    for (const auto& f : files) {
        std::string name = f.stem().string();
        json cj;
        cj["name"] = name;
        json spec;
        try {
            std::ifstream in(f);
            spec = json::parse(in);
            if (!spec.contains("command") || !spec.contains("input") || !spec.contains("output"))
                throw std::invalid_argument("missing command/input/output field");
        } catch (const std::exception& e) {
            cj["status"] = "corpus-error";
            cj["detail"] = std::string("bad expected file: ") + e.what();
            ++errors;
            cases.push_back(cj);
            continue;
        }
        try {
            Options co;
            if (spec.contains("flags")) {
                const auto& fl = spec["flags"];
                if (fl.contains("max_degree")) co.max_degree = fl["max_degree"];
                if (fl.contains("emit_generators")) co.emit_generators = fl["emit_generators"];
                if (fl.contains("crosscheck")) co.crosscheck = fl["crosscheck"];
                if (fl.contains("derivations")) co.derivations = fl["derivations"];
                if (fl.contains("budget")) co.budget = fl["budget"];
                if (fl.contains("verify_cap")) co.verify_cap = fl["verify_cap"];
                if (fl.contains("hyperplanes"))
                    for (const auto& s : fl["hyperplanes"]) co.hyperplanes.push_back(s);
            }
            fs::path ipath = f.parent_path() / spec["input"].get<std::string>();
            json got = dispatch(spec["command"], ipath.string(), co);
            if (got == spec["output"]) {
                cj["status"] = "pass";
            } else {
                cj["status"] = "fail";
                ++failures;
            }
        } catch (const std::exception& e) {
            cj["status"] = "fail";
            cj["detail"] = e.what();
            ++failures;
        }
        cases.push_back(cj);
    }
    out["cases"] = cases;
    out["failures"] = failures;
    out["corpus_errors"] = errors;
    out["total"] = static_cast<int>(files.size());
    return out;
}

json dispatch(const std::string& command, const std::string& input, const Options& o) {
    json out;
    out["schema"] = 1;
    out["command"] = command;
    json body;
    if (command == "lattice") body = run_lattice(Arrangement::parse_file(input), o);
    else if (command == "charpoly") body = run_charpoly(Arrangement::parse_file(input), o);
    else if (command == "derivations") body = run_derivations(Arrangement::parse_file(input), o);
    else if (command == "freeness") body = run_freeness(Arrangement::parse_file(input), o);
    else if (command == "tnumber") body = run_tnumber(Arrangement::parse_file(input), o);
    else if (command == "addition") body = run_addition(Arrangement::parse_file(input), o);
    else if (command == "graph-analyze") body = run_graph_analyze(Graph::parse_file(input), o);
    else if (command == "hyp-analyze") body = run_hyp_analyze(Arrangement::parse_file(input), o);
    else throw std::invalid_argument("unknown command: " + command);
    out.update(body);
    return out;
}

void print_text(const json& j) {
    for (const auto& [k, v] : j.items()) {
        if (k == "schema") continue;
        std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"derlog: derivation modules, restriction numbers, and hypersolvable "
                 "invariants of central hyperplane arrangements over Q"};
    app.require_subcommand(1);

    Options opt;
    bool as_json = false;
    std::string input;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "input file")->required();
        cmd->add_flag("--json", as_json, "emit JSON on stdout");
        cmd->add_option("--max-degree", opt.max_degree, "degree cap (default max(|A|, 2l))");
        cmd->add_option("--seed", opt.seed, "seed for randomized crosschecks");
        cmd->add_option("--budget", opt.budget, "node budget for the filtration search");
        cmd->add_flag("--emit-generators", opt.emit_generators, "include generator coefficients");
        cmd->add_flag("--crosscheck", opt.crosscheck, "enable brute-force oracles");
        return cmd;
    };

    add_common(app.add_subcommand("lattice", "intersection lattice and Moebius function"));
    add_common(app.add_subcommand("charpoly", "characteristic polynomial"));
    add_common(app.add_subcommand("derivations", "derivation degree sequence"));
    add_common(app.add_subcommand("freeness", "Saito freeness certificate"));
    add_common(app.add_subcommand("tnumber", "minimal restriction number"));
    auto* cadd = add_common(app.add_subcommand("addition", "generalized addition construction"));
    cadd->add_option("--hyperplane", opt.hyperplanes, "coefficients of a hyperplane to add");
    cadd->add_option("--verify-cap", opt.verify_cap, "graded verification degree cap");
    auto* cg = add_common(app.add_subcommand("graph-analyze", "graphic arrangement analysis"));
    cg->add_flag("--derivations", opt.derivations, "also compute the degree sequence");
    add_common(app.add_subcommand("hyp-analyze", "hypersolvable analysis"));
    add_common(app.add_subcommand("corpus", "run a regression corpus directory"));

    CLI11_PARSE(app, argc, argv);
    std::string cmd = app.get_subcommands().front()->get_name();

    try {
        json out;
        if (cmd == "corpus") {
            out["schema"] = 1;
            out["command"] = "corpus";
            json body = run_corpus(input, opt);
            out.update(body);
            if (as_json) {
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& c : out["cases"])
                    std::cout << (c["status"] == "pass" ? "PASS " : "FAIL ")
                              << c["name"].get<std::string>()
                              << (c.contains("detail") ? "  (" + c["detail"].get<std::string>() + ")" : "")
                              << "\n";
                std::cout << out["total"] << " cases, " << out["failures"] << " failures, "
                          << out["corpus_errors"] << " corpus errors\n";
            }
            int bad = out["failures"].get<int>() + out["corpus_errors"].get<int>();
            return bad > 0 ? 2 : 0;
        }
        out = dispatch(cmd, input, opt);
        if (as_json) std::cout << out.dump(2) << "\n";
        else print_text(out);
        return 0;
    } catch (const invariant_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
