// coxhull: batch verification and exploration of convex hulls in the weak
// order of Coxeter groups. Machine-readable JSON goes to stdout (and --out);
// human-readable summaries go to stderr. Exit codes: 0 = verified / good,
// 2 = counterexample found, 1 = usage or input error.

#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coxhull/convexity.hpp"
#include "coxhull/graphical.hpp"
#include "coxhull/group_table.hpp"
#include "coxhull/report.hpp"
#include "coxhull/right_angled.hpp"
#include "coxhull/type_a.hpp"
#include "coxhull/type_b.hpp"

namespace {

using nlohmann::ordered_json;

constexpr uint64_t kDefaultSeed = 12345;

void emit(const ordered_json& j, const std::string& out_path) {
    std::cout << j.dump(2) << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write report file: " + out_path);
        out << j.dump(2) << "\n";
    }
}

const std::vector<std::string> kVerifyTypes = {"A2", "A3", "A4", "A5", "B2",
                                               "B3", "D4", "F4", "G2", "H3"};

coxhull::CoxeterMatrix resolve_matrix(const std::string& type_label, const std::string& matrix_path,
                                      bool unsafe) {
    if (!type_label.empty() && !matrix_path.empty())
        throw CLI::ValidationError("give either --type or --matrix, not both");
    if (!type_label.empty()) {
        if (!unsafe && std::find(kVerifyTypes.begin(), kVerifyTypes.end(), type_label) ==
                           kVerifyTypes.end())
            throw CLI::ValidationError("type " + type_label +
                                       " is outside the default list (use --unsafe to allow)");
        return coxhull::CoxeterMatrix::from_type(type_label);
    }
    if (!matrix_path.empty()) return coxhull::CoxeterMatrix::load_file(matrix_path);
    throw CLI::ValidationError("one of --type or --matrix is required");
}

int run_verify_finite(const std::string& type_label, const std::string& matrix_path, bool weak,
                      int jobs, int max_roots, bool unsafe, const std::string& out_path) {
    if (max_roots > 200 && !unsafe)
        throw CLI::ValidationError("--max-roots above 200 requires --unsafe");
    auto M = resolve_matrix(type_label, matrix_path, unsafe);
    coxhull::GroupTable G(coxhull::build_root_system(M, max_roots));
    auto namer = [&G](uint32_t e) { return coxhull::format_word(G.word(e)); };
    std::string label = !type_label.empty() ? type_label : "matrix:" + matrix_path;
    std::string scope = (weak ? "hull-property " : "strong-hull ") + label;
    coxhull::HullReport rep = weak ? coxhull::check_hull_property(G, scope, jobs, namer)
                                   : coxhull::check_strong_hull(G, scope, jobs, namer);
    emit(coxhull::to_json(rep), out_path);
    std::cerr << scope << ": " << (rep.holds ? "holds" : "VIOLATED") << " (" << G.size()
              << " elements, " << rep.pairs_checked << " pairs, " << rep.elapsed_ms << " ms)\n";
    return rep.holds ? 0 : 2;
}

int run_verify_ra(const std::string& matrix_path, int max_length, uint64_t pairs, uint64_t seed,
                  bool exhaustive, bool unsafe, const std::string& out_path) {
    if (max_length > 8 && !unsafe)
        throw CLI::ValidationError("--max-length above 8 requires --unsafe");
    coxhull::RAGroup W(coxhull::CoxeterMatrix::load_file(matrix_path));
    auto ball = W.ball(max_length);

    auto t0 = std::chrono::steady_clock::now();
    coxhull::HullReport rep;
    rep.scope = "strong-hull-ra matrix:" + matrix_path;
    auto check_pair = [&](const coxhull::RAWord& u, const coxhull::RAWord& v) {
        auto r = W.injection_check(u, v);
        if (r.injective && r.components_in_intervals && r.domain_size <= r.codomain_bound)
            return true;
        rep.holds = false;
        rep.witness = coxhull::HullWitness{
            u.str(), "e", v.str(),
            {uint64_t(W.hull({W.identity(), u}).size()),
             uint64_t(W.hull({W.identity(), v}).size()), r.domain_size}};
        return false;
    };

    if (exhaustive) {
        for (const auto& u : ball) {
            for (const auto& v : ball) {
                ++rep.pairs_checked;
                if (!check_pair(u, v)) break;
            }
            if (!rep.holds) break;
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<size_t> pick(0, ball.size() - 1);
        for (uint64_t i = 0; i < pairs && rep.holds; ++i) {
            ++rep.pairs_checked;
            check_pair(ball[pick(rng)], ball[pick(rng)]);
        }
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    emit(coxhull::to_json(rep), out_path);
    std::cerr << rep.scope << ": " << (rep.holds ? "holds" : "VIOLATED") << " ("
              << ball.size() << " elements of length <= " << max_length << ", "
              << rep.pairs_checked << " pairs)\n";
    return rep.holds ? 0 : 2;
}

int run_hull(const std::string& type_label, const std::string& matrix_path,
             const std::vector<std::string>& words, const std::vector<std::string>& perms,
             bool unsafe, const std::string& out_path) {
    ordered_json j;
    bool right_angled_backend =
        type_label.empty() && !matrix_path.empty() &&
        coxhull::CoxeterMatrix::load_file(matrix_path).is_right_angled();
    if (!right_angled_backend) {
        // Finite backend via the named type (or finite-type matrix).
        auto M = resolve_matrix(type_label, matrix_path, unsafe);
        coxhull::GroupTable G(coxhull::build_root_system(M));
        std::vector<uint32_t> gens;
        for (const auto& s : words) gens.push_back(G.element_of(coxhull::parse_word(s)));
        for (const auto& s : perms) {
            // One-line permutations address type A backends.
            auto p = coxhull::Permutation::parse(s);
            gens.push_back(G.element_of(coxhull::reduced_word(p)));
        }
        if (gens.empty()) throw CLI::ValidationError("give at least one --word or --perm");
        auto h = coxhull::hull(G, gens);
        j["backend"] = !type_label.empty() ? type_label : "matrix:" + matrix_path;
        j["generators"] = ordered_json::array();
        for (uint32_t g : gens) j["generators"].push_back(coxhull::format_word(G.word(g)));
        j["count"] = h.members.size();
        j["members"] = ordered_json::array();
        for (uint32_t m : h.members) j["members"].push_back(coxhull::format_word(G.word(m)));
    } else {
        coxhull::RAGroup W(coxhull::CoxeterMatrix::load_file(matrix_path));
        std::vector<coxhull::RAWord> gens;
        for (const auto& s : words) gens.push_back(W.normal_form(coxhull::parse_word(s)));
        if (gens.empty()) throw CLI::ValidationError("give at least one --word");
        auto members = W.hull(gens);
        j["backend"] = "matrix:" + matrix_path;
        j["generators"] = ordered_json::array();
        for (const auto& g : gens) j["generators"].push_back(g.str());
        j["count"] = members.size();
        j["members"] = ordered_json::array();
        for (const auto& m : members) j["members"].push_back(m.str());
    }
    emit(j, out_path);
    std::cerr << "hull has " << j["count"] << " members\n";
    return 0;
}

int run_insert(const std::string& poset_path, const std::string& perm,
               const std::string& out_path) {
    auto P = coxhull::Poset::load_file(poset_path);
    auto w = coxhull::Permutation::parse(perm);
    auto lam = coxhull::insert(P, w);
    ordered_json j;
    j["poset"] = poset_path;
    j["w"] = w.str();
    j["values"] = lam.values;
    j["pi"] = lam.pi().str();
    emit(j, out_path);
    std::cerr << "insert: pi = " << lam.pi().str() << "\n";
    return 0;
}

int run_insert_b(const std::string& poset_path, const std::string& perm, bool symmetrize,
                 const std::string& out_path) {
    auto P = coxhull::TypeBPoset::load_file(poset_path, symmetrize);
    auto w = coxhull::SignedPermutation::parse(perm);
    auto lam = coxhull::typeb_insert(P, w);
    ordered_json j;
    j["poset"] = poset_path;
    j["w"] = w.str();
    ordered_json vals;
    for (int label : P.labels()) vals[std::to_string(label)] = lam.values[P.idx(label)];
    j["values"] = vals;
    j["pi"] = lam.pi(P).str();
    emit(j, out_path);
    std::cerr << "insert-b: pi = " << lam.pi(P).str() << "\n";
    return 0;
}

int run_sidorenko(int n, const std::string& family, bool unsafe, const std::string& out_path) {
    ordered_json j;
    bool holds;
    if (family == "A") {
        if (n > 6 && !unsafe) throw CLI::ValidationError("--n above 6 requires --unsafe");
        auto rep = coxhull::sidorenko_check(n);
        j["family"] = "A";
        j["n"] = n;
        j["checked"] = rep.checked;
        j["min_ratio"] = rep.min_ratio;
        j["argmin"] = rep.argmin.str();
        j["verdict"] = rep.holds ? "holds" : "violated";
        holds = rep.holds;
    } else if (family == "B") {
        if (n > 3 && !unsafe) throw CLI::ValidationError("--n above 3 requires --unsafe for type B");
        auto rep = coxhull::typeb_sidorenko_check(n);
        j["family"] = "B";
        j["n"] = n;
        j["checked"] = rep.checked;
        j["min_ratio"] = rep.min_ratio;
        j["argmin"] = rep.argmin.str();
        j["verdict"] = rep.holds ? "holds" : "violated";
        holds = rep.holds;
    } else {
        throw CLI::ValidationError("--type must be A or B");
    }
    emit(j, out_path);
    std::cerr << "sidorenko " << family << " n=" << n << ": " << j["verdict"] << " (min ratio "
              << j["min_ratio"] << ")\n";
    return holds ? 0 : 2;
}

int run_graphical(const std::string& graph_path, bool classify, bool check, bool strong,
                  const std::string& out_path) {
    auto g = coxhull::SimpleGraph::load_file(graph_path);
    if (!classify && !check) classify = true;
    ordered_json j;
    j["graph"] = graph_path;
    bool counterexample = false;
    if (classify) {
        auto c = coxhull::classify_good(g);
        ordered_json cj;
        cj["good"] = c.good;
        cj["reason"] = c.reason;
        j["classification"] = cj;
        counterexample |= !c.good;
    } else {
        j["classification"] = nullptr;
    }
    if (check) {
        auto b = coxhull::make_ac_backend(g);
        auto namer = [&b](uint32_t i) {
            std::string s;
            for (size_t e = 0; e < b.graph.edges.size(); ++e)
                s += char('0' + ((b.orientations[i] >> e) & 1));
            return s;
        };
        std::string scope = std::string(strong ? "strong-hull " : "hull-property ") + "ac(" +
                            graph_path + ")";
        auto rep = strong ? coxhull::check_strong_hull_triples(b, scope, namer)
                          : coxhull::check_hull_property_triples(b, scope, namer);
        j["report"] = coxhull::to_json(rep);
        counterexample |= !rep.holds;
    } else {
        j["report"] = nullptr;
    }
    emit(j, out_path);
    std::cerr << "graphical " << graph_path << ": "
              << (counterexample ? "counterexample found" : "good") << "\n";
    return counterexample ? 2 : 0;
}

int run_iso_check(int n, const std::string& out_path) {
    bool ok = coxhull::ac_iso_check(n);
    ordered_json j;
    j["n"] = n;
    j["isomorphic"] = ok;
    emit(j, out_path);
    std::cerr << "iso-check n=" << n << ": " << (ok ? "isomorphic" : "NOT isomorphic") << "\n";
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"convex hulls in the weak order of Coxeter groups"};
    app.require_subcommand(1);

    std::string type_label, matrix_path, graph_path, poset_path, perm, out_path;
    std::string family = "A";
    std::vector<std::string> words, perms;
    bool weak = false, unsafe = false, exhaustive = false, symmetrize = false;
    bool classify = false, check = false, strong = false;
    int jobs = 0, n = 3, max_length = 4, max_roots = 200;
    uint64_t pairs = 200, seed = kDefaultSeed;

    auto* vf = app.add_subcommand("verify-finite",
                                  "sweep the strong (or weak) hull inequality over a finite group");
    vf->add_option("--type", type_label, "named type (A2..A5, B2, B3, D4, F4, G2, H3)");
    vf->add_option("--matrix", matrix_path, "Coxeter matrix JSON file of finite type");
    vf->add_flag("--weak", weak, "check the pairwise inequality instead of the strong one");
    vf->add_flag("--strong", [](int64_t) {}, "check the strong inequality (default)");
    vf->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    vf->add_option("--max-roots", max_roots, "root closure cap");
    vf->add_flag("--unsafe", unsafe, "lift the documented safety caps");
    vf->add_option("--out", out_path, "also write the JSON report here");

    auto* vr = app.add_subcommand("verify-ra",
                                  "check hull inequalities and meet injections in a right-angled group");
    vr->add_option("--matrix", matrix_path, "right-angled Coxeter matrix JSON file")->required();
    vr->add_option("--max-length", max_length, "word length bound for the sweep");
    vr->add_option("--pairs", pairs, "number of random pairs to sample");
    vr->add_option("--seed", seed, "random seed");
    vr->add_flag("--exhaustive", exhaustive, "check every pair in the ball instead of sampling");
    vr->add_flag("--unsafe", unsafe, "lift the documented safety caps");
    vr->add_option("--out", out_path, "also write the JSON report here");

    auto* hu = app.add_subcommand("hull", "convex hull of the given elements");
    hu->add_option("--type", type_label, "named finite type");
    hu->add_option("--matrix", matrix_path, "Coxeter matrix JSON file (finite or right-angled)");
    hu->add_option("--word", words, "element as a generator word, e.g. \"1 2 1\"")
        ->take_all()->allow_extra_args(false);
    hu->add_option("--perm", perms, "element as a one-line permutation (type A)")
        ->take_all()->allow_extra_args(false);
    hu->add_flag("--unsafe", unsafe, "lift the documented safety caps");
    hu->add_option("--out", out_path, "also write the JSON output here");

    auto* ins = app.add_subcommand("insert", "insertion map of a permutation into a poset");
    ins->add_option("--poset", poset_path, "poset JSON file")->required();
    ins->add_option("--perm", perm, "one-line permutation, e.g. 45312")->required();
    ins->add_option("--out", out_path, "also write the JSON output here");

    auto* insb = app.add_subcommand("insert-b",
                                    "type B insertion map of a signed permutation into a poset");
    insb->add_option("--poset", poset_path, "type B poset JSON file (signed labels)")->required();
    insb->add_option("--perm", perm, "signed one-line permutation, e.g. \"4 -2 1 3\"")->required();
    insb->add_flag("--symmetrize", symmetrize, "close the cover list under central symmetry");
    insb->add_option("--out", out_path, "also write the JSON output here");

    auto* sid = app.add_subcommand("sidorenko",
                                   "extension-count product sweep against the group order");
    sid->add_option("--n", n, "size parameter")->required();
    sid->add_option("--type", family, "A (default) or B");
    sid->add_flag("--unsafe", unsafe, "lift the documented safety caps");
    sid->add_option("--out", out_path, "also write the JSON output here");

    auto* gr = app.add_subcommand("graphical",
                                  "classify a graph and/or brute-force its orientation hulls");
    gr->add_option("--graph", graph_path, "graph file (\"u v\" lines or JSON)")->required();
    gr->add_flag("--classify", classify, "block-completeness classification");
    gr->add_flag("--check", check, "brute-force hull inequality over all orientation triples");
    gr->add_flag("--strong", strong, "use the strong inequality for --check");
    gr->add_option("--out", out_path, "also write the JSON output here");

    auto* iso = app.add_subcommand("iso-check",
                                   "verify the orientation/permutation bijection on a complete graph");
    iso->add_option("--n", n, "number of vertices (2..5)")->required();
    iso->add_option("--out", out_path, "also write the JSON output here");

    try {
        app.parse(argc, argv);
        if (vf->parsed())
            return run_verify_finite(type_label, matrix_path, weak, jobs, max_roots, unsafe,
                                     out_path);
        if (vr->parsed())
            return run_verify_ra(matrix_path, max_length, pairs, seed, exhaustive, unsafe,
                                 out_path);
        if (hu->parsed()) return run_hull(type_label, matrix_path, words, perms, unsafe, out_path);
        if (ins->parsed()) return run_insert(poset_path, perm, out_path);
        if (insb->parsed()) return run_insert_b(poset_path, perm, symmetrize, out_path);
        if (sid->parsed()) return run_sidorenko(n, family, unsafe, out_path);
        if (gr->parsed()) return run_graphical(graph_path, classify, check, strong, out_path);
        if (iso->parsed()) return run_iso_check(n, out_path);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
