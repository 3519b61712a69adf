// Batch front door: loads JSON fixtures, runs constructions and verdicts,
// and prints one machine-readable report per invocation. Exit codes: 0 on
// success, 1 when a verdict fails, 2 on input or budget errors.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "coxcover/json_io.hpp"

using namespace coxcover;

namespace {

// FNV-1a content digest of an input file, echoed in every report.
std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return "missing";
    std::uint64_t h = 1469598103934665603ull;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << "fnv1a:" << std::hex << h;
    return out.str();
}

struct Report {
    Json doc;
    int exit_code = 0;

    Report(const std::string& command) { doc["command"] = command; }

    void input(const std::string& name, const std::string& path) {
        doc["inputs"][name] = file_digest(path);
    }
};

std::vector<std::string> split_letters(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

Json verdict_json(bool pass, const std::string& axiom, const std::string& detail) {
    Json v;
    v["pass"] = pass;
    if (!pass) {
        v["axiom"] = axiom;
        v["counterexample"] = detail;
    }
    return v;
}

int fail(const char* code, const std::string& message) {
    Json err;
    err["error"]["code"] = code;
    err["error"]["message"] = message;
    std::cerr << err.dump() << std::endl;
    return 2;
}

int emit(Report& report, const std::chrono::steady_clock::time_point& start) {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    std::cout << report.doc.dump() << std::endl;
    std::cerr << "elapsed_ms=" << elapsed << std::endl;
    return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with Coxeter systems, buildings and covers"};
    app.require_subcommand(1);

    std::string input, building_path, word_csv, subset_csv, base_id;
    int radius = 2, interior = -1, degree = 0;
    long long budget_steps = 1000000;
    bool use_nerve = false, use_simplex = false;
    int gallery_bound = 4;

    auto* cox = app.add_subcommand("coxeter", "Coxeter matrix operations");
    auto* cox_reduce = cox->add_subcommand("reduce", "canonical reduced word");
    cox_reduce->add_option("--input", input)->required();
    cox_reduce->add_option("--word", word_csv)->required();
    cox_reduce->add_option("--budget", budget_steps);
    auto* cox_spherical = cox->add_subcommand("spherical", "poset of spherical subsets");
    cox_spherical->add_option("--input", input)->required();
    cox_spherical->add_option("--subset", subset_csv);
    auto* cox_nerve = cox->add_subcommand("nerve", "nerve complex");
    cox_nerve->add_option("--input", input)->required();

    auto* bld = app.add_subcommand("building", "building operations");
    auto* bld_verify = bld->add_subcommand("verify", "check the Weyl distance axioms");
    bld_verify->add_option("--input", input)->required();
    bld_verify->add_option("--gallery-bound", gallery_bound);
    auto* bld_ball = bld->add_subcommand("ball", "combinatorial ball");
    bld_ball->add_option("--input", input)->required();
    bld_ball->add_option("--base", base_id);
    bld_ball->add_option("--radius", radius);
    auto* bld_realize = bld->add_subcommand("realize", "simplicial realization");
    bld_realize->add_option("--input", input)->required();
    bld_realize->add_flag("--nerve", use_nerve);
    bld_realize->add_flag("--simplex", use_simplex);

    auto* cov = app.add_subcommand("cover", "covering construction");
    auto* cov_build = cov->add_subcommand("build", "ball of the covered building");
    cov_build->add_option("--input", input)->required();
    cov_build->add_option("--building", building_path)->required();
    cov_build->add_option("--radius", radius);
    cov_build->add_option("--base", base_id);
    cov_build->add_option("--budget", budget_steps);
    auto* cov_verify = cov->add_subcommand("verify", "axioms on the covered ball");
    cov_verify->add_option("--input", input)->required();
    cov_verify->add_option("--building", building_path)->required();
    cov_verify->add_option("--radius", radius);
    cov_verify->add_option("--interior", interior);
    cov_verify->add_option("--base", base_id);
    auto* cov_flag = cov->add_subcommand("flag", "flag condition and nerve identity");
    cov_flag->add_option("--input", input)->required();

    auto* prod = app.add_subcommand("product", "partial products");
    auto* prod_assemble = prod->add_subcommand("assemble", "assembled Coxeter matrix");
    prod_assemble->add_option("--input", input)->required();
    auto* prod_nerve = prod->add_subcommand("nerve", "nerve of the assembled system");
    prod_nerve->add_option("--input", input)->required();
    auto* prod_cover = prod->add_subcommand("cover", "cover of the product building");
    prod_cover->add_option("--input", input)->required();
    prod_cover->add_option("--buildings", building_path, "comma-separated building files")
        ->required();
    prod_cover->add_option("--radius", radius);
    prod_cover->add_option("--base", base_id);

    auto* hom = app.add_subcommand("homology", "integer homology");
    auto* hom_compute = hom->add_subcommand("compute", "reduced homology report");
    hom_compute->add_option("--input", input)->required();
    auto* hom_punctured = hom->add_subcommand("punctured", "punctured concentration check");
    hom_punctured->add_option("--input", input)->required();
    hom_punctured->add_option("--degree", degree)->required();

    CLI11_PARSE(app, argc, argv);
    auto start = std::chrono::steady_clock::now();

    std::ostringstream cmdline;
    for (int i = 1; i < argc; ++i) cmdline << (i > 1 ? " " : "") << argv[i];
    Report report(cmdline.str());

    try {
        if (cox_reduce->parsed()) {
            report.input("matrix", input);
            CoxeterMatrix M = coxeter_from_json(load_json_file(input));
            RewriteBudget budget{budget_steps};
            Word w = word_from_labels(split_letters(word_csv), M);
            Word reduced = tits_reduce(w, M, budget);
            report.doc["result"]["reduced"] = word_labels(reduced, M);
            report.doc["result"]["length"] = reduced.size();
        } else if (cox_spherical->parsed()) {
            report.input("matrix", input);
            CoxeterMatrix M = coxeter_from_json(load_json_file(input));
            if (!subset_csv.empty()) {
                Word T = word_from_labels(split_letters(subset_csv), M);
                report.doc["result"]["spherical"] =
                    is_spherical(std::vector<int>(T.begin(), T.end()), M);
            } else {
                SphericalPoset sp = spherical_poset(M);
                Json subsets = Json::array();
                for (std::uint64_t mask : sp.subsets()) {
                    Json set = Json::array();
                    for (int s = 0; s < M.rank(); ++s)
                        if (mask & (std::uint64_t{1} << s)) set.push_back(M.label(s));
                    subsets.push_back(set);
                }
                report.doc["counts"]["spherical_subsets"] = sp.size();
                report.doc["result"]["subsets"] = subsets;
            }
        } else if (cox_nerve->parsed()) {
            report.input("matrix", input);
            CoxeterMatrix M = coxeter_from_json(load_json_file(input));
            SimplicialComplex L = nerve(M);
            report.doc["counts"]["f_vector"] = L.f_vector();
            report.doc["result"]["complex"] = complex_to_json(L);
        } else if (bld_verify->parsed()) {
            report.input("building", input);
            Building B = building_from_json(load_json_file(input));
            BuildingVerdict v = verify_building(B, gallery_bound);
            report.doc["counts"]["chambers"] = B.num_chambers();
            report.doc["verdict"] = verdict_json(v.pass, v.axiom, v.detail);
            if (!v.pass) report.exit_code = 1;
        } else if (bld_ball->parsed()) {
            report.input("building", input);
            Building B = building_from_json(load_json_file(input));
            int base = base_id.empty() ? 0 : B.system().chamber_index(base_id);
            if (base < 0) throw json_format_error("unknown base chamber " + base_id);
            std::vector<int> members = ball(B, base, radius);
            Json ids = Json::array();
            for (int c : members) ids.push_back(B.system().chamber_id(c));
            report.doc["counts"]["chambers"] = members.size();
            report.doc["result"]["ball"] = ids;
        } else if (bld_realize->parsed()) {
            report.input("building", input);
            Building B = building_from_json(load_json_file(input));
            if (use_nerve == use_simplex)
                throw json_format_error("choose exactly one of --nerve / --simplex");
            SimplicialComplex L(B.coxeter().generators());
            if (use_simplex) {
                std::vector<int> all;
                for (int s = 0; s < B.coxeter().rank(); ++s) all.push_back(s);
                L.add_face_closure(all);
            } else {
                L = nerve(B.coxeter());
            }
            SimplicialComplex R = realize(B, L);
            report.doc["counts"]["f_vector"] = R.f_vector();
            report.doc["result"]["complex"] = complex_to_json(R);
            report.doc["result"]["homology"] = homology_to_json(reduced_homology(R));
        } else if (cov_build->parsed() || cov_verify->parsed()) {
            report.input("folding", input);
            report.input("building", building_path);
            FoldingData fd = folding_from_json(load_json_file(input));
            Building B = building_from_json(load_json_file(building_path));
            int base = base_id.empty() ? 0 : B.system().chamber_index(base_id);
            if (base < 0) throw json_format_error("unknown base chamber " + base_id);
            CoveredBall b = build_ball(fd, B, base, radius,
                                       static_cast<std::size_t>(budget_steps));
            report.doc["counts"]["classes"] = b.num_classes();
            report.doc["counts"]["spheres"] = b.sphere_sizes();
            if (cov_build->parsed()) {
                report.doc["result"]["ball"] = ball_to_json(b);
            } else {
                int k = interior < 0 ? radius - 1 : interior;
                CoverVerdict v = verify_cover(b, k);
                report.doc["verdict"] = verdict_json(v.pass, v.check, v.detail);
                if (!v.pass) report.exit_code = 1;
            }
        } else if (cov_flag->parsed()) {
            report.input("folding", input);
            FoldingData fd = folding_from_json(load_json_file(input));
            FlagNerveReport r = flag_nerve_check(fd);
            report.doc["result"]["flag"] = r.is_flag;
            if (r.is_flag)
                report.doc["result"]["nerve_matches"] = r.nerve_matches;
            else
                report.doc["result"]["missing_simplex"] = r.missing_clique;
            if (!r.is_flag) report.exit_code = 1;
        } else if (prod_assemble->parsed() || prod_nerve->parsed()) {
            report.input("spec", input);
            ParsedProduct p = product_from_json(load_json_file(input));
            report.doc["result"]["kind"] = p.kind;
            if (prod_assemble->parsed()) {
                report.doc["result"]["coxeter"] = coxeter_to_json(p.assembled);
            } else {
                SimplicialComplex L = nerve(p.assembled);
                report.doc["counts"]["f_vector"] = L.f_vector();
                report.doc["result"]["complex"] = complex_to_json(L);
            }
        } else if (prod_cover->parsed()) {
            report.input("spec", input);
            ParsedProduct p = product_from_json(load_json_file(input));
            std::vector<Building> buildings;
            for (const std::string& path : split_letters(building_path)) {
                report.input("building:" + path, path);
                buildings.push_back(building_from_json(load_json_file(path)));
            }
            Building cprime = product_building(buildings);
            int base = base_id.empty() ? 0 : cprime.system().chamber_index(base_id);
            if (base < 0) throw json_format_error("unknown base chamber " + base_id);
            CoveredBall b = product_cover_pipeline(p.assembled, buildings, base, radius);
            report.doc["counts"]["classes"] = b.num_classes();
            report.doc["counts"]["spheres"] = b.sphere_sizes();
            report.doc["result"]["ball"] = ball_to_json(b);
        } else if (hom_compute->parsed()) {
            report.input("complex", input);
            SimplicialComplex L = complex_from_json(load_json_file(input));
            HomologyReport h = reduced_homology(L);
            report.doc["counts"]["f_vector"] = L.f_vector();
            report.doc["result"]["homology"] = homology_to_json(h);
        } else if (hom_punctured->parsed()) {
            report.input("complex", input);
            SimplicialComplex L = complex_from_json(load_json_file(input));
            PuncturedReport r = punctured_check(L, degree);
            report.doc["result"]["ph"] = r.ok;
            Json witnesses = Json::array();
            for (const auto& w : r.witnesses) {
                Json entry;
                Json face = Json::array();
                for (int v : w.face) face.push_back(L.vertex_label(v));
                entry["face"] = face;
                entry["degrees"] = w.bad_degrees;
                witnesses.push_back(entry);
            }
            report.doc["result"]["witnesses"] = witnesses;
            if (!r.ok) report.exit_code = 1;
        }
    } catch (const json_format_error& e) {
        return fail("invalid-json", e.what());
    } catch (const invalid_folding_error& e) {
        return fail("invalid-folding", e.what());
    } catch (const budget_exhausted_error& e) {
        return fail("budget-exhausted", e.what());
    } catch (const group_too_large_error& e) {
        return fail("group-too-large", e.what());
    } catch (const std::exception& e) {
        return fail("invalid-argument", e.what());
    }

    return emit(report, start);
}
