// Acceptance suite: one line per criterion, exact expectations throughout.
// Exit code 0 only if every criterion passes.

#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coxcover/json_io.hpp"
#include "perm_oracle.hpp"

using namespace coxcover;

namespace {

int failures = 0;

void criterion(int n, const std::string& label, bool ok, const std::string& detail = "") {
    std::cout << "criterion " << n << " " << (ok ? "PASS" : "FAIL") << " - " << label;
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

std::string fixture(const std::string& name) {
    return std::string(COXCOVER_FIXTURES_DIR) + "/" + name;
}

std::vector<Word> all_words(int rank, int max_len) {
    std::vector<Word> words{Word{}};
    for (std::size_t i = 0; i < words.size(); ++i) {
        Word w = words[i];
        if (static_cast<int>(w.size()) >= max_len) continue;
        for (int s = 0; s < rank; ++s) {
            w.push_back(s);
            words.push_back(w);
            w.pop_back();
        }
    }
    return words;
}

// 1. Word problem: canonical-form equality agrees with the permutation
// model on every pair of words of length <= 6.
void criterion_word_problem() {
    struct Fixture {
        std::string name;
        CoxeterMatrix M;
        oracle::PermGroup G;
        std::size_t order;
    };
    std::vector<Fixture> fixtures;
    fixtures.push_back({"A1xA1", CoxeterMatrix({"s", "t"}, {{1, 2}, {2, 1}}),
                        oracle::elementary_abelian(2), 4});
    fixtures.push_back({"I2(3)", CoxeterMatrix({"s", "t"}, {{1, 3}, {3, 1}}),
                        oracle::dihedral(3), 6});
    fixtures.push_back({"I2(4)", CoxeterMatrix({"s", "t"}, {{1, 4}, {4, 1}}),
                        oracle::dihedral(4), 8});
    fixtures.push_back({"A3", CoxeterMatrix({"r", "s", "t"}, {{1, 3, 2}, {3, 1, 3}, {2, 3, 1}}),
                        oracle::symmetric(3), 24});

    bool ok = true;
    std::string detail;
    for (const auto& f : fixtures) {
        if (f.G.closure().size() != f.order) {
            ok = false;
            detail = f.name + ": oracle group has the wrong order";
            break;
        }
        std::vector<Word> words = all_words(f.M.rank(), 6);
        std::map<Word, int> canon_ids;
        std::map<oracle::Perm, int> perm_ids;
        std::vector<int> ci(words.size()), pi(words.size());
        for (std::size_t i = 0; i < words.size(); ++i) {
            ci[i] = canon_ids.emplace(tits_reduce(words[i], f.M),
                                      static_cast<int>(canon_ids.size()))
                        .first->second;
            pi[i] = perm_ids.emplace(f.G.eval(words[i]), static_cast<int>(perm_ids.size()))
                        .first->second;
        }
        long long mismatches = 0;
        for (std::size_t a = 0; a < words.size(); ++a)
            for (std::size_t b = a; b < words.size(); ++b)
                if ((ci[a] == ci[b]) != (pi[a] == pi[b])) ++mismatches;
        if (mismatches != 0) {
            ok = false;
            std::ostringstream msg;
            msg << f.name << ": " << mismatches << " disagreeing pairs";
            detail = msg.str();
            break;
        }
    }
    criterion(1, "word problem agrees with multiplication-table oracles", ok, detail);
}

// 2. Building axiom verdicts on the fixture buildings.
void criterion_building_axioms() {
    bool ok = true;
    std::string detail;
    auto expect_pass = [&](const Building& B, const std::string& name) {
        BuildingVerdict v = verify_building(B);
        if (!v.pass) {
            ok = false;
            detail = name + " failed " + v.axiom + ": " + v.detail;
        }
    };
    Building thin3 = building_from_json(load_json_file(fixture("thin_i2_3.json")));
    Building thin4 = building_from_json(load_json_file(fixture("thin_i2_4.json")));
    Building fano = building_from_json(load_json_file(fixture("fano.json")));
    expect_pass(thin3, "thin I2(3)");
    expect_pass(thin4, "thin I2(4)");
    expect_pass(fano, "Fano flags");
    if (fano.num_chambers() != 21) {
        ok = false;
        detail = "Fano building has the wrong size";
    }
    Building prod = product_building({thin3, thin3});
    if (prod.num_chambers() != 36) {
        ok = false;
        detail = "product building has the wrong size";
    }
    expect_pass(prod, "36-chamber product");

    BuildingVerdict bad = verify_building(
        building_from_json(load_json_file(fixture("corrupted_negative.json"))));
    if (bad.pass || bad.axiom != "WD2") {
        ok = false;
        detail = "corrupted fixture did not fail WD2 (got " + bad.axiom + ")";
    }
    criterion(2, "building axioms verified; corrupted control fails WD2", ok, detail);
}

// 3. Cover ball counts: 2n+1 for the edge-deleted hexagon, sphere sizes
// 2^{k+1} for the edge-deleted Fano building.
void criterion_ball_counts() {
    bool ok = true;
    std::string detail;
    FoldingData fd = folding_from_json(load_json_file(fixture("dinf_surgery.json")));
    Building thin3 = building_from_json(load_json_file(fixture("thin_i2_3.json")));
    CoveredBall tree = build_ball(fd, thin3, 0, 4);
    for (int r = 0; r <= 4; ++r)
        if (static_cast<int>(tree.ball_classes(r).size()) != 2 * r + 1) {
            ok = false;
            detail = "hexagon cover ball size at radius " + std::to_string(r);
        }
    Building fano = building_from_json(load_json_file(fixture("fano.json")));
    CoveredBall thick = build_ball(fd, fano, 0, 4);
    if (thick.sphere_sizes() != std::vector<long long>{1, 4, 8, 16, 32}) {
        ok = false;
        detail = "Fano cover sphere sizes";
    }
    criterion(3, "cover ball counts (1,3,5,7,9) and spheres (1,4,8,16,32)", ok, detail);
}

// 4. verify_cover on both covers at interior radius 3; identity surgery
// reproduces the downstairs buildings exactly.
void criterion_cover_verification() {
    bool ok = true;
    std::string detail;
    FoldingData fd = folding_from_json(load_json_file(fixture("dinf_surgery.json")));
    Building thin3 = building_from_json(load_json_file(fixture("thin_i2_3.json")));
    Building fano = building_from_json(load_json_file(fixture("fano.json")));

    CoverVerdict v1 = verify_cover(build_ball(fd, thin3, 0, 4), 3);
    if (!v1.pass) {
        ok = false;
        detail = "hexagon cover: " + v1.check + " " + v1.detail;
    }
    CoverVerdict v2 = verify_cover(build_ball(fd, fano, 0, 4), 3);
    if (!v2.pass) {
        ok = false;
        detail = "Fano cover: " + v2.check + " " + v2.detail;
    }

    FoldingData ident = folding_from_json(load_json_file(fixture("identity_surgery.json")));
    CoveredBall hex_ball = build_ball(ident, thin3, 0, 3);
    CoveredBall fano_ball = build_ball(ident, fano, 0, 3);
    std::set<int> hex_proj, fano_proj;
    for (int i = 0; i < hex_ball.num_classes(); ++i) hex_proj.insert(hex_ball.projection(i));
    for (int i = 0; i < fano_ball.num_classes(); ++i) fano_proj.insert(fano_ball.projection(i));
    if (hex_ball.num_classes() != 6 || hex_proj.size() != 6) {
        ok = false;
        detail = "identity surgery over the hexagon has " +
                 std::to_string(hex_ball.num_classes()) + " classes";
    }
    if (fano_ball.num_classes() != 21 || fano_proj.size() != 21) {
        ok = false;
        detail = "identity surgery over Fano has " + std::to_string(fano_ball.num_classes()) +
                 " classes";
    }
    criterion(4, "cover axioms verified at interior radius 3; identity surgery exact", ok, detail);
}

// 5. Flag condition and nerve identity.
void criterion_flag_nerve() {
    bool ok = true;
    std::string detail;
    FlagNerveReport square =
        flag_nerve_check(folding_from_json(load_json_file(fixture("fourcycle_surgery.json"))));
    if (!square.is_flag || !square.nerve_matches) {
        ok = false;
        detail = "4-cycle surgery";
    }
    FlagNerveReport hollow = flag_nerve_check(
        folding_from_json(load_json_file(fixture("hollow_triangle_surgery.json"))));
    if (hollow.is_flag || hollow.missing_clique != std::vector<std::string>{"a", "b", "c"}) {
        ok = false;
        detail = "hollow triangle witness";
    }
    criterion(5, "flag condition: 4-cycle nerve identity; hollow triangle witness", ok, detail);
}

// 6. Square product combinatorics: 3^n spherical subsets anti-isomorphic to
// the n-cube face poset; the nerve image fills O(1,V) for finite factors.
void criterion_square_product() {
    bool ok = true;
    std::string detail;
    for (int n : {2, 3}) {
        CoxeterMatrix factor =
            n == 2 ? CoxeterMatrix({"a", "b"}, {{1, 3}, {3, 1}})
                   : CoxeterMatrix({"a", "b", "c"}, {{1, 3, 2}, {3, 1, 3}, {2, 3, 1}});
        SquareSpec spec({factor, factor});
        CoxeterMatrix M = square_matrix(spec);
        SphericalPoset sp = spherical_poset(M);
        long long expect = 1;
        for (int i = 0; i < n; ++i) expect *= 3;
        if (static_cast<long long>(sp.size()) != expect) {
            ok = false;
            detail = "rank " + std::to_string(n) + " spherical count " +
                     std::to_string(sp.size());
        }
        // Anti-isomorphism with the cube face poset via fixed coordinates.
        auto cube_face = [&](std::uint64_t mask) {
            std::vector<int> fixed(n, -1);
            for (int g = 0; g < M.rank(); ++g)
                if (mask & (1ull << g)) fixed[spec.to_base(g / n, g % n)] = g / n;
            return fixed;
        };
        std::set<std::vector<int>> faces;
        for (std::uint64_t m : sp.subsets()) faces.insert(cube_face(m));
        if (faces.size() != sp.size()) {
            ok = false;
            detail = "cube face map is not injective";
        }
        for (std::uint64_t a : sp.subsets())
            for (std::uint64_t b : sp.subsets()) {
                bool subset = (a & b) == a;
                auto fa = cube_face(a), fb = cube_face(b);
                bool contains = true;
                for (int v = 0; v < n; ++v)
                    if (fa[v] != -1 && fa[v] != fb[v]) contains = false;
                if (subset != contains) {
                    ok = false;
                    detail = "cube order mismatch at rank " + std::to_string(n);
                }
            }
        // For finite equal-rank factors the square nerve fills the octahedral complex.
        SquareNerve sn = square_nerve(spec);
        if (!(sn.complex == octahedral_complex(1, factor.generators()))) {
            ok = false;
            detail = "square nerve does not fill O(1,V) at rank " + std::to_string(n);
        }
    }
    criterion(6, "square product: 3^n cube poset and nerve = O(1,V)", ok, detail);
}

// 7. Homology ranks and the punctured condition for octahedral complexes.
void criterion_homology() {
    bool ok = true;
    std::string detail;
    SimplicialComplex oct = complex_from_json(load_json_file(fixture("o_1_3.json")));
    HomologyReport h1 = reduced_homology(oct);
    for (const auto& e : h1.entries) {
        if (!e.torsion.empty()) ok = false;
        if (e.rank != (e.degree == 2 ? 1 : 0)) ok = false;
    }
    if (!ok) detail = "octahedron homology";

    SimplicialComplex k33 = complex_from_json(load_json_file(fixture("o_2_2.json")));
    HomologyReport h2 = reduced_homology(k33);
    for (const auto& e : h2.entries) {
        if (!e.torsion.empty()) ok = false;
        if (e.rank != (e.degree == 1 ? 4 : 0)) ok = false;
    }
    if (!ok && detail.empty()) detail = "K_{3,3} homology";

    for (int p = 1; p <= 2 && ok; ++p)
        for (int n = 1; n <= 3 && ok; ++n) {
            std::vector<std::string> V;
            for (int i = 0; i < n; ++i) V.push_back("v" + std::to_string(i));
            if (!punctured_check(octahedral_complex(p, V), n - 1).ok) {
                ok = false;
                detail = "punctured check p=" + std::to_string(p) + " n=" + std::to_string(n);
            }
        }
    criterion(7, "octahedral homology ranks and punctured concentration", ok, detail);
}

// 8. Non-simple-connectivity witnesses via beta_1 of the realizations.
void criterion_beta1() {
    bool ok = true;
    std::string detail;
    Building thin3 = building_from_json(load_json_file(fixture("thin_i2_3.json")));
    Building fano = building_from_json(load_json_file(fixture("fano.json")));
    SimplicialComplex two_points = SimplicialComplex::from_facets({"s", "t"}, {{0}, {1}});
    SimplicialComplex edge = SimplicialComplex::from_facets({"s", "t"}, {{0, 1}});

    long long b1_hex = realization_homology(thin3, two_points).rank(1);
    long long b1_fano = realization_homology(fano, two_points).rank(1);
    long long b1_hex_id = realization_homology(thin3, edge).rank(1);
    long long b1_fano_id = realization_homology(fano, edge).rank(1);
    if (b1_hex != 1 || b1_fano != 8 || b1_hex_id != 0 || b1_fano_id != 0) {
        ok = false;
        std::ostringstream msg;
        msg << "beta1 = " << b1_hex << "," << b1_fano << "," << b1_hex_id << "," << b1_fano_id;
        detail = msg.str();
    }
    criterion(8, "beta_1 witnesses: 1 and 8 for deleted edge, 0 for identity", ok, detail);
}

// 9. Join wedge counts: rank prod(k_i - 1) in degree n-1, contractible when
// some factor is a single point.
void criterion_join_wedges() {
    bool ok = true;
    std::string detail;
    std::vector<std::vector<int>> tuples;
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> t(n, 1);
        for (;;) {
            tuples.push_back(t);
            int i = n - 1;
            while (i >= 0 && t[i] == 3) t[i--] = 1;
            if (i < 0) break;
            ++t[i];
        }
    }
    for (const auto& t : tuples) {
        SimplicialComplex L;
        long long expected = 1;
        for (std::size_t i = 0; i < t.size(); ++i) {
            expected *= t[i] - 1;
            std::vector<std::string> labels;
            std::vector<std::vector<int>> facets;
            for (int k = 0; k < t[i]; ++k) {
                labels.push_back("f" + std::to_string(i) + "_" + std::to_string(k));
                facets.push_back({k});
            }
            SimplicialComplex pts = SimplicialComplex::from_facets(labels, facets);
            L = (i == 0) ? pts : join(L, pts);
        }
        HomologyReport h = reduced_homology(L);
        const int top = static_cast<int>(t.size()) - 1;
        for (const auto& e : h.entries) {
            if (!e.torsion.empty() || e.rank != (e.degree == top ? expected : 0)) {
                ok = false;
                std::ostringstream msg;
                msg << "join of sizes";
                for (int k : t) msg << " " << k;
                detail = msg.str();
            }
        }
    }
    criterion(9, "join wedge ranks prod(k_i - 1) in degree n-1", ok, detail);
}

}  // namespace

int main() {
    try {
        criterion_word_problem();
        criterion_building_axioms();
        criterion_ball_counts();
        criterion_cover_verification();
        criterion_flag_nerve();
        criterion_square_product();
        criterion_homology();
        criterion_beta1();
        criterion_join_wedges();
    } catch (const std::exception& e) {
        std::cout << "acceptance suite aborted: " << e.what() << std::endl;
        return 1;
    }
    if (failures == 0) {
        std::cout << "all criteria passed" << std::endl;
        return 0;
    }
    std::cout << failures << " criteria failed" << std::endl;
    return 1;
}
