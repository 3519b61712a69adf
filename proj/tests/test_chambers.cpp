#include "doctest.h"

#include <map>
#include <set>

#include "coxcover/chambers.hpp"

using namespace coxcover;

namespace {

CoxeterMatrix dihedral_matrix(int m) {
    return CoxeterMatrix({"s", "t"}, {{1, m}, {m, 1}});
}

// PG(2,2): lines through the difference set {1,2,4} mod 7.
std::vector<std::vector<int>> fano_lines() {
    std::vector<std::vector<int>> lines;
    for (int i = 0; i < 7; ++i) lines.push_back({(1 + i) % 7, (2 + i) % 7, (4 + i) % 7});
    return lines;
}

Building fano_building() {
    return Building::with_computed_delta(flag_system(fano_lines()), dihedral_matrix(3));
}

// All triangles of PG(2,2): three non-collinear points and their three
// joining lines support a hexagon of flags.
std::vector<std::vector<int>> fano_triangle_apartments(const Building& B) {
    auto lines = fano_lines();
    auto on_line = [&](int p, int l) {
        for (int q : lines[l])
            if (q == p) return true;
        return false;
    };
    auto line_through = [&](int p, int q) {
        for (int l = 0; l < 7; ++l)
            if (on_line(p, l) && on_line(q, l)) return l;
        return -1;
    };
    std::vector<std::vector<int>> apartments;
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
            for (int c = b + 1; c < 7; ++c) {
                int ab = line_through(a, b), bc = line_through(b, c), ca = line_through(c, a);
                if (on_line(c, ab)) continue;  // collinear triple
                std::vector<int> flags;
                for (auto [p, l] : {std::pair{a, ab}, {b, ab}, {b, bc}, {c, bc}, {c, ca}, {a, ca}})
                    flags.push_back(
                        B.system().chamber_index("p" + std::to_string(p) + "l" + std::to_string(l)));
                std::sort(flags.begin(), flags.end());
                apartments.push_back(flags);
            }
    return apartments;
}

}  // namespace

TEST_CASE("thin buildings") {
    Building hexagon = thin_building(dihedral_matrix(3));
    CHECK(hexagon.num_chambers() == 6);
    for (int s = 0; s < 2; ++s)
        for (int c = 0; c < 6; ++c) CHECK(hexagon.system().panel(s, c).size() == 2);

    CHECK(thin_building(CoxeterMatrix({"s"}, {{1}})).num_chambers() == 2);

    Building oct = thin_building(dihedral_matrix(4));
    CHECK(oct.num_chambers() == 8);
    int id = oct.system().chamber_index("1");
    int stst = oct.system().chamber_index("stst");
    REQUIRE(id >= 0);
    REQUIRE(stst >= 0);
    CHECK(oct.delta(id, stst).size() == 4);

    CHECK_THROWS_AS(thin_building(dihedral_matrix(0), 100), group_too_large_error);
}

TEST_CASE("verify_building accepts the fixture buildings") {
    for (int m : {3, 4}) CHECK(verify_building(thin_building(dihedral_matrix(m))).pass);
    CHECK(verify_building(thin_building(CoxeterMatrix({"s"}, {{1}}))).pass);
    CHECK(verify_building(thin_building(CoxeterMatrix({"s", "t"}, {{1, 2}, {2, 1}}))).pass);
    CHECK(verify_building(
              thin_building(CoxeterMatrix({"r", "s", "t"}, {{1, 3, 2}, {3, 1, 3}, {2, 3, 1}})))
              .pass);

    Building fano = fano_building();
    CHECK(fano.num_chambers() == 21);
    BuildingVerdict v = verify_building(fano);
    CAPTURE(v.axiom);
    CAPTURE(v.detail);
    CHECK(v.pass);
    // Thickness (3,3): every panel has exactly 3 chambers.
    for (int s = 0; s < 2; ++s)
        for (int c = 0; c < 21; ++c) CHECK(fano.system().panel(s, c).size() == 3);
}

TEST_CASE("verify_building rejects a thin panel") {
    // One generator, panels {a,b,c} and {d}: the lone panel breaks the
    // two-element condition.
    ChamberSystem system({"a", "b", "c", "d"}, {{{0, 1, 2}, {3}}});
    std::vector<std::vector<std::optional<Word>>> delta(4, std::vector<std::optional<Word>>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            delta[i][j] = (i == j) ? Word{} : Word{0};
    Building B = Building::with_delta(system, CoxeterMatrix({"s"}, {{1}}), delta);
    BuildingVerdict v = verify_building(B);
    CHECK(!v.pass);
    CHECK(v.axiom == "panel-size");
}

TEST_CASE("verify_building reports WD2 on a corrupted delta") {
    Building good = thin_building(dihedral_matrix(3));
    const int n = good.num_chambers();
    std::vector<std::vector<std::optional<Word>>> delta(n, std::vector<std::optional<Word>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) delta[i][j] = good.delta(i, j);
    // Swap two distance values from the identity chamber.
    int one = good.system().chamber_index("1");
    int st = good.system().chamber_index("st");
    int sts = good.system().chamber_index("sts");
    delta[one][st] = good.delta(one, sts);
    delta[one][sts] = good.delta(one, st);
    Building bad = Building::with_delta(good.system(), good.coxeter(), delta);
    BuildingVerdict v = verify_building(bad);
    CHECK(!v.pass);
    CHECK(v.axiom == "WD2");
}

TEST_CASE("residues") {
    Building fano = fano_building();
    int c = fano.system().chamber_index("p1l0");
    REQUIRE(c >= 0);
    CHECK(residue(fano.system(), c, {}) == std::vector<int>{c});
    CHECK(residue(fano.system(), c, {0, 1}).size() == 21);
    // Point panels: the three flags through the point.
    std::vector<int> through_point = residue(fano.system(), c, {0});
    CHECK(through_point.size() == 3);
    for (int x : through_point)
        CHECK(fano.system().chamber_id(x).substr(0, 2) == "p1");
}

TEST_CASE("balls") {
    Building hexagon = thin_building(dihedral_matrix(3));
    int base = hexagon.system().chamber_index("1");
    CHECK(ball(hexagon, base, 0) == std::vector<int>{base});
    CHECK(ball(hexagon, base, 1).size() == 3);
    CHECK(ball(hexagon, base, 3).size() == 6);

    Building fano = fano_building();
    CHECK(ball(fano, 0, 1).size() == 5);
}

TEST_CASE("apartments") {
    Building hexagon = thin_building(dihedral_matrix(3));
    std::vector<int> all(6);
    for (int i = 0; i < 6; ++i) all[i] = i;
    CHECK(is_apartment(hexagon, all));

    Building fano = fano_building();
    auto apartments = fano_triangle_apartments(fano);
    CHECK(apartments.size() == 28);
    for (const auto& A : apartments) CHECK(is_apartment(fano, A));

    // Wrong cardinality can never be an apartment.
    CHECK(!is_apartment(fano, {0, 1, 2, 3, 4}));

    // Every pair of chambers lies in at least one apartment.
    std::set<std::pair<int, int>> covered;
    for (const auto& A : apartments)
        for (int c : A)
            for (int d : A) covered.insert({c, d});
    CHECK(covered.size() == 21u * 21u);
}

TEST_CASE("retraction") {
    Building fano = fano_building();
    auto rho = retraction(fano, 3);
    CHECK(rho[3].empty());
    for (int d = 0; d < 21; ++d) CHECK(rho[d] == fano.delta(3, d));
    // On an s-panel mate the retraction is the generator itself.
    for (int s = 0; s < 2; ++s)
        for (int d : fano.system().panel(s, 3))
            if (d != 3) CHECK(rho[d] == Word{s});
}

TEST_CASE("minimal galleries have reduced types evaluating to delta") {
    // Breadth-first gallery distance agrees with Weyl length, and the type
    // collected along a shortest gallery reduces to delta.
    for (Building B : {thin_building(dihedral_matrix(4)), fano_building()}) {
        const int n = B.num_chambers();
        for (int c = 0; c < n; ++c) {
            std::vector<int> dist(n, -1);
            std::vector<Word> type(n);
            std::vector<int> queue{c};
            dist[c] = 0;
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                int x = queue[qi];
                for (int s = 0; s < B.coxeter().rank(); ++s)
                    for (int y : B.system().panel(s, x))
                        if (y != x && dist[y] < 0) {
                            dist[y] = dist[x] + 1;
                            type[y] = type[x];
                            type[y].push_back(s);
                            queue.push_back(y);
                        }
            }
            for (int d = 0; d < n; ++d) {
                CHECK(dist[d] == static_cast<int>(B.delta(c, d).size()));
                CHECK(is_reduced(type[d], B.coxeter()));
                CHECK(tits_reduce(type[d], B.coxeter()) == B.delta(c, d));
            }
        }
    }
}

TEST_CASE("product building") {
    Building hexagon = thin_building(dihedral_matrix(3));
    Building prod = product_building({hexagon, hexagon});
    CHECK(prod.num_chambers() == 36);
    CHECK(prod.coxeter().rank() == 4);
    CHECK(verify_building(prod, 3).pass);

    // Componentwise Weyl distance: the product word reduces to the
    // concatenation of the factor words.
    RewriteBudget budget;
    for (int c0 : {0, 2, 5})
        for (int c1 : {1, 3})
            for (int d0 : {0, 4})
                for (int d1 : {2, 5}) {
                    int c = prod.system().chamber_index(hexagon.system().chamber_id(c0) + "|" +
                                                        hexagon.system().chamber_id(c1));
                    int d = prod.system().chamber_index(hexagon.system().chamber_id(d0) + "|" +
                                                        hexagon.system().chamber_id(d1));
                    Word expect;
                    for (int s : hexagon.delta(c0, d0)) expect.push_back(s);
                    for (int s : hexagon.delta(c1, d1)) expect.push_back(s + 2);
                    CHECK(prod.delta(c, d) == tits_reduce(expect, prod.coxeter(), budget));
                }
}

TEST_CASE("product building with a single-chamber factor is rejected") {
    Building hexagon = thin_building(dihedral_matrix(3));
    ChamberSystem lone({"x"}, {{{0}}});
    Building single = Building::with_computed_delta(lone, CoxeterMatrix({"u"}, {{1}}));
    Building prod = product_building({hexagon, single});
    BuildingVerdict v = verify_building(prod);
    CHECK(!v.pass);
    CHECK(v.axiom == "panel-size");
}

TEST_CASE("is_apartment needs an enumerable group") {
    Building hexagon = thin_building(dihedral_matrix(3));
    Building infinite_type =
        Building::with_computed_delta(hexagon.system(), dihedral_matrix(0));
    std::vector<int> all(6);
    for (int i = 0; i < 6; ++i) all[i] = i;
    CHECK_THROWS_AS(is_apartment(infinite_type, all), group_too_large_error);
}

TEST_CASE("realize") {
    Building hexagon = thin_building(dihedral_matrix(3));

    // L = edge {s,t}: barycentric subdivision of the hexagonal disk.
    SimplicialComplex edge = SimplicialComplex::from_facets({"s", "t"}, {{0, 1}});
    SimplicialComplex disk = realize(hexagon, edge);
    CHECK(disk.f_vector()[0] == 13);
    CHECK(reduced_homology(disk).trivial());

    // L = two points: the dual graph, a 12-gon.
    SimplicialComplex two_points = SimplicialComplex::from_facets({"s", "t"}, {{0}, {1}});
    SimplicialComplex circle = realize(hexagon, two_points);
    CHECK(circle.f_vector() == std::vector<long long>{12, 12});
    CHECK(reduced_homology(circle).rank(1) == 1);

    Building fano = fano_building();
    SimplicialComplex graph = realize(fano, two_points);
    CHECK(graph.f_vector() == std::vector<long long>{35, 42});
    HomologyReport h = realization_homology(fano, two_points);
    CHECK(h.rank(1) == 8);
    CHECK(h.rank(0) == 0);

    SimplicialComplex fano_disk = realize(fano, edge);
    CHECK(fano_disk.f_vector()[0] == 36);
    CHECK(reduced_homology(fano_disk).rank(1) == 0);

    // Vertex count equals the number of spherical residues; the Euler
    // characteristic follows from the chain counts.
    long long residues = 21 + 7 + 7 + 1;
    CHECK(fano_disk.f_vector()[0] == residues);

    // Non-spherical faces are rejected.
    Building dinf_like = thin_building(dihedral_matrix(3));
    CoxeterMatrix dinf({"s", "t"}, {{1, 0}, {0, 1}});
    SimplicialComplex bad_edge = SimplicialComplex::from_facets({"s", "t"}, {{0, 1}});
    // Reuse the hexagon's chamber system with the infinite-type matrix: the
    // edge face is not spherical there.
    Building B = Building::with_computed_delta(dinf_like.system(), dinf);
    CHECK_THROWS_AS(realize(B, bad_edge), std::invalid_argument);

    // Degenerate L with only vertices of one type: discrete chamber set per
    // empty-type residue.
    SimplicialComplex lone = SimplicialComplex::from_facets({"s", "t"}, {{0}});
    SimplicialComplex r = realize(hexagon, lone);
    CHECK(r.f_vector()[0] == 6 + 3);

    // L with no faces at all: only the empty-type residues survive, giving
    // the discrete chamber set.
    SimplicialComplex none({"s", "t"});
    SimplicialComplex discrete = realize(hexagon, none);
    CHECK(discrete.f_vector() == std::vector<long long>{6});
}
