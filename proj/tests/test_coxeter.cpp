#include "doctest.h"

#include <map>
#include <set>

#include "coxcover/coxeter.hpp"
#include "perm_oracle.hpp"

using namespace coxcover;

namespace {

CoxeterMatrix dihedral_matrix(int m) {
    return CoxeterMatrix({"s", "t"}, {{1, m}, {m, 1}});
}

CoxeterMatrix a3_matrix() {
    return CoxeterMatrix({"r", "s", "t"}, {{1, 3, 2}, {3, 1, 3}, {2, 3, 1}});
}

CoxeterMatrix a1xa1_matrix() {
    return CoxeterMatrix({"s", "t"}, {{1, 2}, {2, 1}});
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

}  // namespace

TEST_CASE("coxeter matrix validation") {
    CHECK_THROWS_AS(CoxeterMatrix({"s", "t"}, {{1, 3}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(CoxeterMatrix({"s", "t"}, {{2, 3}, {3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(CoxeterMatrix({"s", "t"}, {{1, 1}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(CoxeterMatrix({"s", "s"}, {{1, 3}, {3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(CoxeterMatrix({"s"}, {{1, 2}}), std::invalid_argument);
    CoxeterMatrix M = dihedral_matrix(0);  // infinite dihedral
    CHECK(!M.finite_order(0, 1));
}

TEST_CASE("prod_word") {
    CHECK(prod_word(0, 1, 3) == Word{0, 1, 0});
    CHECK(prod_word(0, 1, 1) == Word{0});
    CHECK(prod_word(0, 1, 4) == Word{0, 1, 0, 1});
    CHECK_THROWS_AS(prod_word(0, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(prod_word(0, 0, 2), std::invalid_argument);
}

TEST_CASE("tits_reduce basics") {
    CoxeterMatrix M = dihedral_matrix(3);
    // (s,t,s,t) = st.st = (ts)^-1... the canonical reduced form is (t,s).
    CHECK(tits_reduce({0, 1, 0, 1}, M) == Word{1, 0});
    CHECK(tits_reduce({0, 0}, M) == Word{});
    CHECK(tits_reduce({}, M) == Word{});

    CoxeterMatrix Dinf = dihedral_matrix(0);
    CHECK(tits_reduce({0, 1, 0, 1}, Dinf) == Word{0, 1, 0, 1});
}

TEST_CASE("words_equal and is_reduced") {
    CoxeterMatrix M = dihedral_matrix(3);
    CHECK(words_equal({0, 1, 0}, {1, 0, 1}, M));
    CHECK(!words_equal({0}, {1}, M));
    CHECK(words_equal({0, 1, 0, 1, 0, 1}, {}, M));
    CHECK(is_reduced({0, 1, 0}, M));
    CHECK(!is_reduced({0, 0}, M));
    CHECK(is_reduced({}, M));
}

TEST_CASE("tits_reduce agrees with permutation models") {
    struct Fixture {
        CoxeterMatrix M;
        oracle::PermGroup G;
        std::size_t order;
    };
    std::vector<Fixture> fixtures;
    fixtures.push_back({a1xa1_matrix(), oracle::elementary_abelian(2), 4});
    fixtures.push_back({dihedral_matrix(3), oracle::dihedral(3), 6});
    fixtures.push_back({dihedral_matrix(4), oracle::dihedral(4), 8});
    fixtures.push_back({a3_matrix(), oracle::symmetric(3), 24});

    for (const auto& [M, G, order] : fixtures) {
        CHECK(G.closure().size() == order);
        auto words = all_words(M.rank(), 5);
        // Canonical form is constant on model fibers and separates them.
        std::map<oracle::Perm, Word> canon_by_perm;
        for (const auto& w : words) {
            Word canon = tits_reduce(w, M);
            CHECK(tits_reduce(canon, M) == canon);  // idempotent
            CHECK((w.size() - canon.size()) % 2 == 0);
            CHECK(canon.size() <= w.size());
            auto perm = G.eval(w);
            auto [it, fresh] = canon_by_perm.emplace(perm, canon);
            if (!fresh) CHECK(it->second == canon);
        }
        std::set<Word> forms;
        for (const auto& [perm, canon] : canon_by_perm) forms.insert(canon);
        CHECK(forms.size() == canon_by_perm.size());
    }
}

TEST_CASE("enumerate_group sizes") {
    CHECK(enumerate_group(dihedral_matrix(3), 100).elements.size() == 6);
    CHECK(enumerate_group(dihedral_matrix(4), 100).elements.size() == 8);
    CHECK(enumerate_group(a3_matrix(), 100).elements.size() == 24);
    CHECK(enumerate_group(a1xa1_matrix(), 100).elements.size() == 4);
    CHECK(!enumerate_group(dihedral_matrix(0), 32).complete);
}

TEST_CASE("is_spherical on rank 2") {
    CHECK(is_spherical({0, 1}, dihedral_matrix(3)));
    CHECK(!is_spherical({0, 1}, dihedral_matrix(0)));
    CHECK(is_spherical(std::vector<int>{}, dihedral_matrix(0)));
}

TEST_CASE("is_spherical classification matches bounded enumeration") {
    // All rank <= 3 matrices with entries <= 5: decide by classification and
    // by breadth-first word enumeration (finite groups here have <= 120
    // elements, so a cutoff of 150 separates them).
    for (int m01 = 2; m01 <= 5; ++m01)
        for (int m02 = 2; m02 <= 5; ++m02)
            for (int m12 = 2; m12 <= 5; ++m12) {
                CoxeterMatrix M({"a", "b", "c"},
                                {{1, m01, m02}, {m01, 1, m12}, {m02, m12, 1}});
                bool classified = is_spherical({0, 1, 2}, M);
                bool enumerated = enumerate_group(M, 150).complete;
                CAPTURE(m01);
                CAPTURE(m02);
                CAPTURE(m12);
                CHECK(classified == enumerated);
            }
    // A few with infinite bonds.
    for (int m : {2, 3}) {
        CoxeterMatrix M({"a", "b", "c"}, {{1, m, 0}, {m, 1, 3}, {0, 3, 1}});
        CHECK(!is_spherical({0, 1, 2}, M));
        CHECK(is_spherical({1, 2}, M));
    }
}

TEST_CASE("classification handles the exceptional diagrams") {
    auto path = [](std::vector<int> labels) {
        int n = static_cast<int>(labels.size()) + 1;
        std::vector<std::vector<int>> e(n, std::vector<int>(n, 2));
        for (int i = 0; i < n; ++i) e[i][i] = 1;
        for (int i = 0; i + 1 < n; ++i) e[i][i + 1] = e[i + 1][i] = labels[i];
        std::vector<std::string> g;
        for (int i = 0; i < n; ++i) g.push_back("g" + std::to_string(i));
        return CoxeterMatrix(g, e);
    };
    auto all = [](const CoxeterMatrix& M) {
        std::vector<int> T(M.rank());
        for (int i = 0; i < M.rank(); ++i) T[i] = i;
        return T;
    };

    CoxeterMatrix f4 = path({3, 4, 3});
    CHECK(is_spherical(all(f4), f4));
    CoxeterMatrix f4_affine = path({3, 4, 3, 3});  // interior 4 on 5 vertices
    CHECK(!is_spherical(all(f4_affine), f4_affine));
    CoxeterMatrix b4 = path({4, 3, 3});
    CHECK(is_spherical(all(b4), b4));
    CoxeterMatrix h4 = path({5, 3, 3});
    CHECK(is_spherical(all(h4), h4));
    CoxeterMatrix h5 = path({5, 3, 3, 3});
    CHECK(!is_spherical(all(h5), h5));
    CoxeterMatrix c_affine = path({4, 3, 4});
    CHECK(!is_spherical(all(c_affine), c_affine));
    CoxeterMatrix g_high = path({6, 3});
    CHECK(!is_spherical(all(g_high), g_high));

    // Branching diagrams: D4, D5, E6, E7, E8 and the affine E-types.
    auto star = [](std::vector<int> branch_lengths) {
        int n = 1;
        for (int l : branch_lengths) n += l;
        std::vector<std::vector<int>> e(n, std::vector<int>(n, 2));
        for (int i = 0; i < n; ++i) e[i][i] = 1;
        int next = 1;
        for (int l : branch_lengths) {
            int prev = 0;
            for (int k = 0; k < l; ++k) {
                e[prev][next] = e[next][prev] = 3;
                prev = next++;
            }
        }
        std::vector<std::string> g;
        for (int i = 0; i < n; ++i) g.push_back("g" + std::to_string(i));
        return CoxeterMatrix(g, e);
    };
    for (auto [lens, finite] : std::vector<std::pair<std::vector<int>, bool>>{
             {{1, 1, 1}, true},   // D4
             {{1, 1, 2}, true},   // D5
             {{1, 2, 2}, true},   // E6
             {{1, 2, 3}, true},   // E7
             {{1, 2, 4}, true},   // E8
             {{1, 2, 5}, false},  // affine E8
             {{2, 2, 2}, false},  // affine E6
             {{1, 3, 3}, false},  // affine E7
             {{1, 1, 1, 1}, false}}) {
        CoxeterMatrix M = star(lens);
        std::vector<int> T(M.rank());
        for (int i = 0; i < M.rank(); ++i) T[i] = i;
        CAPTURE(lens.size());
        CHECK(is_spherical(T, M) == finite);
    }
}

TEST_CASE("spherical_poset") {
    SphericalPoset dinf = spherical_poset(dihedral_matrix(0));
    CHECK(dinf.size() == 3);
    CHECK(dinf.contains(0));
    CHECK(dinf.contains(1));
    CHECK(dinf.contains(2));
    CHECK(!dinf.contains(3));

    SphericalPoset i23 = spherical_poset(dihedral_matrix(3));
    CHECK(i23.size() == 4);
    CHECK(i23.contains(3));

    // Downward closure and the empty set, on a mixed matrix.
    CoxeterMatrix M({"a", "b", "c"}, {{1, 3, 0}, {3, 1, 2}, {0, 2, 1}});
    SphericalPoset sp = spherical_poset(M);
    CHECK(sp.contains(0));
    for (std::uint64_t mask : sp.subsets())
        for (int i = 0; i < M.rank(); ++i)
            if (mask & (1ull << i)) CHECK(sp.contains(mask & ~(1ull << i)));
}

TEST_CASE("nerve") {
    SimplicialComplex dinf = nerve(dihedral_matrix(0));
    CHECK(dinf.f_vector() == std::vector<long long>{2});

    SimplicialComplex i23 = nerve(dihedral_matrix(3));
    CHECK(i23.f_vector() == std::vector<long long>{2, 1});

    // Right-angled system on a 4-cycle: nerve is the 4-cycle itself.
    std::vector<std::vector<int>> e(4, std::vector<int>(4, 0));
    for (int i = 0; i < 4; ++i) e[i][i] = 1;
    auto set2 = [&](int a, int b) { e[a][b] = e[b][a] = 2; };
    set2(0, 1);
    set2(1, 2);
    set2(2, 3);
    set2(3, 0);
    CoxeterMatrix square({"a", "b", "c", "d"}, e);
    SimplicialComplex L = nerve(square);
    CHECK(L.f_vector() == std::vector<long long>{4, 4});
    CHECK(L.has_face({0, 1}));
    CHECK(!L.has_face({0, 2}));
}

TEST_CASE("budget exhaustion raises") {
    CoxeterMatrix M = dihedral_matrix(3);
    RewriteBudget tiny{2};
    CHECK_THROWS_AS(tits_reduce({0, 1, 0, 1, 0, 1, 0, 1}, M, tiny), budget_exhausted_error);
}
