#include "coxcover/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

namespace coxcover {

CoxeterMatrix::CoxeterMatrix(std::vector<std::string> generators,
                             std::vector<std::vector<int>> entries)
    : generators_(std::move(generators)), entries_(std::move(entries)) {
    const int n = static_cast<int>(generators_.size());
    if (n > 64) throw std::invalid_argument("rank above 64 is not supported");
    if (static_cast<int>(entries_.size()) != n)
        throw std::invalid_argument("coxeter matrix must be square");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(entries_[i].size()) != n)
            throw std::invalid_argument("coxeter matrix must be square");
        if (entries_[i][i] != 1)
            throw std::invalid_argument("coxeter matrix diagonal entries must be 1");
        for (int j = 0; j < n; ++j) {
            if (entries_[i][j] != entries_[j][i])
                throw std::invalid_argument("coxeter matrix must be symmetric");
            if (i != j && entries_[i][j] != 0 && entries_[i][j] < 2)
                throw std::invalid_argument("off-diagonal entries must be >= 2 or 0 (infinity)");
        }
    }
    for (int i = 0; i < n; ++i) {
        if (!index_.emplace(generators_[i], i).second)
            throw std::invalid_argument("duplicate generator label: " + generators_[i]);
    }
}

int CoxeterMatrix::index_of(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

CoxeterMatrix CoxeterMatrix::restrict(std::uint64_t mask) const {
    std::vector<int> keep;
    for (int i = 0; i < rank(); ++i)
        if (mask & (std::uint64_t{1} << i)) keep.push_back(i);
    std::vector<std::string> gens;
    std::vector<std::vector<int>> e(keep.size(), std::vector<int>(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a) {
        gens.push_back(generators_[keep[a]]);
        for (std::size_t b = 0; b < keep.size(); ++b) e[a][b] = entries_[keep[a]][keep[b]];
    }
    return CoxeterMatrix(std::move(gens), std::move(e));
}

Word prod_word(int s, int t, int m) {
    if (m < 1) throw std::invalid_argument("prod_word requires m >= 1");
    if (s == t) throw std::invalid_argument("prod_word requires distinct generators");
    Word w(m);
    for (int i = 0; i < m; ++i) w[i] = (i % 2 == 0) ? s : t;
    return w;
}

Word word_inverse(const Word& w) { return Word(w.rbegin(), w.rend()); }

std::vector<std::string> word_labels(const Word& w, const CoxeterMatrix& M) {
    std::vector<std::string> out;
    out.reserve(w.size());
    for (int s : w) out.push_back(M.label(s));
    return out;
}

Word word_from_labels(const std::vector<std::string>& labels, const CoxeterMatrix& M) {
    Word w;
    w.reserve(labels.size());
    for (const auto& l : labels) {
        int s = M.index_of(l);
        if (s < 0) throw std::invalid_argument("unknown generator label: " + l);
        w.push_back(s);
    }
    return w;
}

namespace {

void check_letters(const Word& w, const CoxeterMatrix& M) {
    for (int s : w)
        if (s < 0 || s >= M.rank()) throw std::invalid_argument("word letter out of range");
}

// Position of the first ss subword, or -1.
int find_cancellation(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == w[i + 1]) return static_cast<int>(i);
    return -1;
}

Word cancel_at(const Word& w, int pos) {
    Word out;
    out.reserve(w.size() - 2);
    out.insert(out.end(), w.begin(), w.begin() + pos);
    out.insert(out.end(), w.begin() + pos + 2, w.end());
    return out;
}

// Whether w[pos .. pos+m) is the alternating word starting with w[pos].
bool alternates(const Word& w, int pos, int m) {
    const int s = w[pos], t = w[pos + 1];
    for (int i = 0; i < m; ++i)
        if (w[pos + i] != ((i % 2 == 0) ? s : t)) return false;
    return true;
}

Word flip_at(const Word& w, int pos, int m) {
    Word out = w;
    const int s = w[pos], t = w[pos + 1];
    for (int i = 0; i < m; ++i) out[pos + i] = (i % 2 == 0) ? t : s;
    return out;
}

// Explores the flip orbit of w (which must have no ss subword). If a flip
// produces a word with an ss subword, cancels it and reports the shorter
// word; otherwise returns the lexicographically least orbit member.
struct OrbitResult {
    bool cancelled = false;
    Word word;  // shortened word, or the orbit minimum
};

OrbitResult flip_orbit_min(const Word& start, const CoxeterMatrix& M, RewriteBudget& budget) {
    std::set<Word> seen{start};
    std::deque<Word> queue{start};
    Word best = start;
    while (!queue.empty()) {
        Word cur = std::move(queue.front());
        queue.pop_front();
        const int n = static_cast<int>(cur.size());
        for (int i = 0; i + 1 < n; ++i) {
            const int s = cur[i], t = cur[i + 1];
            if (s == t) continue;
            const int m = M.order(s, t);
            if (m == 0 || i + m > n) continue;
            if (!alternates(cur, i, m)) continue;
            budget.charge();
            Word next = flip_at(cur, i, m);
            if (!seen.insert(next).second) continue;
            int cpos = find_cancellation(next);
            if (cpos >= 0) return OrbitResult{true, cancel_at(next, cpos)};
            if (next < best) best = next;
            queue.push_back(std::move(next));
        }
    }
    return OrbitResult{false, best};
}

}  // namespace

Word tits_reduce(const Word& w, const CoxeterMatrix& M, RewriteBudget& budget) {
    check_letters(w, M);
    Word cur = w;
    for (;;) {
        int cpos = find_cancellation(cur);
        if (cpos >= 0) {
            budget.charge();
            cur = cancel_at(cur, cpos);
            continue;
        }
        OrbitResult r = flip_orbit_min(cur, M, budget);
        if (r.cancelled) {
            cur = std::move(r.word);
            continue;
        }
        return r.word;
    }
}

Word tits_reduce(const Word& w, const CoxeterMatrix& M) {
    RewriteBudget budget;
    return tits_reduce(w, M, budget);
}

bool words_equal(const Word& u, const Word& v, const CoxeterMatrix& M) {
    return tits_reduce(u, M) == tits_reduce(v, M);
}

bool is_reduced(const Word& w, const CoxeterMatrix& M) {
    return tits_reduce(w, M).size() == w.size();
}

Word reduced_product(const Word& u, const Word& v, const CoxeterMatrix& M,
                     RewriteBudget& budget) {
    Word w = u;
    w.insert(w.end(), v.begin(), v.end());
    return tits_reduce(w, M, budget);
}

GroupEnumeration enumerate_group(const CoxeterMatrix& M, std::size_t cutoff,
                                 RewriteBudget& budget) {
    GroupEnumeration out;
    std::set<Word> seen;
    std::vector<Word> frontier{Word{}};
    seen.insert(Word{});
    out.elements.push_back(Word{});
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (int s = 0; s < M.rank(); ++s) {
                Word ws = w;
                ws.push_back(s);
                Word canon = tits_reduce(ws, M, budget);
                if (canon.size() != w.size() + 1) continue;  // descent, already known
                if (!seen.insert(canon).second) continue;
                if (seen.size() > cutoff) {
                    out.complete = false;
                    return out;
                }
                out.elements.push_back(canon);
                next.push_back(std::move(canon));
            }
        }
        frontier = std::move(next);
    }
    out.complete = true;
    std::sort(out.elements.begin(), out.elements.end(),
              [](const Word& a, const Word& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    return out;
}

GroupEnumeration enumerate_group(const CoxeterMatrix& M, std::size_t cutoff) {
    RewriteBudget budget;
    return enumerate_group(M, cutoff, budget);
}

namespace {

// Classification of the finite irreducible Coxeter diagrams, applied to one
// connected component (given as vertex list of the restricted matrix).
// Edges are the pairs with m >= 3; any infinite entry makes the component
// infinite, as does any cycle (affine or worse).
bool component_finite(const std::vector<int>& verts, const CoxeterMatrix& M) {
    const int n = static_cast<int>(verts.size());
    if (n == 1) return true;
    if (n == 2) return M.finite_order(verts[0], verts[1]);

    std::vector<std::vector<int>> adj(n);
    std::vector<int> special;  // edge labels > 3
    int edges = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int m = M.order(verts[a], verts[b]);
            if (m == 0) return false;  // infinite bond
            if (m < 3) continue;
            ++edges;
            adj[a].push_back(b);
            adj[b].push_back(a);
            if (m > 3) special.push_back(m);
        }
    if (edges != n - 1) return false;  // connected, so edges >= n-1; more means a cycle

    int branch = -1;
    for (int a = 0; a < n; ++a) {
        if (adj[a].size() > 3) return false;
        if (adj[a].size() == 3) {
            if (branch >= 0) return false;  // two branch points
            branch = a;
        }
    }

    if (special.empty()) {
        if (branch < 0) return true;  // A_n
        // Branch lengths from the unique degree-3 vertex.
        std::vector<int> lens;
        for (int nb : adj[branch]) {
            int len = 1, prev = branch, cur = nb;
            for (;;) {
                int next = -1;
                for (int x : adj[cur])
                    if (x != prev) next = x;
                if (next < 0) break;
                prev = cur;
                cur = next;
                ++len;
            }
            lens.push_back(len);
        }
        std::sort(lens.begin(), lens.end());
        if (lens[0] == 1 && lens[1] == 1) return true;            // D_n
        if (lens[0] == 1 && lens[1] == 2 && lens[2] <= 4) return true;  // E6, E7, E8
        return false;
    }

    if (special.size() > 1 || branch >= 0) return false;
    // A path with exactly one labelled edge. Locate it.
    int hs = -1, ht = -1, label = special[0];
    for (int a = 0; a < n && hs < 0; ++a)
        for (int b = a + 1; b < n; ++b)
            if (M.order(verts[a], verts[b]) == label &&
                std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end()) {
                hs = a;
                ht = b;
                break;
            }
    const bool terminal = adj[hs].size() == 1 || adj[ht].size() == 1;
    if (label == 4) {
        if (terminal) return true;  // B_n
        return n == 4;              // F4 is the only interior-4 path
    }
    if (label == 5) return terminal && n <= 4;  // H3, H4
    return false;
}

}  // namespace

bool is_spherical(std::uint64_t subset_mask, const CoxeterMatrix& M) {
    std::vector<int> verts;
    for (int i = 0; i < M.rank(); ++i)
        if (subset_mask & (std::uint64_t{1} << i)) verts.push_back(i);
    // Split into connected components of the diagram (edges where m != 2).
    std::vector<bool> used(verts.size(), false);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (used[i]) continue;
        std::vector<int> comp;
        std::vector<std::size_t> stack{i};
        used[i] = true;
        while (!stack.empty()) {
            std::size_t a = stack.back();
            stack.pop_back();
            comp.push_back(verts[a]);
            for (std::size_t b = 0; b < verts.size(); ++b) {
                if (used[b]) continue;
                int m = M.order(verts[a], verts[b]);
                if (m == 2) continue;
                used[b] = true;
                stack.push_back(b);
            }
        }
        if (!component_finite(comp, M)) return false;
    }
    return true;
}

bool is_spherical(const std::vector<int>& subset, const CoxeterMatrix& M) {
    std::uint64_t mask = 0;
    for (int s : subset) {
        if (s < 0 || s >= M.rank()) throw std::invalid_argument("generator index out of range");
        mask |= std::uint64_t{1} << s;
    }
    return is_spherical(mask, M);
}

SphericalPoset::SphericalPoset(std::vector<std::string> generators,
                               std::vector<std::uint64_t> subsets)
    : generators_(std::move(generators)), subsets_(std::move(subsets)) {}

bool SphericalPoset::contains(std::uint64_t mask) const {
    return std::find(subsets_.begin(), subsets_.end(), mask) != subsets_.end();
}

SphericalPoset spherical_poset(const CoxeterMatrix& M) {
    const int n = M.rank();
    std::set<std::uint64_t> found{0};
    std::vector<std::uint64_t> level{0};
    while (!level.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t t : level) {
            for (int s = 0; s < n; ++s) {
                std::uint64_t bit = std::uint64_t{1} << s;
                if (t & bit) continue;
                std::uint64_t cand = t | bit;
                if (found.count(cand)) continue;
                // Only test a set once all maximal proper subsets are spherical.
                bool closed = true;
                for (int r = 0; r < n && closed; ++r)
                    if ((cand >> r) & 1) closed = found.count(cand & ~(std::uint64_t{1} << r)) > 0;
                if (!closed) continue;
                if (!is_spherical(cand, M)) continue;
                found.insert(cand);
                next.push_back(cand);
            }
        }
        level = std::move(next);
    }
    std::vector<std::uint64_t> subsets(found.begin(), found.end());
    std::sort(subsets.begin(), subsets.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return SphericalPoset(M.generators(), std::move(subsets));
}

SimplicialComplex nerve(const CoxeterMatrix& M) {
    SphericalPoset sp = spherical_poset(M);
    SimplicialComplex L(M.generators());
    for (std::uint64_t mask : sp.subsets()) {
        if (mask == 0) continue;
        std::vector<int> face;
        for (int i = 0; i < M.rank(); ++i)
            if (mask & (std::uint64_t{1} << i)) face.push_back(i);
        L.add_face_closure(face);
    }
    return L;
}

std::string namespaced_label(const std::string& label, int factor) {
    return label + "@" + std::to_string(factor);
}

}  // namespace coxcover
