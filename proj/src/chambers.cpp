#include "coxcover/chambers.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace coxcover {

ChamberSystem::ChamberSystem(std::vector<std::string> chamber_ids,
                             std::vector<std::vector<std::vector<int>>> panels_per_generator)
    : ids_(std::move(chamber_ids)), panels_(std::move(panels_per_generator)) {
    const int n = num_chambers();
    for (auto& generator_panels : panels_) {
        std::vector<int> seen(n, 0);
        for (auto& panel : generator_panels) {
            std::sort(panel.begin(), panel.end());
            for (int c : panel) {
                if (c < 0 || c >= n) throw std::invalid_argument("panel chamber out of range");
                ++seen[c];
            }
        }
        for (int c = 0; c < n; ++c)
            if (seen[c] != 1)
                throw std::invalid_argument("panels must partition the chamber set");
    }
    panel_of_.assign(panels_.size(), std::vector<int>(n, -1));
    for (std::size_t s = 0; s < panels_.size(); ++s)
        for (std::size_t p = 0; p < panels_[s].size(); ++p)
            for (int c : panels_[s][p]) panel_of_[s][c] = static_cast<int>(p);
}

int ChamberSystem::chamber_index(const std::string& id) const {
    for (int i = 0; i < num_chambers(); ++i)
        if (ids_[i] == id) return i;
    return -1;
}

Building::Building(ChamberSystem system, CoxeterMatrix coxeter,
                   std::vector<std::vector<std::optional<Word>>> delta)
    : system_(std::move(system)), coxeter_(std::move(coxeter)), delta_(std::move(delta)) {
    if (system_.num_generators() != coxeter_.rank())
        throw std::invalid_argument("chamber system rank does not match the Coxeter matrix");
}

Building Building::with_delta(ChamberSystem system, CoxeterMatrix coxeter,
                              std::vector<std::vector<std::optional<Word>>> delta) {
    const int n = system.num_chambers();
    if (static_cast<int>(delta.size()) != n)
        throw std::invalid_argument("delta table has wrong shape");
    for (const auto& row : delta)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("delta table has wrong shape");
    return Building(std::move(system), std::move(coxeter), std::move(delta));
}

Building Building::with_computed_delta(ChamberSystem system, CoxeterMatrix coxeter) {
    const int n = system.num_chambers();
    std::vector<std::vector<std::optional<Word>>> delta(
        n, std::vector<std::optional<Word>>(n));
    RewriteBudget budget;
    for (int c = 0; c < n; ++c) {
        delta[c][c] = Word{};
        std::deque<int> queue{c};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            const Word& w = *delta[c][x];
            for (int s = 0; s < coxeter.rank(); ++s) {
                for (int y : system.panel(s, x)) {
                    if (y == x || delta[c][y]) continue;
                    Word ws = w;
                    ws.push_back(s);
                    delta[c][y] = tits_reduce(ws, coxeter, budget);
                    queue.push_back(y);
                }
            }
        }
    }
    return Building(std::move(system), std::move(coxeter), std::move(delta));
}

const Word& Building::delta(int c, int d) const {
    const auto& entry = delta_.at(c).at(d);
    if (!entry) throw std::invalid_argument("Weyl distance undefined (chambers not connected)");
    return *entry;
}

Building thin_building(const CoxeterMatrix& M, std::size_t cutoff) {
    GroupEnumeration W = enumerate_group(M, cutoff);
    if (!W.complete) throw group_too_large_error("Coxeter group exceeds the enumeration cutoff");
    const int n = static_cast<int>(W.elements.size());
    std::map<Word, int> index;
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) {
        index[W.elements[i]] = i;
        std::string id;
        for (int s : W.elements[i]) id += M.label(s);
        ids.push_back(id.empty() ? "1" : id);
    }
    RewriteBudget budget;
    std::vector<std::vector<std::vector<int>>> panels(M.rank());
    for (int s = 0; s < M.rank(); ++s) {
        std::vector<bool> done(n, false);
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            Word ws = W.elements[i];
            ws.push_back(s);
            int j = index.at(tits_reduce(ws, M, budget));
            done[i] = done[j] = true;
            panels[s].push_back({i, j});
        }
    }
    ChamberSystem system(ids, panels);
    std::vector<std::vector<std::optional<Word>>> delta(n, std::vector<std::optional<Word>>(n));
    for (int v = 0; v < n; ++v) {
        Word vinv = word_inverse(W.elements[v]);
        for (int w = 0; w < n; ++w)
            delta[v][w] = reduced_product(vinv, W.elements[w], M, budget);
    }
    return Building::with_delta(std::move(system), M, std::move(delta));
}

namespace {

std::string word_str(const Word& w, const CoxeterMatrix& M) {
    if (w.empty()) return "1";
    std::string out;
    for (int s : w) {
        if (!out.empty()) out += ".";
        out += M.label(s);
    }
    return out;
}

}  // namespace

BuildingVerdict verify_building(const Building& B, int gallery_length_bound) {
    const auto& sys = B.system();
    const auto& M = B.coxeter();
    const int n = sys.num_chambers();
    RewriteBudget budget;

    if (n == 0) return {false, "panel-size", "empty chamber set"};

    for (int s = 0; s < M.rank(); ++s)
        for (int c = 0; c < n; ++c)
            if (sys.panel(s, c).size() < 2) {
                std::ostringstream msg;
                msg << "panel of " << sys.chamber_id(c) << " for generator " << M.label(s)
                    << " has fewer than two chambers";
                return {false, "panel-size", msg.str()};
            }

    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
            if (!B.delta_defined(c, d)) {
                return {false, "connectivity",
                        "no gallery from " + sys.chamber_id(c) + " to " + sys.chamber_id(d)};
            }

    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
            const bool trivial = B.delta(c, d).empty();
            if (trivial != (c == d)) {
                std::ostringstream msg;
                msg << "delta(" << sys.chamber_id(c) << "," << sys.chamber_id(d)
                    << ") = " << word_str(B.delta(c, d), M);
                return {false, "WD1", msg.str()};
            }
        }

    // WD2: delta(C',C) = s and delta(C,D) = w force delta(C',D) into {sw, w},
    // and equal to sw when sw is longer.
    for (int c = 0; c < n; ++c)
        for (int cp = 0; cp < n; ++cp) {
            if (B.delta(cp, c).size() != 1) continue;
            const int s = B.delta(cp, c)[0];
            for (int d = 0; d < n; ++d) {
                const Word& w = B.delta(c, d);
                Word sw = w;
                sw.insert(sw.begin(), s);
                sw = tits_reduce(sw, M, budget);
                const Word& got = B.delta(cp, d);
                const bool longer = sw.size() == w.size() + 1;
                const bool ok = longer ? (got == sw) : (got == sw || got == w);
                if (!ok) {
                    std::ostringstream msg;
                    msg << "C'=" << sys.chamber_id(cp) << " C=" << sys.chamber_id(c)
                        << " D=" << sys.chamber_id(d) << ": delta(C,D)=" << word_str(w, M)
                        << ", delta(C',C)=" << M.label(s) << ", delta(C',D)=" << word_str(got, M);
                    return {false, "WD2", msg.str()};
                }
            }
        }

    // WD3: some s-neighbour of C realizes sw.
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
            const Word& w = B.delta(c, d);
            for (int s = 0; s < M.rank(); ++s) {
                Word sw = w;
                sw.insert(sw.begin(), s);
                sw = tits_reduce(sw, M, budget);
                bool found = false;
                for (int cp = 0; cp < n && !found; ++cp)
                    found = B.delta(cp, c).size() == 1 && B.delta(cp, c)[0] == s &&
                            B.delta(cp, d) == sw;
                if (!found) {
                    std::ostringstream msg;
                    msg << "no C' with delta(C',C)=" << M.label(s)
                        << " and delta(C',D)=" << word_str(sw, M) << " for C=" << sys.chamber_id(c)
                        << " D=" << sys.chamber_id(d);
                    return {false, "WD3", msg.str()};
                }
            }
        }

    // Gallery characterization over all reduced words up to the bound:
    // a gallery of reduced type s from C to D exists iff delta(C,D) = w(s).
    std::vector<Word> words{Word{}};
    for (std::size_t i = 0; i < words.size(); ++i) {
        Word w = words[i];
        if (static_cast<int>(w.size()) >= gallery_length_bound) continue;
        for (int s = 0; s < M.rank(); ++s) {
            w.push_back(s);
            words.push_back(w);
            w.pop_back();
        }
    }
    for (const Word& type : words) {
        if (!is_reduced(type, M)) continue;
        Word value = tits_reduce(type, M, budget);
        for (int c = 0; c < n; ++c) {
            std::vector<bool> reach(n, false);
            reach[c] = true;
            for (int letter : type) {
                std::vector<bool> next(n, false);
                for (int x = 0; x < n; ++x) {
                    if (!reach[x]) continue;
                    for (int y : sys.panel(letter, x))
                        if (y != x) next[y] = true;
                }
                reach = std::move(next);
            }
            for (int d = 0; d < n; ++d)
                if (reach[d] != (B.delta(c, d) == value)) {
                    std::ostringstream msg;
                    msg << "type " << word_str(type, M) << " from " << sys.chamber_id(c) << " to "
                        << sys.chamber_id(d) << ": gallery " << (reach[d] ? "exists" : "missing")
                        << " but delta = " << word_str(B.delta(c, d), M);
                    return {false, "gallery", msg.str()};
                }
        }
    }

    return {};
}

std::vector<int> residue(const ChamberSystem& system, int c, const std::vector<int>& T) {
    std::vector<bool> in(system.num_chambers(), false);
    std::vector<int> out;
    std::deque<int> queue{c};
    in[c] = true;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        out.push_back(x);
        for (int s : T)
            for (int y : system.panel(s, x))
                if (!in[y]) {
                    in[y] = true;
                    queue.push_back(y);
                }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> ball(const Building& B, int c, int n) {
    if (n < 0) throw std::invalid_argument("ball radius must be >= 0");
    std::vector<int> out;
    for (int d = 0; d < B.num_chambers(); ++d)
        if (B.delta_defined(c, d) && static_cast<int>(B.delta(c, d).size()) <= n)
            out.push_back(d);
    return out;
}

bool is_apartment(const Building& B, const std::vector<int>& A, std::size_t cutoff) {
    if (A.empty()) return false;
    GroupEnumeration W = enumerate_group(B.coxeter(), cutoff);
    if (!W.complete) throw group_too_large_error("apartment check needs an enumerable group");
    if (A.size() != W.elements.size()) return false;
    const int c = A[0];
    std::set<Word> image;
    for (int d : A) {
        if (!B.delta_defined(c, d)) return false;
        if (!image.insert(B.delta(c, d)).second) return false;
    }
    RewriteBudget budget;
    for (int d : A)
        for (int e : A) {
            Word expect = reduced_product(word_inverse(B.delta(c, d)), B.delta(c, e),
                                          B.coxeter(), budget);
            if (B.delta(d, e) != expect) return false;
        }
    return true;
}

std::vector<Word> retraction(const Building& B, int c) {
    std::vector<Word> out;
    out.reserve(B.num_chambers());
    for (int d = 0; d < B.num_chambers(); ++d) out.push_back(B.delta(c, d));
    return out;
}

Building product_building(const std::vector<Building>& factors) {
    if (factors.empty()) throw std::invalid_argument("product of zero buildings");

    std::vector<std::string> gens;
    std::vector<int> factor_of_gen, index_in_factor;
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (int s = 0; s < factors[i].coxeter().rank(); ++s) {
            gens.push_back(namespaced_label(factors[i].coxeter().label(s), static_cast<int>(i)));
            factor_of_gen.push_back(static_cast<int>(i));
            index_in_factor.push_back(s);
        }
    const int rank = static_cast<int>(gens.size());
    std::vector<std::vector<int>> entries(rank, std::vector<int>(rank, 2));
    for (int a = 0; a < rank; ++a) {
        entries[a][a] = 1;
        for (int b = 0; b < rank; ++b)
            if (a != b && factor_of_gen[a] == factor_of_gen[b])
                entries[a][b] = factors[factor_of_gen[a]].coxeter().order(index_in_factor[a],
                                                                          index_in_factor[b]);
    }
    CoxeterMatrix M(gens, entries);

    // Chambers are tuples, mixed-radix over the factor chamber counts.
    std::vector<int> sizes;
    for (const auto& b : factors) sizes.push_back(b.num_chambers());
    long long total = 1;
    for (int s : sizes) total *= s;
    std::vector<std::vector<int>> tuples;
    std::vector<std::string> ids;
    for (long long code = 0; code < total; ++code) {
        long long rest = code;
        std::vector<int> tuple(sizes.size());
        for (int i = static_cast<int>(sizes.size()) - 1; i >= 0; --i) {
            tuple[i] = static_cast<int>(rest % sizes[i]);
            rest /= sizes[i];
        }
        std::string id;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (i) id += "|";
            id += factors[i].system().chamber_id(tuple[i]);
        }
        tuples.push_back(std::move(tuple));
        ids.push_back(std::move(id));
    }
    std::map<std::vector<int>, int> tuple_index;
    for (int i = 0; i < static_cast<int>(tuples.size()); ++i) tuple_index[tuples[i]] = i;

    std::vector<std::vector<std::vector<int>>> panels(rank);
    for (int g = 0; g < rank; ++g) {
        const int fi = factor_of_gen[g], s = index_in_factor[g];
        std::vector<bool> done(tuples.size(), false);
        for (std::size_t c = 0; c < tuples.size(); ++c) {
            if (done[c]) continue;
            std::vector<int> panel;
            for (int y : factors[fi].system().panel(s, tuples[c][fi])) {
                std::vector<int> other = tuples[c];
                other[fi] = y;
                int idx = tuple_index.at(other);
                panel.push_back(idx);
                done[idx] = true;
            }
            panels[g].push_back(std::move(panel));
        }
    }
    return Building::with_computed_delta(ChamberSystem(ids, panels), M);
}

ChamberSystem flag_system(const std::vector<std::vector<int>>& lines) {
    std::set<int> points;
    for (const auto& line : lines) points.insert(line.begin(), line.end());
    std::vector<std::string> ids;
    std::vector<std::pair<int, int>> flags;  // (point, line index)
    for (std::size_t l = 0; l < lines.size(); ++l)
        for (int p : lines[l]) {
            flags.emplace_back(p, static_cast<int>(l));
            ids.push_back("p" + std::to_string(p) + "l" + std::to_string(l));
        }
    std::vector<std::vector<std::vector<int>>> panels(2);
    for (int p : points) {
        std::vector<int> panel;
        for (std::size_t i = 0; i < flags.size(); ++i)
            if (flags[i].first == p) panel.push_back(static_cast<int>(i));
        panels[0].push_back(std::move(panel));
    }
    for (std::size_t l = 0; l < lines.size(); ++l) {
        std::vector<int> panel;
        for (std::size_t i = 0; i < flags.size(); ++i)
            if (flags[i].second == static_cast<int>(l)) panel.push_back(static_cast<int>(i));
        panels[1].push_back(std::move(panel));
    }
    return ChamberSystem(ids, panels);
}

SimplicialComplex realize(const Building& B, const SimplicialComplex& L) {
    const auto& M = B.coxeter();
    const int n = B.num_chambers();

    // Type subsets: the empty set plus the faces of L, as generator masks.
    std::vector<std::uint64_t> types;
    for (const auto& face : L.faces()) {
        std::uint64_t mask = 0;
        for (int v : face) {
            int s = M.index_of(L.vertex_label(v));
            if (s < 0)
                throw std::invalid_argument("realization complex vertex is not a generator: " +
                                            L.vertex_label(v));
            mask |= std::uint64_t{1} << s;
        }
        if (mask != 0 && !is_spherical(mask, M))
            throw std::invalid_argument("realization complex has a non-spherical face " +
                                        subset_label(mask, M.generators()));
        types.push_back(mask);
    }
    if (types.empty() || types[0] != 0) types.insert(types.begin(), 0);
    std::sort(types.begin(), types.end());
    types.erase(std::unique(types.begin(), types.end()), types.end());

    // Residue partition per type subset.
    struct TypeData {
        std::uint64_t mask;
        std::vector<int> component_of;  // chamber -> residue index
        int components = 0;
    };
    std::vector<TypeData> data;
    for (std::uint64_t mask : types) {
        TypeData td;
        td.mask = mask;
        td.component_of.assign(n, -1);
        std::vector<int> T;
        for (int s = 0; s < M.rank(); ++s)
            if (mask & (std::uint64_t{1} << s)) T.push_back(s);
        for (int c = 0; c < n; ++c) {
            if (td.component_of[c] >= 0) continue;
            for (int x : residue(B.system(), c, T)) td.component_of[x] = td.components;
            ++td.components;
        }
        data.push_back(std::move(td));
    }

    // Poset elements (type index, residue index), ordered by simultaneous
    // strict inclusion of type and containment of residues.
    std::vector<std::pair<int, int>> elems;
    std::vector<std::string> labels;
    for (int t = 0; t < static_cast<int>(data.size()); ++t)
        for (int r = 0; r < data[t].components; ++r) {
            elems.emplace_back(t, r);
            labels.push_back(subset_label(data[t].mask, M.generators()) + "#" + std::to_string(r));
        }
    std::vector<std::pair<int, int>> rel;
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b < elems.size(); ++b) {
            const auto& [ta, ra] = elems[a];
            const auto& [tb, rb] = elems[b];
            std::uint64_t ma = data[ta].mask, mb = data[tb].mask;
            if (ma == mb || (ma & mb) != ma) continue;
            // R_a is contained in R_b iff any chamber of R_a lies in R_b.
            int witness = -1;
            for (int c = 0; c < n && witness < 0; ++c)
                if (data[ta].component_of[c] == ra) witness = c;
            if (data[tb].component_of[witness] == rb) rel.emplace_back(a, b);
        }
    return order_complex(Poset(labels, rel));
}

HomologyReport realization_homology(const Building& B, const SimplicialComplex& L) {
    return reduced_homology(realize(B, L));
}

}  // namespace coxcover
