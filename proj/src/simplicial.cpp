#include "coxcover/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace coxcover {

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices)
    : vertices_(std::move(vertices)) {
    for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
        if (!index_.emplace(vertices_[i], i).second)
            throw std::invalid_argument("duplicate vertex label: " + vertices_[i]);
    }
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertices,
                                                 const std::vector<std::vector<int>>& facets) {
    SimplicialComplex L(std::move(vertices));
    for (const auto& f : facets) L.add_face_closure(f);
    return L;
}

int SimplicialComplex::vertex_index(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

void SimplicialComplex::add_face_closure(const std::vector<int>& face) {
    std::vector<int> sorted = face;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v : sorted)
        if (v < 0 || v >= num_vertices())
            throw std::invalid_argument("face vertex out of range");
    const std::size_t k = sorted.size();
    if (k >= 63) throw std::invalid_argument("face dimension too large");
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < k; ++i)
            if (bits & (std::uint64_t{1} << i)) sub.push_back(sorted[i]);
        faces_.insert(std::move(sub));
    }
}

int SimplicialComplex::dimension() const {
    if (faces_.empty()) return -2;
    int d = -1;
    for (const auto& f : faces_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

std::vector<long long> SimplicialComplex::f_vector() const {
    std::vector<long long> f(std::max(dimension() + 1, 0), 0);
    for (const auto& face : faces_)
        if (!face.empty()) ++f[face.size() - 1];
    return f;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    int k = 0;
    for (long long count : f_vector()) chi += (k++ % 2 == 0) ? count : -count;
    return chi;
}

std::vector<std::vector<int>> SimplicialComplex::faces_of_dim(int k) const {
    std::vector<std::vector<int>> out;
    for (const auto& f : faces_)
        if (static_cast<int>(f.size()) == k + 1) out.push_back(f);
    return out;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
    return vertices_ == other.vertices_ && faces_ == other.faces_;
}

Poset::Poset(std::vector<std::string> elements,
             const std::vector<std::pair<int, int>>& strict_pairs)
    : elements_(std::move(elements)),
      less_(elements_.size(), std::vector<bool>(elements_.size(), false)) {
    const int n = size();
    for (auto [a, b] : strict_pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("poset relation index out of range");
        if (a == b) throw std::invalid_argument("poset relation must be irreflexive");
        less_[a][b] = true;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (less_[a][b]) {
                if (less_[b][a]) throw std::invalid_argument("poset relation has a 2-cycle");
                for (int c = 0; c < n; ++c)
                    if (less_[b][c] && !less_[a][c])
                        throw std::invalid_argument("poset relation is not transitive");
            }
}

SubsetFamily face_poset(const SimplicialComplex& L) {
    if (L.num_vertices() > 64) throw std::invalid_argument("complex too large for subset family");
    SubsetFamily fam;
    fam.ground = L.vertices();
    for (const auto& face : L.faces()) {
        std::uint64_t mask = 0;
        for (int v : face) mask |= std::uint64_t{1} << v;
        fam.members.push_back(mask);
    }
    if (fam.members.empty()) fam.members.push_back(0);  // poset of faces of the void complex
    std::sort(fam.members.begin(), fam.members.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    fam.members.erase(std::unique(fam.members.begin(), fam.members.end()), fam.members.end());
    return fam;
}

std::string subset_label(std::uint64_t mask, const std::vector<std::string>& ground) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < ground.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) {
            if (!first) out += ",";
            out += ground[i];
            first = false;
        }
    return out + "}";
}

SimplicialComplex order_complex(const Poset& P) {
    SimplicialComplex L(P.elements());
    const int n = P.size();
    // Chains extended by elements above their maximum; transitivity makes
    // this enumerate exactly the totally ordered subsets.
    std::vector<std::vector<int>> chains;
    for (int a = 0; a < n; ++a) chains.push_back({a});
    while (!chains.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& c : chains) {
            L.add_face_closure(c);
            for (int b = 0; b < n; ++b)
                if (P.less(c.back(), b)) {
                    auto ext = c;
                    ext.push_back(b);
                    next.push_back(std::move(ext));
                }
        }
        chains = std::move(next);
    }
    return L;
}

MirroredComplex davis_chamber(const SubsetFamily& family) {
    const auto& members = family.members;
    if (members.empty() || members[0] != 0)
        throw std::invalid_argument("subset family must contain the empty set");
    for (std::uint64_t m : members)
        for (std::size_t i = 0; i < family.ground.size(); ++i) {
            std::uint64_t sub = m & ~(std::uint64_t{1} << i);
            if (sub != m && std::find(members.begin(), members.end(), sub) == members.end())
                throw std::invalid_argument("subset family is not downward closed");
        }

    const int n = static_cast<int>(members.size());
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::uint64_t m : members) labels.push_back(subset_label(m, family.ground));
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && (members[a] & members[b]) == members[a] && members[a] != members[b])
                rel.emplace_back(a, b);
    Poset P(labels, rel);
    MirroredComplex K;
    K.complex = order_complex(P);
    for (std::size_t s = 0; s < family.ground.size(); ++s) {
        std::vector<int> outside;
        for (int a = 0; a < n; ++a)
            if (!(members[a] & (std::uint64_t{1} << s))) outside.push_back(a);
        K.mirrors.push_back(full_subcomplex(K.complex, outside));
    }
    return K;
}

SimplicialComplex octahedral_complex(int p, const std::vector<std::string>& V) {
    if (p < 0) throw std::invalid_argument("octahedral_complex requires p >= 0");
    if (V.empty()) throw std::invalid_argument("octahedral_complex requires a nonempty vertex set");
    SimplicialComplex result;
    bool first = true;
    for (const auto& v : V) {
        std::vector<std::string> pts;
        for (int i = 0; i <= p; ++i) pts.push_back(v + ":" + std::to_string(i));
        SimplicialComplex axis(pts);
        for (int i = 0; i <= p; ++i) axis.add_face_closure({i});
        result = first ? axis : join(result, axis);
        first = false;
    }
    return result;
}

SimplicialComplex join(const SimplicialComplex& A, const SimplicialComplex& B) {
    std::vector<std::string> vertices = A.vertices();
    for (const auto& v : B.vertices()) {
        if (A.vertex_index(v) >= 0)
            throw std::invalid_argument("join requires disjoint vertex labels: " + v);
        vertices.push_back(v);
    }
    SimplicialComplex out(vertices);
    const int offset = A.num_vertices();
    std::vector<std::vector<int>> afaces(A.faces().begin(), A.faces().end());
    std::vector<std::vector<int>> bfaces(B.faces().begin(), B.faces().end());
    if (afaces.empty()) afaces.push_back({});
    if (bfaces.empty()) bfaces.push_back({});
    for (const auto& a : afaces)
        for (const auto& b : bfaces) {
            std::vector<int> face = a;
            for (int v : b) face.push_back(v + offset);
            out.add_face_closure(face);
        }
    return out;
}

SimplicialComplex full_subcomplex(const SimplicialComplex& L, const std::vector<int>& drop) {
    std::vector<bool> dropped(L.num_vertices(), false);
    for (int v : drop) {
        if (v < 0 || v >= L.num_vertices())
            throw std::invalid_argument("full_subcomplex vertex out of range");
        dropped[v] = true;
    }
    std::vector<std::string> kept_labels;
    std::vector<int> new_index(L.num_vertices(), -1);
    for (int v = 0; v < L.num_vertices(); ++v)
        if (!dropped[v]) {
            new_index[v] = static_cast<int>(kept_labels.size());
            kept_labels.push_back(L.vertex_label(v));
        }
    SimplicialComplex out(kept_labels);
    for (const auto& face : L.faces()) {
        bool keep = true;
        for (int v : face)
            if (dropped[v]) {
                keep = false;
                break;
            }
        if (!keep) continue;
        std::vector<int> mapped;
        mapped.reserve(face.size());
        for (int v : face) mapped.push_back(new_index[v]);
        out.add_face_closure(mapped);
    }
    return out;
}

}  // namespace coxcover
