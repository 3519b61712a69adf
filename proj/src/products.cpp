#include "coxcover/products.hpp"

#include <algorithm>
#include <functional>

namespace coxcover {

ProductSpec::ProductSpec(std::vector<CoxeterMatrix> factors,
                         std::map<std::pair<int, int>, std::set<std::pair<int, int>>> relations)
    : factors_(std::move(factors)), relations_(std::move(relations)) {
    if (factors_.empty()) throw std::invalid_argument("product needs at least one factor");
    const int p = num_factors();
    for (const auto& [key, pairs] : relations_) {
        auto [i, j] = key;
        if (i < 0 || j < 0 || i >= p || j >= p || i == j)
            throw std::invalid_argument("relation indexes a bad factor pair");
        for (auto [si, sj] : pairs)
            if (si < 0 || si >= factors_[i].rank() || sj < 0 || sj >= factors_[j].rank())
                throw std::invalid_argument("relation pair out of range");
    }
    // R_ji must mirror R_ij; fill one side if only the other was given.
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            auto ij = relations_.find({i, j});
            auto ji = relations_.find({j, i});
            if (ij != relations_.end() && ji != relations_.end()) {
                for (auto [si, sj] : ij->second)
                    if (!ji->second.count({sj, si}))
                        throw std::invalid_argument("relations are not symmetric across factors");
                if (ij->second.size() != ji->second.size())
                    throw std::invalid_argument("relations are not symmetric across factors");
            } else if (ij != relations_.end()) {
                auto& mirror = relations_[{j, i}];
                for (auto [si, sj] : ij->second) mirror.insert({sj, si});
            } else if (ji != relations_.end()) {
                auto& mirror = relations_[{i, j}];
                for (auto [sj, si] : ji->second) mirror.insert({si, sj});
            }
        }
}

ProductSpec ProductSpec::graph_product(std::vector<CoxeterMatrix> factors,
                                       const std::set<std::pair<int, int>>& edges) {
    const int p = static_cast<int>(factors.size());
    auto connected = [&](int i, int j) {
        return edges.count({i, j}) > 0 || edges.count({j, i}) > 0;
    };
    std::map<std::pair<int, int>, std::set<std::pair<int, int>>> relations;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            if (i == j || connected(i, j)) continue;
            auto& r = relations[{i, j}];
            for (int si = 0; si < factors[i].rank(); ++si)
                for (int sj = 0; sj < factors[j].rank(); ++sj) r.insert({si, sj});
        }
    return ProductSpec(std::move(factors), std::move(relations));
}

bool ProductSpec::deleted(int i, int si, int j, int sj) const {
    auto it = relations_.find({i, j});
    return it != relations_.end() && it->second.count({si, sj}) > 0;
}

SquareSpec::SquareSpec(std::vector<CoxeterMatrix> factors,
                       std::vector<std::map<std::string, std::string>> to_base)
    : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("square product needs at least one factor");
    const int rank = factors_[0].rank();
    for (const auto& f : factors_)
        if (f.rank() != rank)
            throw std::invalid_argument("square product factors must have equal rank");
    if (!to_base.empty() && static_cast<int>(to_base.size()) != num_factors())
        throw std::invalid_argument("one bijection per factor expected");
    for (int i = 0; i < num_factors(); ++i) {
        std::vector<int> map(rank, -1);
        if (to_base.empty() || to_base[i].empty()) {
            for (int s = 0; s < rank; ++s) map[s] = s;  // positional identification
        } else {
            for (const auto& [from, to] : to_base[i]) {
                int s = factors_[i].index_of(from);
                int b = factors_[0].index_of(to);
                if (s < 0 || b < 0)
                    throw std::invalid_argument("bijection mentions an unknown generator");
                map[s] = b;
            }
        }
        std::vector<bool> hit(rank, false);
        for (int s = 0; s < rank; ++s) {
            if (map[s] < 0) throw std::invalid_argument("bijection misses a generator");
            if (hit[map[s]]) throw std::invalid_argument("bijection is not injective");
            hit[map[s]] = true;
        }
        if (i == 0)
            for (int s = 0; s < rank; ++s)
                if (map[s] != s)
                    throw std::invalid_argument("factor 0 must map to itself by the identity");
        to_base_.push_back(std::move(map));
    }
}

int SquareSpec::theta(int i, int j, int s) const {
    const int b = to_base_[i][s];
    for (int t = 0; t < factors_[j].rank(); ++t)
        if (to_base_[j][t] == b) return t;
    throw std::logic_error("incompatible bijection family");
}

ProductSpec SquareSpec::as_product_spec() const {
    std::map<std::pair<int, int>, std::set<std::pair<int, int>>> relations;
    for (int i = 0; i < num_factors(); ++i)
        for (int j = 0; j < num_factors(); ++j) {
            if (i == j) continue;
            auto& r = relations[{i, j}];
            for (int s = 0; s < factors_[i].rank(); ++s) r.insert({s, theta(i, j, s)});
        }
    return ProductSpec(factors_, std::move(relations));
}

namespace {

CoxeterMatrix assemble(const std::vector<CoxeterMatrix>& factors,
                       const std::function<bool(int, int, int, int)>& deleted) {
    std::vector<std::string> gens;
    std::vector<int> factor_of, local;
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (int s = 0; s < factors[i].rank(); ++s) {
            gens.push_back(namespaced_label(factors[i].label(s), static_cast<int>(i)));
            factor_of.push_back(static_cast<int>(i));
            local.push_back(s);
        }
    const int n = static_cast<int>(gens.size());
    std::vector<std::vector<int>> entries(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b)
                entries[a][b] = 1;
            else if (factor_of[a] == factor_of[b])
                entries[a][b] = factors[factor_of[a]].order(local[a], local[b]);
            else
                entries[a][b] =
                    deleted(factor_of[a], local[a], factor_of[b], local[b]) ? 0 : 2;
        }
    return CoxeterMatrix(std::move(gens), std::move(entries));
}

}  // namespace

CoxeterMatrix product_matrix(const ProductSpec& spec) {
    return assemble(spec.factors(), [&](int i, int si, int j, int sj) {
        return spec.deleted(i, si, j, sj);
    });
}

CoxeterMatrix square_matrix(const SquareSpec& spec) {
    return assemble(spec.factors(), [&](int i, int si, int j, int sj) {
        return spec.theta(i, j, si) == sj;
    });
}

bool product_spherical_check(const ProductSpec& spec, const std::vector<std::string>& T) {
    CoxeterMatrix M = product_matrix(spec);
    std::vector<std::vector<int>> parts(spec.num_factors());
    std::uint64_t mask = 0;
    for (const auto& label : T) {
        int g = M.index_of(label);
        if (g < 0) throw std::invalid_argument("unknown generator label: " + label);
        mask |= std::uint64_t{1} << g;
    }
    // Recover factor-local indices from the namespaced assembly order.
    int g = 0;
    for (int i = 0; i < spec.num_factors(); ++i)
        for (int s = 0; s < spec.factors()[i].rank(); ++s, ++g)
            if (mask & (std::uint64_t{1} << g)) parts[i].push_back(s);

    bool spherical = true;
    for (int i = 0; i < spec.num_factors() && spherical; ++i)
        spherical = is_spherical(parts[i], spec.factors()[i]);
    for (int i = 0; i < spec.num_factors() && spherical; ++i)
        for (int j = 0; j < spec.num_factors() && spherical; ++j) {
            if (i == j) continue;
            for (int si : parts[i])
                for (int sj : parts[j])
                    if (spec.deleted(i, si, j, sj)) spherical = false;
        }

    if (spherical != is_spherical(mask, M))
        throw std::logic_error("factorwise sphericity disagrees with the assembled diagram");
    return spherical;
}

SquareNerve square_nerve(const SquareSpec& spec) {
    const int p = spec.num_factors() - 1;
    const CoxeterMatrix& base = spec.factors()[0];
    CoxeterMatrix M = square_matrix(spec);
    SimplicialComplex octa = octahedral_complex(p, base.generators());
    SimplicialComplex image(octa.vertices());

    // Octahedral vertex for generator s of factor i: base label with the
    // owning factor recorded as the coordinate value.
    std::map<std::string, std::string> embedding;
    std::vector<int> vertex_map;  // assembled generator -> octa vertex
    for (int i = 0; i <= p; ++i)
        for (int s = 0; s < base.rank(); ++s) {
            std::string from = namespaced_label(spec.factors()[i].label(s), i);
            std::string to = base.label(spec.to_base(i, s)) + ":" + std::to_string(i);
            embedding[from] = to;
        }
    for (int g = 0; g < M.rank(); ++g) {
        int v = octa.vertex_index(embedding.at(M.label(g)));
        if (v < 0) throw std::logic_error("embedding misses the octahedral complex");
        vertex_map.push_back(v);
    }

    SphericalPoset sp = spherical_poset(M);
    for (std::uint64_t mask : sp.subsets()) {
        if (mask == 0) continue;
        std::vector<int> face;
        for (int g = 0; g < M.rank(); ++g)
            if (mask & (std::uint64_t{1} << g)) face.push_back(vertex_map[g]);
        std::sort(face.begin(), face.end());
        if (!octa.has_face(face))
            throw std::logic_error("spherical tuple does not land in the octahedral complex");
        image.add_face_closure(face);
    }

    // The embedding must be a face-set isomorphism from the nerve.
    SimplicialComplex N = nerve(M);
    std::set<std::vector<int>> relabelled;
    for (const auto& face : N.faces()) {
        std::vector<int> mapped;
        for (int v : face) mapped.push_back(vertex_map[M.index_of(N.vertex_label(v))]);
        std::sort(mapped.begin(), mapped.end());
        relabelled.insert(mapped);
    }
    if (relabelled != image.faces())
        throw std::logic_error("square nerve image is not isomorphic to the nerve");

    return SquareNerve{std::move(image), std::move(embedding)};
}

CoveredBall product_cover_pipeline(const CoxeterMatrix& assembled,
                                   const std::vector<Building>& factors, int base, int radius,
                                   std::size_t class_cap) {
    Building cprime = product_building(factors);
    if (assembled.generators() != cprime.coxeter().generators())
        throw std::invalid_argument("assembled matrix does not match the product building type");
    for (int a = 0; a < assembled.rank(); ++a)
        for (int b = 0; b < assembled.rank(); ++b) {
            int m = assembled.order(a, b);
            int mp = cprime.coxeter().order(a, b);
            if (m != 0 && m != mp)
                throw std::invalid_argument(
                    "assembled matrix must agree with the direct product away from deletions");
        }

    std::map<std::string, std::string> identity;
    for (const auto& g : assembled.generators()) identity[g] = g;
    FoldingData fd = make_folding(nerve(assembled), cprime.coxeter(), identity);
    if (!(surgery(fd) == assembled))
        throw std::logic_error("surgery of the assembled nerve does not recover the matrix");
    return build_ball(fd, cprime, base, radius, class_cap);
}

}  // namespace coxcover
