#ifndef COXCOVER_PRODUCTS_HPP
#define COXCOVER_PRODUCTS_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "coxcover/chambers.hpp"
#include "coxcover/cover.hpp"
#include "coxcover/coxeter.hpp"

namespace coxcover {

/// Partial product data: factor systems plus, for each ordered pair of
/// factors, the set of cross pairs whose entry is deleted (sent to
/// infinity). R[j][i] must be the transpose of R[i][j].
class ProductSpec {
public:
    ProductSpec(std::vector<CoxeterMatrix> factors,
                std::map<std::pair<int, int>, std::set<std::pair<int, int>>> relations);

    /// Graph product: full relations between non-adjacent factors, none
    /// between adjacent ones.
    static ProductSpec graph_product(std::vector<CoxeterMatrix> factors,
                                     const std::set<std::pair<int, int>>& edges);

    int num_factors() const { return static_cast<int>(factors_.size()); }
    const std::vector<CoxeterMatrix>& factors() const { return factors_; }
    bool deleted(int i, int si, int j, int sj) const;

private:
    std::vector<CoxeterMatrix> factors_;
    std::map<std::pair<int, int>, std::set<std::pair<int, int>>> relations_;
};

/// Square product data: equinumerous factors with a compatible family of
/// bijections; the deleted pairs are exactly the theta-diagonals.
class SquareSpec {
public:
    /// Bijections are given per factor as maps onto factor 0's generators;
    /// factor 0 maps by identity. Defaults to positional identification.
    SquareSpec(std::vector<CoxeterMatrix> factors,
               std::vector<std::map<std::string, std::string>> to_base = {});

    int num_factors() const { return static_cast<int>(factors_.size()); }
    const std::vector<CoxeterMatrix>& factors() const { return factors_; }

    /// theta_{i0}: index of the factor-0 generator identified with generator
    /// s of factor i.
    int to_base(int i, int s) const { return to_base_[i][s]; }
    int theta(int i, int j, int s) const;  // theta_{ij}

    ProductSpec as_product_spec() const;

private:
    std::vector<CoxeterMatrix> factors_;
    std::vector<std::vector<int>> to_base_;
};

/// Assembled Coxeter matrix of a partial product: block diagonal factor
/// entries, infinity on deleted cross pairs, 2 elsewhere. Generator labels
/// are namespaced by factor index.
CoxeterMatrix product_matrix(const ProductSpec& spec);
CoxeterMatrix square_matrix(const SquareSpec& spec);

/// Sphericity in the assembled system via the factorwise characterization:
/// every part spherical in its factor and no deleted cross pair inside T.
/// Cross-checked against the diagram classification on the assembled matrix.
bool product_spherical_check(const ProductSpec& spec, const std::vector<std::string>& T);

struct SquareNerve {
    SimplicialComplex complex;                     // subcomplex of O(p, S_0)
    std::map<std::string, std::string> embedding;  // nerve vertex -> octahedral vertex
};

/// Image of the nerve of the square product inside the octahedral complex
/// O(p, S_0): a spherical tuple maps to the partial function recording which
/// factor owns each occupied base generator. Verified isomorphic to the
/// nerve of the assembled matrix.
SquareNerve square_nerve(const SquareSpec& spec);

/// Assembles the product building of the factors, folds the assembled nerve
/// into it (identity on generators), and builds the covered ball: the
/// free/graph/square product of the factor buildings.
CoveredBall product_cover_pipeline(const CoxeterMatrix& assembled,
                                   const std::vector<Building>& factors, int base, int radius,
                                   std::size_t class_cap = 1000000);

}  // namespace coxcover

#endif
