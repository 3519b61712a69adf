#ifndef COXCOVER_SIMPLICIAL_HPP
#define COXCOVER_SIMPLICIAL_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace coxcover {

using BigInt = boost::multiprecision::cpp_int;

/// Finite abstract simplicial complex. Faces are stored as sorted vertex
/// index lists; the empty face is present exactly when the complex has at
/// least one face, and serves as the (-1)-cell of the augmented chain
/// complex.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    explicit SimplicialComplex(std::vector<std::string> vertices);

    static SimplicialComplex from_facets(std::vector<std::string> vertices,
                                         const std::vector<std::vector<int>>& facets);

    void add_face_closure(const std::vector<int>& face);

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::string& vertex_label(int v) const { return vertices_.at(v); }
    int vertex_index(const std::string& label) const;  // -1 if absent

    const std::set<std::vector<int>>& faces() const { return faces_; }
    bool has_face(const std::vector<int>& face) const { return faces_.count(face) > 0; }
    bool empty() const { return faces_.empty(); }

    /// Dimension of the complex; -1 if only the empty face is present,
    /// -2 for the void complex (no faces at all).
    int dimension() const;

    /// Counts of nonempty faces by dimension, f[k] = number of k-faces.
    std::vector<long long> f_vector() const;
    long long euler_characteristic() const;

    /// Faces of the given dimension, in lexicographic order.
    std::vector<std::vector<int>> faces_of_dim(int k) const;

    bool operator==(const SimplicialComplex& other) const;

private:
    std::vector<std::string> vertices_;
    std::map<std::string, int> index_;
    std::set<std::vector<int>> faces_;
};

/// Finite poset with an explicit strict order relation, verified to be
/// irreflexive and transitive on construction.
class Poset {
public:
    Poset(std::vector<std::string> elements,
          const std::vector<std::pair<int, int>>& strict_pairs);

    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<std::string>& elements() const { return elements_; }
    bool less(int a, int b) const { return less_[a][b]; }

private:
    std::vector<std::string> elements_;
    std::vector<std::vector<bool>> less_;
};

/// A downward-closed family of subsets of a ground set, with bottom element
/// the empty set. This is the shape shared by posets of spherical subsets
/// and by face posets of complexes.
struct SubsetFamily {
    std::vector<std::string> ground;
    std::vector<std::uint64_t> members;  // sorted by (popcount, value); contains 0
};

SubsetFamily face_poset(const SimplicialComplex& L);

struct MirroredComplex {
    SimplicialComplex complex;
    std::vector<SimplicialComplex> mirrors;  // indexed like the ground set
};

std::string subset_label(std::uint64_t mask, const std::vector<std::string>& ground);

SimplicialComplex order_complex(const Poset& P);

/// Order complex of a downward-closed subset family, mirrored by
/// "contains {s}". For the poset of spherical subsets this is the Davis
/// chamber K with K_s the mirror over s.
MirroredComplex davis_chamber(const SubsetFamily& family);

/// n-fold join of (p+1)-point sets, one per element of V. Vertices are
/// labelled "v:i" for v in V and i in 0..p.
SimplicialComplex octahedral_complex(int p, const std::vector<std::string>& V);

SimplicialComplex join(const SimplicialComplex& A, const SimplicialComplex& B);

/// All faces of L containing no vertex of `drop` (the full subcomplex on the
/// complementary vertex set).
SimplicialComplex full_subcomplex(const SimplicialComplex& L, const std::vector<int>& drop);

struct HomologyEntry {
    int degree = 0;
    long long rank = 0;
    std::vector<BigInt> torsion;  // each >= 2, each dividing the next
};

/// Reduced integer homology, one entry per degree from -1 up to dim(L).
struct HomologyReport {
    std::vector<HomologyEntry> entries;

    long long rank(int degree) const;
    const std::vector<BigInt>* torsion(int degree) const;
    bool trivial() const;  // all ranks zero, no torsion
};

struct SmithResult {
    std::vector<BigInt> invariants;  // positive, d1 | d2 | ... | dr
    int rank = 0;
};

SmithResult smith_normal_form(std::vector<std::vector<BigInt>> A);

HomologyReport reduced_homology(const SimplicialComplex& L);

struct PuncturedWitness {
    std::vector<int> face;            // the simplex sigma that fails
    std::vector<int> bad_degrees;     // degrees with unexpected rank or torsion
};

struct PuncturedReport {
    bool ok = false;
    std::vector<PuncturedWitness> witnesses;
};

/// True iff for every closed simplex sigma of L (including the empty one)
/// the reduced homology of the full subcomplex on the complement of sigma
/// is free and concentrated in the given degree. Zero groups pass for any
/// degree.
PuncturedReport punctured_check(const SimplicialComplex& L, int degree);

}  // namespace coxcover

#endif
