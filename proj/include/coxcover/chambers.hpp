#ifndef COXCOVER_CHAMBERS_HPP
#define COXCOVER_CHAMBERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "coxcover/coxeter.hpp"
#include "coxcover/simplicial.hpp"

namespace coxcover {

/// Chamber set with one partition into panels per generator.
class ChamberSystem {
public:
    ChamberSystem(std::vector<std::string> chamber_ids,
                  std::vector<std::vector<std::vector<int>>> panels_per_generator);

    int num_chambers() const { return static_cast<int>(ids_.size()); }
    int num_generators() const { return static_cast<int>(panels_.size()); }
    const std::vector<std::string>& chamber_ids() const { return ids_; }
    const std::string& chamber_id(int c) const { return ids_.at(c); }
    int chamber_index(const std::string& id) const;  // -1 if absent

    /// The s-panel containing chamber c (sorted chamber indices).
    const std::vector<int>& panel(int s, int c) const { return panels_[s][panel_of_[s][c]]; }
    const std::vector<std::vector<std::vector<int>>>& panels() const { return panels_; }

    bool adjacent(int s, int c, int d) const { return c != d && panel_of_[s][c] == panel_of_[s][d]; }

private:
    std::vector<std::string> ids_;
    std::vector<std::vector<std::vector<int>>> panels_;  // [s][panel] -> chambers
    std::vector<std::vector<int>> panel_of_;             // [s][chamber] -> panel index
};

struct Gallery {
    std::vector<int> chambers;
    Word type;

    int length() const { return static_cast<int>(type.size()); }
    int endpoint() const { return chambers.back(); }
    bool operator==(const Gallery& o) const { return chambers == o.chambers && type == o.type; }
    bool operator<(const Gallery& o) const {
        if (type != o.type) return type < o.type;
        return chambers < o.chambers;
    }
};

/// Chamber system of type (W,S) with a Weyl distance table of canonical
/// reduced words. Construction computes the table from minimal galleries
/// unless an explicit table is supplied.
class Building {
public:
    static Building with_computed_delta(ChamberSystem system, CoxeterMatrix coxeter);
    static Building with_delta(ChamberSystem system, CoxeterMatrix coxeter,
                               std::vector<std::vector<std::optional<Word>>> delta);

    const ChamberSystem& system() const { return system_; }
    const CoxeterMatrix& coxeter() const { return coxeter_; }

    bool delta_defined(int c, int d) const { return delta_[c][d].has_value(); }
    const Word& delta(int c, int d) const;
    int num_chambers() const { return system_.num_chambers(); }

private:
    Building(ChamberSystem system, CoxeterMatrix coxeter,
             std::vector<std::vector<std::optional<Word>>> delta);

    ChamberSystem system_;
    CoxeterMatrix coxeter_;
    std::vector<std::vector<std::optional<Word>>> delta_;
};

/// Thin building of a finite Coxeter system: chambers are the group
/// elements and delta(v,w) = v^{-1} w.
Building thin_building(const CoxeterMatrix& M, std::size_t cutoff = 1u << 20);

struct BuildingVerdict {
    bool pass = true;
    std::string axiom;   // "panel-size", "connectivity", "WD1", "WD2", "WD3", "gallery"
    std::string detail;
};

/// Exhaustive check of the Weyl distance axioms, the panel-size condition
/// and the gallery characterization (galleries of every reduced type up to
/// the length bound exist exactly between chambers at that distance).
BuildingVerdict verify_building(const Building& B, int gallery_length_bound = 4);

/// T-connected component of chamber c.
std::vector<int> residue(const ChamberSystem& system, int c, const std::vector<int>& T);

/// Chambers at Weyl length <= n from c.
std::vector<int> ball(const Building& B, int c, int n);

/// Whether A is W-isometric to the thin building of B's type.
bool is_apartment(const Building& B, const std::vector<int>& A, std::size_t cutoff = 120);

/// The map D -> delta(c, D) as a row of canonical words.
std::vector<Word> retraction(const Building& B, int c);

/// Product building: chambers are tuples, panels move one coordinate, the
/// Coxeter matrix is block diagonal with 2 across factors. Generator labels
/// are namespaced by factor index.
Building product_building(const std::vector<Building>& factors);

/// Chamber system of flags (point, line) of an incidence geometry; panels
/// group flags sharing a point (generator 0) or a line (generator 1).
ChamberSystem flag_system(const std::vector<std::vector<int>>& lines);

/// Order complex of the poset of pairs (residue, T) for T ranging over the
/// face poset of L (with the empty set), ordered by simultaneous inclusion.
/// With L the nerve this is the standard realization; with L the full
/// simplex (W finite) it is the barycentric spherical realization.
SimplicialComplex realize(const Building& B, const SimplicialComplex& L);

HomologyReport realization_homology(const Building& B, const SimplicialComplex& L);

}  // namespace coxcover

#endif
