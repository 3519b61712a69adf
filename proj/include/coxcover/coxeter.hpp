#ifndef COXCOVER_COXETER_HPP
#define COXCOVER_COXETER_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxcover/simplicial.hpp"

namespace coxcover {

/// Raised when a rewriting or enumeration run exceeds its step budget.
class budget_exhausted_error : public std::runtime_error {
public:
    explicit budget_exhausted_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a Coxeter group enumeration exceeds the requested cutoff.
class group_too_large_error : public std::runtime_error {
public:
    explicit group_too_large_error(const std::string& what) : std::runtime_error(what) {}
};

/// Shared step counter for the rewriting routines. Every generated word
/// counts as one step; exhaustion raises instead of hanging on pathological
/// input.
struct RewriteBudget {
    long long remaining = 1000000;

    void charge(long long n = 1) {
        remaining -= n;
        if (remaining < 0) throw budget_exhausted_error("rewrite step budget exhausted");
    }
};

/// A word in the generators, stored as generator indices.
using Word = std::vector<int>;

/// Symmetric Coxeter matrix over an ordered generator set. The entry 0
/// encodes infinity; all other entries are >= 1 with 1 exactly on the
/// diagonal.
class CoxeterMatrix {
public:
    CoxeterMatrix(std::vector<std::string> generators, std::vector<std::vector<int>> entries);

    int rank() const { return static_cast<int>(generators_.size()); }
    const std::vector<std::string>& generators() const { return generators_; }
    const std::string& label(int s) const { return generators_.at(s); }
    int index_of(const std::string& label) const;  // -1 if absent

    /// m(s,t); 0 means infinity.
    int order(int s, int t) const { return entries_[s][t]; }
    bool finite_order(int s, int t) const { return entries_[s][t] != 0; }

    /// Restriction to the generators selected by the mask, keeping order.
    CoxeterMatrix restrict(std::uint64_t mask) const;

    const std::vector<std::vector<int>>& entries() const { return entries_; }
    bool operator==(const CoxeterMatrix& other) const {
        return generators_ == other.generators_ && entries_ == other.entries_;
    }

private:
    std::vector<std::string> generators_;
    std::vector<std::vector<int>> entries_;
    std::map<std::string, int> index_;
};

/// The alternating word (s,t,s,...) of length m.
Word prod_word(int s, int t, int m);

Word word_inverse(const Word& w);
std::vector<std::string> word_labels(const Word& w, const CoxeterMatrix& M);
Word word_from_labels(const std::vector<std::string>& labels, const CoxeterMatrix& M);

/// Canonical reduced form of w: the lexicographically least reduced
/// expression of the same group element, found by greedy cancellation plus
/// exhaustive flip-orbit search (Tits' solution to the word problem).
Word tits_reduce(const Word& w, const CoxeterMatrix& M);
Word tits_reduce(const Word& w, const CoxeterMatrix& M, RewriteBudget& budget);

bool words_equal(const Word& u, const Word& v, const CoxeterMatrix& M);
bool is_reduced(const Word& w, const CoxeterMatrix& M);

/// Concatenate-and-reduce helpers.
Word reduced_product(const Word& u, const Word& v, const CoxeterMatrix& M, RewriteBudget& budget);

struct GroupEnumeration {
    std::vector<Word> elements;  // canonical forms, sorted by (length, lex)
    bool complete = false;       // false when the cutoff was hit
};

/// Breadth-first enumeration of W by word length, using canonical forms as
/// element representatives. Stops after `cutoff` distinct elements.
GroupEnumeration enumerate_group(const CoxeterMatrix& M, std::size_t cutoff);
GroupEnumeration enumerate_group(const CoxeterMatrix& M, std::size_t cutoff, RewriteBudget& budget);

/// Finiteness of W_T decided by matching connected diagram components
/// against the classification of the finite irreducible Coxeter diagrams.
bool is_spherical(std::uint64_t subset_mask, const CoxeterMatrix& M);
bool is_spherical(const std::vector<int>& subset, const CoxeterMatrix& M);

/// All spherical subsets of S, downward closed, containing the empty set.
class SphericalPoset {
public:
    SphericalPoset(std::vector<std::string> generators, std::vector<std::uint64_t> subsets);

    const std::vector<std::string>& generators() const { return generators_; }
    const std::vector<std::uint64_t>& subsets() const { return subsets_; }
    std::size_t size() const { return subsets_.size(); }
    bool contains(std::uint64_t mask) const;

    SubsetFamily as_family() const { return SubsetFamily{generators_, subsets_}; }

private:
    std::vector<std::string> generators_;
    std::vector<std::uint64_t> subsets_;  // sorted by (popcount, value)
};

SphericalPoset spherical_poset(const CoxeterMatrix& M);

/// Nerve of (W,S): the complex on S whose faces are the nonempty spherical
/// subsets.
SimplicialComplex nerve(const CoxeterMatrix& M);

std::string namespaced_label(const std::string& label, int factor);

}  // namespace coxcover

#endif
