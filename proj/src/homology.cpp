#include <algorithm>
#include <map>
#include <stdexcept>

#include "coxcover/simplicial.hpp"

namespace coxcover {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

void swap_rows(std::vector<std::vector<BigInt>>& A, int i, int j) { std::swap(A[i], A[j]); }

void swap_cols(std::vector<std::vector<BigInt>>& A, int i, int j) {
    for (auto& row : A) std::swap(row[i], row[j]);
}

}  // namespace

SmithResult smith_normal_form(std::vector<std::vector<BigInt>> A) {
    SmithResult out;
    const int rows = static_cast<int>(A.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(A[0].size());
    int k = 0;
    while (k < rows && k < cols) {
        // Pivot: minimal nonzero absolute value in the trailing block.
        int pi = -1, pj = -1;
        BigInt best = 0;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j) {
                if (A[i][j] == 0) continue;
                BigInt a = abs_big(A[i][j]);
                if (pi < 0 || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        swap_rows(A, k, pi);
        swap_cols(A, k, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = k + 1; i < rows; ++i) {
                if (A[i][k] == 0) continue;
                BigInt q = A[i][k] / A[k][k];
                for (int j = k; j < cols; ++j) A[i][j] -= q * A[k][j];
                if (A[i][k] != 0) {
                    // Remainder is smaller than the pivot; promote it.
                    swap_rows(A, k, i);
                    clean = false;
                }
            }
            for (int j = k + 1; j < cols; ++j) {
                if (A[k][j] == 0) continue;
                BigInt q = A[k][j] / A[k][k];
                for (int i = k; i < rows; ++i) A[i][j] -= q * A[i][k];
                if (A[k][j] != 0) {
                    swap_cols(A, k, j);
                    clean = false;
                }
            }
            if (clean) {
                // Pivot must divide the rest of the block for the invariant
                // factor chain; if not, fold the offending row in and redo.
                for (int i = k + 1; i < rows && clean; ++i)
                    for (int j = k + 1; j < cols && clean; ++j)
                        if (A[i][j] % A[k][k] != 0) {
                            for (int c = k; c < cols; ++c) A[k][c] += A[i][c];
                            clean = false;
                        }
            }
        }
        out.invariants.push_back(abs_big(A[k][k]));
        ++k;
    }
    out.rank = static_cast<int>(out.invariants.size());
    return out;
}

namespace {

// Boundary matrix from (k)-faces to (k-1)-faces of the augmented complex.
std::vector<std::vector<BigInt>> boundary_matrix(const std::vector<std::vector<int>>& from,
                                                 const std::vector<std::vector<int>>& to) {
    std::map<std::vector<int>, int> to_index;
    for (int i = 0; i < static_cast<int>(to.size()); ++i) to_index[to[i]] = i;
    std::vector<std::vector<BigInt>> A(to.size(), std::vector<BigInt>(from.size(), 0));
    for (int j = 0; j < static_cast<int>(from.size()); ++j) {
        const auto& face = from[j];
        int sign = 1;
        for (std::size_t drop = 0; drop < face.size(); ++drop) {
            std::vector<int> sub;
            sub.reserve(face.size() - 1);
            for (std::size_t i = 0; i < face.size(); ++i)
                if (i != drop) sub.push_back(face[i]);
            auto it = to_index.find(sub);
            if (it == to_index.end()) throw std::logic_error("complex not closed under subsets");
            A[it->second][j] += sign;
            sign = -sign;
        }
    }
    return A;
}

bool is_zero(const std::vector<std::vector<BigInt>>& A) {
    for (const auto& row : A)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

std::vector<std::vector<BigInt>> matmul(const std::vector<std::vector<BigInt>>& A,
                                        const std::vector<std::vector<BigInt>>& B) {
    const int n = static_cast<int>(A.size());
    const int m = n == 0 ? 0 : static_cast<int>(A[0].size());
    const int p = B.empty() ? 0 : static_cast<int>(B[0].size());
    std::vector<std::vector<BigInt>> C(n, std::vector<BigInt>(p, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < m; ++k) {
            if (A[i][k] == 0) continue;
            for (int j = 0; j < p; ++j) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

}  // namespace

long long HomologyReport::rank(int degree) const {
    for (const auto& e : entries)
        if (e.degree == degree) return e.rank;
    return 0;
}

const std::vector<BigInt>* HomologyReport::torsion(int degree) const {
    for (const auto& e : entries)
        if (e.degree == degree) return &e.torsion;
    return nullptr;
}

bool HomologyReport::trivial() const {
    for (const auto& e : entries)
        if (e.rank != 0 || !e.torsion.empty()) return false;
    return true;
}

HomologyReport reduced_homology(const SimplicialComplex& L) {
    HomologyReport report;
    const int dim = L.dimension();
    if (dim < -1) return report;  // void complex

    // Chain groups of the augmented complex: degree -1 is the empty face.
    std::vector<std::vector<std::vector<int>>> basis(dim + 2);
    for (int k = -1; k <= dim; ++k) basis[k + 1] = L.faces_of_dim(k);

    // boundaries[k+1] maps C_k -> C_{k-1}; index 0 is unused (below C_{-1}).
    std::vector<std::vector<std::vector<BigInt>>> boundaries(dim + 2);
    for (int k = 0; k <= dim; ++k)
        boundaries[k + 1] = boundary_matrix(basis[k + 1], basis[k]);
    for (int k = 1; k <= dim; ++k)
        if (!is_zero(matmul(boundaries[k], boundaries[k + 1])))
            throw std::logic_error("boundary of boundary is nonzero");

    std::vector<SmithResult> snf(dim + 2);
    for (int k = 0; k <= dim; ++k) snf[k + 1] = smith_normal_form(boundaries[k + 1]);

    for (int k = -1; k <= dim; ++k) {
        HomologyEntry entry;
        entry.degree = k;
        const long long cells = static_cast<long long>(basis[k + 1].size());
        const long long rank_out = (k >= 0) ? snf[k + 1].rank : 0;
        const long long rank_in = (k < dim) ? snf[k + 2].rank : 0;
        entry.rank = cells - rank_out - rank_in;
        if (k < dim)
            for (const BigInt& d : snf[k + 2].invariants)
                if (d > 1) entry.torsion.push_back(d);
        report.entries.push_back(std::move(entry));
    }
    return report;
}

PuncturedReport punctured_check(const SimplicialComplex& L, int degree) {
    PuncturedReport report;
    report.ok = true;
    for (const auto& sigma : L.faces()) {
        SimplicialComplex complement = full_subcomplex(L, sigma);
        HomologyReport h = reduced_homology(complement);
        PuncturedWitness witness;
        witness.face = sigma;
        for (const auto& e : h.entries) {
            const bool bad =
                (e.degree != degree && (e.rank != 0 || !e.torsion.empty())) ||
                (e.degree == degree && !e.torsion.empty());
            if (bad) witness.bad_degrees.push_back(e.degree);
        }
        if (!witness.bad_degrees.empty()) {
            report.ok = false;
            report.witnesses.push_back(std::move(witness));
        }
    }
    return report;
}

}  // namespace coxcover
