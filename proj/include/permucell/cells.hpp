#pragma once

#include <map>
#include <string>
#include <vector>

#include "permucell/chain.hpp"

namespace permucell {

/// Face of the (n-1)-simplex in R^n cut out by x^i = 0 for i in `vanishing`.
/// Geometric dimension: n - |vanishing| - 1.
struct SimplexCell {
    int n = 0;
    std::vector<int> vanishing;  // strictly increasing, values in 1..n

    int dim() const { return n - static_cast<int>(vanishing.size()) - 1; }
    std::string label() const;  // e.g. S(4;{2,4})
    friend bool operator<(const SimplexCell& a, const SimplexCell& b) {
        return std::tie(a.n, a.vanishing) < std::tie(b.n, b.vanishing);
    }
    friend bool operator==(const SimplexCell& a, const SimplexCell& b) {
        return a.n == b.n && a.vanishing == b.vanishing;
    }
};

/// Face of the permutahedron P_{n-1}, indexed by an ordered set partition
/// [n] = I_1 | ... | I_k. Blocks are stored internally sorted ascending.
/// Geometric dimension: n - k.
struct PermCell {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    int dim() const { return n - static_cast<int>(blocks.size()); }
    std::string label() const;  // e.g. P(3;{1,3}|{2})
    friend bool operator<(const PermCell& a, const PermCell& b) {
        return std::tie(a.n, a.blocks) < std::tie(b.n, b.blocks);
    }
    friend bool operator==(const PermCell& a, const PermCell& b) {
        return a.n == b.n && a.blocks == b.blocks;
    }
};

template <class Cell>
using SignedCellSum = std::map<Cell, Rational>;

/// Boundary of a simplex face: sum over j outside the vanishing set of the
/// face with j adjoined, signed (-1)^{p+1} where p is the position of j in
/// the ascending complement.
SignedCellSum<SimplexCell> simplex_boundary(const SimplexCell& c);

/// Boundary of a permutahedron face: over every block i and every ordered
/// split of block i into nonempty (I', I''), with sign
/// (-1)^{i+1+|I_1|+...+|I_{i-1}|+|I'|} times the sign of the shuffle sorting
/// I'|I'' back into ascending order.
SignedCellSum<PermCell> perm_boundary(const PermCell& c);

/// Relabel a cell by a permutation g of [n] (g[i] is the image of i+1) and
/// renormalize, returning the sign picked up from re-sorting skew data.
std::pair<SimplexCell, int> sn_action(const std::vector<int>& g, const SimplexCell& c);
std::pair<PermCell, int> sn_action(const std::vector<int>& g, const PermCell& c);

std::vector<SimplexCell> enumerate_simplex_cells(int n);
std::vector<PermCell> enumerate_perm_cells(int n);

/// Full cell complexes, graded by negated geometric dimension so the
/// boundary raises the stored degree.
FinChainComplex build_simplex_complex(int n);
FinChainComplex build_perm_complex(int n);

/// f-vector: geometric dimension -> number of cells.
std::map<int, long> f_vector(const FinChainComplex& c);

}  // namespace permucell
