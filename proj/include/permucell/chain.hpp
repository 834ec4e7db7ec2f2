#pragma once

#include <map>
#include <string>
#include <vector>

#include "permucell/sparse.hpp"

namespace permucell {

/// Finite cochain complex: ordered basis labels per degree and sparse
/// differentials diff[d] : span(basis[d]) -> span(basis[d+1]).
///
/// Cell complexes are stored with degree = -(geometric dimension), so their
/// boundary operator raises the stored degree like every other differential
/// here. Degrees with empty basis are kept explicitly inside the declared
/// range so Betti tables have unambiguous zeros.
struct FinChainComplex {
    std::vector<int> degrees;                      // ascending, contiguous
    std::map<int, std::vector<std::string>> basis;
    std::map<int, SparseMatrix> diff;              // keyed by source degree

    int dim_at(int d) const {
        auto it = basis.find(d);
        return it == basis.end() ? 0 : static_cast<int>(it->second.size());
    }
};

struct ValidationIssue {
    int degree;           // source degree of the offending composite
    std::string label;    // basis label the violation was detected on
    std::string detail;   // e.g. the nonzero coefficient found
};

struct ValidationReport {
    bool ok = true;
    std::vector<ValidationIssue> issues;
};

using BettiTable = std::map<int, int>;

/// Shape compatibility and d*d = 0, exact. Violations are report content.
ValidationReport validate(const FinChainComplex& c);

/// Exact cohomology dimensions per degree. Throws if validate() fails.
BettiTable betti(const FinChainComplex& c);

/// Alternating sum of basis sizes.
long euler(const FinChainComplex& c);

std::string complex_to_json(const FinChainComplex& c);
FinChainComplex complex_from_json(const std::string& text);

std::string betti_to_json(const BettiTable& t);
std::string betti_to_markdown(const BettiTable& t);
std::string betti_to_csv(const BettiTable& t);

}  // namespace permucell
