#pragma once

#include <map>
#include <string>
#include <tuple>

#include "permucell/chain.hpp"
#include "permucell/monomial.hpp"

namespace permucell {

/// Label of a polydifferential Hochschild cochain: coefficient monomial J
/// (may be empty) and derivative bunches I_1..I_k (each nonempty). Stands
/// for the arity-k operator f_1 x ... x f_k |-> x^J prod_a d^{|I_a|}f_a/dx^{I_a}.
struct PolyOpLabel {
    Monomial coeff;            // J
    MultiIndexTuple bunches;   // I_1..I_k

    int arity() const { return static_cast<int>(bunches.size()); }
    int grade_m() const {
        int m = 0;
        for (const auto& b : bunches) m += b.weight();
        return m;
    }
    int grade_n() const { return coeff.weight(); }
    std::string label() const;  // H(J=x1; I=[x1*x2, x2])

    friend bool operator<(const PolyOpLabel& a, const PolyOpLabel& b) {
        return std::tie(a.coeff, a.bunches) < std::tie(b.coeff, b.bunches);
    }
    friend bool operator==(const PolyOpLabel& a, const PolyOpLabel& b) {
        return a.coeff == b.coeff && a.bunches == b.bunches;
    }
};

/// Dual-basis element of the full Hochschild complex: sends the monomial
/// tuple `inputs` to `output` and every other tuple to zero.
struct FullHochLabel {
    MultiIndexTuple inputs;  // nonempty monomials
    Monomial output;         // may be empty (coefficients live in the unital algebra)

    int arity() const { return static_cast<int>(inputs.size()); }
    int in_degree() const {
        int s = 0;
        for (const auto& m : inputs) s += m.weight();
        return s;
    }
    int weight() const { return output.weight() - in_degree(); }
    std::string label() const;  // F(in=[x1, x1^2]; out=x1^3)

    friend bool operator<(const FullHochLabel& a, const FullHochLabel& b) {
        return std::tie(a.inputs, a.output) < std::tie(b.inputs, b.output);
    }
    friend bool operator==(const FullHochLabel& a, const FullHochLabel& b) {
        return a.inputs == b.inputs && a.output == b.output;
    }
};

using PolyCochain = std::map<PolyOpLabel, Rational>;
using FullCochain = std::map<FullHochLabel, Rational>;

/// Differential on polydifferential labels: bunch a splits into ordered
/// nonempty multiset halves (A,B) with sign (-1)^a and the multinomial
/// splitting multiplicity. Raises arity by one, preserves the bigrade.
PolyCochain polydiff_diff_terms(const PolyOpLabel& L);

/// Hochschild differential on dual-basis labels, truncated to total input
/// degree <= max_deg (quotient-complex semantics).
FullCochain hochschild_diff_terms(const FullHochLabel& L, int max_deg);

FullCochain apply_hochschild_diff(const FullCochain& z, int max_deg);

/// The operator attached to a polydifferential label, expanded over the
/// dual basis up to input degree max_deg. Throws if max_deg < m (the image
/// would be identically zero), naming the needed truncation.
FullCochain include_polydiff(const PolyOpLabel& L, int max_deg);

/// Polydifferential Hochschild complex at bigrade (m, n): degree-k piece has
/// all labels with k bunches, 1 <= k <= m.
FinChainComplex build_polydiff_complex(int dim, int m, int n);

std::vector<PolyOpLabel> enumerate_poly_labels(int dim, int m, int n, int k);

/// Truncated full Hochschild complex: degree-k piece has all dual-basis
/// labels of internal weight w, arity k, total input degree <= max_deg.
FinChainComplex build_full_hochschild_complex(int dim, int weight, int max_deg);

std::vector<FullHochLabel> enumerate_full_labels(int dim, int weight, int max_deg, int arity);

}  // namespace permucell
