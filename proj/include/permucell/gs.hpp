#pragma once

#include <map>
#include <string>
#include <tuple>

#include "permucell/chain.hpp"
#include "permucell/monomial.hpp"

namespace permucell {

/// Label of a polydifferential Gerstenhaber-Schack cochain. The operator
/// takes k arguments (one per derivative bunch I_a) and produces l tensor
/// factors (one per coefficient slot J_b):
///   f_1 x ... x f_k |-> (x^{J_1} x ... x x^{J_l}) . prod_a Delta^{l-1}(d f_a / dx^{I_a}).
struct GSOpLabel {
    MultiIndexTuple out_bunches;  // I_1..I_k, nonempty
    MultiIndexTuple in_bunches;   // J_1..J_l, nonempty

    int k() const { return static_cast<int>(out_bunches.size()); }
    int l() const { return static_cast<int>(in_bunches.size()); }
    int grade_m() const {
        int m = 0;
        for (const auto& b : out_bunches) m += b.weight();
        return m;
    }
    int grade_n() const {
        int n = 0;
        for (const auto& b : in_bunches) n += b.weight();
        return n;
    }
    std::string label() const;  // G(I=[x1, x1]; J=[x1^2])

    friend bool operator<(const GSOpLabel& a, const GSOpLabel& b) {
        return std::tie(a.out_bunches, a.in_bunches) < std::tie(b.out_bunches, b.in_bunches);
    }
    friend bool operator==(const GSOpLabel& a, const GSOpLabel& b) {
        return a.out_bunches == b.out_bunches && a.in_bunches == b.in_bunches;
    }
};

/// Dual-basis element of the full GS complex: sends the input monomial tuple
/// to the output monomial tuple, all parts nonempty.
struct FullGSLabel {
    MultiIndexTuple inputs;
    MultiIndexTuple outputs;

    int k() const { return static_cast<int>(inputs.size()); }
    int l() const { return static_cast<int>(outputs.size()); }
    int in_degree() const {
        int s = 0;
        for (const auto& m : inputs) s += m.weight();
        return s;
    }
    int out_degree() const {
        int t = 0;
        for (const auto& m : outputs) t += m.weight();
        return t;
    }
    std::string label() const;  // Q(in=[x1]; out=[x1, x2])

    friend bool operator<(const FullGSLabel& a, const FullGSLabel& b) {
        return std::tie(a.inputs, a.outputs) < std::tie(b.inputs, b.outputs);
    }
    friend bool operator==(const FullGSLabel& a, const FullGSLabel& b) {
        return a.inputs == b.inputs && a.outputs == b.outputs;
    }
};

using GSPolyCochain = std::map<GSOpLabel, Rational>;
using GSFullCochain = std::map<FullGSLabel, Rational>;

/// Output-side partial on polydifferential labels: split bunch I_a with sign
/// (-1)^{a+1} and multinomial multiplicity.
GSPolyCochain gs_poly_d1_terms(const GSOpLabel& L);

/// Input-side partial, raw: split slot J_b with sign (-1)^{b+1} and
/// multiplicity. The Koszul twist (-1)^k is inserted by gs_poly_diff_terms.
GSPolyCochain gs_poly_d2_terms(const GSOpLabel& L);

/// Total differential d1 + (-1)^k d2.
GSPolyCochain gs_poly_diff_terms(const GSOpLabel& L);

/// Hochschild-type partial on the full complex (multiplication on inputs,
/// iterated coproduct acting on the outer arguments), truncated.
GSFullCochain gs_full_d1_terms(const FullGSLabel& L, int max_in, int max_out);

/// CoHochschild-type partial, raw (coproduct on outputs, multiplication
/// collecting the outer split parts).
GSFullCochain gs_full_d2_terms(const FullGSLabel& L, int max_in, int max_out);

/// Total differential d1 + (-1)^k d2 on the full complex.
GSFullCochain gs_full_diff_terms(const FullGSLabel& L, int max_in, int max_out);

/// The polydifferential GS operator expanded over the dual basis.
GSFullCochain include_polydiff_gs(const GSOpLabel& L, int max_in, int max_out);

std::vector<GSOpLabel> enumerate_gs_poly_labels(int dim, int m, int n, int k, int l);

/// Polydifferential GS complex at bigrade (m, n), graded by total degree k+l.
FinChainComplex build_polydiff_gs_complex(int dim, int m, int n);

std::vector<FullGSLabel> enumerate_gs_full_labels(int dim, int weight, int max_in, int max_out,
                                                  int k, int l);

/// Weight-w slice of the truncated full GS complex, graded by k+l.
FinChainComplex build_full_gs_complex(int dim, int weight, int max_in, int max_out);

}  // namespace permucell
