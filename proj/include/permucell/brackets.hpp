#pragma once

#include <map>
#include <string>
#include <vector>

#include "permucell/hochschild.hpp"

namespace permucell {

/// Arity and input-degree bounds a cochain is declared to live in. All
/// bracket operations verify results stay inside and throw on overflow
/// rather than silently truncating.
struct Window {
    int max_arity = 0;
    int max_deg = 0;
};

/// Finite Hochschild cochain with values in the non-unital polynomial ring:
/// every term's output monomial is nonempty (the dg Lie algebra the
/// Maurer-Cartan checker lives in).
struct Cochain {
    int dim = 0;
    Window window;
    FullCochain terms;
};

/// Multiplication cochain of the non-unital polynomial ring, truncated to
/// input degree <= max_deg; window allows brackets up to max_arity.
Cochain mu_cochain(int dim, int max_deg, int max_arity = 4);

/// Arity-1 identity-on-monomials cochain.
Cochain identity_cochain(int dim, int max_deg, int max_arity = 4);

/// Insertion composition with Koszul signs (-1)^{(p-i)(q-1)} for inserting
/// into slot i of an arity-p term; the convention under which d_H = [mu, .]
/// holds exactly at every arity. Cancelling terms net out before the window
/// check, so only surviving out-of-window terms raise an overflow.
Cochain compose_insertion(const Cochain& a, const Cochain& b);

/// [a, b] = a o b - (-1)^{(p-1)(q-1)} b o a, termwise on arities.
Cochain gerstenhaber_bracket(const Cochain& a, const Cochain& b);

/// Same bracket, but the result is passed to the given quotient window
/// (terms outside are dropped) instead of raising overflow errors.
Cochain gerstenhaber_bracket_restricted(const Cochain& a, const Cochain& b, Window w);

/// Explicit passage to a smaller quotient window.
Cochain restrict_to_window(const Cochain& a, Window w);

/// Hochschild differential applied inside the cochain's window.
Cochain hochschild_diff(const Cochain& a);

/// Returns [mu, a] and verifies it equals hochschild_diff(a) exactly.
Cochain hochschild_diff_via_bracket(const Cochain& a);

struct McReport {
    bool is_mc = false;
    Cochain residual;  // d_H g + (1/2)[g, g]
};

/// Maurer-Cartan residual within the window. When g carries positive-weight
/// terms the bracket near the top of the window is under-informed, so pass a
/// report window at least max-weight shallower than g's own.
McReport mc_check(const Cochain& g);
McReport mc_check(const Cochain& g, Window report);

/// Plain operator composition u(v(...)) for an arity-1 cochain u; used to
/// transport multiplications along invertible arity-1 maps.
Cochain post_compose(const Cochain& u, const Cochain& v);
Cochain plug_slots(const Cochain& a, const Cochain& t);  // a(t x t x ... x t)

/// Inverse of (id + phi) on the window, phi weight-raising arity-1.
Cochain neumann_inverse(const Cochain& phi);

/// Polyvector field: sum of (e_{i_1} ^ ... ^ e_{i_a}) tensor x^S terms with
/// exterior part nonempty.
struct PolyVector {
    int dim = 0;
    std::map<std::pair<std::vector<int>, Monomial>, Rational> terms;

    friend bool operator==(const PolyVector& a, const PolyVector& b) {
        return a.dim == b.dim && a.terms == b.terms;
    }
};

/// Odd Poisson (Schouten) bracket: the biderivation extending the commutator
/// of vector fields, with the e_i acting as odd directions.
PolyVector schouten_bracket(const PolyVector& p, const PolyVector& q);

PolyVector wedge(const PolyVector& p, const PolyVector& q);

/// Project a polydifferential cocycle at bigrade (m, n) onto polyvectors:
/// antisymmetrize the top-arity (k = m) component. Throws on non-cocycles,
/// reporting a nonzero term of the differential.
PolyVector hkr_project(const PolyCochain& z, int dim, int m, int n);

/// Same projection from the dual-basis side: terms whose inputs all have
/// weight one. Cocycle check runs inside the given window.
PolyVector hkr_project_full(const Cochain& z, int m);

std::string cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const std::string& text);
std::string polyvector_str(const PolyVector& p);

}  // namespace permucell
