#include "permucell/brackets.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace permucell {

namespace {

void accumulate(FullCochain& acc, const FullHochLabel& l, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(l, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) acc.erase(it);
    }
}

Window join(const Window& a, const Window& b) {
    return {std::max(a.max_arity, b.max_arity), std::max(a.max_deg, b.max_deg)};
}

int term_sign(int e) { return e % 2 == 0 ? 1 : -1; }

enum class Overflow { Throw, Restrict };

// Net accumulation first; only terms that survive cancellation are held
// against the window.
void finish(Cochain& out, FullCochain&& raw, Overflow mode, const char* who) {
    for (auto& [l, v] : raw) {
        if (v.is_zero()) continue;
        if (l.arity() > out.window.max_arity || l.in_degree() > out.window.max_deg) {
            if (mode == Overflow::Restrict) continue;
            throw std::runtime_error(std::string(who) + ": window overflow; needs max_arity >= " +
                                     std::to_string(l.arity()) + " and max_deg >= " +
                                     std::to_string(l.in_degree()));
        }
        if (l.output.is_one())
            throw std::runtime_error(std::string(who) +
                                     ": cochain output left the non-unital ring (empty output)");
        out.terms.emplace(l, std::move(v));
    }
}

FullCochain insertion_terms(const Cochain& a, const Cochain& b) {
    FullCochain raw;
    for (const auto& [la, ca] : a.terms) {
        int p = la.arity();
        for (const auto& [lb, cb] : b.terms) {
            int q = lb.arity();
            for (int i = 1; i <= p; ++i) {
                if (!(lb.output == la.inputs[i - 1])) continue;
                FullHochLabel t{{}, la.output};
                t.inputs.reserve(p + q - 1);
                for (int j = 0; j < i - 1; ++j) t.inputs.push_back(la.inputs[j]);
                for (const auto& m : lb.inputs) t.inputs.push_back(m);
                for (int j = i; j < p; ++j) t.inputs.push_back(la.inputs[j]);
                accumulate(raw, t, ca * cb * Rational(term_sign((p - i) * (q - 1))));
            }
        }
    }
    return raw;
}

FullCochain bracket_terms(const Cochain& a, const Cochain& b) {
    FullCochain raw = insertion_terms(a, b);
    for (const auto& [lb, cb] : b.terms) {
        int p = lb.arity();
        for (const auto& [la, ca] : a.terms) {
            int q = la.arity();
            for (int i = 1; i <= p; ++i) {
                if (!(la.output == lb.inputs[i - 1])) continue;
                FullHochLabel t{{}, lb.output};
                t.inputs.reserve(p + q - 1);
                for (int j = 0; j < i - 1; ++j) t.inputs.push_back(lb.inputs[j]);
                for (const auto& m : la.inputs) t.inputs.push_back(m);
                for (int j = i; j < p; ++j) t.inputs.push_back(lb.inputs[j]);
                int sign = term_sign((p - i) * (q - 1)) * term_sign((p - 1) * (q - 1));
                accumulate(raw, t, cb * ca * Rational(-sign));
            }
        }
    }
    return raw;
}

}  // namespace

Cochain mu_cochain(int dim, int max_deg, int max_arity) {
    Cochain c{dim, {max_arity, max_deg}, {}};
    for (int sa = 1; sa < max_deg; ++sa)
        for (int sb = 1; sa + sb <= max_deg; ++sb)
            for (const Monomial& A : enumerate_monomials(dim, sa))
                for (const Monomial& B : enumerate_monomials(dim, sb))
                    c.terms[{{A, B}, merge(A, B)}] = Rational(1);
    return c;
}

Cochain identity_cochain(int dim, int max_deg, int max_arity) {
    Cochain c{dim, {max_arity, max_deg}, {}};
    for (int s = 1; s <= max_deg; ++s)
        for (const Monomial& M : enumerate_monomials(dim, s)) c.terms[{{M}, M}] = Rational(1);
    return c;
}

Cochain compose_insertion(const Cochain& a, const Cochain& b) {
    if (a.dim != b.dim) throw std::invalid_argument("compose_insertion: dimension mismatch");
    Cochain out{a.dim, join(a.window, b.window), {}};
    finish(out, insertion_terms(a, b), Overflow::Throw, "compose_insertion");
    return out;
}

Cochain gerstenhaber_bracket(const Cochain& a, const Cochain& b) {
    if (a.dim != b.dim) throw std::invalid_argument("gerstenhaber_bracket: dimension mismatch");
    Cochain out{a.dim, join(a.window, b.window), {}};
    finish(out, bracket_terms(a, b), Overflow::Throw, "gerstenhaber_bracket");
    return out;
}

Cochain gerstenhaber_bracket_restricted(const Cochain& a, const Cochain& b, Window w) {
    if (a.dim != b.dim) throw std::invalid_argument("gerstenhaber_bracket: dimension mismatch");
    Cochain out{a.dim, w, {}};
    finish(out, bracket_terms(a, b), Overflow::Restrict, "gerstenhaber_bracket");
    return out;
}

Cochain restrict_to_window(const Cochain& a, Window w) {
    Cochain out{a.dim, w, {}};
    for (const auto& [l, v] : a.terms)
        if (l.arity() <= w.max_arity && l.in_degree() <= w.max_deg) out.terms.emplace(l, v);
    return out;
}

Cochain hochschild_diff(const Cochain& a) {
    Cochain out{a.dim, a.window, {}};
    for (const auto& [l, c] : a.terms) {
        for (const auto& [t, v] : hochschild_diff_terms(l, a.window.max_deg)) {
            if (t.arity() > a.window.max_arity)
                throw std::runtime_error("hochschild_diff: window overflow; needs max_arity >= " +
                                         std::to_string(t.arity()));
            accumulate(out.terms, t, c * v);
        }
    }
    return out;
}

Cochain hochschild_diff_via_bracket(const Cochain& a) {
    // The outer terms of [mu, .] interrogate mu on the outputs of a, so mu
    // must be truncated max(weight) deeper than a's window; the bracket is
    // then passed back to a's window, where it reproduces d_H exactly.
    int wmax = 0;
    for (const auto& [l, v] : a.terms) wmax = std::max(wmax, l.weight());
    Cochain mu = mu_cochain(a.dim, a.window.max_deg + wmax, a.window.max_arity + 1);
    mu.window.max_arity = a.window.max_arity + 1;
    Cochain br = gerstenhaber_bracket_restricted(mu, a, a.window);
    Cochain dh = hochschild_diff(a);
    if (!(br.terms == dh.terms))
        throw std::runtime_error("hochschild_diff_via_bracket: [mu, a] != d_H a");
    return br;
}

McReport mc_check(const Cochain& g) { return mc_check(g, g.window); }

McReport mc_check(const Cochain& g, Window report) {
    Cochain dh = hochschild_diff(restrict_to_window(g, {g.window.max_arity, report.max_deg}));
    Cochain sq = gerstenhaber_bracket_restricted(g, g, report);
    McReport rep;
    rep.residual = Cochain{g.dim, report, {}};
    for (const auto& [l, v] : dh.terms)
        if (l.arity() <= report.max_arity && l.in_degree() <= report.max_deg)
            accumulate(rep.residual.terms, l, v);
    for (const auto& [l, v] : sq.terms) accumulate(rep.residual.terms, l, v * Rational(1, 2));
    rep.is_mc = rep.residual.terms.empty();
    return rep;
}

Cochain post_compose(const Cochain& u, const Cochain& v) {
    Cochain out{u.dim, join(u.window, v.window), {}};
    for (const auto& [lv, cv] : v.terms)
        for (const auto& [lu, cu] : u.terms) {
            if (lu.arity() != 1 || !(lu.inputs[0] == lv.output)) continue;
            accumulate(out.terms, FullHochLabel{lv.inputs, lu.output}, cu * cv);
        }
    return out;
}

Cochain plug_slots(const Cochain& a, const Cochain& t) {
    Cochain out{a.dim, join(a.window, t.window), {}};
    for (const auto& [la, ca] : a.terms) {
        int p = la.arity();
        // substitute t into every slot simultaneously
        std::vector<std::pair<MultiIndexTuple, Rational>> partial{{{}, ca}};
        bool dead = false;
        for (int i = 0; i < p && !dead; ++i) {
            std::vector<std::pair<MultiIndexTuple, Rational>> next;
            for (const auto& [lt, ct] : t.terms) {
                if (lt.arity() != 1 || !(lt.output == la.inputs[i])) continue;
                for (const auto& [ins, coeff] : partial) {
                    MultiIndexTuple e = ins;
                    e.push_back(lt.inputs[0]);
                    next.emplace_back(std::move(e), coeff * ct);
                }
            }
            partial = std::move(next);
            if (partial.empty()) dead = true;
        }
        for (const auto& [ins, coeff] : partial)
            accumulate(out.terms, FullHochLabel{ins, la.output}, coeff);
    }
    return out;
}

Cochain neumann_inverse(const Cochain& phi) {
    // (id + phi)^{-1} = id - phi + phi o phi - ... ; terminates because phi
    // strictly raises weight and the window bounds degrees.
    Cochain id = identity_cochain(phi.dim, phi.window.max_deg, phi.window.max_arity);
    for (const auto& [l, v] : phi.terms)
        if (l.weight() <= 0)
            throw std::invalid_argument("neumann_inverse: phi must strictly raise weight");
    Cochain out = id;
    Cochain power = phi;
    int sign = -1;
    while (!power.terms.empty()) {
        for (const auto& [l, v] : power.terms)
            accumulate(out.terms, l, v * Rational(sign));
        power = post_compose(power, phi);
        // drop terms whose outputs exceed every representable weight
        sign = -sign;
    }
    return out;
}

PolyVector wedge(const PolyVector& p, const PolyVector& q) {
    PolyVector out{p.dim, {}};
    for (const auto& [tp, cp] : p.terms)
        for (const auto& [tq, cq] : q.terms) {
            const auto& [ep, sp] = tp;
            const auto& [eq, sq] = tq;
            bool zero = false;
            for (int v : eq)
                if (std::find(ep.begin(), ep.end(), v) != ep.end()) {
                    zero = true;
                    break;
                }
            if (zero) continue;
            // shuffle sign: inversions of the concatenated index list
            std::vector<int> cat = ep;
            cat.insert(cat.end(), eq.begin(), eq.end());
            int s = 1;
            for (std::size_t i = 0; i < cat.size(); ++i)
                for (std::size_t j = i + 1; j < cat.size(); ++j)
                    if (cat[i] > cat[j]) s = -s;
            std::vector<int> e = cat;
            std::sort(e.begin(), e.end());
            Rational c = cp * cq * Rational(s);
            if (c.is_zero()) continue;
            auto key = std::make_pair(e, merge(sp, sq));
            auto [it, inserted] = out.terms.try_emplace(key, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) out.terms.erase(it);
            }
        }
    return out;
}

namespace {

void pv_accumulate(PolyVector& out, std::vector<int> ext, const Monomial& sym, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(std::move(ext), sym);
    auto [it, inserted] = out.terms.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.terms.erase(it);
    }
}

Monomial sym_remove_one(const Monomial& s, int v) {
    std::vector<int> vars;
    bool removed = false;
    for (int x : s.vars()) {
        if (!removed && x == v) {
            removed = true;
            continue;
        }
        vars.push_back(x);
    }
    return Monomial(s.dim(), std::move(vars));
}

// Odd Laplacian sum_v d^2/dx_v dxi_v on polyvectors; the exterior derivative
// is taken from the left, so slot p carries (-1)^{p-1}.
PolyVector odd_laplacian(const PolyVector& p) {
    PolyVector out{p.dim, {}};
    for (const auto& [t, c] : p.terms) {
        const auto& [ext, sym] = t;
        for (std::size_t pos = 0; pos < ext.size(); ++pos) {
            int v = ext[pos];
            int mult = sym.exponent(v);
            if (mult == 0) continue;
            std::vector<int> rest = ext;
            rest.erase(rest.begin() + static_cast<long>(pos));
            int sgn = pos % 2 == 0 ? 1 : -1;
            pv_accumulate(out, rest, sym_remove_one(sym, v), c * Rational(sgn * mult));
        }
    }
    return out;
}

}  // namespace

PolyVector schouten_bracket(const PolyVector& p, const PolyVector& q) {
    if (p.dim != q.dim) throw std::invalid_argument("schouten_bracket: dimension mismatch");
    // Derived bracket of the odd Laplacian, normalized so that on vector
    // fields it is the commutator: for F of exterior degree a,
    //   [F, G] = (-1)^a ( Delta(F)^G + (-1)^a F^Delta(G) - Delta(F^G) ).
    PolyVector out{p.dim, {}};
    for (const auto& [tp, cp] : p.terms) {
        PolyVector F{p.dim, {{tp, cp}}};
        int a = static_cast<int>(tp.first.size());
        Rational sa(a % 2 == 0 ? 1 : -1);
        for (const auto& [tq, cq] : q.terms) {
            PolyVector G{q.dim, {{tq, cq}}};
            for (const auto& [t, c] : wedge(odd_laplacian(F), G).terms)
                pv_accumulate(out, t.first, t.second, sa * c);
            for (const auto& [t, c] : wedge(F, odd_laplacian(G)).terms)
                pv_accumulate(out, t.first, t.second, c);
            for (const auto& [t, c] : odd_laplacian(wedge(F, G)).terms)
                pv_accumulate(out, t.first, t.second, -(sa * c));
        }
    }
    return out;
}

PolyVector hkr_project(const PolyCochain& z, int dim, int m, int n) {
    // cocycle check
    PolyCochain dz;
    for (const auto& [l, c] : z)
        for (const auto& [t, v] : polydiff_diff_terms(l)) {
            auto [it, inserted] = dz.try_emplace(t, c * v);
            if (!inserted) {
                it->second += c * v;
                if (it->second.is_zero()) dz.erase(it);
            }
        }
    if (!dz.empty())
        throw std::invalid_argument("hkr_project: input is not a cocycle; d(z) has term " +
                                    dz.begin()->first.label() + " with coefficient " +
                                    dz.begin()->second.str());
    PolyVector out{dim, {}};
    for (const auto& [l, c] : z) {
        if (l.arity() != m) continue;
        std::vector<int> dirs;
        bool flat = true;
        for (const auto& b : l.bunches) {
            if (b.weight() != 1) {
                flat = false;
                break;
            }
            dirs.push_back(b.vars()[0]);
        }
        if (!flat) continue;  // only top-arity labels have all-singleton bunches
        int s = 1;
        bool repeat = false;
        for (std::size_t i = 0; i < dirs.size() && !repeat; ++i)
            for (std::size_t j = i + 1; j < dirs.size(); ++j) {
                if (dirs[i] == dirs[j]) {
                    repeat = true;
                    break;
                }
                if (dirs[i] > dirs[j]) s = -s;
            }
        if (repeat) continue;
        std::vector<int> sorted = dirs;
        std::sort(sorted.begin(), sorted.end());
        pv_accumulate(out, sorted, l.coeff, c * Rational(s));
    }
    (void)n;
    return out;
}

PolyVector hkr_project_full(const Cochain& z, int m) {
    Cochain dz = hochschild_diff(z);
    if (!dz.terms.empty())
        throw std::invalid_argument("hkr_project_full: input is not a cocycle; d(z) has term " +
                                    dz.terms.begin()->first.label() + " with coefficient " +
                                    dz.terms.begin()->second.str());
    PolyVector out{z.dim, {}};
    for (const auto& [l, c] : z.terms) {
        if (l.arity() != m) continue;
        std::vector<int> dirs;
        bool flat = true;
        for (const auto& in : l.inputs) {
            if (in.weight() != 1) {
                flat = false;
                break;
            }
            dirs.push_back(in.vars()[0]);
        }
        if (!flat) continue;
        int s = 1;
        bool repeat = false;
        for (std::size_t i = 0; i < dirs.size() && !repeat; ++i)
            for (std::size_t j = i + 1; j < dirs.size(); ++j) {
                if (dirs[i] == dirs[j]) {
                    repeat = true;
                    break;
                }
                if (dirs[i] > dirs[j]) s = -s;
            }
        if (repeat) continue;
        std::vector<int> sorted = dirs;
        std::sort(sorted.begin(), sorted.end());
        pv_accumulate(out, sorted, l.output, c * Rational(s));
    }
    return out;
}

std::string cochain_to_json(const Cochain& c) {
    nlohmann::json j;
    j["dim"] = c.dim;
    j["window"] = {{"max_arity", c.window.max_arity}, {"max_deg", c.window.max_deg}};
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [l, v] : c.terms) terms.push_back({{"label", l.label()}, {"coeff", v.str()}});
    j["terms"] = terms;
    return j.dump(2) + "\n";
}

namespace {

Monomial monomial_from_str(const std::string& s, int dim) {
    if (s == "1") return Monomial(dim);
    std::vector<int> vars;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == '*') {
            ++i;
            continue;
        }
        if (s[i] != 'x') throw std::runtime_error("bad monomial: " + s);
        ++i;
        std::size_t j = i;
        while (j < s.size() && isdigit(s[j])) ++j;
        int var = std::stoi(s.substr(i, j - i));
        int exp = 1;
        i = j;
        if (i < s.size() && s[i] == '^') {
            ++i;
            j = i;
            while (j < s.size() && isdigit(s[j])) ++j;
            exp = std::stoi(s.substr(i, j - i));
            i = j;
        }
        for (int e = 0; e < exp; ++e) vars.push_back(var);
    }
    return Monomial(dim, std::move(vars));
}

FullHochLabel full_label_from_str(const std::string& s, int dim) {
    // F(in=[m1, m2, ...]; out=m)
    auto in_start = s.find("in=[");
    auto in_end = s.find(']', in_start);
    auto out_start = s.find("out=", in_end);
    auto out_end = s.find(')', out_start);
    if (in_start == std::string::npos || out_start == std::string::npos)
        throw std::runtime_error("bad cochain label: " + s);
    std::string ins = s.substr(in_start + 4, in_end - in_start - 4);
    std::string outs = s.substr(out_start + 4, out_end - out_start - 4);
    FullHochLabel l;
    std::size_t pos = 0;
    while (pos < ins.size()) {
        auto comma = ins.find(", ", pos);
        std::string piece = comma == std::string::npos ? ins.substr(pos) : ins.substr(pos, comma - pos);
        l.inputs.push_back(monomial_from_str(piece, dim));
        if (comma == std::string::npos) break;
        pos = comma + 2;
    }
    l.output = monomial_from_str(outs, dim);
    return l;
}

}  // namespace

Cochain cochain_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Cochain c;
    c.dim = j.at("dim").get<int>();
    c.window.max_arity = j.at("window").at("max_arity").get<int>();
    c.window.max_deg = j.at("window").at("max_deg").get<int>();
    for (const auto& t : j.at("terms"))
        c.terms[full_label_from_str(t.at("label").get<std::string>(), c.dim)] =
            Rational::parse(t.at("coeff").get<std::string>());
    return c;
}

std::string polyvector_str(const PolyVector& p) {
    if (p.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : p.terms) {
        const auto& [ext, sym] = t;
        if (!first) os << " + ";
        os << '(' << c.str() << ")*";
        for (std::size_t i = 0; i < ext.size(); ++i) {
            if (i) os << '^';
            os << 'e' << ext[i];
        }
        if (!sym.is_one()) os << "*" << sym.str();
        first = false;
    }
    return os.str();
}

}  // namespace permucell
