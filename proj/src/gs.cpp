#include "permucell/gs.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permucell {

namespace {

template <class Label>
void accumulate(std::map<Label, Rational>& acc, const Label& l, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(l, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) acc.erase(it);
    }
}

// Ordered splits of a monomial into `parts` (possibly empty) factors with
// multinomial multiplicities.
struct MultiSplit {
    MultiIndexTuple parts;
    BigInt multiplicity;
};

std::vector<MultiSplit> multiset_splits(const Monomial& m, int parts) {
    std::vector<MultiSplit> out;
    if (parts == 1) {
        out.push_back({{m}, 1});
        return out;
    }
    for (const auto& term : coproduct_splits(m)) {
        for (const auto& rest : multiset_splits(term.right, parts - 1)) {
            MultiSplit s;
            s.parts.reserve(parts);
            s.parts.push_back(term.left);
            for (const auto& p : rest.parts) s.parts.push_back(p);
            s.multiplicity = term.multiplicity * rest.multiplicity;
            out.push_back(std::move(s));
        }
    }
    return out;
}

Monomial multiset_sub(const Monomial& whole, const Monomial& part) {
    std::vector<int> vars;
    auto wi = whole.vars().begin();
    auto pi = part.vars().begin();
    while (wi != whole.vars().end()) {
        if (pi != part.vars().end() && *pi == *wi) {
            ++pi;
            ++wi;
        } else {
            vars.push_back(*wi++);
        }
    }
    return Monomial(whole.dim(), std::move(vars));
}

BigInt falling_coeff(const Monomial& whole, const Monomial& part) {
    BigInt c = 1;
    for (int v = 1; v <= whole.dim(); ++v) {
        int e = whole.exponent(v), d = part.exponent(v);
        if (d > e) return 0;
        for (int t = 0; t < d; ++t) c *= (e - t);
    }
    return c;
}

std::vector<Monomial> supersets(const Monomial& base, int extra) {
    std::vector<Monomial> out;
    for (const Monomial& add : enumerate_monomials(base.dim(), extra)) out.push_back(merge(base, add));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

std::string GSOpLabel::label() const {
    std::ostringstream os;
    os << "G(I=" << tuple_str(out_bunches) << "; J=" << tuple_str(in_bunches) << ")";
    return os.str();
}

std::string FullGSLabel::label() const {
    std::ostringstream os;
    os << "Q(in=" << tuple_str(inputs) << "; out=" << tuple_str(outputs) << ")";
    return os.str();
}

GSPolyCochain gs_poly_d1_terms(const GSOpLabel& L) {
    GSPolyCochain out;
    int k = L.k();
    for (int a = 1; a <= k; ++a) {
        for (const auto& term : coproduct_splits(L.out_bunches[a - 1])) {
            if (term.left.is_one() || term.right.is_one()) continue;
            GSOpLabel split{{}, L.in_bunches};
            split.out_bunches.reserve(k + 1);
            for (int j = 0; j < a - 1; ++j) split.out_bunches.push_back(L.out_bunches[j]);
            split.out_bunches.push_back(term.left);
            split.out_bunches.push_back(term.right);
            for (int j = a; j < k; ++j) split.out_bunches.push_back(L.out_bunches[j]);
            accumulate(out, split, Rational(term.multiplicity) * Rational(a % 2 == 0 ? -1 : 1));
        }
    }
    return out;
}

GSPolyCochain gs_poly_d2_terms(const GSOpLabel& L) {
    GSPolyCochain out;
    int l = L.l();
    for (int b = 1; b <= l; ++b) {
        for (const auto& term : coproduct_splits(L.in_bunches[b - 1])) {
            if (term.left.is_one() || term.right.is_one()) continue;
            GSOpLabel split{L.out_bunches, {}};
            split.in_bunches.reserve(l + 1);
            for (int j = 0; j < b - 1; ++j) split.in_bunches.push_back(L.in_bunches[j]);
            split.in_bunches.push_back(term.left);
            split.in_bunches.push_back(term.right);
            for (int j = b; j < l; ++j) split.in_bunches.push_back(L.in_bunches[j]);
            accumulate(out, split, Rational(term.multiplicity) * Rational(b % 2 == 0 ? -1 : 1));
        }
    }
    return out;
}

GSPolyCochain gs_poly_diff_terms(const GSOpLabel& L) {
    GSPolyCochain out = gs_poly_d1_terms(L);
    Rational twist(L.k() % 2 == 0 ? 1 : -1);
    for (const auto& [t, v] : gs_poly_d2_terms(L)) accumulate(out, t, twist * v);
    return out;
}

GSFullCochain gs_full_d1_terms(const FullGSLabel& L, int max_in, int max_out) {
    GSFullCochain out;
    int k = L.k(), l = L.l();
    int s = L.in_degree(), t = L.out_degree();
    int dim = L.inputs.front().dim();

    // -Delta^{l-1}(f_0) . Phi(f_1..f_k): new first input P spread over the
    // output slots with multinomial multiplicities.
    for (int w = 1; w <= std::min(max_in - s, max_out - t); ++w) {
        for (const Monomial& P : enumerate_monomials(dim, w)) {
            for (const auto& split : multiset_splits(P, l)) {
                FullGSLabel tgt{{}, {}};
                tgt.inputs.reserve(k + 1);
                tgt.inputs.push_back(P);
                for (const auto& m : L.inputs) tgt.inputs.push_back(m);
                tgt.outputs.reserve(l);
                for (int b = 0; b < l; ++b) tgt.outputs.push_back(merge(L.outputs[b], split.parts[b]));
                accumulate(out, tgt, Rational(-1) * Rational(split.multiplicity));
            }
        }
    }
    // sum_{i=0}^{k-1} (-1)^i Phi(..., f_i f_{i+1}, ...).
    for (int a = 1; a <= k; ++a) {
        for (const auto& term : coproduct_splits(L.inputs[a - 1])) {
            if (term.left.is_one() || term.right.is_one()) continue;
            FullGSLabel tgt{{}, L.outputs};
            tgt.inputs.reserve(k + 1);
            for (int j = 0; j < a - 1; ++j) tgt.inputs.push_back(L.inputs[j]);
            tgt.inputs.push_back(term.left);
            tgt.inputs.push_back(term.right);
            for (int j = a; j < k; ++j) tgt.inputs.push_back(L.inputs[j]);
            accumulate(out, tgt, Rational(a % 2 == 0 ? -1 : 1));  // (-1)^{a-1}
        }
    }
    // (-1)^k Phi(f_0..f_{k-1}) . Delta^{l-1}(f_k).
    for (int w = 1; w <= std::min(max_in - s, max_out - t); ++w) {
        for (const Monomial& P : enumerate_monomials(dim, w)) {
            for (const auto& split : multiset_splits(P, l)) {
                FullGSLabel tgt{L.inputs, {}};
                tgt.inputs.push_back(P);
                tgt.outputs.reserve(l);
                for (int b = 0; b < l; ++b) tgt.outputs.push_back(merge(L.outputs[b], split.parts[b]));
                accumulate(out, tgt, Rational(k % 2 == 0 ? 1 : -1) * Rational(split.multiplicity));
            }
        }
    }
    return out;
}

GSFullCochain gs_full_d2_terms(const FullGSLabel& L, int max_in, int max_out) {
    GSFullCochain out;
    int k = L.k(), l = L.l();
    int s = L.in_degree(), t = L.out_degree();
    int dim = L.inputs.front().dim();

    // -sum (f_1'...f_k') x Phi(f_1''..f_k''): enrich each input i by A_i and
    // prepend the merged primes as a new first output slot.
    int budget = std::min(max_in - s, max_out - t);
    MultiIndexTuple extras(k, Monomial(dim));
    auto rec = [&](auto&& self, int i, int left, const BigInt& mult, const Monomial& collected,
                   bool last) -> void {
        if (i == k) {
            if (collected.is_one()) return;
            FullGSLabel tgt{{}, {}};
            tgt.inputs.reserve(k);
            for (int j = 0; j < k; ++j) tgt.inputs.push_back(merge(L.inputs[j], extras[j]));
            tgt.outputs.reserve(l + 1);
            if (!last) {
                tgt.outputs.push_back(collected);
                for (const auto& m : L.outputs) tgt.outputs.push_back(m);
                accumulate(out, tgt, Rational(-1) * Rational(mult));
            } else {
                for (const auto& m : L.outputs) tgt.outputs.push_back(m);
                tgt.outputs.push_back(collected);
                accumulate(out, tgt, Rational(l % 2 == 0 ? 1 : -1) * Rational(mult));
            }
            return;
        }
        for (int w = 0; w <= left; ++w) {
            for (const Monomial& A : enumerate_monomials(dim, w)) {
                extras[i] = A;
                Monomial whole = merge(L.inputs[i], A);
                BigInt bin = 1;  // binom(M_i + A_i; A_i), per variable
                for (int v = 1; v <= dim; ++v) bin *= binomial(whole.exponent(v), A.exponent(v));
                self(self, i + 1, left - w, mult * bin, merge(collected, A), last);
            }
        }
        extras[i] = Monomial(dim);
    };
    rec(rec, 0, budget, 1, Monomial(dim), false);
    rec(rec, 0, budget, 1, Monomial(dim), true);

    // -sum_j (-1)^j Delta_j on the output slots.
    for (int b = 1; b <= l; ++b) {
        for (const auto& term : coproduct_splits(L.outputs[b - 1])) {
            if (term.left.is_one() || term.right.is_one()) continue;
            FullGSLabel tgt{L.inputs, {}};
            tgt.outputs.reserve(l + 1);
            for (int j = 0; j < b - 1; ++j) tgt.outputs.push_back(L.outputs[j]);
            tgt.outputs.push_back(term.left);
            tgt.outputs.push_back(term.right);
            for (int j = b; j < l; ++j) tgt.outputs.push_back(L.outputs[j]);
            accumulate(out, tgt, Rational(b % 2 == 0 ? -1 : 1) * Rational(term.multiplicity));
        }
    }
    return out;
}

GSFullCochain gs_full_diff_terms(const FullGSLabel& L, int max_in, int max_out) {
    GSFullCochain out = gs_full_d1_terms(L, max_in, max_out);
    Rational twist(L.k() % 2 == 0 ? 1 : -1);
    for (const auto& [t, v] : gs_full_d2_terms(L, max_in, max_out)) accumulate(out, t, twist * v);
    return out;
}

GSFullCochain include_polydiff_gs(const GSOpLabel& L, int max_in, int max_out) {
    int k = L.k(), l = L.l();
    int m = L.grade_m(), n = L.grade_n();
    if (max_in < m || max_out < n)
        throw std::invalid_argument("include_polydiff_gs: truncation (" + std::to_string(max_in) +
                                    "," + std::to_string(max_out) + ") too small; need at least (" +
                                    std::to_string(m) + "," + std::to_string(n) + ")");
    GSFullCochain out;
    MultiIndexTuple inputs(k);
    // Choose each input P_a containing I_a, then spread each derivative over
    // the l output slots.
    auto rec_outputs = [&](auto&& self, int a, MultiIndexTuple outs, const Rational& coeff) -> void {
        if (a == k) {
            int tdeg = 0;
            for (const auto& o : outs) tdeg += o.weight();
            if (tdeg <= max_out) accumulate(out, FullGSLabel{inputs, outs}, coeff);
            return;
        }
        Monomial deriv = multiset_sub(inputs[a], L.out_bunches[a]);
        for (const auto& split : multiset_splits(deriv, l)) {
            MultiIndexTuple next = outs;
            for (int b = 0; b < l; ++b) next[b] = merge(next[b], split.parts[b]);
            self(self, a + 1, std::move(next), coeff * Rational(split.multiplicity));
        }
    };
    auto rec_inputs = [&](auto&& self, int a, int budget, const Rational& coeff) -> void {
        if (a == k) {
            rec_outputs(rec_outputs, 0, L.in_bunches, coeff);
            return;
        }
        for (int extra = 0; extra <= budget; ++extra) {
            for (const Monomial& P : supersets(L.out_bunches[a], extra)) {
                BigInt c = falling_coeff(P, L.out_bunches[a]);
                if (c == 0) continue;
                inputs[a] = P;
                self(self, a + 1, budget - extra, coeff * Rational(c));
            }
        }
    };
    rec_inputs(rec_inputs, 0, max_in - m, Rational(1));
    return out;
}

std::vector<GSOpLabel> enumerate_gs_poly_labels(int dim, int m, int n, int k, int l) {
    std::vector<GSOpLabel> out;
    for (const auto& outs : enumerate_tuples(dim, m, k, false))
        for (const auto& ins : enumerate_tuples(dim, n, l, false)) out.push_back({outs, ins});
    return out;
}

FinChainComplex build_polydiff_gs_complex(int dim, int m, int n) {
    if (dim < 1 || m < 1 || n < 1)
        throw std::invalid_argument("build_polydiff_gs_complex: need dim, m, n >= 1");
    FinChainComplex cx;
    std::map<int, std::vector<GSOpLabel>> by_deg;
    std::map<int, std::map<std::string, int>> index;
    for (int deg = 2; deg <= m + n; ++deg) cx.degrees.push_back(deg);
    for (int k = 1; k <= m; ++k)
        for (int l = 1; l <= n; ++l) {
            auto labels = enumerate_gs_poly_labels(dim, m, n, k, l);
            auto& dst = by_deg[k + l];
            dst.insert(dst.end(), labels.begin(), labels.end());
        }
    for (auto& [deg, labels] : by_deg) {
        std::sort(labels.begin(), labels.end(), [](const GSOpLabel& a, const GSOpLabel& b) {
            return a.label() < b.label();
        });
        auto& names = cx.basis[deg];
        for (const auto& L : labels) {
            index[deg][L.label()] = static_cast<int>(names.size());
            names.push_back(L.label());
        }
    }
    for (int deg : cx.degrees) cx.basis[deg];
    for (int deg = 2; deg < m + n; ++deg) {
        SparseMatrix d(cx.dim_at(deg + 1), cx.dim_at(deg));
        int col = 0;
        for (const auto& L : by_deg[deg]) {
            for (const auto& [t, v] : gs_poly_diff_terms(L))
                d.add(index[deg + 1].at(t.label()), col, v);
            ++col;
        }
        cx.diff[deg] = std::move(d);
    }
    return cx;
}

std::vector<FullGSLabel> enumerate_gs_full_labels(int dim, int weight, int max_in, int max_out,
                                                  int k, int l) {
    std::vector<FullGSLabel> out;
    for (int s = k; s <= max_in; ++s) {
        int t = s + weight;
        if (t < l || t > max_out) continue;
        for (const auto& ins : enumerate_tuples(dim, s, k, false))
            for (const auto& outs : enumerate_tuples(dim, t, l, false)) out.push_back({ins, outs});
    }
    return out;
}

FinChainComplex build_full_gs_complex(int dim, int weight, int max_in, int max_out) {
    if (dim < 1 || max_in < 1 || max_out < 1)
        throw std::invalid_argument("build_full_gs_complex: need dim, max_in, max_out >= 1");
    FinChainComplex cx;
    std::map<int, std::vector<FullGSLabel>> by_deg;
    std::map<int, std::map<std::string, int>> index;
    for (int k = 1; k <= max_in; ++k)
        for (int l = 1; l <= max_out; ++l) {
            auto labels = enumerate_gs_full_labels(dim, weight, max_in, max_out, k, l);
            auto& dst = by_deg[k + l];
            dst.insert(dst.end(), labels.begin(), labels.end());
        }
    int max_deg = 0;
    for (const auto& [deg, labels] : by_deg)
        if (!labels.empty()) max_deg = std::max(max_deg, deg);
    for (int deg = 2; deg <= max_deg; ++deg) cx.degrees.push_back(deg);
    for (auto& [deg, labels] : by_deg) {
        if (deg > max_deg) continue;
        std::sort(labels.begin(), labels.end(), [](const FullGSLabel& a, const FullGSLabel& b) {
            return a.label() < b.label();
        });
        auto& names = cx.basis[deg];
        for (const auto& L : labels) {
            index[deg][L.label()] = static_cast<int>(names.size());
            names.push_back(L.label());
        }
    }
    for (int deg : cx.degrees) cx.basis[deg];
    for (int deg = 2; deg < max_deg; ++deg) {
        SparseMatrix d(cx.dim_at(deg + 1), cx.dim_at(deg));
        int col = 0;
        for (const auto& L : by_deg[deg]) {
            for (const auto& [t, v] : gs_full_diff_terms(L, max_in, max_out))
                d.add(index[deg + 1].at(t.label()), col, v);
            ++col;
        }
        cx.diff[deg] = std::move(d);
    }
    return cx;
}

}  // namespace permucell
