#include "permucell/hochschild.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permucell {

namespace {

void accumulate(FullCochain& acc, const FullHochLabel& l, const Rational& v) {
    auto [it, inserted] = acc.try_emplace(l, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) acc.erase(it);
    }
}

void accumulate(PolyCochain& acc, const PolyOpLabel& l, const Rational& v) {
    auto [it, inserted] = acc.try_emplace(l, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) acc.erase(it);
    }
}

}  // namespace

std::string PolyOpLabel::label() const {
    std::ostringstream os;
    os << "H(J=" << coeff.str() << "; I=" << tuple_str(bunches) << ")";
    return os.str();
}

std::string FullHochLabel::label() const {
    std::ostringstream os;
    os << "F(in=" << tuple_str(inputs) << "; out=" << output.str() << ")";
    return os.str();
}

PolyCochain polydiff_diff_terms(const PolyOpLabel& L) {
    PolyCochain out;
    int k = L.arity();
    for (int a = 1; a <= k; ++a) {
        for (const auto& term : coproduct_splits(L.bunches[a - 1])) {
            if (term.left.is_one() || term.right.is_one()) continue;
            PolyOpLabel split{L.coeff, {}};
            split.bunches.reserve(k + 1);
            for (int j = 0; j < a - 1; ++j) split.bunches.push_back(L.bunches[j]);
            split.bunches.push_back(term.left);
            split.bunches.push_back(term.right);
            for (int j = a; j < k; ++j) split.bunches.push_back(L.bunches[j]);
            Rational c = Rational(term.multiplicity) * Rational(a % 2 == 0 ? 1 : -1);
            accumulate(out, split, c);
        }
    }
    return out;
}

FullCochain hochschild_diff_terms(const FullHochLabel& L, int max_deg) {
    FullCochain out;
    int k = L.arity();
    int s = L.in_degree();
    int dim = L.output.dim() ? L.output.dim() : L.inputs.front().dim();

    // f_0 . Phi(f_1..f_k): new first input P, output gains P.
    for (int w = 1; w <= max_deg - s; ++w) {
        for (const Monomial& P : enumerate_monomials(dim, w)) {
            FullHochLabel t{{}, merge(L.output, P)};
            t.inputs.reserve(k + 1);
            t.inputs.push_back(P);
            for (const auto& m : L.inputs) t.inputs.push_back(m);
            accumulate(out, t, Rational(1));
        }
    }
    // (-1)^{i+1} Phi(..., f_i f_{i+1}, ...): input bunch a = i+1 un-merges
    // into every ordered factor pair.
    for (int a = 1; a <= k; ++a) {
        for (const auto& term : coproduct_splits(L.inputs[a - 1])) {
            if (term.left.is_one() || term.right.is_one()) continue;
            FullHochLabel t{{}, L.output};
            t.inputs.reserve(k + 1);
            for (int j = 0; j < a - 1; ++j) t.inputs.push_back(L.inputs[j]);
            t.inputs.push_back(term.left);
            t.inputs.push_back(term.right);
            for (int j = a; j < k; ++j) t.inputs.push_back(L.inputs[j]);
            accumulate(out, t, Rational(a % 2 == 0 ? 1 : -1));
        }
    }
    // (-1)^{k+1} Phi(f_0..f_{k-1}) . f_k: new last input P.
    for (int w = 1; w <= max_deg - s; ++w) {
        for (const Monomial& P : enumerate_monomials(dim, w)) {
            FullHochLabel t{L.inputs, merge(L.output, P)};
            t.inputs.push_back(P);
            accumulate(out, t, Rational(k % 2 == 0 ? -1 : 1));
        }
    }
    return out;
}

FullCochain apply_hochschild_diff(const FullCochain& z, int max_deg) {
    FullCochain out;
    for (const auto& [l, c] : z)
        for (const auto& [t, v] : hochschild_diff_terms(l, max_deg)) accumulate(out, t, c * v);
    return out;
}

namespace {

// Counts-based multiset difference and falling-factorial derivative
// coefficient; zero when part is not contained in whole.
BigInt falling_coeff(const Monomial& whole, const Monomial& part) {
    BigInt c = 1;
    for (int v = 1; v <= whole.dim(); ++v) {
        int e = whole.exponent(v), d = part.exponent(v);
        if (d > e) return 0;
        for (int t = 0; t < d; ++t) c *= (e - t);
    }
    return c;
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

// Supersets of `base` with the given extra weight.
std::vector<Monomial> supersets(const Monomial& base, int extra) {
    std::vector<Monomial> out;
    for (const Monomial& add : enumerate_monomials(base.dim(), extra)) out.push_back(merge(base, add));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

FullCochain include_polydiff(const PolyOpLabel& L, int max_deg) {
    int m = L.grade_m();
    if (max_deg < m)
        throw std::invalid_argument("include_polydiff: truncation max_deg=" + std::to_string(max_deg) +
                                    " too small; need max_deg >= m=" + std::to_string(m));
    int k = L.arity();
    FullCochain out;
    // Enumerate input tuples P_a containing I_a with total degree <= max_deg.
    MultiIndexTuple current(k);
    auto rec = [&](auto&& self, int a, int budget, const Rational& coeff) -> void {
        if (a == k) {
            Monomial output = L.coeff;
            for (int j = 0; j < k; ++j) output = merge(output, multiset_sub(current[j], L.bunches[j]));
            accumulate(out, FullHochLabel{current, output}, coeff);
            return;
        }
        for (int extra = 0; extra <= budget; ++extra) {
            for (const Monomial& P : supersets(L.bunches[a], extra)) {
                BigInt c = falling_coeff(P, L.bunches[a]);
                if (c == 0) continue;
                current[a] = P;
                self(self, a + 1, budget - extra, coeff * Rational(c));
            }
        }
    };
    rec(rec, 0, max_deg - m, Rational(1));
    return out;
}

std::vector<PolyOpLabel> enumerate_poly_labels(int dim, int m, int n, int k) {
    std::vector<PolyOpLabel> out;
    for (const Monomial& J : enumerate_monomials(dim, n))
        for (const auto& bunches : enumerate_tuples(dim, m, k, false))
            out.push_back({J, bunches});
    return out;
}

FinChainComplex build_polydiff_complex(int dim, int m, int n) {
    if (dim < 1 || m < 1 || n < 0)
        throw std::invalid_argument("build_polydiff_complex: need dim >= 1, m >= 1, n >= 0");
    FinChainComplex cx;
    std::map<int, std::vector<PolyOpLabel>> by_k;
    std::map<int, std::map<std::string, int>> index;
    for (int k = 1; k <= m; ++k) {
        cx.degrees.push_back(k);
        auto labels = enumerate_poly_labels(dim, m, n, k);
        std::sort(labels.begin(), labels.end(), [](const PolyOpLabel& a, const PolyOpLabel& b) {
            return a.label() < b.label();
        });
        auto& names = cx.basis[k];
        for (const auto& l : labels) {
            index[k][l.label()] = static_cast<int>(names.size());
            names.push_back(l.label());
        }
        by_k[k] = std::move(labels);
    }
    for (int k = 1; k < m; ++k) {
        SparseMatrix d(cx.dim_at(k + 1), cx.dim_at(k));
        int col = 0;
        for (const auto& L : by_k[k]) {
            for (const auto& [t, v] : polydiff_diff_terms(L)) d.add(index[k + 1].at(t.label()), col, v);
            ++col;
        }
        cx.diff[k] = std::move(d);
    }
    return cx;
}

std::vector<FullHochLabel> enumerate_full_labels(int dim, int weight, int max_deg, int arity) {
    std::vector<FullHochLabel> out;
    for (int s = arity; s <= max_deg; ++s) {
        if (s + weight < 0) continue;
        auto outputs = enumerate_monomials(dim, s + weight);
        for (const auto& inputs : enumerate_tuples(dim, s, arity, false))
            for (const Monomial& N : outputs) out.push_back({inputs, N});
    }
    return out;
}

FinChainComplex build_full_hochschild_complex(int dim, int weight, int max_deg) {
    if (dim < 1 || max_deg < 1)
        throw std::invalid_argument("build_full_hochschild_complex: need dim >= 1, max_deg >= 1");
    FinChainComplex cx;
    std::map<int, std::vector<FullHochLabel>> by_k;
    std::map<int, std::map<std::string, int>> index;
    for (int k = 1; k <= max_deg; ++k) {
        cx.degrees.push_back(k);
        auto labels = enumerate_full_labels(dim, weight, max_deg, k);
        std::sort(labels.begin(), labels.end(), [](const FullHochLabel& a, const FullHochLabel& b) {
            return a.label() < b.label();
        });
        auto& names = cx.basis[k];
        for (const auto& l : labels) {
            index[k][l.label()] = static_cast<int>(names.size());
            names.push_back(l.label());
        }
        by_k[k] = std::move(labels);
    }
    for (int k = 1; k < max_deg; ++k) {
        SparseMatrix d(cx.dim_at(k + 1), cx.dim_at(k));
        int col = 0;
        for (const auto& L : by_k[k]) {
            for (const auto& [t, v] : hochschild_diff_terms(L, max_deg))
                d.add(index[k + 1].at(t.label()), col, v);
            ++col;
        }
        cx.diff[k] = std::move(d);
    }
    return cx;
}

}  // namespace permucell
