#include "permucell/monomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permucell {

Monomial::Monomial(int dim, std::vector<int> vars) : dim_(dim), vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    for (int v : vars_)
        if (v < 1 || v > dim_) throw std::invalid_argument("Monomial: variable index out of range");
}

int Monomial::exponent(int v) const {
    return static_cast<int>(std::count(vars_.begin(), vars_.end(), v));
}

std::string Monomial::str() const {
    if (vars_.empty()) return "1";
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < vars_.size()) {
        std::size_t j = i;
        while (j < vars_.size() && vars_[j] == vars_[i]) ++j;
        if (!first) os << '*';
        os << 'x' << vars_[i];
        if (j - i > 1) os << '^' << (j - i);
        first = false;
        i = j;
    }
    return os.str();
}

Monomial merge(const Monomial& a, const Monomial& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("merge: dimension mismatch");
    std::vector<int> vars;
    vars.reserve(a.vars().size() + b.vars().size());
    std::merge(a.vars().begin(), a.vars().end(), b.vars().begin(), b.vars().end(),
               std::back_inserter(vars));
    return Monomial(a.dim(), std::move(vars));
}

BigInt split_multiplicity(const Monomial& m, const Monomial& part) {
    BigInt mult = 1;
    for (int v = 1; v <= m.dim(); ++v) {
        int e = m.exponent(v), a = part.exponent(v);
        if (a > e) return 0;
        mult *= binomial(e, a);
    }
    return mult;
}

std::vector<CoproductTerm> coproduct_splits(const Monomial& m) {
    std::vector<CoproductTerm> out;
    // Distinct variables present, with exponents.
    std::vector<std::pair<int, int>> exps;
    for (std::size_t i = 0; i < m.vars().size();) {
        std::size_t j = i;
        while (j < m.vars().size() && m.vars()[j] == m.vars()[i]) ++j;
        exps.emplace_back(m.vars()[i], static_cast<int>(j - i));
        i = j;
    }
    std::vector<int> pick(exps.size(), 0);
    while (true) {
        std::vector<int> lv, rv;
        BigInt mult = 1;
        for (std::size_t t = 0; t < exps.size(); ++t) {
            for (int c = 0; c < pick[t]; ++c) lv.push_back(exps[t].first);
            for (int c = pick[t]; c < exps[t].second; ++c) rv.push_back(exps[t].first);
            mult *= binomial(exps[t].second, pick[t]);
        }
        out.push_back({Monomial(m.dim(), std::move(lv)), Monomial(m.dim(), std::move(rv)),
                       std::move(mult)});
        std::size_t pos = 0;
        while (pos < pick.size() && pick[pos] == exps[pos].second) pick[pos++] = 0;
        if (pos == pick.size()) break;
        ++pick[pos];
    }
    return out;
}

std::vector<Monomial> enumerate_monomials(int dim, int weight) {
    std::vector<Monomial> out;
    std::vector<int> vars;
    // Nondecreasing sequences of length `weight` over 1..dim.
    auto rec = [&](auto&& self, int start, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(dim, vars);
            return;
        }
        for (int v = start; v <= dim; ++v) {
            vars.push_back(v);
            self(self, v, remaining - 1);
            vars.pop_back();
        }
    };
    if (weight >= 0) rec(rec, 1, weight);
    return out;
}

std::vector<Monomial> enumerate_monomials_upto(int dim, int max_weight) {
    std::vector<Monomial> out;
    for (int w = 0; w <= max_weight; ++w) {
        auto ms = enumerate_monomials(dim, w);
        out.insert(out.end(), ms.begin(), ms.end());
    }
    return out;
}

std::vector<MultiIndexTuple> enumerate_tuples(int dim, int total_weight, int parts_count,
                                              bool allow_empty) {
    std::vector<MultiIndexTuple> out;
    if (parts_count < 1 || total_weight < 0) return out;
    MultiIndexTuple current;
    auto rec = [&](auto&& self, int part, int remaining) -> void {
        if (part == parts_count) {
            if (remaining == 0) out.push_back(current);
            return;
        }
        int lo = allow_empty ? 0 : 1;
        int parts_left = parts_count - part - 1;
        for (int w = lo; w <= remaining - parts_left * lo; ++w) {
            for (const Monomial& m : enumerate_monomials(dim, w)) {
                current.push_back(m);
                self(self, part + 1, remaining - w);
                current.pop_back();
            }
        }
    };
    rec(rec, 0, total_weight);
    return out;
}

std::string tuple_str(const MultiIndexTuple& t) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) os << ", ";
        os << t[i].str();
    }
    os << ']';
    return os.str();
}

}  // namespace permucell
