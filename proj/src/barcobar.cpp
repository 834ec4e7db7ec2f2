#include "permucell/barcobar.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace permucell {

namespace {

std::string ext_str(const std::vector<int>& e) {
    std::ostringstream os;
    os << "e{";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) os << ',';
        os << e[i];
    }
    os << '}';
    return os.str();
}

std::string koszul_label(const Monomial& sym, const std::vector<int>& ext) {
    return "K(" + sym.str() + ";" + ext_str(ext) + ")";
}

std::vector<std::vector<int>> subsets_of_size(int dim, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= dim - left + 1; ++v) {
            cur.push_back(v);
            self(self, v + 1, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, 1, size);
    return out;
}

std::string word_label(const std::vector<std::string>& letters) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) os << '|';
        os << letters[i];
    }
    os << ']';
    return os.str();
}

// Words of `len` letters with positive letter weights summing to `weight`;
// letters drawn from per-weight alphabets.
template <class Letter>
std::vector<std::vector<Letter>> enumerate_words(int weight, int len,
                                                 const std::map<int, std::vector<Letter>>& alphabet) {
    std::vector<std::vector<Letter>> out;
    std::vector<Letter> cur;
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == len) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        for (int w = 1; w <= remaining - (len - pos - 1); ++w) {
            auto it = alphabet.find(w);
            if (it == alphabet.end()) continue;
            for (const Letter& l : it->second) {
                cur.push_back(l);
                self(self, pos + 1, remaining - w);
                cur.pop_back();
            }
        }
    };
    rec(rec, 0, weight);
    return out;
}

}  // namespace

FinChainComplex build_koszul_complex(int dim, int m) {
    if (dim < 1 || m < 1) throw std::invalid_argument("build_koszul_complex: dim, m >= 1 required");
    FinChainComplex cx;
    std::map<int, std::vector<std::pair<Monomial, std::vector<int>>>> basis;
    for (int k = 0; k <= m - 1; ++k) {
        cx.degrees.push_back(k);
        auto& list = basis[k];
        if (m - k <= dim) {
            for (const auto& ext : subsets_of_size(dim, m - k))
                for (const Monomial& sym : enumerate_monomials(dim, k)) list.push_back({sym, ext});
        }
        std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
            return koszul_label(a.first, a.second) < koszul_label(b.first, b.second);
        });
        auto& labels = cx.basis[k];
        for (const auto& [sym, ext] : list) labels.push_back(koszul_label(sym, ext));
    }
    std::map<std::string, int> index;
    for (int k = 0; k + 1 <= m - 1; ++k) {
        index.clear();
        for (int i = 0; i < cx.dim_at(k + 1); ++i) index[cx.basis[k + 1][i]] = i;
        SparseMatrix d(cx.dim_at(k + 1), cx.dim_at(k));
        int col = 0;
        for (const auto& [sym, ext] : basis[k]) {
            for (std::size_t p = 0; p < ext.size(); ++p) {
                Monomial moved = merge(sym, Monomial(dim, {ext[p]}));
                std::vector<int> rest = ext;
                rest.erase(rest.begin() + static_cast<long>(p));
                d.add(index.at(koszul_label(moved, rest)), col,
                      Rational(p % 2 == 0 ? 1 : -1));
            }
            ++col;
        }
        cx.diff[k] = std::move(d);
    }
    return cx;
}

FinChainComplex build_bar_complex(int dim, int weight) {
    if (dim < 1 || weight < 1) throw std::invalid_argument("build_bar_complex: dim, weight >= 1");
    std::map<int, std::vector<Monomial>> alphabet;
    for (int w = 1; w <= weight; ++w) alphabet[w] = enumerate_monomials(dim, w);

    FinChainComplex cx;
    std::map<int, std::vector<MultiIndexTuple>> words;
    for (int r = 1; r <= weight; ++r) {
        auto ws = enumerate_words<Monomial>(weight, r, alphabet);
        words[-r] = std::move(ws);
    }
    for (int r = weight; r >= 1; --r) cx.degrees.push_back(-r);
    std::map<int, std::map<std::string, int>> index;
    for (auto& [d, ws] : words) {
        std::vector<std::string> labels;
        for (const auto& w : ws) {
            std::vector<std::string> ls;
            for (const Monomial& m : w) ls.push_back(m.str());
            labels.push_back(word_label(ls));
        }
        std::sort(labels.begin(), labels.end());
        for (int i = 0; i < static_cast<int>(labels.size()); ++i) index[d][labels[i]] = i;
        cx.basis[d] = std::move(labels);
    }
    auto label_of = [](const MultiIndexTuple& w) {
        std::vector<std::string> ls;
        for (const Monomial& m : w) ls.push_back(m.str());
        return word_label(ls);
    };
    for (int r = weight; r >= 2; --r) {
        int d = -r;
        SparseMatrix mtx(cx.dim_at(d + 1), cx.dim_at(d));
        for (const auto& w : words[d]) {
            int col = index[d].at(label_of(w));
            for (int i = 0; i + 1 < r; ++i) {
                MultiIndexTuple merged;
                for (int j = 0; j < i; ++j) merged.push_back(w[j]);
                merged.push_back(merge(w[i], w[i + 1]));
                for (int j = i + 2; j < r; ++j) merged.push_back(w[j]);
                mtx.add(index[d + 1].at(label_of(merged)), col, Rational(i % 2 == 0 ? 1 : -1));
            }
        }
        cx.diff[d] = std::move(mtx);
    }
    return cx;
}

FinChainComplex build_cobar_complex(int dim, int weight) {
    if (dim < 1 || weight < 1) throw std::invalid_argument("build_cobar_complex: dim, weight >= 1");
    using Ext = std::vector<int>;
    std::map<int, std::vector<Ext>> alphabet;
    for (int w = 1; w <= std::min(dim, weight); ++w) alphabet[w] = subsets_of_size(dim, w);

    std::map<int, std::vector<std::vector<Ext>>> words;
    FinChainComplex cx;
    for (int r = 1; r <= weight; ++r) {
        cx.degrees.push_back(r);
        words[r] = enumerate_words<Ext>(weight, r, alphabet);
    }
    auto label_of = [](const std::vector<Ext>& w) {
        std::vector<std::string> ls;
        for (const Ext& e : w) ls.push_back(ext_str(e));
        return word_label(ls);
    };
    std::map<int, std::map<std::string, int>> index;
    for (auto& [d, ws] : words) {
        std::vector<std::string> labels;
        for (const auto& w : ws) labels.push_back(label_of(w));
        std::sort(labels.begin(), labels.end());
        for (int i = 0; i < static_cast<int>(labels.size()); ++i) index[d][labels[i]] = i;
        cx.basis[d] = std::move(labels);
    }
    for (int r = 1; r < weight; ++r) {
        SparseMatrix mtx(cx.dim_at(r + 1), cx.dim_at(r));
        for (const auto& w : words[r]) {
            int col = index[r].at(label_of(w));
            for (int i = 0; i < r; ++i) {
                const Ext& e = w[i];
                int s = static_cast<int>(e.size());
                for (unsigned mask = 1; mask + 1 < (1u << s); ++mask) {
                    Ext first, second;
                    for (int b = 0; b < s; ++b) ((mask >> b) & 1u ? first : second).push_back(e[b]);
                    int inv = 0;
                    for (int a : first)
                        for (int b : second)
                            if (a > b) ++inv;
                    std::vector<Ext> split;
                    for (int j = 0; j < i; ++j) split.push_back(w[j]);
                    split.push_back(first);
                    split.push_back(second);
                    for (int j = i + 1; j < r; ++j) split.push_back(w[j]);
                    int sign = ((i + inv) % 2 == 0) ? 1 : -1;  // (-1)^{i+1} one-based, times shuffle
                    mtx.add(index[r + 1].at(label_of(split)), col, Rational(sign));
                }
            }
        }
        cx.diff[r] = std::move(mtx);
    }
    return cx;
}

}  // namespace permucell
