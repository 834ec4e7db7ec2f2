#include "permucell/cells.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permucell {

namespace {

std::string set_str(const std::vector<int>& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ',';
        os << s[i];
    }
    os << '}';
    return os.str();
}

// Sign of the permutation sorting `v` ascending; 0 if entries repeat.
int sort_sign(std::vector<int> v) {
    int sign = 1;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[i] == v[j]) return 0;
            if (v[i] > v[j]) sign = -sign;
        }
    return sign;
}

void check_permutation(const std::vector<int>& g, int n) {
    if (static_cast<int>(g.size()) != n) throw std::invalid_argument("sn_action: permutation size != n");
    std::vector<bool> seen(n + 1, false);
    for (int x : g) {
        if (x < 1 || x > n || seen[x]) throw std::invalid_argument("sn_action: not a bijection of [n]");
        seen[x] = true;
    }
}

}  // namespace

std::string SimplexCell::label() const {
    std::ostringstream os;
    os << "S(" << n << ';' << set_str(vanishing) << ')';
    return os.str();
}

std::string PermCell::label() const {
    std::ostringstream os;
    os << "P(" << n << ';';
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) os << '|';
        os << set_str(blocks[i]);
    }
    os << ')';
    return os.str();
}

SignedCellSum<SimplexCell> simplex_boundary(const SimplexCell& c) {
    SignedCellSum<SimplexCell> out;
    if (c.dim() <= 0) return out;
    std::vector<int> complement;
    for (int j = 1; j <= c.n; ++j)
        if (!std::binary_search(c.vanishing.begin(), c.vanishing.end(), j)) complement.push_back(j);
    for (std::size_t p = 0; p < complement.size(); ++p) {
        SimplexCell face{c.n, c.vanishing};
        face.vanishing.push_back(complement[p]);
        std::sort(face.vanishing.begin(), face.vanishing.end());
        out[face] += Rational(p % 2 == 0 ? 1 : -1);  // (-1)^{p+1}, p one-based
    }
    return out;
}

SignedCellSum<PermCell> perm_boundary(const PermCell& c) {
    SignedCellSum<PermCell> out;
    int k = static_cast<int>(c.blocks.size());
    if (k >= c.n) return out;  // vertex
    int size_prefix = 0;       // |I_1| + ... + |I_{i-1}|
    for (int i = 1; i <= k; ++i) {
        const std::vector<int>& block = c.blocks[i - 1];
        int s = static_cast<int>(block.size());
        // Ordered splits: every nonempty proper subset of the block as I'.
        for (unsigned mask = 1; mask + 1 < (1u << s); ++mask) {
            std::vector<int> first, second;
            for (int b = 0; b < s; ++b)
                ((mask >> b) & 1u ? first : second).push_back(block[b]);
            // shuffle sign: inversions between first and second (each ascending)
            int inv = 0;
            for (int a : first)
                for (int b : second)
                    if (a > b) ++inv;
            int eps = i + 1 + size_prefix + static_cast<int>(first.size());
            int sign = ((eps + inv) % 2 == 0) ? 1 : -1;
            PermCell face{c.n, {}};
            face.blocks.reserve(k + 1);
            for (int j = 0; j < i - 1; ++j) face.blocks.push_back(c.blocks[j]);
            face.blocks.push_back(first);
            face.blocks.push_back(second);
            for (int j = i; j < k; ++j) face.blocks.push_back(c.blocks[j]);
            out[face] += Rational(sign);
        }
        size_prefix += s;
    }
    return out;
}

std::pair<SimplexCell, int> sn_action(const std::vector<int>& g, const SimplexCell& c) {
    check_permutation(g, c.n);
    SimplexCell out{c.n, {}};
    out.vanishing.reserve(c.vanishing.size());
    for (int i : c.vanishing) out.vanishing.push_back(g[i - 1]);
    std::sort(out.vanishing.begin(), out.vanishing.end());
    // Skew bunch is the complement; sign of sorting its image.
    std::vector<int> image;
    for (int j = 1; j <= c.n; ++j)
        if (!std::binary_search(c.vanishing.begin(), c.vanishing.end(), j)) image.push_back(g[j - 1]);
    return {out, sort_sign(image)};
}

std::pair<PermCell, int> sn_action(const std::vector<int>& g, const PermCell& c) {
    check_permutation(g, c.n);
    PermCell out{c.n, {}};
    out.blocks.reserve(c.blocks.size());
    int sign = 1;
    for (const auto& block : c.blocks) {
        std::vector<int> image;
        image.reserve(block.size());
        for (int i : block) image.push_back(g[i - 1]);
        sign *= sort_sign(image);
        std::sort(image.begin(), image.end());
        out.blocks.push_back(std::move(image));
    }
    return {out, sign};
}

std::vector<SimplexCell> enumerate_simplex_cells(int n) {
    std::vector<SimplexCell> cells;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<int>(__builtin_popcount(mask)) > n - 1) continue;
        SimplexCell c{n, {}};
        for (int b = 0; b < n; ++b)
            if ((mask >> b) & 1u) c.vanishing.push_back(b + 1);
        cells.push_back(std::move(c));
    }
    return cells;
}

std::vector<PermCell> enumerate_perm_cells(int n) {
    // Every ordered set partition arises from a surjection [n] -> [k].
    std::vector<PermCell> cells;
    std::vector<int> assign(n, 0);
    for (int k = 1; k <= n; ++k) {
        std::fill(assign.begin(), assign.end(), 0);
        while (true) {
            PermCell c{n, std::vector<std::vector<int>>(k)};
            for (int i = 0; i < n; ++i) c.blocks[assign[i]].push_back(i + 1);
            bool surjective = true;
            for (const auto& b : c.blocks)
                if (b.empty()) surjective = false;
            if (surjective) cells.push_back(std::move(c));
            int pos = n - 1;
            while (pos >= 0 && assign[pos] == k - 1) assign[pos--] = 0;
            if (pos < 0) break;
            ++assign[pos];
        }
    }
    return cells;
}

namespace {

template <class Cell>
FinChainComplex build_cell_complex(const std::vector<Cell>& cells,
                                   SignedCellSum<Cell> (*boundary)(const Cell&), int top_dim) {
    FinChainComplex cx;
    for (int d = -top_dim; d <= 0; ++d) cx.degrees.push_back(d);

    std::map<int, std::vector<Cell>> by_degree;
    for (const Cell& c : cells) by_degree[-c.dim()].push_back(c);

    std::map<int, std::map<std::string, int>> index;
    for (auto& [d, list] : by_degree) {
        std::sort(list.begin(), list.end(),
                  [](const Cell& a, const Cell& b) { return a.label() < b.label(); });
        auto& labels = cx.basis[d];
        for (const Cell& c : list) {
            index[d][c.label()] = static_cast<int>(labels.size());
            labels.push_back(c.label());
        }
    }
    for (int d : cx.degrees) cx.basis[d];  // materialize empty degrees

    for (int d : cx.degrees) {
        if (d == 0) break;
        SparseMatrix m(cx.dim_at(d + 1), cx.dim_at(d));
        auto it = by_degree.find(d);
        if (it != by_degree.end()) {
            int col = 0;
            for (const Cell& c : it->second) {
                for (const auto& [face, coeff] : boundary(c))
                    m.add(index[d + 1][face.label()], col, coeff);
                ++col;
            }
        }
        cx.diff[d] = std::move(m);
    }
    return cx;
}

}  // namespace

FinChainComplex build_simplex_complex(int n) {
    if (n < 1) throw std::invalid_argument("build_simplex_complex: n >= 1 required");
    return build_cell_complex<SimplexCell>(enumerate_simplex_cells(n), &simplex_boundary, n - 1);
}

FinChainComplex build_perm_complex(int n) {
    if (n < 1) throw std::invalid_argument("build_perm_complex: n >= 1 required");
    return build_cell_complex<PermCell>(enumerate_perm_cells(n), &perm_boundary, n - 1);
}

std::map<int, long> f_vector(const FinChainComplex& c) {
    std::map<int, long> f;
    for (int d : c.degrees)
        if (c.dim_at(d) > 0) f[-d] = c.dim_at(d);
    return f;
}

}  // namespace permucell
