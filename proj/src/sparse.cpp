#include "permucell/sparse.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace permucell {

void SparseMatrix::add(int r, int c, const Rational& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("SparseMatrix::add: index out of bounds");
    if (v.is_zero()) return;
    Row& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    } else {
        row.insert(it, {c, v});
    }
}

Rational SparseMatrix::get(int r, int c) const {
    const Row& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return Rational(0);
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) t.data_[c].push_back({r, v});
    return t;
}

std::string SparseMatrix::to_cache_string() const {
    std::ostringstream os;
    os << rows_ << ' ' << cols_ << ' ' << nnz() << '\n';
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r])
            os << r << ' ' << c << ' ' << v.num().get_str() << ' ' << v.den().get_str() << '\n';
    return os.str();
}

SparseMatrix SparseMatrix::from_cache_string(const std::string& text) {
    std::istringstream is(text);
    long rows, cols;
    std::size_t nnz;
    if (!(is >> rows >> cols >> nnz)) throw std::runtime_error("matrix cache: bad header");
    SparseMatrix m(static_cast<int>(rows), static_cast<int>(cols));
    for (std::size_t i = 0; i < nnz; ++i) {
        long r, c;
        std::string num, den;
        if (!(is >> r >> c >> num >> den)) throw std::runtime_error("matrix cache: truncated entry list");
        m.add(static_cast<int>(r), static_cast<int>(c), Rational(BigInt(num), BigInt(den)));
    }
    return m;
}

SparseMatrix compose(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("compose: dimension mismatch (" + std::to_string(a.cols()) +
                                    " vs " + std::to_string(b.rows()) + ")");
    SparseMatrix out(a.rows(), b.cols());
    // (a*b)[i,j] = sum_k a[i,k] b[k,j]; accumulate row-by-row.
    for (int i = 0; i < a.rows(); ++i) {
        std::map<int, Rational> acc;
        for (const auto& [k, av] : a.row(i))
            for (const auto& [j, bv] : b.row(k)) acc[j] += av * bv;
        for (const auto& [j, v] : acc) out.add(i, j, v);
    }
    return out;
}

namespace {

// One integer row of the elimination workspace, sorted by column.
using IRow = std::vector<std::pair<int, BigInt>>;

void divide_by_content(IRow& row) {
    if (row.empty()) return;
    BigInt g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// target := pivot_val * target - target_val * pivot_row, then content-reduced.
IRow eliminate_row(const IRow& target, const BigInt& target_val, const IRow& pivot_row,
                   const BigInt& pivot_val) {
    IRow out;
    out.reserve(target.size() + pivot_row.size());
    auto ti = target.begin();
    auto pi = pivot_row.begin();
    while (ti != target.end() || pi != pivot_row.end()) {
        if (pi == pivot_row.end() || (ti != target.end() && ti->first < pi->first)) {
            out.emplace_back(ti->first, pivot_val * ti->second);
            ++ti;
        } else if (ti == target.end() || pi->first < ti->first) {
            out.emplace_back(pi->first, -target_val * pi->second);
            ++pi;
        } else {
            BigInt v = pivot_val * ti->second - target_val * pi->second;
            if (v != 0) out.emplace_back(ti->first, v);
            ++ti;
            ++pi;
        }
    }
    divide_by_content(out);
    return out;
}

}  // namespace

int rank(const SparseMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;

    // Scale each row to integers (common denominator), then reduce content.
    std::vector<IRow> rows;
    rows.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r) {
        const auto& src = m.row(r);
        if (src.empty()) continue;
        BigInt lcm = 1;
        for (const auto& [c, v] : src) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());
        IRow row;
        row.reserve(src.size());
        for (const auto& [c, v] : src) row.emplace_back(c, v.num() * (lcm / v.den()));
        divide_by_content(row);
        rows.push_back(std::move(row));
    }

    std::vector<int> col_count(m.cols(), 0);
    for (const auto& row : rows)
        for (const auto& [c, v] : row) ++col_count[c];

    int rk = 0;
    std::vector<bool> alive(rows.size(), true);
    std::size_t remaining = rows.size();
    while (remaining > 0) {
        // Markowitz pivot: minimize (row_nnz - 1) * (col_nnz - 1);
        // ties broken by (row index, column index) for determinism.
        long best_cost = std::numeric_limits<long>::max();
        std::size_t best_row = 0;
        int best_col = -1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!alive[r]) continue;
            long rw = static_cast<long>(rows[r].size()) - 1;
            for (const auto& [c, v] : rows[r]) {
                long cost = rw * (col_count[c] - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    best_row = r;
                    best_col = c;
                    if (cost == 0) break;
                }
            }
            if (best_cost == 0) break;
        }
        if (best_col < 0) break;

        IRow pivot_row = std::move(rows[best_row]);
        alive[best_row] = false;
        --remaining;
        ++rk;
        for (const auto& [c, v] : pivot_row) --col_count[c];
        BigInt pivot_val;
        for (const auto& [c, v] : pivot_row)
            if (c == best_col) pivot_val = v;

        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!alive[r]) continue;
            auto it = std::lower_bound(rows[r].begin(), rows[r].end(), best_col,
                                       [](const auto& e, int col) { return e.first < col; });
            if (it == rows[r].end() || it->first != best_col) continue;
            for (const auto& [c, v] : rows[r]) --col_count[c];
            rows[r] = eliminate_row(rows[r], it->second, pivot_row, pivot_val);
            if (rows[r].empty()) {
                alive[r] = false;
                --remaining;
            } else {
                for (const auto& [c, v] : rows[r]) ++col_count[c];
            }
        }
    }
    return rk;
}

}  // namespace permucell
