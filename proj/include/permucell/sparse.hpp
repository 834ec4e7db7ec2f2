#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "permucell/rational.hpp"

namespace permucell {

/// Sparse matrix over Q. Rows hold (column, value) pairs sorted by column;
/// no zero entries are ever stored. Immutable in spirit: build once via
/// set/add, then treat as a value.
class SparseMatrix {
public:
    using Entry = std::pair<int, Rational>;
    using Row = std::vector<Entry>;

    SparseMatrix() : rows_(0), cols_(0) {}
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    static SparseMatrix identity(int n) {
        SparseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.add(i, i, Rational(1));
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    /// Accumulates into (r, c); drops the entry if the sum cancels.
    void add(int r, int c, const Rational& v);

    Rational get(int r, int c) const;
    const Row& row(int r) const { return data_[r]; }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& r : data_) n += r.size();
        return n;
    }
    bool is_zero() const { return nnz() == 0; }

    SparseMatrix transpose() const;

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Cache file format: header "rows cols nnz", then one "row col num den"
    /// line per entry, sorted by (row, col).
    std::string to_cache_string() const;
    static SparseMatrix from_cache_string(const std::string& text);

private:
    int rows_, cols_;
    std::vector<Row> data_;
};

/// Exact product a*b; throws std::invalid_argument on inner-dimension mismatch.
SparseMatrix compose(const SparseMatrix& a, const SparseMatrix& b);

/// Rank over Q by fraction-free elimination: rows are scaled to integers,
/// pivots are chosen by Markowitz cost on sparsity, and updated rows are
/// divided by their integer content so entries stay reduced.
int rank(const SparseMatrix& m);

}  // namespace permucell
