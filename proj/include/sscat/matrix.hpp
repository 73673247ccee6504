#pragma once

#include <vector>

#include "sscat/common.hpp"

namespace sscat {

/// Column-major sparse integer matrix. Columns hold their nonzero entries
/// sorted by row.
class SparseMatrix {
public:
    struct Entry {
        Index row;
        Integer value;

        bool operator==(const Entry& o) const { return row == o.row && value == o.value; }
    };
    using Column = std::vector<Entry>;

    SparseMatrix() = default;
    SparseMatrix(Index rows, Index cols) : rows_(rows), columns_(cols) {}

    static SparseMatrix identity(Index n);
    static SparseMatrix from_dense(const std::vector<std::vector<Integer>>& rows, Index cols);

    Index rows() const { return rows_; }
    Index cols() const { return columns_.size(); }
    const Column& column(Index c) const { return columns_[c]; }
    std::size_t nonzeros() const;

    Integer at(Index r, Index c) const;
    /// Adds v to entry (r, c), dropping it if the sum vanishes.
    void add(Index r, Index c, const Integer& v);

    bool is_zero() const;
    std::vector<std::vector<Integer>> to_dense() const;

    SparseMatrix operator*(const SparseMatrix& b) const;
    SparseMatrix operator+(const SparseMatrix& b) const;
    SparseMatrix operator-(const SparseMatrix& b) const;
    SparseMatrix operator-() const;
    SparseMatrix transpose() const;
    /// Entries reduced into [0, p), zeros dropped.
    SparseMatrix reduced_mod(long p) const;

    bool operator==(const SparseMatrix& b) const { return rows_ == b.rows_ && columns_ == b.columns_; }

private:
    Index rows_ = 0;
    std::vector<Column> columns_;
};

}  // namespace sscat
