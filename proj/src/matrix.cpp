#include "sscat/matrix.hpp"

#include <algorithm>

namespace sscat {

SparseMatrix SparseMatrix::identity(Index n)
{
    SparseMatrix m(n, n);
    for (Index i = 0; i < n; ++i) m.columns_[i].push_back({i, Integer(1)});
    return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Integer>>& rows, Index cols)
{
    SparseMatrix m(rows.size(), cols);
    for (Index r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error("from_dense: ragged rows");
        for (Index c = 0; c < cols; ++c) {
            if (rows[r][c] != 0) m.columns_[c].push_back({r, rows[r][c]});
        }
    }
    return m;
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

Integer SparseMatrix::at(Index r, Index c) const
{
    const auto& col = columns_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, Index row) { return e.row < row; });
    if (it != col.end() && it->row == r) return it->value;
    return 0;
}

void SparseMatrix::add(Index r, Index c, const Integer& v)
{
    if (r >= rows_ || c >= cols()) throw Error("SparseMatrix::add: index out of range");
    if (v == 0) return;
    auto& col = columns_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, Index row) { return e.row < row; });
    if (it != col.end() && it->row == r) {
        it->value += v;
        if (it->value == 0) col.erase(it);
    } else {
        col.insert(it, Entry{r, v});
    }
}

bool SparseMatrix::is_zero() const
{
    return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
}

std::vector<std::vector<Integer>> SparseMatrix::to_dense() const
{
    std::vector<std::vector<Integer>> d(rows_, std::vector<Integer>(cols(), 0));
    for (Index c = 0; c < cols(); ++c) {
        for (const auto& e : columns_[c]) d[e.row][c] = e.value;
    }
    return d;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& b) const
{
    if (cols() != b.rows()) throw Error("SparseMatrix: dimension mismatch in product");
    SparseMatrix out(rows_, b.cols());
    std::vector<Integer> acc(rows_);
    std::vector<char> touched(rows_, 0);
    std::vector<Index> rows_hit;
    for (Index c = 0; c < b.cols(); ++c) {
        rows_hit.clear();
        for (const auto& eb : b.columns_[c]) {
            for (const auto& ea : columns_[eb.row]) {
                if (!touched[ea.row]) {
                    touched[ea.row] = 1;
                    acc[ea.row] = 0;
                    rows_hit.push_back(ea.row);
                }
                acc[ea.row] += ea.value * eb.value;
            }
        }
        std::sort(rows_hit.begin(), rows_hit.end());
        for (Index r : rows_hit) {
            if (acc[r] != 0) out.columns_[c].push_back({r, acc[r]});
            touched[r] = 0;
        }
    }
    return out;
}

namespace {

SparseMatrix::Column merge(const SparseMatrix::Column& a, const SparseMatrix::Column& b, int sign)
{
    SparseMatrix::Column out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].row < b[j].row)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].row < a[i].row) {
            out.push_back({b[j].row, sign > 0 ? b[j].value : Integer(-b[j].value)});
            ++j;
        } else {
            Integer v = sign > 0 ? Integer(a[i].value + b[j].value) : Integer(a[i].value - b[j].value);
            if (v != 0) out.push_back({a[i].row, v});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

SparseMatrix SparseMatrix::operator+(const SparseMatrix& b) const
{
    if (rows_ != b.rows_ || cols() != b.cols()) throw Error("SparseMatrix: dimension mismatch in sum");
    SparseMatrix out(rows_, cols());
    for (Index c = 0; c < cols(); ++c) out.columns_[c] = merge(columns_[c], b.columns_[c], +1);
    return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& b) const
{
    if (rows_ != b.rows_ || cols() != b.cols()) throw Error("SparseMatrix: dimension mismatch in difference");
    SparseMatrix out(rows_, cols());
    for (Index c = 0; c < cols(); ++c) out.columns_[c] = merge(columns_[c], b.columns_[c], -1);
    return out;
}

SparseMatrix SparseMatrix::operator-() const
{
    SparseMatrix out = *this;
    for (auto& col : out.columns_) {
        for (auto& e : col) e.value = -e.value;
    }
    return out;
}

SparseMatrix SparseMatrix::transpose() const
{
    SparseMatrix out(cols(), rows_);
    for (Index c = 0; c < cols(); ++c) {
        for (const auto& e : columns_[c]) out.columns_[e.row].push_back({c, e.value});
    }
    return out;
}

SparseMatrix SparseMatrix::reduced_mod(long p) const
{
    SparseMatrix out(rows_, cols());
    for (Index c = 0; c < cols(); ++c) {
        for (const auto& e : columns_[c]) {
            Integer v = e.value % p;
            if (v < 0) v += p;
            if (v != 0) out.columns_[c].push_back({e.row, v});
        }
    }
    return out;
}

}  // namespace sscat
