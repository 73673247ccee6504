#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "sscat/common.hpp"
#include "sscat/matrix.hpp"

namespace sscat {

struct PrimeField {
    using T = std::int64_t;
    long p = 2;

    T zero() const { return 0; }
    T one() const { return 1; }
    T add(T a, T b) const { return (a + b) % p; }
    T sub(T a, T b) const { return ((a - b) % p + p) % p; }
    T mul(T a, T b) const { return static_cast<T>((static_cast<__int128>(a) * b) % p); }
    T neg(T a) const { return a == 0 ? 0 : p - a; }
    T inv(T a) const
    {
        T r = 1;
        T base = a % p;
        long e = p - 2;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    bool is_zero(T a) const { return a == 0; }
    T from(const Integer& v) const
    {
        Integer r = v % p;
        if (r < 0) r += p;
        return r.get_si();
    }
};

struct RationalField {
    using T = mpq_class;

    T zero() const { return 0; }
    T one() const { return 1; }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T neg(const T& a) const { return -a; }
    T inv(const T& a) const { return 1 / a; }
    bool is_zero(const T& a) const { return sgn(a) == 0; }
    T from(const Integer& v) const { return T(v); }
};

/// Dense linear algebra over a field. Vectors are coordinate lists; a set of
/// vectors spans a subspace.
namespace linalg {

template <class F>
using Vec = std::vector<typename F::T>;

/// Reduced row echelon form of a list of vectors of length `dim`.
template <class F>
struct Echelon {
    std::vector<Vec<F>> rows;
    std::vector<Index> pivots;
    Index dim = 0;

    Index rank() const { return rows.size(); }
};

template <class F>
Vec<F> reduce(const F& f, const Echelon<F>& e, Vec<F> v)
{
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        const auto c = v[e.pivots[r]];
        if (f.is_zero(c)) continue;
        for (Index k = 0; k < e.dim; ++k) {
            if (!f.is_zero(e.rows[r][k])) v[k] = f.sub(v[k], f.mul(c, e.rows[r][k]));
        }
    }
    return v;
}

template <class F>
bool is_zero_vec(const F& f, const Vec<F>& v)
{
    for (const auto& x : v) {
        if (!f.is_zero(x)) return false;
    }
    return true;
}

/// Adds v to the echelon form. Returns false when v was already in the span.
template <class F>
bool insert(const F& f, Echelon<F>& e, Vec<F> v)
{
    v = reduce(f, e, std::move(v));
    Index piv = e.dim;
    for (Index k = 0; k < e.dim; ++k) {
        if (!f.is_zero(v[k])) {
            piv = k;
            break;
        }
    }
    if (piv == e.dim) return false;
    const auto inv = f.inv(v[piv]);
    for (auto& x : v) x = f.mul(x, inv);
    for (auto& row : e.rows) {
        const auto c = row[piv];
        if (f.is_zero(c)) continue;
        for (Index k = 0; k < e.dim; ++k) {
            if (!f.is_zero(v[k])) row[k] = f.sub(row[k], f.mul(c, v[k]));
        }
    }
    auto pos = std::lower_bound(e.pivots.begin(), e.pivots.end(), piv) - e.pivots.begin();
    e.pivots.insert(e.pivots.begin() + pos, piv);
    e.rows.insert(e.rows.begin() + pos, std::move(v));
    return true;
}

template <class F>
Echelon<F> echelon(const F& f, const std::vector<Vec<F>>& vectors, Index dim)
{
    Echelon<F> e;
    e.dim = dim;
    for (const auto& v : vectors) insert(f, e, v);
    return e;
}

template <class F>
bool in_span(const F& f, const Echelon<F>& e, const Vec<F>& v)
{
    return is_zero_vec(f, reduce(f, e, v));
}

template <class F>
Vec<F> zero_vec(const F& f, Index n)
{
    return Vec<F>(n, f.zero());
}

template <class F>
Vec<F> unit_vec(const F& f, Index n, Index i)
{
    auto v = zero_vec(f, n);
    v[i] = f.one();
    return v;
}

template <class F>
Vec<F> apply(const F& f, const SparseMatrix& m, const Vec<F>& v)
{
    auto out = zero_vec(f, m.rows());
    for (Index c = 0; c < m.cols(); ++c) {
        if (f.is_zero(v[c])) continue;
        for (const auto& e : m.column(c)) out[e.row] = f.add(out[e.row], f.mul(f.from(e.value), v[c]));
    }
    return out;
}

/// Basis of the null space of the linear map whose columns are `columns`
/// (each of length `dim`), as coefficient vectors of length columns.size().
template <class F>
std::vector<Vec<F>> null_space(const F& f, const std::vector<Vec<F>>& columns, Index dim)
{
    const Index k = columns.size();
    // Row-reduce the dim x k matrix.
    std::vector<Vec<F>> a(dim, zero_vec(f, k));
    for (Index j = 0; j < k; ++j) {
        for (Index i = 0; i < dim; ++i) a[i][j] = columns[j][i];
    }
    std::vector<long> pivot_row_of_col(k, -1);
    Index row = 0;
    for (Index col = 0; col < k && row < dim; ++col) {
        Index sel = dim;
        for (Index i = row; i < dim; ++i) {
            if (!f.is_zero(a[i][col])) {
                sel = i;
                break;
            }
        }
        if (sel == dim) continue;
        std::swap(a[row], a[sel]);
        const auto inv = f.inv(a[row][col]);
        for (auto& x : a[row]) x = f.mul(x, inv);
        for (Index i = 0; i < dim; ++i) {
            if (i == row || f.is_zero(a[i][col])) continue;
            const auto c = a[i][col];
            for (Index jj = 0; jj < k; ++jj) {
                if (!f.is_zero(a[row][jj])) a[i][jj] = f.sub(a[i][jj], f.mul(c, a[row][jj]));
            }
        }
        pivot_row_of_col[col] = static_cast<long>(row);
        ++row;
    }
    std::vector<Vec<F>> basis;
    for (Index free = 0; free < k; ++free) {
        if (pivot_row_of_col[free] >= 0) continue;
        auto v = zero_vec(f, k);
        v[free] = f.one();
        for (Index col = 0; col < k; ++col) {
            if (pivot_row_of_col[col] >= 0) v[col] = f.neg(a[pivot_row_of_col[col]][free]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
Vec<F> combine(const F& f, const std::vector<Vec<F>>& vectors, const Vec<F>& coeffs, Index dim)
{
    auto out = zero_vec(f, dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (f.is_zero(coeffs[i])) continue;
        for (Index k = 0; k < dim; ++k) {
            if (!f.is_zero(vectors[i][k])) out[k] = f.add(out[k], f.mul(coeffs[i], vectors[i][k]));
        }
    }
    return out;
}

/// {u in span(U) : A u in span(W)} for A : F^n -> F^m.
template <class F>
std::vector<Vec<F>> preimage(const F& f, const SparseMatrix& a, const std::vector<Vec<F>>& u,
                             const std::vector<Vec<F>>& w)
{
    auto ew = echelon(f, w, a.rows());
    std::vector<Vec<F>> residues;
    for (const auto& v : u) residues.push_back(reduce(f, ew, apply(f, a, v)));
    std::vector<Vec<F>> out;
    for (const auto& c : null_space(f, residues, a.rows())) {
        auto x = combine(f, u, c, a.cols());
        if (!is_zero_vec(f, x)) out.push_back(std::move(x));
    }
    return out;
}

/// Vectors of Z whose classes form a basis of span(Z + B) / span(B).
template <class F>
std::vector<Vec<F>> complement(const F& f, const std::vector<Vec<F>>& z, const std::vector<Vec<F>>& b, Index dim)
{
    auto e = echelon(f, b, dim);
    std::vector<Vec<F>> out;
    for (const auto& v : z) {
        if (insert(f, e, v)) out.push_back(v);
    }
    return out;
}

/// Coefficients a with v = sum a_i basis_i + (element of span(rel)), if any.
template <class F>
std::optional<Vec<F>> coordinates(const F& f, const std::vector<Vec<F>>& basis, const std::vector<Vec<F>>& rel,
                                  const Vec<F>& v, Index dim)
{
    std::vector<Vec<F>> cols = basis;
    cols.insert(cols.end(), rel.begin(), rel.end());
    auto target = v;
    for (auto& x : target) x = f.neg(x);
    cols.push_back(target);
    // A solution with last coefficient 1 gives sum c_i col_i = v.
    for (const auto& n : null_space(f, cols, dim)) {
        const auto last = n.back();
        if (f.is_zero(last)) continue;
        const auto inv = f.inv(last);
        Vec<F> out(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) out[i] = f.mul(n[i], inv);
        return out;
    }
    if (is_zero_vec(f, v)) return zero_vec(f, basis.size());
    return std::nullopt;
}

/// (f - g) on ker d_k lands in im d_{k+1}; `diff` is (f - g)_k.
template <class F>
bool maps_cycles_into_boundaries(const F& f, const SparseMatrix& dk, const SparseMatrix& diff,
                                 const SparseMatrix& dk1)
{
    std::vector<Vec<F>> cols;
    for (Index j = 0; j < dk.cols(); ++j) cols.push_back(apply(f, dk, unit_vec(f, dk.cols(), j)));
    auto cycles = null_space(f, cols, dk.rows());
    std::vector<Vec<F>> bounds;
    for (Index j = 0; j < dk1.cols(); ++j) bounds.push_back(apply(f, dk1, unit_vec(f, dk1.cols(), j)));
    auto eb = echelon(f, bounds, dk1.rows());
    for (const auto& z : cycles) {
        if (!in_span(f, eb, apply(f, diff, z))) return false;
    }
    return true;
}

}  // namespace linalg

}  // namespace sscat
