#include "sscat/snf.hpp"

#include <algorithm>
#include <cstdint>

namespace sscat {

namespace {

struct Overflow {};

struct Checked64 {
    using T = std::int64_t;

    static T from(const Integer& v)
    {
        if (!v.fits_slong_p()) throw Overflow{};
        return v.get_si();
    }
    static Integer to(T v) { return Integer(static_cast<long>(v)); }
    static T mul(T a, T b)
    {
        T r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static T sub(T a, T b)
    {
        T r;
        if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static T abs(T a)
    {
        if (a == INT64_MIN) throw Overflow{};
        return a < 0 ? -a : a;
    }
    static bool divides(T a, T b) { return b % a == 0; }
    static T quot(T a, T b) { return a / b; }
};

struct Big {
    using T = Integer;

    static T from(const Integer& v) { return v; }
    static Integer to(const T& v) { return v; }
    static T mul(const T& a, const T& b) { return a * b; }
    static T sub(const T& a, const T& b) { return a - b; }
    static T abs(const T& a) { return ::abs(a); }
    static bool divides(const T& a, const T& b) { return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0; }
    static T quot(const T& a, const T& b) { return a / b; }
};

void dense_smith(DenseMatrix& a, Index m, Index n, DenseMatrix* u, DenseMatrix* v)
{
    auto swap_rows = [&](Index i, Index j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        if (u) std::swap((*u)[i], (*u)[j]);
    };
    auto swap_cols = [&](Index i, Index j) {
        if (i == j) return;
        for (auto& row : a) std::swap(row[i], row[j]);
        if (v) {
            for (auto& row : *v) std::swap(row[i], row[j]);
        }
    };
    // row_i += q * row_j
    auto row_add = [&](Index i, Index j, const Integer& q) {
        for (Index c = 0; c < n; ++c) {
            if (a[j][c] != 0) a[i][c] += q * a[j][c];
        }
        if (u) {
            for (Index c = 0; c < m; ++c) {
                if ((*u)[j][c] != 0) (*u)[i][c] += q * (*u)[j][c];
            }
        }
    };
    auto col_add = [&](Index i, Index j, const Integer& q) {
        for (Index r = 0; r < m; ++r) {
            if (a[r][j] != 0) a[r][i] += q * a[r][j];
        }
        if (v) {
            for (Index r = 0; r < n; ++r) {
                if ((*v)[r][j] != 0) (*v)[r][i] += q * (*v)[r][j];
            }
        }
    };

    const Index k = std::min(m, n);
    for (Index t = 0; t < k; ++t) {
        Index pi = m;
        Index pj = n;
        Integer best;
        for (Index i = t; i < m; ++i) {
            for (Index j = t; j < n; ++j) {
                if (a[i][j] == 0) continue;
                Integer x = ::abs(a[i][j]);
                if (pi == m || x < best) {
                    best = x;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi == m) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        while (true) {
            for (Index i = t + 1; i < m; ++i) {
                if (a[i][t] != 0) {
                    Integer q = a[i][t] / a[t][t];
                    if (q != 0) row_add(i, t, -q);
                }
            }
            for (Index j = t + 1; j < n; ++j) {
                if (a[t][j] != 0) {
                    Integer q = a[t][j] / a[t][t];
                    if (q != 0) col_add(j, t, -q);
                }
            }
            Index ri = m;
            Index cj = n;
            Integer small = ::abs(a[t][t]);
            for (Index i = t + 1; i < m; ++i) {
                if (a[i][t] != 0 && ::abs(a[i][t]) < small) {
                    small = ::abs(a[i][t]);
                    ri = i;
                    cj = n;
                }
            }
            for (Index j = t + 1; j < n; ++j) {
                if (a[t][j] != 0 && ::abs(a[t][j]) < small) {
                    small = ::abs(a[t][j]);
                    cj = j;
                    ri = m;
                }
            }
            if (ri != m) {
                swap_rows(t, ri);
                continue;
            }
            if (cj != n) {
                swap_cols(t, cj);
                continue;
            }
            Index bad = m;
            for (Index i = t + 1; i < m && bad == m; ++i) {
                for (Index j = t + 1; j < n; ++j) {
                    if (a[i][j] != 0 && !mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
                        bad = i;
                        break;
                    }
                }
            }
            if (bad == m) break;
            row_add(t, bad, 1);
        }
        if (a[t][t] < 0) {
            for (Index c = 0; c < n; ++c) a[t][c] = -a[t][c];
            if (u) {
                for (Index c = 0; c < m; ++c) (*u)[t][c] = -(*u)[t][c];
            }
        }
    }
}

template <class S>
std::vector<Integer> eliminate(const SparseMatrix& a)
{
    using T = typename S::T;
    struct Cell {
        Index col;
        T val;
    };
    const Index m = a.rows();
    const Index n = a.cols();
    std::vector<std::vector<Cell>> rows(m);
    for (Index c = 0; c < n; ++c) {
        for (const auto& e : a.column(c)) rows[e.row].push_back({c, S::from(e.value)});
    }
    std::vector<std::vector<Index>> col_rows(n);
    for (Index r = 0; r < m; ++r) {
        for (const auto& e : rows[r]) col_rows[e.col].push_back(r);
    }
    std::vector<char> row_alive(m, 1);
    std::vector<Integer> diag;

    auto find = [&](Index r, Index c) -> const T* {
        auto& row = rows[r];
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const Cell& x, Index col) { return x.col < col; });
        if (it != row.end() && it->col == c) return &it->val;
        return nullptr;
    };

    std::vector<Cell> scratch;
    auto pivot = [&](Index r, Index c, T v) {
        const auto& prow = rows[r];
        std::vector<Index> targets = col_rows[c];
        for (Index r2 : targets) {
            if (r2 == r || !row_alive[r2]) continue;
            const T* hit = find(r2, c);
            if (!hit) continue;
            T f = S::quot(*hit, v);
            auto& row = rows[r2];
            scratch.clear();
            std::size_t i = 0;
            std::size_t j = 0;
            while (i < row.size() || j < prow.size()) {
                if (j == prow.size() || (i < row.size() && row[i].col < prow[j].col)) {
                    scratch.push_back(row[i++]);
                } else if (i == row.size() || prow[j].col < row[i].col) {
                    col_rows[prow[j].col].push_back(r2);
                    scratch.push_back({prow[j].col, S::sub(T(0), S::mul(f, prow[j].val))});
                    ++j;
                } else {
                    T x = S::sub(row[i].val, S::mul(f, prow[j].val));
                    if (x != 0) scratch.push_back({row[i].col, x});
                    ++i;
                    ++j;
                }
            }
            row.swap(scratch);
        }
        row_alive[r] = 0;
        col_rows[c].clear();
        diag.push_back(S::to(S::abs(v)));
    };

    auto column_divisible = [&](Index c, Index r, const T& v) {
        for (Index r2 : col_rows[c]) {
            if (r2 == r || !row_alive[r2]) continue;
            const T* x = find(r2, c);
            if (x && !S::divides(v, *x)) return false;
        }
        return true;
    };

    std::vector<Index> order;
    while (true) {
        bool progress = false;
        order.clear();
        for (Index r = 0; r < m; ++r) {
            if (row_alive[r] && !rows[r].empty()) order.push_back(r);
        }
        std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) { return rows[x].size() < rows[y].size(); });
        for (Index r : order) {
            if (!row_alive[r] || rows[r].empty()) continue;
            std::size_t best = 0;
            bool found = false;
            Index bc = 0;
            T bv{};
            for (const auto& e : rows[r]) {
                if (e.val == 1 || e.val == -1) {
                    std::size_t weight = col_rows[e.col].size();
                    if (!found || weight < best) {
                        found = true;
                        best = weight;
                        bc = e.col;
                        bv = e.val;
                    }
                }
            }
            if (found) {
                pivot(r, bc, bv);
                progress = true;
            }
        }
        if (progress) continue;

        // No units left: a pivot dividing its whole row and column still
        // splits off as a diagonal entry.
        for (Index r : order) {
            if (!row_alive[r] || rows[r].empty()) continue;
            std::vector<std::size_t> by_size(rows[r].size());
            for (std::size_t i = 0; i < by_size.size(); ++i) by_size[i] = i;
            std::sort(by_size.begin(), by_size.end(),
                      [&](std::size_t x, std::size_t y) { return S::abs(rows[r][x].val) < S::abs(rows[r][y].val); });
            for (std::size_t idx : by_size) {
                const Cell e = rows[r][idx];
                bool row_ok = std::all_of(rows[r].begin(), rows[r].end(),
                                          [&](const Cell& x) { return S::divides(e.val, x.val); });
                if (row_ok && column_divisible(e.col, r, e.val)) {
                    pivot(r, e.col, e.val);
                    progress = true;
                    break;
                }
            }
            if (progress) break;
        }
        if (!progress) break;
    }

    std::vector<Index> live_rows;
    std::vector<Index> live_cols;
    for (Index r = 0; r < m; ++r) {
        if (row_alive[r] && !rows[r].empty()) {
            live_rows.push_back(r);
            for (const auto& e : rows[r]) live_cols.push_back(e.col);
        }
    }
    if (!live_rows.empty()) {
        std::sort(live_cols.begin(), live_cols.end());
        live_cols.erase(std::unique(live_cols.begin(), live_cols.end()), live_cols.end());
        DenseMatrix d(live_rows.size(), std::vector<Integer>(live_cols.size(), 0));
        for (Index i = 0; i < live_rows.size(); ++i) {
            for (const auto& e : rows[live_rows[i]]) {
                Index j = std::lower_bound(live_cols.begin(), live_cols.end(), e.col) - live_cols.begin();
                d[i][j] = S::to(e.val);
            }
        }
        dense_smith(d, live_rows.size(), live_cols.size(), nullptr, nullptr);
        for (Index t = 0; t < std::min(live_rows.size(), live_cols.size()); ++t) {
            if (d[t][t] != 0) diag.push_back(d[t][t]);
        }
    }
    return diag;
}

std::vector<Integer> normalize_diagonal(std::vector<Integer> diag)
{
    std::vector<Integer> rest;
    Index ones = 0;
    for (auto& d : diag) {
        if (d == 1) {
            ++ones;
        } else {
            rest.push_back(d);
        }
    }
    for (std::size_t i = 0; i < rest.size(); ++i) {
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
            Integer g = gcd(rest[i], rest[j]);
            Integer l = rest[i] / g * rest[j];
            rest[i] = g;
            rest[j] = l;
        }
    }
    std::vector<Integer> out(ones, Integer(1));
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

}  // namespace

std::vector<Integer> invariant_factors(const SparseMatrix& a)
{
    std::vector<Integer> diag;
    try {
        diag = eliminate<Checked64>(a);
    } catch (const Overflow&) {
        diag = eliminate<Big>(a);
    }
    return normalize_diagonal(std::move(diag));
}

std::vector<Integer> smith_diagonal(const SparseMatrix& a)
{
    auto f = invariant_factors(a);
    f.resize(std::min(a.rows(), a.cols()), Integer(0));
    return f;
}

SmithDecomposition smith_decomposition(const DenseMatrix& a, Index rows, Index cols)
{
    SmithDecomposition s;
    s.d = a;
    s.u.assign(rows, std::vector<Integer>(rows, 0));
    s.v.assign(cols, std::vector<Integer>(cols, 0));
    for (Index i = 0; i < rows; ++i) s.u[i][i] = 1;
    for (Index i = 0; i < cols; ++i) s.v[i][i] = 1;
    dense_smith(s.d, rows, cols, &s.u, &s.v);
    for (Index t = 0; t < std::min(rows, cols); ++t) {
        if (s.d[t][t] != 0) ++s.rank;
    }
    return s;
}

Index rank(const SparseMatrix& a) { return invariant_factors(a).size(); }

Index rank_mod_p(const SparseMatrix& a, long p)
{
    using T = std::int64_t;
    auto inverse = [p](T x) {
        T r = 1;
        T base = x % p;
        T e = p - 2;
        while (e > 0) {
            if (e & 1) r = static_cast<T>((static_cast<__int128>(r) * base) % p);
            base = static_cast<T>((static_cast<__int128>(base) * base) % p);
            e >>= 1;
        }
        return r;
    };
    const Index n = a.cols();
    std::vector<std::vector<std::pair<Index, T>>> cols(n);
    SparseMatrix r = a.reduced_mod(p);
    for (Index c = 0; c < n; ++c) {
        for (const auto& e : r.column(c)) cols[c].push_back({e.row, static_cast<T>(e.value.get_si())});
    }
    // Column reduction against pivots keyed by their lowest row.
    std::vector<long> pivot_of_row(a.rows(), -1);
    Index rk = 0;
    std::vector<T> acc(a.rows(), 0);
    std::vector<char> mark(a.rows(), 0);
    std::vector<Index> touched;
    for (Index c = 0; c < n; ++c) {
        touched.clear();
        for (const auto& [row, v] : cols[c]) {
            acc[row] = v;
            mark[row] = 1;
            touched.push_back(row);
        }
        while (true) {
            long low = -1;
            for (Index row : touched) {
                if (acc[row] != 0 && static_cast<long>(row) > low) low = static_cast<long>(row);
            }
            if (low < 0) break;
            long pc = pivot_of_row[low];
            if (pc < 0) {
                pivot_of_row[low] = static_cast<long>(c);
                cols[c].clear();
                T inv = inverse(acc[low]);
                for (Index row : touched) {
                    if (acc[row] != 0) {
                        cols[c].push_back({row, static_cast<T>((static_cast<__int128>(acc[row]) * inv) % p)});
                    }
                }
                std::sort(cols[c].begin(), cols[c].end());
                ++rk;
                break;
            }
            T f = acc[low];
            for (const auto& [row, v] : cols[pc]) {
                if (!mark[row]) {
                    mark[row] = 1;
                    acc[row] = 0;
                    touched.push_back(row);
                }
                acc[row] = static_cast<T>(((acc[row] - static_cast<__int128>(f) * v) % p + p) % p);
            }
        }
        for (Index row : touched) {
            acc[row] = 0;
            mark[row] = 0;
        }
    }
    return rk;
}

std::vector<std::vector<Integer>> integer_kernel(const SparseMatrix& a)
{
    auto s = smith_decomposition(a.to_dense(), a.rows(), a.cols());
    std::vector<std::vector<Integer>> basis;
    for (Index j = s.rank; j < a.cols(); ++j) {
        std::vector<Integer> col(a.cols());
        for (Index i = 0; i < a.cols(); ++i) col[i] = s.v[i][j];
        basis.push_back(std::move(col));
    }
    return basis;
}

bool in_integer_image(const SparseMatrix& a, const std::vector<std::vector<Integer>>& columns)
{
    auto s = smith_decomposition(a.to_dense(), a.rows(), a.cols());
    for (const auto& w : columns) {
        if (w.size() != a.rows()) throw Error("in_integer_image: length mismatch");
        for (Index i = 0; i < a.rows(); ++i) {
            Integer x = 0;
            for (Index k = 0; k < a.rows(); ++k) {
                if (w[k] != 0 && s.u[i][k] != 0) x += s.u[i][k] * w[k];
            }
            if (i < s.rank) {
                if (!mpz_divisible_p(x.get_mpz_t(), s.d[i][i].get_mpz_t())) return false;
            } else if (x != 0) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace sscat
