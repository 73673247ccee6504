#include "sscat/sset.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sscat/detail/keyed.hpp"

namespace sscat {

SemiSimplicialSet::SemiSimplicialSet(std::vector<Level> levels, std::optional<int> top_dim,
                                     std::optional<int> truncated_at)
    : levels_(std::move(levels)), top_dim_(top_dim), truncated_at_(truncated_at)
{
    for (std::size_t p = 0; p < levels_.size(); ++p) {
        const auto& lv = levels_[p];
        std::size_t expected = p == 0 ? 0 : p + 1;
        if (lv.faces.size() != expected && !(lv.size == 0 && lv.faces.empty())) {
            throw Error("level " + std::to_string(p) + " must carry " + std::to_string(expected) +
                        " face tables");
        }
        for (const auto& table : lv.faces) {
            if (table.size() != lv.size) {
                throw Error("face table at level " + std::to_string(p) + " has wrong length");
            }
        }
    }
    if (truncated_at_) {
        if (*truncated_at_ < 0) throw Error("truncation degree must be >= 0");
        if (static_cast<int>(levels_.size()) > *truncated_at_ + 1) {
            throw Error("truncated set stores levels beyond its cutoff");
        }
        // A truncated set stores exactly the levels 0..N, empty ones included.
        levels_.resize(*truncated_at_ + 1);
    }
}

Index SemiSimplicialSet::size(int p) const
{
    if (p < 0 || p >= num_levels()) return 0;
    return levels_[p].size;
}

int SemiSimplicialSet::known_degree() const
{
    if (truncated_at_) return *truncated_at_;
    if (top_dim_) return *top_dim_;
    return num_levels() - 1;
}

std::vector<Index> SemiSimplicialSet::sizes() const
{
    std::vector<Index> out;
    for (const auto& lv : levels_) out.push_back(lv.size);
    return out;
}

bool SemiSimplicialSet::is_empty() const
{
    return std::all_of(levels_.begin(), levels_.end(), [](const Level& l) { return l.size == 0; });
}

BiSemiSimplicialSet::BiSemiSimplicialSet(std::vector<std::vector<Cell>> cells,
                                         std::optional<int> truncated_p,
                                         std::optional<int> truncated_q)
    : cells_(std::move(cells)), truncated_p_(truncated_p), truncated_q_(truncated_q)
{
    for (std::size_t p = 0; p < cells_.size(); ++p) {
        if (cells_[p].size() != cells_[0].size()) throw Error("bi-semi-simplicial grid must be rectangular");
        for (std::size_t q = 0; q < cells_[p].size(); ++q) {
            const auto& c = cells_[p][q];
            if (c.dh.size() != (p == 0 ? 0 : p + 1) && !(c.size == 0 && c.dh.empty())) {
                throw Error("cell (" + std::to_string(p) + "," + std::to_string(q) + ") needs p+1 horizontal faces");
            }
            if (c.dv.size() != (q == 0 ? 0 : q + 1) && !(c.size == 0 && c.dv.empty())) {
                throw Error("cell (" + std::to_string(p) + "," + std::to_string(q) + ") needs q+1 vertical faces");
            }
            for (const auto& t : c.dh) {
                if (t.size() != c.size) throw Error("horizontal face table has wrong length");
            }
            for (const auto& t : c.dv) {
                if (t.size() != c.size) throw Error("vertical face table has wrong length");
            }
        }
    }
}

Index BiSemiSimplicialSet::size(int p, int q) const
{
    if (p < 0 || q < 0 || p > max_p() || q > max_q()) return 0;
    return cells_[p][q].size;
}

std::optional<int> BiSemiSimplicialSet::total_truncation() const
{
    std::optional<int> t;
    if (truncated_p_) t = *truncated_p_;
    if (truncated_q_) t = t ? std::min(*t, *truncated_q_) : *truncated_q_;
    return t;
}

std::vector<std::vector<std::vector<Index>>> increasing_subsets(int vertices, int max_dim)
{
    std::vector<std::vector<std::vector<Index>>> out;
    for (int q = 0; q <= max_dim && q < vertices; ++q) {
        std::vector<std::vector<Index>> level;
        std::vector<Index> cur(q + 1);
        for (int i = 0; i <= q; ++i) cur[i] = i;
        while (true) {
            level.push_back(cur);
            int k = q;
            while (k >= 0 && cur[k] == static_cast<Index>(vertices - (q + 1) + k)) --k;
            if (k < 0) break;
            ++cur[k];
            for (int m = k + 1; m <= q; ++m) cur[m] = cur[m - 1] + 1;
        }
        out.push_back(std::move(level));
    }
    return out;
}

namespace {

std::vector<Level> subset_levels(int p, int max_dim)
{
    auto keys = increasing_subsets(p + 1, max_dim);
    return detail::levels_from_keys(keys, [](int, int i, const detail::Key& k) {
        detail::Key f = k;
        f.erase(f.begin() + i);
        return f;
    });
}

}  // namespace

SemiSimplicialSet standard_semi_simplex(int p)
{
    if (p < 0) throw Error("standard_semi_simplex: degree must be >= 0");
    return SemiSimplicialSet(subset_levels(p, p), p, std::nullopt);
}

SemiSimplicialSet boundary_semi_simplex(int p)
{
    if (p < 1) throw Error("boundary_semi_simplex: degree must be >= 1");
    return SemiSimplicialSet(subset_levels(p, p - 1), p - 1, std::nullopt);
}

SemiSimplicialSet constant_sset(Index size, int cutoff)
{
    if (cutoff < 0) throw Error("constant_sset: cutoff must be >= 0");
    std::vector<Level> levels(cutoff + 1);
    std::vector<Index> ident(size);
    for (Index s = 0; s < size; ++s) ident[s] = s;
    for (int p = 0; p <= cutoff; ++p) {
        levels[p].size = size;
        if (p > 0) levels[p].faces.assign(p + 1, ident);
    }
    return SemiSimplicialSet(std::move(levels), std::nullopt, cutoff);
}

ValidationReport validate(const SemiSimplicialSet& x)
{
    if (x.truncated_at() && *x.truncated_at() < 0) {
        return ValidationReport::fail("truncated_at must be non-negative");
    }
    if (x.top_dim()) {
        for (int p = *x.top_dim() + 1; p < x.num_levels(); ++p) {
            if (x.size(p) != 0) {
                return ValidationReport::fail("level " + std::to_string(p) + " is above top_dim but not empty", p);
            }
        }
    }
    for (int p = 1; p < x.num_levels(); ++p) {
        for (int i = 0; i <= p && x.size(p) > 0; ++i) {
            for (Index s = 0; s < x.size(p); ++s) {
                if (x.face(p, i, s) >= x.size(p - 1)) {
                    return ValidationReport::fail("face index out of range: d_" + std::to_string(i) + " of simplex " +
                                                      std::to_string(s) + " in degree " + std::to_string(p),
                                                  p, i, -1, s);
                }
            }
        }
    }
    for (int p = 2; p < x.num_levels(); ++p) {
        for (Index s = 0; s < x.size(p); ++s) {
            for (int j = 1; j <= p; ++j) {
                for (int i = 0; i < j; ++i) {
                    Index lhs = x.face(p - 1, i, x.face(p, j, s));
                    Index rhs = x.face(p - 1, j - 1, x.face(p, i, s));
                    if (lhs != rhs) {
                        return ValidationReport::fail("d_i d_j = d_{j-1} d_i fails for i=" + std::to_string(i) +
                                                          ", j=" + std::to_string(j) + " on simplex " +
                                                          std::to_string(s) + " in degree " + std::to_string(p),
                                                      p, i, j, s);
                    }
                }
            }
        }
    }
    return ValidationReport::pass();
}

ValidationReport validate(const BiSemiSimplicialSet& b)
{
    auto cell_name = [](int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; };
    for (int p = 0; p <= b.max_p(); ++p) {
        for (int q = 0; q <= b.max_q(); ++q) {
            for (Index s = 0; s < b.size(p, q); ++s) {
                for (int i = 0; p > 0 && i <= p; ++i) {
                    if (b.dh(p, q, i, s) >= b.size(p - 1, q)) {
                        return ValidationReport::fail("horizontal face out of range at " + cell_name(p, q), p, i, -1, s);
                    }
                }
                for (int j = 0; q > 0 && j <= q; ++j) {
                    if (b.dv(p, q, j, s) >= b.size(p, q - 1)) {
                        return ValidationReport::fail("vertical face out of range at " + cell_name(p, q), q, -1, j, s);
                    }
                }
            }
        }
    }
    for (int p = 0; p <= b.max_p(); ++p) {
        for (int q = 0; q <= b.max_q(); ++q) {
            for (Index s = 0; s < b.size(p, q); ++s) {
                for (int j = 1; p >= 2 && j <= p; ++j) {
                    for (int i = 0; i < j; ++i) {
                        if (b.dh(p - 1, q, i, b.dh(p, q, j, s)) != b.dh(p - 1, q, j - 1, b.dh(p, q, i, s))) {
                            return ValidationReport::fail("horizontal identity fails at " + cell_name(p, q), p, i, j, s);
                        }
                    }
                }
                for (int j = 1; q >= 2 && j <= q; ++j) {
                    for (int i = 0; i < j; ++i) {
                        if (b.dv(p, q - 1, i, b.dv(p, q, j, s)) != b.dv(p, q - 1, j - 1, b.dv(p, q, i, s))) {
                            return ValidationReport::fail("vertical identity fails at " + cell_name(p, q), q, i, j, s);
                        }
                    }
                }
                for (int i = 0; p >= 1 && q >= 1 && i <= p; ++i) {
                    for (int j = 0; j <= q; ++j) {
                        if (b.dh(p, q - 1, i, b.dv(p, q, j, s)) != b.dv(p - 1, q, j, b.dh(p, q, i, s))) {
                            return ValidationReport::fail("dh and dv do not commute at " + cell_name(p, q), p, i, j, s);
                        }
                    }
                }
            }
        }
    }
    return ValidationReport::pass();
}

ValidationReport validate_map(const SSetMap& f, const SemiSimplicialSet& x, const SemiSimplicialSet& y)
{
    int top = std::min(x.known_degree(), y.known_degree());
    top = std::min(top, std::max(x.num_levels(), y.num_levels()) - 1);
    for (int p = 0; p <= top; ++p) {
        if (x.size(p) == 0) continue;
        if (p >= f.num_levels() || f.components[p].size() != x.size(p)) {
            return ValidationReport::fail("map component missing in degree " + std::to_string(p), p);
        }
        for (Index s = 0; s < x.size(p); ++s) {
            if (f(p, s) >= y.size(p)) {
                return ValidationReport::fail("map value out of range in degree " + std::to_string(p), p, -1, -1, s);
            }
        }
        if (p == 0) continue;
        for (Index s = 0; s < x.size(p); ++s) {
            for (int i = 0; i <= p; ++i) {
                if (f(p - 1, x.face(p, i, s)) != y.face(p, i, f(p, s))) {
                    return ValidationReport::fail("map does not commute with d_" + std::to_string(i) + " in degree " +
                                                      std::to_string(p),
                                                  p, i, -1, s);
                }
            }
        }
    }
    return ValidationReport::pass();
}

SSetMap identity_map(const SemiSimplicialSet& x)
{
    SSetMap f;
    for (int p = 0; p < x.num_levels(); ++p) {
        std::vector<Index> c(x.size(p));
        for (Index s = 0; s < c.size(); ++s) c[s] = s;
        f.components.push_back(std::move(c));
    }
    return f;
}

SSetMap compose(const SSetMap& f, const SSetMap& g)
{
    SSetMap h;
    int n = std::min(f.num_levels(), g.num_levels());
    for (int p = 0; p < n; ++p) {
        std::vector<Index> c(f.components[p].size());
        for (Index s = 0; s < c.size(); ++s) c[s] = g(p, f(p, s));
        h.components.push_back(std::move(c));
    }
    return h;
}

SemiSimplicialSet skeleton(const SemiSimplicialSet& x, int n)
{
    if (n < 0) throw Error("skeleton: degree must be >= 0");
    std::vector<Level> levels;
    int top = std::min(n, x.num_levels() - 1);
    for (int p = 0; p <= top; ++p) levels.push_back(x.level(p));
    // The n-skeleton is finite even when x was truncated above n.
    int dim = top;
    if (x.top_dim()) dim = std::min(dim, *x.top_dim());
    levels.resize(std::max(dim + 1, 0));
    if (x.is_truncated() && *x.truncated_at() < n) {
        return SemiSimplicialSet(std::move(levels), std::nullopt, x.truncated_at());
    }
    return SemiSimplicialSet(std::move(levels), dim, std::nullopt);
}

SSetMap skeleton_inclusion(const SemiSimplicialSet& x, int n)
{
    return identity_map(skeleton(x, n));
}

BiSemiSimplicialSet exterior_product(const SemiSimplicialSet& x, const SemiSimplicialSet& y)
{
    int np = x.num_levels();
    int nq = y.num_levels();
    std::vector<std::vector<BiSemiSimplicialSet::Cell>> cells(np, std::vector<BiSemiSimplicialSet::Cell>(nq));
    for (int p = 0; p < np; ++p) {
        for (int q = 0; q < nq; ++q) {
            auto& c = cells[p][q];
            Index nx = x.size(p);
            Index ny = y.size(q);
            c.size = nx * ny;
            if (p > 0) c.dh.assign(p + 1, std::vector<Index>(c.size));
            if (q > 0) c.dv.assign(q + 1, std::vector<Index>(c.size));
            for (Index a = 0; a < nx; ++a) {
                for (Index b = 0; b < ny; ++b) {
                    Index s = a * ny + b;
                    for (int i = 0; p > 0 && i <= p; ++i) c.dh[i][s] = x.face(p, i, a) * ny + b;
                    for (int j = 0; q > 0 && j <= q; ++j) c.dv[j][s] = a * y.size(q - 1) + y.face(q, j, b);
                }
            }
        }
    }
    return BiSemiSimplicialSet(std::move(cells), x.truncated_at(), y.truncated_at());
}

SemiSimplicialSet diagonal(const BiSemiSimplicialSet& b)
{
    int top = std::min(b.max_p(), b.max_q());
    std::vector<Level> levels(std::max(top + 1, 0));
    for (int p = 0; p <= top; ++p) {
        levels[p].size = b.size(p, p);
        if (p == 0) continue;
        levels[p].faces.assign(p + 1, std::vector<Index>(levels[p].size));
        for (Index s = 0; s < levels[p].size; ++s) {
            for (int i = 0; i <= p; ++i) {
                levels[p].faces[i][s] = b.dh(p, p - 1, i, b.dv(p, p, i, s));
            }
        }
    }
    std::optional<int> trunc;
    if (b.truncated_p() || b.truncated_q()) {
        int tp = b.truncated_p().value_or(top);
        int tq = b.truncated_q().value_or(top);
        trunc = std::min({tp, tq, top});
    }
    if (trunc) {
        levels.resize(*trunc + 1);
        return SemiSimplicialSet(std::move(levels), std::nullopt, trunc);
    }
    return SemiSimplicialSet(std::move(levels), top, std::nullopt);
}

SemiSimplicialSet row(const BiSemiSimplicialSet& b, int p)
{
    std::vector<Level> levels(b.max_q() + 1);
    for (int q = 0; q <= b.max_q(); ++q) {
        levels[q].size = b.size(p, q);
        if (q > 0) levels[q].faces = b.cell(p, q).dv;
    }
    if (b.truncated_q()) return SemiSimplicialSet(std::move(levels), std::nullopt, b.truncated_q());
    return SemiSimplicialSet(std::move(levels), b.max_q(), std::nullopt);
}

SemiSimplicialSet column(const BiSemiSimplicialSet& b, int q)
{
    std::vector<Level> levels(b.max_p() + 1);
    for (int p = 0; p <= b.max_p(); ++p) {
        levels[p].size = b.size(p, q);
        if (p > 0) levels[p].faces = b.cell(p, q).dh;
    }
    if (b.truncated_p()) return SemiSimplicialSet(std::move(levels), std::nullopt, b.truncated_p());
    return SemiSimplicialSet(std::move(levels), b.max_p(), std::nullopt);
}

PathSpace path_space(const SemiSimplicialSet& x)
{
    if (x.known_degree() < 1) throw Error("path_space: input must have levels through degree >= 1");
    PathSpace out;
    std::vector<Level> levels;
    for (int p = 0; p + 1 < x.num_levels(); ++p) {
        Level lv;
        lv.size = x.size(p + 1);
        if (p > 0 && lv.size > 0) {
            for (int i = 0; i <= p; ++i) lv.faces.push_back(x.face_table(p + 1, i));
        }
        levels.push_back(std::move(lv));
        std::vector<Index> aug(x.size(p + 1));
        for (Index s = 0; s < aug.size(); ++s) {
            Index v = s;
            for (int k = p + 1; k >= 1; --k) v = x.face(k, 0, v);
            aug[s] = v;
        }
        out.augmentation.push_back(std::move(aug));
    }
    if (x.is_truncated()) {
        out.space = SemiSimplicialSet(std::move(levels), std::nullopt, *x.truncated_at() - 1);
    } else {
        int top = x.known_degree() - 1;
        out.space = SemiSimplicialSet(std::move(levels), top, std::nullopt);
    }
    return out;
}

Index restrict_to_vertices(const SemiSimplicialSet& x, int p, Index s, const std::vector<int>& keep)
{
    // Delete unwanted vertices from the top down so earlier indices stay valid.
    std::vector<bool> kept(p + 1, false);
    for (int v : keep) kept[v] = true;
    int deg = p;
    for (int v = p; v >= 0; --v) {
        if (kept[v]) continue;
        s = x.face(deg, v, s);
        --deg;
    }
    return s;
}

SegalMap segal_map(const SemiSimplicialSet& x, int p)
{
    if (p < 1) throw Error("segal_map: degree must be >= 1");
    if (p > x.known_degree()) throw Error("segal_map: degree exceeds known levels");
    SegalMap out;
    out.table.resize(x.size(p));
    std::set<std::vector<Index>> seen;
    bool injective = true;
    for (Index s = 0; s < x.size(p); ++s) {
        std::vector<Index> tuple;
        for (int j = 1; j <= p; ++j) tuple.push_back(restrict_to_vertices(x, p, s, {j - 1, j}));
        if (!seen.insert(tuple).second) injective = false;
        out.table[s] = std::move(tuple);
    }
    // |X_1|^p, saturating well above any simplex count we could hold.
    long double target = 1;
    for (int j = 0; j < p; ++j) target *= static_cast<long double>(x.size(1));
    out.bijective = injective && static_cast<long double>(x.size(p)) == target;
    return out;
}

long euler_characteristic(const SemiSimplicialSet& x)
{
    if (!x.top_dim()) throw Error("euler_characteristic: input has no finite top dimension");
    if (x.is_truncated() && *x.truncated_at() < *x.top_dim()) {
        throw Error("euler_characteristic: input is truncated below its top dimension");
    }
    long chi = 0;
    for (int p = 0; p <= *x.top_dim() && p < x.num_levels(); ++p) {
        long n = static_cast<long>(x.size(p));
        chi += (p % 2 == 0) ? n : -n;
    }
    return chi;
}

}  // namespace sscat
