#include "sscat/simplicial.hpp"

#include <algorithm>

namespace sscat {

DegeneracyWord DegeneracyWord::canonical(std::vector<int> raw)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < raw.size(); ++k) {
            if (raw[k] <= raw[k + 1]) {
                int a = raw[k];
                int b = raw[k + 1];
                raw[k] = b + 1;
                raw[k + 1] = a;
                changed = true;
            }
        }
    }
    return DegeneracyWord{std::move(raw)};
}

bool DegeneracyWord::is_canonical() const
{
    for (std::size_t k = 0; k + 1 < indices.size(); ++k) {
        if (indices[k] <= indices[k + 1]) return false;
    }
    return indices.empty() || indices.back() >= 0;
}

SimplicialSet::SimplicialSet(std::vector<Index> counts, FaceTable faces, std::optional<int> truncated_at)
    : counts_(std::move(counts)), faces_(std::move(faces)), truncated_at_(truncated_at)
{
    faces_.resize(counts_.size());
    for (std::size_t q = 0; q < counts_.size(); ++q) {
        if (q == 0) {
            faces_[0].assign(counts_[0], {});
            continue;
        }
        if (faces_[q].size() != counts_[q]) throw Error("generator face table size mismatch in degree " + std::to_string(q));
        for (const auto& f : faces_[q]) {
            if (f.size() != q + 1) throw Error("generator in degree " + std::to_string(q) + " needs q+1 faces");
        }
    }
}

SimplexRef normalize_face(const SimplicialSet& y, int i, const SimplexRef& x)
{
    int n = x.simplex_degree();
    if (n < 1 || i < 0 || i > n) throw Error("normalize_face: face index out of range");
    const auto& w = x.word.indices;
    std::vector<int> prefix;
    for (std::size_t k = 0; k < w.size(); ++k) {
        int j = w[k];
        if (i < j) {
            prefix.push_back(j - 1);  // d_i s_j = s_{j-1} d_i
        } else if (i == j || i == j + 1) {
            // d_j s_j = d_{j+1} s_j = id
            prefix.insert(prefix.end(), w.begin() + static_cast<long>(k) + 1, w.end());
            return SimplexRef{DegeneracyWord::canonical(std::move(prefix)), x.degree, x.index};
        } else {
            prefix.push_back(j);  // d_i s_j = s_j d_{i-1}
            --i;
        }
    }
    const SimplexRef& f = y.generator_face(x.degree, x.index, i);
    prefix.insert(prefix.end(), f.word.indices.begin(), f.word.indices.end());
    return SimplexRef{DegeneracyWord::canonical(std::move(prefix)), f.degree, f.index};
}

SimplexRef apply_degeneracy(int j, const SimplexRef& x)
{
    if (j < 0 || j > x.simplex_degree()) throw Error("apply_degeneracy: index out of range");
    std::vector<int> raw{j};
    raw.insert(raw.end(), x.word.indices.begin(), x.word.indices.end());
    return SimplexRef{DegeneracyWord::canonical(std::move(raw)), x.degree, x.index};
}

namespace {

bool ref_in_range(const SimplicialSet& y, const SimplexRef& r, int expected_degree)
{
    if (r.simplex_degree() != expected_degree) return false;
    if (!r.word.is_canonical()) return false;
    if (!r.word.empty() && r.word.indices.front() > expected_degree - 1) return false;
    return r.degree >= 0 && r.index < y.generators(r.degree);
}

}  // namespace

ValidationReport validate(const SimplicialSet& y)
{
    for (int q = 1; q <= y.top_degree(); ++q) {
        for (Index g = 0; g < y.generators(q); ++g) {
            for (int i = 0; i <= q; ++i) {
                if (!ref_in_range(y, y.generator_face(q, g, i), q - 1)) {
                    return ValidationReport::fail("generator face is not a canonical reference of degree " +
                                                      std::to_string(q - 1),
                                                  q, i, -1, g);
                }
            }
        }
    }
    for (int q = 0; q <= y.top_degree(); ++q) {
        for (Index g = 0; g < y.generators(q); ++g) {
            SimplexRef x{{}, q, g};
            // d_i d_j = d_{j-1} d_i
            for (int j = 1; q >= 2 && j <= q; ++j) {
                for (int i = 0; i < j; ++i) {
                    if (normalize_face(y, i, normalize_face(y, j, x)) !=
                        normalize_face(y, j - 1, normalize_face(y, i, x))) {
                        return ValidationReport::fail("d_i d_j = d_{j-1} d_i fails on generator " + std::to_string(g) +
                                                          " of degree " + std::to_string(q),
                                                      q, i, j, g);
                    }
                }
            }
            for (int j = 0; j <= q; ++j) {
                SimplexRef sx = apply_degeneracy(j, x);
                for (int i = 0; i <= q + 1; ++i) {
                    SimplexRef lhs = normalize_face(y, i, sx);
                    SimplexRef rhs;
                    if (i < j) {
                        rhs = apply_degeneracy(j - 1, normalize_face(y, i, x));
                    } else if (i == j || i == j + 1) {
                        rhs = x;
                    } else {
                        rhs = apply_degeneracy(j, normalize_face(y, i - 1, x));
                    }
                    if (lhs != rhs) {
                        return ValidationReport::fail("face/degeneracy identity fails on generator " +
                                                          std::to_string(g) + " of degree " + std::to_string(q),
                                                      q, i, j, g);
                    }
                }
                for (int i = 0; i <= j; ++i) {
                    if (apply_degeneracy(i, sx) != apply_degeneracy(j + 1, apply_degeneracy(i, x))) {
                        return ValidationReport::fail("s_i s_j = s_{j+1} s_i fails", q, i, j, g);
                    }
                }
            }
        }
    }
    return ValidationReport::pass();
}

Index Enumeration::index_of(const SimplexRef& r) const
{
    int p = r.simplex_degree();
    if (p < 0 || p >= static_cast<int>(simplices.size())) throw Error("simplex degree outside the enumeration");
    const auto& lv = simplices[p];
    auto it = std::lower_bound(lv.begin(), lv.end(), r);
    if (it == lv.end() || !(*it == r)) throw Error("simplex not present in enumeration");
    return static_cast<Index>(it - lv.begin());
}

namespace {

/// Strictly decreasing sequences of length k drawn from {0..n-1}.
std::vector<std::vector<int>> decreasing_words(int n, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int below) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        int remaining = k - static_cast<int>(cur.size());
        for (int v = remaining - 1; v < below; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

}  // namespace

Enumeration enumerate_full(const SimplicialSet& y, int cutoff)
{
    if (cutoff < 0) throw Error("enumerate: cutoff must be >= 0");
    if (y.truncated_at() && *y.truncated_at() < cutoff) {
        throw Error("enumerate: cutoff exceeds the generator truncation of the input");
    }
    Enumeration out;
    out.simplices.resize(cutoff + 1);
    for (int p = 0; p <= cutoff; ++p) {
        auto& lv = out.simplices[p];
        for (int q = 0; q <= std::min(p, y.top_degree()); ++q) {
            auto words = decreasing_words(p, p - q);
            for (Index g = 0; g < y.generators(q); ++g) {
                for (const auto& w : words) lv.push_back(SimplexRef{DegeneracyWord{w}, q, g});
            }
        }
        std::sort(lv.begin(), lv.end());
    }
    std::vector<Level> levels(cutoff + 1);
    for (int p = 0; p <= cutoff; ++p) {
        levels[p].size = out.simplices[p].size();
        if (p == 0) continue;
        levels[p].faces.assign(p + 1, std::vector<Index>(levels[p].size));
        for (Index s = 0; s < levels[p].size; ++s) {
            for (int i = 0; i <= p; ++i) {
                levels[p].faces[i][s] = out.index_of(normalize_face(y, i, out.simplices[p][s]));
            }
        }
    }
    out.degeneracies.resize(cutoff);
    for (int p = 0; p < cutoff; ++p) {
        out.degeneracies[p].assign(p + 1, std::vector<Index>(out.simplices[p].size()));
        for (Index s = 0; s < out.simplices[p].size(); ++s) {
            for (int j = 0; j <= p; ++j) {
                out.degeneracies[p][j][s] = out.index_of(apply_degeneracy(j, out.simplices[p][s]));
            }
        }
    }
    out.sset = SemiSimplicialSet(std::move(levels), std::nullopt, cutoff);
    return out;
}

SemiSimplicialSet enumerate(const SimplicialSet& y, int cutoff)
{
    return enumerate_full(y, cutoff).sset;
}

SimplicialSet free_degeneracies(const SemiSimplicialSet& x)
{
    int top = x.num_levels() - 1;
    while (top > 0 && x.size(top) == 0 && !x.is_truncated()) --top;
    std::vector<Index> counts;
    SimplicialSet::FaceTable faces;
    for (int q = 0; q <= top; ++q) {
        counts.push_back(x.size(q));
        std::vector<std::vector<SimplexRef>> gen(x.size(q));
        for (Index s = 0; q > 0 && s < x.size(q); ++s) {
            for (int i = 0; i <= q; ++i) gen[s].push_back(SimplexRef{{}, q - 1, x.face(q, i, s)});
        }
        faces.push_back(std::move(gen));
    }
    return SimplicialSet(std::move(counts), std::move(faces), x.truncated_at());
}

SSetMap unit_map(const SemiSimplicialSet& x, int cutoff)
{
    Enumeration e = enumerate_full(free_degeneracies(x), cutoff);
    SSetMap f;
    for (int p = 0; p <= cutoff; ++p) {
        std::vector<Index> c(x.size(p));
        for (Index s = 0; s < c.size(); ++s) c[s] = e.index_of(SimplexRef{{}, p, s});
        f.components.push_back(std::move(c));
    }
    return f;
}

SSetMap counit_map(const SimplicialSet& y, int cutoff)
{
    Enumeration fy = enumerate_full(y, cutoff);
    Enumeration efy = enumerate_full(free_degeneracies(fy.sset), cutoff);
    SSetMap f;
    for (int p = 0; p <= cutoff; ++p) {
        std::vector<Index> c(efy.simplices[p].size());
        for (Index s = 0; s < c.size(); ++s) {
            const SimplexRef& r = efy.simplices[p][s];
            // r = word applied to the simplex fy.simplices[r.degree][r.index] of Y
            const SimplexRef& base = fy.simplices[r.degree][r.index];
            std::vector<int> raw = r.word.indices;
            raw.insert(raw.end(), base.word.indices.begin(), base.word.indices.end());
            c[s] = fy.index_of(SimplexRef{DegeneracyWord::canonical(std::move(raw)), base.degree, base.index});
        }
        f.components.push_back(std::move(c));
    }
    return f;
}

ValidationReport validate(const SimplicialTable& t)
{
    if (auto r = validate(t.faces); !r) return r;
    const auto& x = t.faces;
    int n = static_cast<int>(t.degeneracies.size());
    for (int p = 0; p < n; ++p) {
        if (static_cast<int>(t.degeneracies[p].size()) != p + 1) {
            return ValidationReport::fail("degree " + std::to_string(p) + " needs p+1 degeneracy tables", p);
        }
        for (Index s = 0; s < x.size(p); ++s) {
            for (int j = 0; j <= p; ++j) {
                Index sj = t.degeneracies[p][j][s];
                if (sj >= x.size(p + 1)) return ValidationReport::fail("degeneracy index out of range", p, -1, j, s);
                for (int i = 0; i <= p + 1; ++i) {
                    Index lhs = x.face(p + 1, i, sj);
                    Index rhs;
                    if (i < j) {
                        rhs = t.degeneracies[p - 1][j - 1][x.face(p, i, s)];
                    } else if (i == j || i == j + 1) {
                        rhs = s;
                    } else {
                        rhs = t.degeneracies[p - 1][j][x.face(p, i - 1, s)];
                    }
                    if (lhs != rhs) {
                        return ValidationReport::fail("face/degeneracy identity fails for d_" + std::to_string(i) +
                                                          " s_" + std::to_string(j) + " in degree " + std::to_string(p),
                                                      p, i, j, s);
                    }
                }
                if (p + 1 < n) {
                    for (int i = 0; i <= j; ++i) {
                        if (t.degeneracies[p + 1][i][sj] != t.degeneracies[p + 1][j + 1][t.degeneracies[p][i][s]]) {
                            return ValidationReport::fail("s_i s_j = s_{j+1} s_i fails in degree " + std::to_string(p),
                                                          p, i, j, s);
                        }
                    }
                }
            }
        }
    }
    return ValidationReport::pass();
}

SimplicialSet present(const SimplicialTable& t)
{
    const auto& x = t.faces;
    int n = x.known_degree();
    std::vector<std::vector<SimplexRef>> decomp(n + 1);
    std::vector<Index> counts(n + 1, 0);
    std::vector<std::vector<Index>> generator_simplex(n + 1);
    for (int p = 0; p <= n; ++p) {
        decomp[p].resize(x.size(p));
        for (Index s = 0; s < x.size(p); ++s) {
            int found = -1;
            for (int j = 0; p > 0 && j < p; ++j) {
                Index below = x.face(p, j, s);
                if (t.degeneracies[p - 1][j][below] == s) {
                    found = j;
                    break;
                }
            }
            if (found < 0) {
                decomp[p][s] = SimplexRef{{}, p, counts[p]++};
                generator_simplex[p].push_back(s);
            } else {
                const SimplexRef& r = decomp[p - 1][x.face(p, found, s)];
                std::vector<int> raw{found};
                raw.insert(raw.end(), r.word.indices.begin(), r.word.indices.end());
                decomp[p][s] = SimplexRef{DegeneracyWord::canonical(std::move(raw)), r.degree, r.index};
            }
        }
    }
    SimplicialSet::FaceTable faces(n + 1);
    for (int p = 1; p <= n; ++p) {
        for (Index s : generator_simplex[p]) {
            std::vector<SimplexRef> f;
            for (int i = 0; i <= p; ++i) f.push_back(decomp[p - 1][x.face(p, i, s)]);
            faces[p].push_back(std::move(f));
        }
    }
    std::optional<int> trunc = x.truncated_at();
    return SimplicialSet(std::move(counts), std::move(faces), trunc);
}

BiSimplicialTable exterior_product(const SimplicialSet& x, const SimplicialSet& y, int cutoff)
{
    Enumeration ex = enumerate_full(x, cutoff);
    Enumeration ey = enumerate_full(y, cutoff);
    BiSimplicialTable out;
    out.faces = exterior_product(ex.sset, ey.sset);
    out.sh.assign(cutoff + 1, std::vector<std::vector<std::vector<Index>>>(cutoff + 1));
    out.sv.assign(cutoff + 1, std::vector<std::vector<std::vector<Index>>>(cutoff + 1));
    for (int p = 0; p <= cutoff; ++p) {
        for (int q = 0; q <= cutoff; ++q) {
            Index nx = ex.sset.size(p);
            Index ny = ey.sset.size(q);
            if (p < cutoff) {
                out.sh[p][q].assign(p + 1, std::vector<Index>(nx * ny));
                for (int j = 0; j <= p; ++j) {
                    for (Index a = 0; a < nx; ++a) {
                        for (Index b = 0; b < ny; ++b) out.sh[p][q][j][a * ny + b] = ex.degeneracies[p][j][a] * ny + b;
                    }
                }
            }
            if (q < cutoff) {
                Index ny1 = ey.sset.size(q + 1);
                out.sv[p][q].assign(q + 1, std::vector<Index>(nx * ny));
                for (int j = 0; j <= q; ++j) {
                    for (Index a = 0; a < nx; ++a) {
                        for (Index b = 0; b < ny; ++b) out.sv[p][q][j][a * ny + b] = a * ny1 + ey.degeneracies[q][j][b];
                    }
                }
            }
        }
    }
    return out;
}

namespace {

std::string cell_label(int p, int q)
{
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

}  // namespace

ValidationReport validate(const BiSimplicialTable& b)
{
    const auto& f = b.faces;
    if (auto r = validate(f); !r) return r;
    int np = f.max_p();
    int nq = f.max_q();
    for (int q = 0; q <= nq; ++q) {
        SimplicialTable col{column(f, q), {}};
        for (int p = 0; p < np; ++p) col.degeneracies.push_back(b.sh[p][q]);
        if (auto r = validate(col); !r) {
            r.message = "horizontal direction, column q=" + std::to_string(q) + ": " + r.message;
            return r;
        }
    }
    for (int p = 0; p <= np; ++p) {
        SimplicialTable rw{row(f, p), {}};
        for (int q = 0; q < nq; ++q) rw.degeneracies.push_back(b.sv[p][q]);
        if (auto r = validate(rw); !r) {
            r.message = "vertical direction, row p=" + std::to_string(p) + ": " + r.message;
            return r;
        }
    }
    for (int p = 0; p <= np; ++p) {
        for (int q = 0; q <= nq; ++q) {
            for (Index s = 0; s < f.size(p, q); ++s) {
                if (p < np && q < nq) {
                    for (int i = 0; i <= p; ++i) {
                        for (int j = 0; j <= q; ++j) {
                            if (b.sv[p + 1][q][j][b.sh[p][q][i][s]] != b.sh[p][q + 1][i][b.sv[p][q][j][s]]) {
                                return ValidationReport::fail("sh and sv do not commute at " + cell_label(p, q), p, i, j, s);
                            }
                        }
                    }
                }
                if (p < np && q >= 1) {
                    for (int i = 0; i <= p; ++i) {
                        for (int j = 0; j <= q; ++j) {
                            if (f.dv(p + 1, q, j, b.sh[p][q][i][s]) != b.sh[p][q - 1][i][f.dv(p, q, j, s)]) {
                                return ValidationReport::fail("sh and dv do not commute at " + cell_label(p, q), p, i, j, s);
                            }
                        }
                    }
                }
                if (q < nq && p >= 1) {
                    for (int i = 0; i <= p; ++i) {
                        for (int j = 0; j <= q; ++j) {
                            if (f.dh(p, q + 1, i, b.sv[p][q][j][s]) != b.sv[p - 1][q][j][f.dh(p, q, i, s)]) {
                                return ValidationReport::fail("dh and sv do not commute at " + cell_label(p, q), p, i, j, s);
                            }
                        }
                    }
                }
            }
        }
    }
    return ValidationReport::pass();
}

SimplicialSet diagonal(const BiSimplicialTable& b)
{
    if (auto r = validate(b); !r) throw Error("diagonal: invalid bisimplicial input: " + r.message);
    SimplicialTable t;
    t.faces = diagonal(b.faces);
    int n = t.faces.num_levels() - 1;
    for (int p = 0; p < n; ++p) {
        std::vector<std::vector<Index>> degs(p + 1, std::vector<Index>(b.faces.size(p, p)));
        for (int j = 0; j <= p; ++j) {
            for (Index s = 0; s < degs[j].size(); ++s) degs[j][s] = b.sv[p + 1][p][j][b.sh[p][p][j][s]];
        }
        t.degeneracies.push_back(std::move(degs));
    }
    return present(t);
}

SemiSimplicialSet interior_product(const SimplicialSet& x, const SimplicialSet& y, int cutoff)
{
    if (cutoff < 1) throw Error("interior_product: cutoff must be >= 1");
    SemiSimplicialSet ex = enumerate(x, cutoff);
    SemiSimplicialSet ey = enumerate(y, cutoff);
    std::vector<Level> levels(cutoff + 1);
    for (int p = 0; p <= cutoff; ++p) {
        Index nx = ex.size(p);
        Index ny = ey.size(p);
        levels[p].size = nx * ny;
        if (p == 0) continue;
        Index ny1 = ey.size(p - 1);
        levels[p].faces.assign(p + 1, std::vector<Index>(nx * ny));
        for (int i = 0; i <= p; ++i) {
            for (Index a = 0; a < nx; ++a) {
                for (Index c = 0; c < ny; ++c) levels[p].faces[i][a * ny + c] = ex.face(p, i, a) * ny1 + ey.face(p, i, c);
            }
        }
    }
    return SemiSimplicialSet(std::move(levels), std::nullopt, cutoff);
}

SimplicialSet standard_simplex(int n)
{
    if (n < 0) throw Error("standard_simplex: degree must be >= 0");
    return free_degeneracies(standard_semi_simplex(n));
}

SimplicialSet simplicial_point()
{
    return standard_simplex(0);
}

}  // namespace sscat
