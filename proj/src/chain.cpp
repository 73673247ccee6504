#include "sscat/chain.hpp"

#include <algorithm>

#include "sscat/field.hpp"
#include "sscat/snf.hpp"

namespace sscat {

SparseMatrix coerce(const SparseMatrix& m, const Ring& ring)
{
    if (ring.kind == Ring::Kind::PrimeField) return m.reduced_mod(ring.p);
    return m;
}

namespace {

bool zero_in(const SparseMatrix& m, const Ring& ring) { return coerce(m, ring).is_zero(); }

SparseMatrix alternating_faces(const SemiSimplicialSet& x, int p)
{
    SparseMatrix d(x.size(p - 1), x.size(p));
    for (Index s = 0; s < x.size(p); ++s) {
        for (int i = 0; i <= p; ++i) d.add(x.face(p, i, s), s, (i % 2 == 0) ? 1 : -1);
    }
    return d;
}

}  // namespace

ChainComplex::ChainComplex(Ring ring, std::vector<Index> ranks, std::vector<SparseMatrix> boundaries,
                           std::optional<int> truncation)
    : ring_(ring), ranks_(std::move(ranks)), truncation_(truncation)
{
    const int top = top_degree();
    if (static_cast<int>(boundaries.size()) < top + 1) boundaries.resize(top + 1);
    boundaries_.resize(top + 2);
    boundaries_[0] = SparseMatrix(0, rank(0));
    for (int p = 1; p <= top; ++p) {
        const auto& d = boundaries[p];
        if (d.rows() != rank(p - 1) || d.cols() != rank(p)) {
            throw Error("chain complex: boundary " + std::to_string(p) + " has shape " + std::to_string(d.rows()) +
                        "x" + std::to_string(d.cols()) + ", expected " + std::to_string(rank(p - 1)) + "x" +
                        std::to_string(rank(p)));
        }
        boundaries_[p] = coerce(d, ring_);
    }
    if (top >= 0) boundaries_[top + 1] = SparseMatrix(rank(top), 0);
    for (int p = 2; p <= top; ++p) {
        if (!zero_in(boundaries_[p - 1] * boundaries_[p], ring_)) {
            throw Error("chain complex: d_" + std::to_string(p - 1) + " d_" + std::to_string(p) + " != 0");
        }
    }
}

SparseMatrix ChainComplex::boundary(int p) const
{
    if (p >= 0 && p < static_cast<int>(boundaries_.size())) return boundaries_[p];
    return SparseMatrix(rank(p - 1), rank(p));
}

namespace {

struct BoundaryData {
    Index rank = 0;
    std::vector<Integer> factors;
};

BoundaryData analyse(const SparseMatrix& d, const Ring& ring)
{
    BoundaryData out;
    if (ring.kind == Ring::Kind::PrimeField) {
        out.rank = rank_mod_p(d, ring.p);
    } else if (ring.kind == Ring::Kind::Rationals) {
        out.rank = rank(d);
    } else {
        out.factors = invariant_factors(d);
        out.rank = out.factors.size();
    }
    return out;
}

HomologyGroup assemble(const ChainComplex& c, int k, const BoundaryData& in, const BoundaryData& out)
{
    HomologyGroup h;
    h.degree = k;
    h.trusted = c.trusted(k);
    Index free = c.rank(k) - in.rank - out.rank;
    std::vector<Integer> torsion;
    if (c.ring().kind == Ring::Kind::Integers) {
        for (const auto& t : out.factors) {
            if (t > 1) torsion.push_back(t);
        }
    }
    h.group = FPAbelianGroup(free, torsion);
    return h;
}

}  // namespace

HomologyGroup homology(const ChainComplex& c, int k)
{
    return assemble(c, k, analyse(c.boundary(k), c.ring()), analyse(c.boundary(k + 1), c.ring()));
}

std::vector<HomologyGroup> homology_range(const ChainComplex& c, int max_degree)
{
    std::vector<HomologyGroup> out;
    if (max_degree < 0) return out;
    std::vector<BoundaryData> data(max_degree + 2);
    for (int p = 0; p <= max_degree + 1; ++p) data[p] = analyse(c.boundary(p), c.ring());
    for (int k = 0; k <= max_degree; ++k) out.push_back(assemble(c, k, data[k], data[k + 1]));
    return out;
}

std::vector<HomologyGroup> homology_all(const ChainComplex& c) { return homology_range(c, c.top_degree()); }

std::vector<Index> betti_numbers(const ChainComplex& c, int max_degree)
{
    std::vector<Index> out;
    for (const auto& h : homology_range(c, max_degree)) out.push_back(h.group.rank);
    return out;
}

ChainComplex unnormalized_chains(const SemiSimplicialSet& x, const Ring& ring)
{
    std::vector<Index> ranks;
    int top = x.num_levels() - 1;
    while (!x.is_truncated() && top >= 0 && x.size(top) == 0) --top;
    for (int p = 0; p <= top; ++p) ranks.push_back(x.size(p));
    std::vector<SparseMatrix> d(ranks.size());
    for (int p = 1; p <= top; ++p) d[p] = alternating_faces(x, p);
    return ChainComplex(ring, ranks, std::move(d), x.truncated_at());
}

ChainComplex normalized_chains(const SimplicialSet& y, const Ring& ring, int cutoff)
{
    const int top = std::min(cutoff, y.top_degree());
    std::vector<Index> ranks;
    for (int q = 0; q <= top; ++q) ranks.push_back(y.generators(q));
    std::vector<SparseMatrix> d(ranks.size());
    for (int q = 1; q <= top; ++q) {
        d[q] = SparseMatrix(ranks[q - 1], ranks[q]);
        for (Index g = 0; g < ranks[q]; ++g) {
            for (int i = 0; i <= q; ++i) {
                const auto& f = y.generator_face(q, g, i);
                if (f.word.empty()) d[q].add(f.index, g, (i % 2 == 0) ? 1 : -1);
            }
        }
    }
    std::optional<int> trunc;
    if (y.truncated_at()) trunc = std::min(*y.truncated_at(), cutoff);
    if (y.top_degree() > cutoff) trunc = trunc ? std::min(*trunc, cutoff) : cutoff;
    return ChainComplex(ring, ranks, std::move(d), trunc);
}

ChainComplex augmented_chains(const SemiSimplicialSet& x, Index base, const std::vector<Index>& augmentation,
                              const Ring& ring)
{
    auto c = unnormalized_chains(x, ring);
    if (augmentation.size() != x.size(0)) throw Error("augmented_chains: augmentation must cover X_0");
    std::vector<Index> ranks{base};
    ranks.insert(ranks.end(), c.ranks().begin(), c.ranks().end());
    std::vector<SparseMatrix> d(ranks.size());
    d[1] = SparseMatrix(base, x.size(0));
    for (Index s = 0; s < x.size(0); ++s) {
        if (augmentation[s] >= base) throw Error("augmented_chains: augmentation index out of range");
        d[1].add(augmentation[s], s, 1);
    }
    for (int p = 1; p <= c.top_degree(); ++p) d[p + 1] = c.boundary(p);
    std::optional<int> trunc;
    if (c.truncation()) trunc = *c.truncation() + 1;
    return ChainComplex(ring, ranks, std::move(d), trunc);
}

ChainMap::ChainMap(std::shared_ptr<const ChainComplex> source, std::shared_ptr<const ChainComplex> target,
                   std::vector<SparseMatrix> components)
    : source_(std::move(source)), target_(std::move(target))
{
    if (!(source_->ring() == target_->ring())) throw Error("chain map: rings differ");
    const int top = source_->top_degree();
    components.resize(std::max(top + 1, 0));
    for (int p = 0; p <= top; ++p) {
        auto& f = components[p];
        if (f.rows() == 0 && f.cols() == 0) f = SparseMatrix(target_->rank(p), source_->rank(p));
        if (f.rows() != target_->rank(p) || f.cols() != source_->rank(p)) {
            throw Error("chain map: component " + std::to_string(p) + " has the wrong shape");
        }
        f = coerce(f, source_->ring());
    }
    components_ = std::move(components);
    for (int p = 1; p <= top + 1; ++p) {
        SparseMatrix lhs = target_->boundary(p) * component(p);
        SparseMatrix rhs = component(p - 1) * source_->boundary(p);
        if (!zero_in(lhs - rhs, source_->ring())) {
            throw Error("non-commuting chain map in degree " + std::to_string(p));
        }
    }
}

SparseMatrix ChainMap::component(int p) const
{
    if (p >= 0 && p < static_cast<int>(components_.size())) return components_[p];
    return SparseMatrix(target_->rank(p), source_->rank(p));
}

ChainMap ChainMap::identity(std::shared_ptr<const ChainComplex> c)
{
    std::vector<SparseMatrix> comps;
    for (int p = 0; p <= c->top_degree(); ++p) comps.push_back(SparseMatrix::identity(c->rank(p)));
    return ChainMap(c, c, std::move(comps));
}

ChainMap ChainMap::zero(std::shared_ptr<const ChainComplex> source, std::shared_ptr<const ChainComplex> target)
{
    return ChainMap(std::move(source), std::move(target), {});
}

ChainMap compose(const ChainMap& f, const ChainMap& g)
{
    std::vector<SparseMatrix> comps;
    for (int p = 0; p <= f.source().top_degree(); ++p) comps.push_back(g.component(p) * f.component(p));
    return ChainMap(f.source_ptr(), g.target_ptr(), std::move(comps));
}

ChainMap induced_chain_map(const SSetMap& f, std::shared_ptr<const ChainComplex> source,
                           std::shared_ptr<const ChainComplex> target, const SemiSimplicialSet& x,
                           const SemiSimplicialSet& y)
{
    auto report = validate_map(f, x, y);
    if (!report) throw Error("non-commuting simplicial map: " + report.message);
    std::vector<SparseMatrix> comps;
    for (int p = 0; p <= source->top_degree(); ++p) {
        SparseMatrix m(target->rank(p), source->rank(p));
        if (target->rank(p) > 0) {
            for (Index s = 0; s < source->rank(p); ++s) m.add(f(p, s), s, 1);
        } else if (source->rank(p) > 0) {
            throw Error("induced_chain_map: target has no simplices in degree " + std::to_string(p));
        }
        comps.push_back(std::move(m));
    }
    return ChainMap(std::move(source), std::move(target), std::move(comps));
}

ChainMap induced_chain_map(const SSetMap& f, const SemiSimplicialSet& x, const SemiSimplicialSet& y,
                           const Ring& ring)
{
    auto cx = std::make_shared<const ChainComplex>(unnormalized_chains(x, ring));
    auto cy = std::make_shared<const ChainComplex>(unnormalized_chains(y, ring));
    return induced_chain_map(f, cx, cy, x, y);
}

ChainComplex mapping_cone(const ChainMap& f)
{
    const auto& c = f.source();
    const auto& d = f.target();
    const int top = std::max(c.top_degree() + 1, d.top_degree());
    std::vector<Index> ranks;
    for (int n = 0; n <= top; ++n) ranks.push_back(c.rank(n - 1) + d.rank(n));
    std::vector<SparseMatrix> bd(ranks.size());
    for (int n = 1; n <= top; ++n) {
        SparseMatrix m(ranks[n - 1], ranks[n]);
        const Index off_row = c.rank(n - 2);
        const Index off_col = c.rank(n - 1);
        if (n >= 2) {
            SparseMatrix dc = c.boundary(n - 1);
            for (Index j = 0; j < dc.cols(); ++j) {
                for (const auto& e : dc.column(j)) m.add(e.row, j, -e.value);
            }
        }
        SparseMatrix fm = f.component(n - 1);
        for (Index j = 0; j < fm.cols(); ++j) {
            for (const auto& e : fm.column(j)) m.add(off_row + e.row, j, e.value);
        }
        SparseMatrix dd = d.boundary(n);
        for (Index j = 0; j < dd.cols(); ++j) {
            for (const auto& e : dd.column(j)) m.add(off_row + e.row, off_col + j, e.value);
        }
        bd[n] = std::move(m);
    }
    std::optional<int> trunc;
    if (c.truncation()) trunc = *c.truncation() + 1;
    if (d.truncation()) trunc = trunc ? std::min(*trunc, *d.truncation()) : *d.truncation();
    return ChainComplex(c.ring(), ranks, std::move(bd), trunc);
}

bool cone_acyclic_through(const ChainMap& f, int d)
{
    auto cone = mapping_cone(f);
    if (!cone.trusted(d)) {
        throw Error("cone_acyclic_through: degree " + std::to_string(d) + " is beyond the trusted range");
    }
    for (const auto& h : homology_range(cone, d)) {
        if (!h.group.is_trivial()) return false;
    }
    return true;
}

bool is_homology_iso(const ChainMap& f, int d) { return cone_acyclic_through(f, d); }

bool equal_on_homology(const ChainMap& f, const ChainMap& g, int k)
{
    const Ring& ring = f.source().ring();
    SparseMatrix diff = f.component(k) - g.component(k);
    SparseMatrix dk = f.source().boundary(k);
    SparseMatrix dk1 = f.target().boundary(k + 1);
    if (ring.kind == Ring::Kind::Integers) {
        auto z = integer_kernel(dk);
        if (z.empty()) return true;
        auto dense = diff.to_dense();
        std::vector<std::vector<Integer>> images;
        for (const auto& v : z) {
            std::vector<Integer> w(diff.rows(), 0);
            for (Index r = 0; r < diff.rows(); ++r) {
                for (Index c = 0; c < diff.cols(); ++c) {
                    if (dense[r][c] != 0 && v[c] != 0) w[r] += dense[r][c] * v[c];
                }
            }
            images.push_back(std::move(w));
        }
        return in_integer_image(dk1, images);
    }
    if (ring.kind == Ring::Kind::Rationals) {
        RationalField fld;
        return linalg::maps_cycles_into_boundaries(fld, dk, diff, dk1);
    }
    PrimeField fld{ring.p};
    return linalg::maps_cycles_into_boundaries(fld, dk, diff, dk1);
}

std::optional<int> ChainHomotopy::first_failure(int max_degree) const
{
    const Ring& ring = f.source().ring();
    for (int q = 0; q <= max_degree; ++q) {
        auto pm = [&](int i) {
            if (i >= 0 && i < static_cast<int>(p.size())) return p[i];
            return SparseMatrix(f.target().rank(i + 1), f.source().rank(i));
        };
        SparseMatrix lhs = f.target().boundary(q + 1) * pm(q);
        if (q >= 1) lhs = lhs + pm(q - 1) * f.source().boundary(q);
        SparseMatrix rhs = g.component(q) - f.component(q);
        if (!zero_in(lhs - rhs, ring)) return q;
    }
    return std::nullopt;
}

Index DoubleComplex::rank(int p, int q) const
{
    if (p < 0 || q < 0 || p > max_p() || q > max_q()) return 0;
    return ranks[p][q];
}

DoubleComplex DoubleComplex::transposed() const
{
    DoubleComplex t;
    t.ring = ring;
    t.truncation = truncation;
    const int P = max_p();
    const int Q = max_q();
    t.ranks.assign(Q + 1, std::vector<Index>(P + 1));
    t.dh.assign(Q + 1, std::vector<SparseMatrix>(P + 1));
    t.dv.assign(Q + 1, std::vector<SparseMatrix>(P + 1));
    for (int p = 0; p <= P; ++p) {
        for (int q = 0; q <= Q; ++q) {
            t.ranks[q][p] = ranks[p][q];
            t.dh[q][p] = dv[p][q];
            t.dv[q][p] = dh[p][q];
        }
    }
    return t;
}

DoubleComplex bicomplex(const BiSemiSimplicialSet& b, const Ring& ring)
{
    DoubleComplex d;
    d.ring = ring;
    d.truncation = b.total_truncation();
    const int P = b.max_p();
    const int Q = b.max_q();
    d.ranks.assign(P + 1, std::vector<Index>(Q + 1));
    d.dh.assign(P + 1, std::vector<SparseMatrix>(Q + 1));
    d.dv.assign(P + 1, std::vector<SparseMatrix>(Q + 1));
    for (int p = 0; p <= P; ++p) {
        for (int q = 0; q <= Q; ++q) {
            const Index n = b.size(p, q);
            d.ranks[p][q] = n;
            d.dh[p][q] = SparseMatrix(p > 0 ? b.size(p - 1, q) : 0, n);
            d.dv[p][q] = SparseMatrix(q > 0 ? b.size(p, q - 1) : 0, n);
            for (Index s = 0; s < n; ++s) {
                if (p > 0) {
                    for (int i = 0; i <= p; ++i) d.dh[p][q].add(b.dh(p, q, i, s), s, (i % 2 == 0) ? 1 : -1);
                }
                if (q > 0) {
                    for (int j = 0; j <= q; ++j) d.dv[p][q].add(b.dv(p, q, j, s), s, (j % 2 == 0) ? 1 : -1);
                }
            }
            d.dh[p][q] = coerce(d.dh[p][q], ring);
            d.dv[p][q] = coerce(d.dv[p][q], ring);
        }
    }
    return d;
}

Index total_offset(const DoubleComplex& d, int p, int q)
{
    Index off = 0;
    for (int a = 0; a < p; ++a) off += d.rank(a, p + q - a);
    return off;
}

ChainComplex total_complex(const DoubleComplex& d)
{
    const int top = std::max(d.max_p() + d.max_q(), -1);
    std::vector<Index> ranks;
    for (int n = 0; n <= top; ++n) {
        Index r = 0;
        for (int p = 0; p <= n; ++p) r += d.rank(p, n - p);
        ranks.push_back(r);
    }
    std::vector<SparseMatrix> bd(ranks.size());
    for (int n = 1; n <= top; ++n) {
        SparseMatrix m(ranks[n - 1], ranks[n]);
        for (int p = 0; p <= n; ++p) {
            const int q = n - p;
            if (d.rank(p, q) == 0) continue;
            const Index col0 = total_offset(d, p, q);
            if (p > 0) {
                const Index row0 = total_offset(d, p - 1, q);
                const auto& h = d.dh[p][q];
                for (Index j = 0; j < h.cols(); ++j) {
                    for (const auto& e : h.column(j)) m.add(row0 + e.row, col0 + j, e.value);
                }
            }
            if (q > 0) {
                const Index row0 = total_offset(d, p, q - 1);
                const auto& v = d.dv[p][q];
                for (Index j = 0; j < v.cols(); ++j) {
                    for (const auto& e : v.column(j)) {
                        m.add(row0 + e.row, col0 + j, (p % 2 == 0) ? Integer(e.value) : Integer(-e.value));
                    }
                }
            }
        }
        bd[n] = std::move(m);
    }
    return ChainComplex(d.ring, ranks, std::move(bd), d.truncation);
}

std::vector<FPAbelianGroup> kunneth(const std::vector<FPAbelianGroup>& hx, const std::vector<FPAbelianGroup>& hy)
{
    if (hx.empty() || hy.empty()) return {};
    std::vector<FPAbelianGroup> out(hx.size() + hy.size());
    for (std::size_t i = 0; i < hx.size(); ++i) {
        for (std::size_t j = 0; j < hy.size(); ++j) {
            out[i + j] = direct_sum(out[i + j], tensor(hx[i], hy[j]));
            out[i + j + 1] = direct_sum(out[i + j + 1], tor(hx[i], hy[j]));
        }
    }
    while (out.size() > 1 && out.back().is_trivial()) out.pop_back();
    return out;
}

Index universal_coefficient_dimension(const std::vector<HomologyGroup>& integral, int k, long p)
{
    auto count = [&](int deg) {
        Index n = 0;
        if (deg < 0 || deg >= static_cast<int>(integral.size())) return n;
        for (const auto& t : integral[deg].group.torsion) {
            if (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p))) ++n;
        }
        return n;
    };
    if (k < 0 || k >= static_cast<int>(integral.size())) throw Error("universal coefficients: degree out of range");
    return integral[k].group.rank + count(k) + count(k - 1);
}

}  // namespace sscat
