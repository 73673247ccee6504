#include "sscat/specseq.hpp"

#include <map>
#include <tuple>

#include "sscat/field.hpp"

namespace sscat {

std::string to_string(Filtration f) { return f == Filtration::Columns ? "columns" : "rows"; }

Index SSPage::dim(int s, int t) const
{
    if (s < 0 || t < 0 || s > max_s() || t > max_t()) return 0;
    return dims[s][t];
}

namespace {

mpq_class to_q(const PrimeField&, std::int64_t v) { return mpq_class(static_cast<long>(v)); }
mpq_class to_q(const RationalField&, const mpq_class& v) { return v; }

std::int64_t from_q(const PrimeField& f, const mpq_class& v)
{
    return f.mul(f.from(v.get_num()), f.inv(f.from(v.get_den())));
}
mpq_class from_q(const RationalField&, const mpq_class& v) { return v; }

template <class F>
std::vector<mpq_class> to_q_vec(const F& f, const linalg::Vec<F>& v)
{
    std::vector<mpq_class> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_q(f, x));
    return out;
}

template <class F>
linalg::Vec<F> from_q_vec(const F& f, const std::vector<mpq_class>& v)
{
    linalg::Vec<F> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(from_q(f, x));
    return out;
}

template <class F>
Index matrix_rank(const F& f, const RationalMatrix& m)
{
    if (m.empty()) return 0;
    std::vector<linalg::Vec<F>> rows;
    for (const auto& row : m) rows.push_back(from_q_vec(f, row));
    return linalg::echelon(f, rows, m[0].size()).rank();
}

/// The column filtration of Tot(d) with the Z^r subspaces cached.
template <class F>
class Filtered {
public:
    using Vec = linalg::Vec<F>;
    using Basis = std::vector<Vec>;

    Filtered(const F& f, const DoubleComplex& d) : f_(f), d_(d), tot_(total_complex(d)) {}

    const ChainComplex& tot() const { return tot_; }
    int top() const { return tot_.top_degree(); }

    /// dim F_s Tot_n.
    Index prefix(int n, int s) const
    {
        Index len = 0;
        for (int a = 0; a <= s && a <= n; ++a) len += d_.rank(a, n - a);
        return len;
    }

    Basis prefix_basis(int n, int s) const
    {
        Basis b;
        const Index dim = tot_.rank(n);
        for (Index i = 0; i < prefix(n, s); ++i) b.push_back(linalg::unit_vec(f_, dim, i));
        return b;
    }

    /// Z^r_s in Tot_n: x in F_s with dx in F_{s-r}; Z^{-1}_s = F_s.
    const Basis& z(int r, int s, int n)
    {
        auto key = std::make_tuple(r, s, n);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        Basis out;
        if (n >= 0 && n <= top() && s >= 0) {
            if (r < 0) {
                out = prefix_basis(n, s);
            } else {
                out = linalg::preimage(f_, tot_.boundary(n), prefix_basis(n, s), prefix_basis(n - 1, s - r));
            }
        }
        return cache_.emplace(key, std::move(out)).first->second;
    }

    /// Z^{r-1}_{s-1} + d Z^{r-1}_{s+r-1} in Tot_n.
    Basis denominator(int r, int s, int n)
    {
        Basis out = z(r - 1, s - 1, n);
        if (n + 1 <= top()) {
            const auto bd = tot_.boundary(n + 1);
            for (const auto& x : z(r - 1, s + r - 1, n + 1)) out.push_back(linalg::apply(f_, bd, x));
        }
        return out;
    }

private:
    F f_;
    const DoubleComplex& d_;
    ChainComplex tot_;
    std::map<std::tuple<int, int, int>, Basis> cache_;
};

template <class F>
std::vector<SSPage> pages_over(const F& f, long characteristic, const DoubleComplex& d, Filtration orientation,
                               int max_page)
{
    Filtered<F> filt(f, d);
    const int S = d.max_p();
    const int T = d.max_q();
    const int last = std::min(max_page, S + 1);
    std::vector<SSPage> pages;
    if (S < 0 || T < 0) return pages;
    for (int r = 0; r <= last; ++r) {
        SSPage page;
        page.r = r;
        page.orientation = orientation;
        page.characteristic = characteristic;
        page.stable = r >= S + 1;
        page.dims.assign(S + 1, std::vector<Index>(T + 1, 0));
        page.differential.assign(S + 1, std::vector<RationalMatrix>(T + 1));
        page.differential_rank.assign(S + 1, std::vector<Index>(T + 1, 0));
        page.representatives.assign(S + 1, std::vector<std::vector<std::vector<mpq_class>>>(T + 1));
        page.trusted.assign(S + 1, std::vector<bool>(T + 1, true));

        std::vector<std::vector<typename Filtered<F>::Basis>> reps(S + 1, std::vector<typename Filtered<F>::Basis>(T + 1));
        std::vector<std::vector<typename Filtered<F>::Basis>> rels(S + 1, std::vector<typename Filtered<F>::Basis>(T + 1));
        for (int s = 0; s <= S; ++s) {
            for (int t = 0; t <= T; ++t) {
                const int n = s + t;
                rels[s][t] = filt.denominator(r, s, n);
                reps[s][t] = linalg::complement(f, filt.z(r, s, n), rels[s][t], filt.tot().rank(n));
                page.dims[s][t] = reps[s][t].size();
                page.trusted[s][t] = filt.tot().trusted(n);
                for (const auto& v : reps[s][t]) page.representatives[s][t].push_back(to_q_vec(f, v));
            }
        }
        for (int s = 0; s <= S; ++s) {
            for (int t = 0; t <= T; ++t) {
                const int n = s + t;
                const int ts = s - r;
                const int tt = t + r - 1;
                const bool in_range = ts >= 0 && tt >= 0 && tt <= T && n >= 1;
                const Index rows = in_range ? reps[ts][tt].size() : 0;
                RationalMatrix m(rows, std::vector<mpq_class>(reps[s][t].size()));
                if (in_range && rows > 0) {
                    const auto bd = filt.tot().boundary(n);
                    for (std::size_t c = 0; c < reps[s][t].size(); ++c) {
                        const auto image = linalg::apply(f, bd, reps[s][t][c]);
                        auto coords = linalg::coordinates(f, reps[ts][tt], rels[ts][tt], image, filt.tot().rank(n - 1));
                        if (!coords) throw Error("spectral sequence: boundary left the target page");
                        for (Index k = 0; k < rows; ++k) m[k][c] = to_q(f, (*coords)[k]);
                    }
                }
                page.differential_rank[s][t] = matrix_rank(f, m);
                page.differential[s][t] = std::move(m);
            }
        }
        pages.push_back(std::move(page));
    }
    return pages;
}

template <class F>
std::optional<std::string> invariants_over(const F& f, const std::vector<SSPage>& pages)
{
    for (std::size_t k = 0; k < pages.size(); ++k) {
        const auto& pg = pages[k];
        const int r = pg.r;
        for (int s = 0; s <= pg.max_s(); ++s) {
            for (int t = 0; t <= pg.max_t(); ++t) {
                const int ts = s - r;
                const int tt = t + r - 1;
                const auto& m1 = pg.differential[s][t];
                if (ts >= 0 && tt >= 0 && tt <= pg.max_t() && !m1.empty()) {
                    const auto& m2 = pg.differential[ts][tt];
                    for (std::size_t i = 0; i < m2.size(); ++i) {
                        for (std::size_t j = 0; j < m1[0].size(); ++j) {
                            auto acc = f.zero();
                            for (std::size_t l = 0; l < m1.size(); ++l) {
                                acc = f.add(acc, f.mul(from_q(f, m2[i][l]), from_q(f, m1[l][j])));
                            }
                            if (!f.is_zero(acc)) {
                                return "d^" + std::to_string(r) + " d^" + std::to_string(r) + " != 0 at (" +
                                       std::to_string(s) + ", " + std::to_string(t) + ")";
                            }
                        }
                    }
                }
                if (k + 1 < pages.size()) {
                    Index in = 0;
                    const int ss = s + r;
                    const int st = t - r + 1;
                    if (ss <= pg.max_s() && st >= 0 && st <= pg.max_t()) in = pg.differential_rank[ss][st];
                    const Index out = pg.differential_rank[s][t];
                    if (pages[k + 1].dims[s][t] + in + out != pg.dims[s][t]) {
                        return "page " + std::to_string(r + 1) + " dimension at (" + std::to_string(s) + ", " +
                               std::to_string(t) + ") is not the homology of page " + std::to_string(r);
                    }
                }
            }
        }
    }
    return std::nullopt;
}

template <class F>
std::optional<std::string> d1_over(const F& f, const DoubleComplex& d, const SSPage& e1)
{
    Filtered<F> filt(f, d);
    for (int s = 1; s <= e1.max_s(); ++s) {
        for (int t = 0; t <= e1.max_t(); ++t) {
            const int n = s + t;
            const Index off = filt.prefix(n, s - 1);
            const Index len = d.rank(s, t);
            const Index toff = filt.prefix(n - 1, s - 2);
            const Index tlen = d.rank(s - 1, t);
            std::vector<linalg::Vec<F>> basis;
            for (const auto& v : e1.representatives[s - 1][t]) {
                auto full = from_q_vec(f, v);
                basis.emplace_back(full.begin() + toff, full.begin() + toff + tlen);
            }
            std::vector<linalg::Vec<F>> rel;
            if (t + 1 <= d.max_q()) {
                const auto& dv = d.dv[s - 1][t + 1];
                for (Index j = 0; j < dv.cols(); ++j) rel.push_back(linalg::apply(f, dv, linalg::unit_vec(f, dv.cols(), j)));
            }
            for (std::size_t c = 0; c < e1.representatives[s][t].size(); ++c) {
                auto full = from_q_vec(f, e1.representatives[s][t][c]);
                linalg::Vec<F> block(full.begin() + off, full.begin() + off + len);
                auto image = linalg::apply(f, d.dh[s][t], block);
                auto coords = linalg::coordinates(f, basis, rel, image, tlen);
                if (!coords) return "d^1 image at (" + std::to_string(s) + ", " + std::to_string(t) + ") is not a class";
                for (std::size_t k = 0; k < basis.size(); ++k) {
                    if (from_q(f, e1.differential[s][t][k][c]) != (*coords)[k]) {
                        return "d^1 at (" + std::to_string(s) + ", " + std::to_string(t) +
                               ") disagrees with the block differential";
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<SSPage> spectral_sequence(const DoubleComplex& d, Filtration orientation, int max_page)
{
    if (!d.ring.is_field()) throw Error("spectral sequences need field coefficients");
    if (max_page < 0) throw Error("spectral sequence: max page must be non-negative");
    const DoubleComplex oriented = orientation == Filtration::Columns ? d : d.transposed();
    if (d.ring.kind == Ring::Kind::PrimeField) return pages_over(PrimeField{d.ring.p}, d.ring.p, oriented, orientation, max_page);
    return pages_over(RationalField{}, 0, oriented, orientation, max_page);
}

std::optional<std::string> check_page_invariants(const std::vector<SSPage>& pages)
{
    if (pages.empty()) return std::nullopt;
    const long p = pages.front().characteristic;
    if (p != 0) return invariants_over(PrimeField{p}, pages);
    return invariants_over(RationalField{}, pages);
}

std::optional<std::string> check_d1(const DoubleComplex& d, const SSPage& e1)
{
    if (e1.r != 1) throw Error("check_d1 needs page 1");
    const DoubleComplex oriented = e1.orientation == Filtration::Columns ? d : d.transposed();
    if (e1.characteristic != 0) return d1_over(PrimeField{e1.characteristic}, oriented, e1);
    return d1_over(RationalField{}, oriented, e1);
}

ConvergenceReport check_convergence(const std::vector<SSPage>& pages, const ChainComplex& total)
{
    if (pages.empty()) throw Error("check_convergence: no pages");
    const auto& last = pages.back();
    if (!last.stable) throw Error("check_convergence: the last page is not E^infinity");
    ConvergenceReport rep;
    const int top = last.max_s() + last.max_t();
    const auto betti = betti_numbers(total, std::min(top, total.top_degree()));
    for (int n = 0; n <= top; ++n) {
        ConvergenceReport::Degree deg;
        deg.n = n;
        deg.trusted = total.trusted(n);
        for (int s = 0; s <= std::min(n, last.max_s()); ++s) {
            deg.e_infinity += last.dim(s, n - s);
            if (n - s <= last.max_t() && !last.trusted[s][n - s]) deg.trusted = false;
        }
        deg.homology = n < static_cast<int>(betti.size()) ? betti[n] : 0;
        if (deg.trusted && deg.e_infinity != deg.homology) rep.ok = false;
        rep.degrees.push_back(deg);
    }
    return rep;
}

}  // namespace sscat
