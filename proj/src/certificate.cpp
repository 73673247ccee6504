#include "sscat/certificate.hpp"

#include <algorithm>
#include <memory>

namespace sscat {

std::string to_string(HomotopyCertificate::Kind k)
{
    switch (k) {
    case HomotopyCertificate::Kind::ExtraDegeneracyH: return "extra-degeneracy-h";
    case HomotopyCertificate::Kind::ExtraDegeneracyG: return "extra-degeneracy-g";
    case HomotopyCertificate::Kind::Nullhomotopy: return "nullhomotopy";
    case HomotopyCertificate::Kind::Homotopy: return "homotopy";
    }
    return "?";
}

namespace {

using Kind = HomotopyCertificate::Kind;

constexpr std::size_t max_failures = 16;

struct Collector {
    CertificateReport& report;

    void fail(const std::string& what, int p, Index s)
    {
        report.ok = false;
        if (report.failures.size() < max_failures) {
            report.failures.push_back(what + " fails at p=" + std::to_string(p) + ", simplex " + std::to_string(s));
        }
    }
};

/// Size of Y_p with Y_{-1} the augmentation base.
Index aug_size(const HomotopyCertificate& c, int p)
{
    if (p == -1) return c.base_size;
    return c.target.size(p);
}

/// d_i on Y_p, with d_0 on Y_0 the augmentation.
Index aug_face(const HomotopyCertificate& c, int p, int i, Index s)
{
    if (p == 0) return c.augmentation[s];
    return c.target.face(p, i, s);
}

bool shapes_ok(const HomotopyCertificate& c, CertificateReport& r)
{
    auto bad = [&](const std::string& m) {
        r.ok = false;
        r.failures.push_back(m);
        return false;
    };
    const bool extra = c.kind == Kind::ExtraDegeneracyH || c.kind == Kind::ExtraDegeneracyG;
    if (extra) {
        if (c.augmentation.size() != c.target.size(0)) return bad("augmentation does not cover Y_0");
        for (Index v : c.augmentation) {
            if (v >= c.base_size) return bad("augmentation index out of range");
        }
        for (std::size_t k = 0; k < c.h.size(); ++k) {
            const int p = static_cast<int>(k) - 1;
            if (c.h[k].size() != aug_size(c, p)) return bad("table h_" + std::to_string(k) + " has the wrong length");
            if (static_cast<int>(k) > c.target.known_degree()) return bad("table h_" + std::to_string(k) + " leaves the known range");
            for (Index v : c.h[k]) {
                if (v >= c.target.size(p + 1)) return bad("table h_" + std::to_string(k) + " has an index out of range");
            }
        }
        return true;
    }
    if (c.kind == Kind::Nullhomotopy) {
        if (c.y0 >= c.target.size(0)) return bad("y0 out of range");
        for (std::size_t k = 1; k < c.h.size(); ++k) {
            const int p = static_cast<int>(k) - 1;
            if (c.h[k].size() != c.source.size(p)) return bad("table h_" + std::to_string(k) + " has the wrong length");
            for (Index v : c.h[k]) {
                if (v >= c.target.size(p + 1)) return bad("table h_" + std::to_string(k) + " has an index out of range");
            }
        }
    } else {
        for (std::size_t k = 1; k < c.hh.size(); ++k) {
            const int p = static_cast<int>(k) - 1;
            if (c.hh[k].size() != static_cast<std::size_t>(p + 1)) return bad("homotopy level " + std::to_string(k) + " needs p+1 maps");
            for (const auto& t : c.hh[k]) {
                if (t.size() != c.source.size(p)) return bad("homotopy table at level " + std::to_string(k) + " has the wrong length");
                for (Index v : t) {
                    if (v >= c.target.size(p + 1)) return bad("homotopy table at level " + std::to_string(k) + " has an index out of range");
                }
            }
        }
        if (c.g.num_levels() < static_cast<int>(c.hh.size()) - 1) return bad("map g is too short");
    }
    if (c.f.num_levels() < static_cast<int>(std::max(c.h.size(), c.hh.size())) - 1) return bad("map f is too short");
    return true;
}

void check_extra_h(const HomotopyCertificate& c, CertificateReport& r)
{
    Collector col{r};
    const int top = static_cast<int>(c.h.size()) - 1;  // h_top is the last table
    for (int k = 0; k <= top; ++k) {
        const int p = k - 1;  // h_k : Y_p -> Y_{p+1}
        for (Index s = 0; s < aug_size(c, p); ++s) {
            const Index y = c.h[k][s];
            if (aug_face(c, p + 1, p + 1, y) != s) col.fail("d_{p+1} h_{p+1} = id", p, s);
            if (p >= 0) {
                for (int i = 0; i < p + 1; ++i) {
                    if (aug_face(c, p + 1, i, y) != c.h[k - 1][aug_face(c, p, i, s)]) {
                        col.fail("d_" + std::to_string(i) + " h_{p+1} = h_p d_" + std::to_string(i), p, s);
                    }
                }
            }
        }
        r.checked_through = p;
    }
}

void check_extra_g(const HomotopyCertificate& c, CertificateReport& r)
{
    Collector col{r};
    const int top = static_cast<int>(c.h.size()) - 1;
    for (int k = 0; k <= top; ++k) {
        const int p = k - 1;
        for (Index s = 0; s < aug_size(c, p); ++s) {
            const Index y = c.h[k][s];
            if (aug_face(c, p + 1, 0, y) != s) col.fail("d_0 g_{p+1} = id", p, s);
            for (int i = 1; i <= p + 1; ++i) {
                if (aug_face(c, p + 1, i, y) != c.h[k - 1][aug_face(c, p, i - 1, s)]) {
                    col.fail("d_" + std::to_string(i) + " g_{p+1} = g_p d_" + std::to_string(i - 1), p, s);
                }
            }
        }
        r.checked_through = p;
    }
}

void check_null(const HomotopyCertificate& c, CertificateReport& r)
{
    Collector col{r};
    const int top = static_cast<int>(c.h.size()) - 1;
    for (int k = 1; k <= top; ++k) {
        const int p = k - 1;
        for (Index s = 0; s < c.source.size(p); ++s) {
            const Index y = c.h[k][s];
            if (c.target.face(p + 1, p + 1, y) != c.f(p, s)) col.fail("d_{p+1} h_{p+1} = f", p, s);
            if (p == 0 && c.target.face(1, 0, y) != c.y0) col.fail("d_0 h_1 = y0", p, s);
            for (int i = 0; p >= 1 && i <= p; ++i) {
                if (c.target.face(p + 1, i, y) != c.h[k - 1][c.source.face(p, i, s)]) {
                    col.fail("d_" + std::to_string(i) + " h_{p+1} = h_p d_" + std::to_string(i), p, s);
                }
            }
        }
        r.checked_through = p;
    }
}

void check_homotopy(const HomotopyCertificate& c, CertificateReport& r)
{
    Collector col{r};
    const int top = static_cast<int>(c.hh.size()) - 1;
    for (int k = 1; k <= top; ++k) {
        const int p = k - 1;
        const auto& hk = c.hh[k];
        for (Index s = 0; s < c.source.size(p); ++s) {
            auto d = [&](int i, int j) { return c.target.face(p + 1, i, hk[j][s]); };
            for (int i = 1; i <= p; ++i) {
                if (d(i, i) != d(i, i - 1)) col.fail("d_i h_{p+1,i} = d_i h_{p+1,i-1} (i=" + std::to_string(i) + ")", p, s);
            }
            for (int j = 0; j <= p; ++j) {
                for (int i = 0; i < j; ++i) {
                    if (d(i, j) != c.hh[k - 1][j - 1][c.source.face(p, i, s)]) {
                        col.fail("d_i h_{p+1,j} = h_{p,j-1} d_i (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")", p, s);
                    }
                }
                for (int i = j + 2; i <= p + 1; ++i) {
                    if (d(i, j) != c.hh[k - 1][j][c.source.face(p, i - 1, s)]) {
                        col.fail("d_i h_{p+1,j} = h_{p,j} d_{i-1} (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")", p, s);
                    }
                }
            }
            if (d(0, 0) != c.f(p, s)) col.fail("d_0 h_{p+1,0} = f", p, s);
            if (d(p + 1, p) != c.g(p, s)) col.fail("d_{p+1} h_{p+1,p} = g", p, s);
        }
        r.checked_through = p;
    }
}

}  // namespace

CertificateReport check_certificate(const HomotopyCertificate& c)
{
    CertificateReport r;
    if (!shapes_ok(c, r)) return r;
    switch (c.kind) {
    case Kind::ExtraDegeneracyH: check_extra_h(c, r); break;
    case Kind::ExtraDegeneracyG: check_extra_g(c, r); break;
    case Kind::Nullhomotopy: check_null(c, r); break;
    case Kind::Homotopy: check_homotopy(c, r); break;
    }
    return r;
}

int chain_homotopy_range(const HomotopyCertificate& c)
{
    switch (c.kind) {
    case Kind::ExtraDegeneracyH:
    case Kind::ExtraDegeneracyG: return static_cast<int>(c.h.size()) - 1;
    case Kind::Nullhomotopy: return static_cast<int>(c.h.size()) - 2;
    case Kind::Homotopy: return static_cast<int>(c.hh.size()) - 2;
    }
    return -1;
}

namespace {

SparseMatrix table_matrix(const std::vector<Index>& t, Index rows, const Integer& sign)
{
    SparseMatrix m(rows, t.size());
    for (Index s = 0; s < t.size(); ++s) m.add(t[s], s, sign);
    return m;
}

ChainMap map_of(const SSetMap& f, std::shared_ptr<const ChainComplex> x, std::shared_ptr<const ChainComplex> y)
{
    std::vector<SparseMatrix> comps;
    for (int p = 0; p <= x->top_degree(); ++p) {
        SparseMatrix m(y->rank(p), x->rank(p));
        if (p < f.num_levels()) {
            for (Index s = 0; s < x->rank(p); ++s) m.add(f(p, s), s, 1);
        }
        comps.push_back(std::move(m));
    }
    return ChainMap(std::move(x), std::move(y), std::move(comps));
}

}  // namespace

ChainHomotopy chain_homotopy_from_certificate(const HomotopyCertificate& c, const Ring& ring)
{
    auto rep = check_certificate(c);
    if (!rep) throw Error("certificate fails: " + (rep.failures.empty() ? std::string("?") : rep.failures.front()));
    ChainHomotopy out;
    const int range = chain_homotopy_range(c);
    if (c.kind == Kind::ExtraDegeneracyH || c.kind == Kind::ExtraDegeneracyG) {
        auto a = std::make_shared<const ChainComplex>(augmented_chains(c.target, c.base_size, c.augmentation, ring));
        out.f = ChainMap::zero(a, a);
        out.g = ChainMap::identity(a);
        for (std::size_t k = 0; k < c.h.size(); ++k) {
            const int p = static_cast<int>(k) - 1;
            Integer sign = 1;
            if (c.kind == Kind::ExtraDegeneracyH && (p + 1) % 2 != 0) sign = -1;
            out.p.push_back(coerce(table_matrix(c.h[k], a->rank(p + 2), sign), ring));
        }
    } else {
        auto x = std::make_shared<const ChainComplex>(unnormalized_chains(c.source, ring));
        auto y = std::make_shared<const ChainComplex>(unnormalized_chains(c.target, ring));
        out.f = map_of(c.f, x, y);
        if (c.kind == Kind::Nullhomotopy) {
            std::vector<SparseMatrix> comps;
            for (int p = 0; p <= x->top_degree(); ++p) {
                SparseMatrix m(y->rank(p), x->rank(p));
                if (p == 0) {
                    for (Index s = 0; s < x->rank(0); ++s) m.add(c.y0, s, 1);
                }
                comps.push_back(std::move(m));
            }
            out.g = ChainMap(x, y, std::move(comps));
            for (std::size_t k = 1; k < c.h.size(); ++k) {
                const int p = static_cast<int>(k) - 1;
                out.p.push_back(coerce(table_matrix(c.h[k], y->rank(p + 1), p % 2 == 0 ? 1 : -1), ring));
            }
        } else {
            out.g = map_of(c.g, x, y);
            for (std::size_t k = 1; k < c.hh.size(); ++k) {
                const int p = static_cast<int>(k) - 1;
                SparseMatrix m(y->rank(p + 1), x->rank(p));
                for (int i = 0; i <= p; ++i) {
                    const Integer sign = (i % 2 == 0) ? -1 : 1;
                    for (Index s = 0; s < x->rank(p); ++s) m.add(c.hh[k][i][s], s, sign);
                }
                out.p.push_back(coerce(m, ring));
            }
        }
    }
    if (auto bad = out.first_failure(range)) {
        throw Error("chain homotopy identity fails in degree " + std::to_string(*bad));
    }
    return out;
}

}  // namespace sscat
