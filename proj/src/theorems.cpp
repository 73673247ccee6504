#include "sscat/theorems.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "sscat/certificate.hpp"
#include "sscat/chain.hpp"
#include "sscat/fixtures.hpp"

namespace sscat {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::UntrustedAtCutoff: return "untrusted-at-cutoff";
    case Verdict::HypothesesNotMet: return "hypotheses-not-met";
    }
    return "?";
}

int exit_code(Verdict v) { return v == Verdict::Pass ? 0 : 1; }

void CheckReport::finalize()
{
    const bool hyp_fail = std::any_of(hypotheses.begin(), hypotheses.end(), [](const CheckItem& i) { return !i.ok; });
    const bool cmp_fail = std::any_of(comparisons.begin(), comparisons.end(),
                                      [](const CheckItem& i) { return i.trusted && !i.ok; });
    const bool any_trusted = std::any_of(comparisons.begin(), comparisons.end(), [](const CheckItem& i) { return i.trusted; });
    if (hyp_fail) {
        verdict = Verdict::HypothesesNotMet;
    } else if (cmp_fail) {
        verdict = Verdict::Fail;
    } else if (!comparisons.empty() && !any_trusted) {
        verdict = Verdict::UntrustedAtCutoff;
    } else {
        verdict = Verdict::Pass;
    }
}

namespace {

const Ring kZ = Ring::integers();

using ComplexPtr = std::shared_ptr<const ChainComplex>;

ComplexPtr chains(const SemiSimplicialSet& x) { return std::make_shared<const ChainComplex>(unnormalized_chains(x, kZ)); }

std::string point_group(int k) { return k == 0 ? "Z" : "0"; }

CheckReport start(const std::string& id, int cutoff)
{
    if (cutoff < 1) throw Error(id + ": cutoff must be >= 1");
    CheckReport r;
    r.id = id;
    r.parameters.push_back({"cutoff", std::to_string(cutoff)});
    return r;
}

void empty_range(CheckReport& r, int through)
{
    if (through < 0) r.comparisons.push_back({"trusted range", -1, "non-empty", "empty", false, false});
}

/// H_k(cone f) = 0 for k <= through.
void cone_items(CheckReport& r, const std::string& name, const ChainMap& f, int through)
{
    empty_range(r, through);
    const auto hs = homology_range(mapping_cone(f), through);
    for (const auto& h : hs) {
        r.comparisons.push_back({name, h.degree, "0", h.group.to_string(), h.trusted, h.group.is_trivial()});
    }
}

/// Group-by-group comparison of two homology lists through `through`.
void group_items(CheckReport& r, const std::string& name, const std::vector<HomologyGroup>& a,
                 const std::vector<HomologyGroup>& b, int through)
{
    for (int k = 0; k <= through; ++k) {
        const auto ga = a[k].group.to_string();
        const auto gb = b[k].group.to_string();
        r.comparisons.push_back({name, k, ga, gb, a[k].trusted && b[k].trusted, ga == gb});
    }
}

void point_items(CheckReport& r, const std::string& name, const ChainComplex& c, int through)
{
    empty_range(r, through);
    for (const auto& h : homology_range(c, through)) {
        const auto g = h.group.to_string();
        r.comparisons.push_back({name, h.degree, point_group(h.degree), g, h.trusted, g == point_group(h.degree)});
    }
}

void homology_values(CheckReport& r, const std::string& name, const ChainComplex& c, int through)
{
    for (const auto& h : homology_range(c, through)) {
        r.values.push_back({name + "_" + std::to_string(h.degree), h.group.to_string() + (h.trusted ? "" : " (untrusted)")});
    }
}

bool is_point_homology(const ChainComplex& c, int through, std::string* detail)
{
    for (const auto& h : homology_range(c, through)) {
        if (!h.trusted) continue;
        if (h.group.to_string() != point_group(h.degree)) {
            if (detail) *detail = "H_" + std::to_string(h.degree) + " = " + h.group.to_string();
            return false;
        }
    }
    return true;
}

/// Levels 0..N of x, truncated at N unless x is already finite within N.
SemiSimplicialSet truncate_to(const SemiSimplicialSet& x, int cutoff)
{
    const int top = x.known_degree();
    if (!x.is_truncated() && top <= cutoff) return x;
    if (x.is_truncated() && *x.truncated_at() <= cutoff) return x;
    std::vector<Level> levels;
    for (int p = 0; p <= cutoff && p < x.num_levels(); ++p) levels.push_back(x.level(p));
    return SemiSimplicialSet(std::move(levels), std::nullopt, cutoff);
}

void certificate_items(CheckReport& r, const std::string& name, const HomotopyCertificate& cert,
                       std::optional<ChainHomotopy>* out)
{
    auto rep = check_certificate(cert);
    r.comparisons.push_back({name + " identities", rep.checked_through, "hold",
                             rep.ok ? "hold" : rep.failures.front(), true, rep.ok});
    if (!rep.ok) return;
    const int range = chain_homotopy_range(cert);
    try {
        auto h = chain_homotopy_from_certificate(cert, kZ);
        r.comparisons.push_back({name + " chain homotopy", range, "exact", "exact", true, true});
        if (out) *out = std::move(h);
    } catch (const Error& e) {
        r.comparisons.push_back({name + " chain homotopy", range, "exact", e.what(), true, false});
    }
}

}  // namespace

CheckReport check_adj_units(const SemiSimplicialSet& x, int cutoff)
{
    auto r = start("adj-units", cutoff);
    auto v = validate(x);
    if (!v) throw Error("adj-units: invalid input: " + v.message);
    const auto xs = truncate_to(x, cutoff);
    const auto ex = enumerate(free_degeneracies(xs), cutoff);
    const auto f = induced_chain_map(unit_map(xs, cutoff), chains(xs), chains(ex), xs, ex);
    group_items(r, "H(X) vs H(EX)", homology_range(f.source(), cutoff - 1), homology_range(f.target(), cutoff - 1),
                cutoff - 1);
    cone_items(r, "H(cone of unit)", f, cutoff - 1);
    r.finalize();
    return r;
}

CheckReport check_fat_thin(const SimplicialSet& y, int cutoff)
{
    auto r = start("fat-thin", cutoff);
    auto v = validate(y);
    if (!v) throw Error("fat-thin: invalid input: " + v.message);
    const auto e = enumerate_full(y, cutoff);
    auto fat = chains(e.sset);
    auto thin = std::make_shared<const ChainComplex>(normalized_chains(y, kZ, cutoff));
    std::vector<SparseMatrix> comps;
    for (int p = 0; p <= fat->top_degree(); ++p) {
        SparseMatrix m(thin->rank(p), fat->rank(p));
        for (Index s = 0; s < e.simplices[p].size(); ++s) {
            const auto& ref = e.simplices[p][s];
            if (ref.word.empty()) m.add(ref.index, s, 1);
        }
        comps.push_back(std::move(m));
    }
    ChainMap proj(fat, thin, std::move(comps));
    group_items(r, "H(unnormalized) vs H(normalized)", homology_range(*fat, cutoff - 1),
                homology_range(*thin, cutoff - 1), cutoff - 1);
    cone_items(r, "H(cone of projection)", proj, cutoff - 1);
    r.finalize();
    return r;
}

CheckReport check_ez_diagonal(const SimplicialSet& x, const SimplicialSet& y, int cutoff)
{
    auto r = start("ez-diagonal", cutoff);
    for (const auto* s : {&x, &y}) {
        auto v = validate(*s);
        if (!v) throw Error("ez-diagonal: invalid input: " + v.message);
    }
    const int through = cutoff - 2;
    const auto diag = interior_product(x, y, cutoff);
    auto cd = chains(diag);
    const auto ex = enumerate(x, cutoff);
    const auto ey = enumerate(y, cutoff);
    const auto dc = bicomplex(exterior_product(ex, ey), kZ);
    auto tot = std::make_shared<const ChainComplex>(total_complex(dc));
    empty_range(r, through);
    group_items(r, "H(diagonal) vs H(Tot)", homology_range(*cd, through), homology_range(*tot, through), through);

    // front p-face of x tensor back q-face of y
    std::vector<SparseMatrix> comps;
    for (int n = 0; n <= cd->top_degree(); ++n) {
        SparseMatrix m(tot->rank(n), cd->rank(n));
        const Index ny = ey.size(n);
        for (Index s = 0; s < cd->rank(n); ++s) {
            const Index a = s / ny;
            const Index c = s % ny;
            for (int p = 0; p <= n; ++p) {
                std::vector<int> front, back;
                for (int v = 0; v <= p; ++v) front.push_back(v);
                for (int v = p; v <= n; ++v) back.push_back(v);
                const Index fa = restrict_to_vertices(ex, n, a, front);
                const Index bc = restrict_to_vertices(ey, n, c, back);
                m.add(total_offset(dc, p, n - p) + fa * ey.size(n - p) + bc, s, 1);
            }
        }
        comps.push_back(std::move(m));
    }
    try {
        ChainMap aw(cd, tot, std::move(comps));
        r.comparisons.push_back({"front/back face map is a chain map", -1, "yes", "yes", true, true});
        cone_items(r, "H(cone of front/back face map)", aw, through);
    } catch (const Error& e) {
        r.comparisons.push_back({"front/back face map is a chain map", -1, "yes", e.what(), true, false});
    }
    r.finalize();
    return r;
}

CheckReport check_semi_diagonal_euler(int n, int m)
{
    if (n < 0 || m < 0) throw Error("semi-diagonal: dimensions must be non-negative");
    CheckReport r;
    r.id = "semi-diagonal";
    r.parameters = {{"n", std::to_string(n)}, {"m", std::to_string(m)}};
    const auto x = standard_semi_simplex(n);
    const auto y = standard_semi_simplex(m);
    const auto b = exterior_product(x, y);
    const auto tot = total_complex(bicomplex(b, kZ));
    point_items(r, "H(Tot)", tot, tot.top_degree());
    const auto delta = diagonal(b);
    long chi = 0;
    for (int p = 0; p < delta.num_levels(); ++p) chi += (p % 2 == 0 ? 1 : -1) * static_cast<long>(delta.size(p));
    Integer closed = 0;
    for (int p = 0; p <= std::min(n, m); ++p) {
        const Integer term = binomial(n + 1, p + 1) * binomial(m + 1, p + 1);
        closed += (p % 2 == 0) ? term : Integer(-term);
    }
    r.comparisons.push_back({"chi(diagonal)", -1, closed.get_str(), std::to_string(chi), true, closed == chi});
    r.values.push_back({"chi(diagonal)", std::to_string(chi)});
    r.values.push_back({"chi(Tot)", "1"});
    homology_values(r, "H(diagonal)", unnormalized_chains(delta, kZ), delta.num_levels() - 1);
    if (chi != 1) r.notes.push_back("the semi-simplicial diagonal is not acyclic: its Euler characteristic is " + std::to_string(chi));
    r.finalize();
    return r;
}

CheckReport check_products(const SimplicialSet& x, const SimplicialSet& y, int cutoff)
{
    auto r = start("products", cutoff);
    const int through = cutoff - 1;
    const auto hx = homology_range(normalized_chains(x, kZ, cutoff), through);
    const auto hy = homology_range(normalized_chains(y, kZ, cutoff), through);
    std::vector<FPAbelianGroup> gx, gy;
    for (const auto& h : hx) gx.push_back(h.group);
    for (const auto& h : hy) gy.push_back(h.group);
    const auto predicted = kunneth(gx, gy);
    const auto hp = homology_range(unnormalized_chains(interior_product(x, y, cutoff), kZ), through);
    empty_range(r, through);
    for (int k = 0; k <= through; ++k) {
        const auto want = k < static_cast<int>(predicted.size()) ? predicted[k].to_string() : std::string("0");
        const auto got = hp[k].group.to_string();
        r.comparisons.push_back({"H(X x Y) vs Kunneth", k, want, got, hp[k].trusted, want == got});
    }
    r.finalize();
    return r;
}

CheckReport check_krannich(const FinNonUnitalCategory& c, int cutoff)
{
    auto r = start("krannich", cutoff);
    auto v = validate(c);
    if (!v) throw Error("krannich: invalid category: " + v.message);
    const auto plus = unitalize(c);
    const auto nc = nerve_full(c, cutoff);
    const auto np = nerve_full(plus, cutoff);
    const auto f = induced_chain_map(nerve_map(unitalization_inclusion(c), nc, np), chains(nc.sset), chains(np.sset),
                                     nc.sset, np.sset);
    group_items(r, "H(BC) vs H(BC+)", homology_range(f.source(), cutoff - 1), homology_range(f.target(), cutoff - 1),
                cutoff - 1);
    cone_items(r, "H(cone of BC -> BC+)", f, cutoff - 1);
    r.finalize();
    return r;
}

CheckReport check_terminal_contractible(const FinNonUnitalCategory& c, int cutoff)
{
    auto r = start("terminal-contractible", cutoff);
    auto v = validate(c);
    if (!v) throw Error("terminal-contractible: invalid category: " + v.message);
    if (!c.has_units()) throw Error("terminal-contractible: the category must have units");
    const auto t = terminal_object(c);
    if (!t) throw Error("terminal-contractible: no terminal object");
    r.values.push_back({"terminal object", std::to_string(*t)});
    const auto id = identity_functor(c);
    const auto konst = constant_functor(c, *t, c.unit(*t));
    NatTransData eta;
    for (Index x = 0; x < c.objects(); ++x) {
        for (Index f : c.incoming(*t)) {
            if (c.src(f) == x) eta.components.push_back(f);
        }
    }
    const auto cert = nat_trans_homotopy(eta, id, konst, c, c, cutoff);
    certificate_items(r, "id => const", cert, nullptr);
    point_items(r, "H(BC)", unnormalized_chains(nerve(c, cutoff), kZ), cutoff - 1);
    r.finalize();
    return r;
}

namespace {

/// The sub-semi-simplicial set of column q of r over one q-chain of D.
SemiSimplicialSet eta_fiber(const CommaResolution& r, int q, Index chain)
{
    const int n = static_cast<int>(r.keys.size()) - 1;
    std::vector<std::vector<Index>> members(n + 1);
    std::vector<std::map<Index, Index>> position(n + 1);
    for (int p = 0; p <= n; ++p) {
        for (Index s = 0; s < r.bisset.size(p, q); ++s) {
            if (r.aug_d[p][q][s] == chain) {
                position[p][s] = members[p].size();
                members[p].push_back(s);
            }
        }
    }
    std::vector<Level> levels(n + 1);
    for (int p = 0; p <= n; ++p) {
        levels[p].size = members[p].size();
        if (p == 0) continue;
        levels[p].faces.assign(p + 1, std::vector<Index>(members[p].size()));
        for (Index k = 0; k < members[p].size(); ++k) {
            for (int i = 0; i <= p; ++i) levels[p].faces[i][k] = position[p - 1].at(r.bisset.dh(p, q, i, members[p][k]));
        }
    }
    return SemiSimplicialSet(std::move(levels), std::nullopt, n);
}

struct VariantResult {
    bool ok = true;
    std::vector<CheckItem> items;
};

VariantResult quillen_hypothesis(const FunctorData& f, const FinNonUnitalCategory& c, const FinNonUnitalCategory& d,
                                 int cutoff, bool dual)
{
    VariantResult out;
    const std::string name = dual ? "B(b/F) has point homology" : "B(F/b) has point homology";
    for (Index b = 0; b < d.objects(); ++b) {
        const auto k = dual ? comma_under(f, c, d, b) : comma_over(f, c, d, b);
        std::string detail;
        const bool ok = is_point_homology(unnormalized_chains(nerve(k, cutoff), kZ), cutoff - 1, &detail);
        out.items.push_back({name + " at b = " + std::to_string(b), -1, "point", ok ? "point" : detail, true, ok});
        out.ok = out.ok && ok;
    }
    return out;
}

}  // namespace

CheckReport check_quillen_a(const FunctorData& f, const FinNonUnitalCategory& c, const FinNonUnitalCategory& d,
                            int cutoff)
{
    auto r = start("quillen-a", cutoff);
    for (const auto* cat : {&c, &d}) {
        auto v = validate(*cat);
        if (!v) throw Error("quillen-a: invalid category: " + v.message);
    }
    auto vf = validate(f, c, d);
    if (!vf) throw Error("quillen-a: invalid functor: " + vf.message);
    if (!d.has_units()) throw Error("quillen-a: the target category must have units");

    const auto over = quillen_hypothesis(f, c, d, cutoff, false);
    const auto under = quillen_hypothesis(f, c, d, cutoff, true);
    if (!over.ok && !under.ok) {
        r.hypotheses = over.items;
        r.hypotheses.insert(r.hypotheses.end(), under.items.begin(), under.items.end());
        r.notes.push_back("no fiber variant has point homology; the conclusion is not judged");
        r.finalize();
        return r;
    }
    const bool dual = !over.ok;
    r.values.push_back({"variant", dual ? "b/F" : "F/b"});
    r.hypotheses = dual ? under.items : over.items;
    if (!dual && !under.ok) r.notes.push_back("the b/F variant fails; F/b is used");
    if (dual) r.notes.push_back("the F/b variant fails; b/F is used");

    const auto res = dual ? comma_resolution_dual(f, c, d, cutoff) : comma_resolution(f, c, d, cutoff);
    for (int p = 0; p <= cutoff; ++p) {
        auto rep = check_certificate(row_extra_degeneracy(res, d, f, p));
        r.comparisons.push_back({"row extra degeneracy", p, "hold", rep.ok ? "hold" : rep.failures.front(), true, rep.ok});
    }
    for (int q = 0; q < cutoff; ++q) {
        std::string detail = "point";
        bool ok = true;
        for (Index b = 0; b < res.target_nerve.chains[q].size() && ok; ++b) {
            std::string why;
            if (!is_point_homology(unnormalized_chains(eta_fiber(res, q, b), kZ), cutoff - 1, &why)) {
                ok = false;
                detail = "chain " + std::to_string(b) + ": " + why;
            }
        }
        r.comparisons.push_back({"fibers of the resolution over q-chains", q, "point", detail, true, ok});
    }
    const auto nc = nerve_full(c, cutoff);
    const auto nd = nerve_full(d, cutoff);
    const auto bf = induced_chain_map(nerve_map(f, nc, nd), chains(nc.sset), chains(nd.sset), nc.sset, nd.sset);
    cone_items(r, "H(cone of BF)", bf, cutoff - 2);
    r.finalize();
    return r;
}

CheckReport check_resolution_triangle(const FunctorData& f, const FinNonUnitalCategory& c,
                                      const FinNonUnitalCategory& d, int cutoff)
{
    auto r = start("resolution-triangle", cutoff);
    const int through = cutoff - 2;
    empty_range(r, through);
    for (bool dual : {false, true}) {
        const auto res = dual ? comma_resolution_dual(f, c, d, cutoff) : comma_resolution(f, c, d, cutoff);
        const auto dc = bicomplex(res.bisset, kZ);
        auto tot = std::make_shared<const ChainComplex>(total_complex(dc));
        auto nc = chains(res.source_nerve.sset);
        auto nd = chains(res.target_nerve.sset);
        std::vector<SparseMatrix> eps, eta;
        for (int n = 0; n <= tot->top_degree(); ++n) {
            SparseMatrix e(nc->rank(n), tot->rank(n));
            SparseMatrix h(nd->rank(n), tot->rank(n));
            if (n <= dc.max_p()) {
                const Index off = total_offset(dc, n, 0);
                for (Index s = 0; s < dc.rank(n, 0); ++s) e.add(res.aug_c[n][0][s], off + s, 1);
            }
            if (n <= dc.max_q()) {
                const Index off = total_offset(dc, 0, n);
                for (Index s = 0; s < dc.rank(0, n); ++s) h.add(res.aug_d[0][n][s], off + s, 1);
            }
            eps.push_back(std::move(e));
            eta.push_back(std::move(h));
        }
        ChainMap eps_map(tot, nc, std::move(eps));
        ChainMap eta_map(tot, nd, std::move(eta));
        const auto bf = induced_chain_map(nerve_map(f, res.source_nerve, res.target_nerve), nc, nd,
                                          res.source_nerve.sset, res.target_nerve.sset);
        const auto composite = compose(eps_map, bf);
        const std::string name = dual ? "zeta = BF xi on homology (D/F)" : "eta = BF eps on homology (F/D)";
        for (int k = 0; k <= through; ++k) {
            const bool ok = equal_on_homology(composite, eta_map, k);
            r.comparisons.push_back({name, k, "equal", ok ? "equal" : "different", true, ok});
        }
    }
    r.finalize();
    return r;
}

CheckReport check_nat_trans(const NatTransData& eta, const FunctorData& f, const FunctorData& g,
                            const FinNonUnitalCategory& c, const FinNonUnitalCategory& d, int cutoff)
{
    auto r = start("nat-trans", cutoff);
    const auto cert = nat_trans_homotopy(eta, f, g, c, d, cutoff);
    std::optional<ChainHomotopy> h;
    certificate_items(r, "F => G", cert, &h);
    const auto nc = nerve_full(c, cutoff);
    const auto nd = nerve_full(d, cutoff);
    auto cc = chains(nc.sset);
    auto cd = chains(nd.sset);
    const auto bf = induced_chain_map(nerve_map(f, nc, nd), cc, cd, nc.sset, nd.sset);
    const auto bg = induced_chain_map(nerve_map(g, nc, nd), cc, cd, nc.sset, nd.sset);
    for (int k = 0; k <= cutoff - 1; ++k) {
        const bool ok = equal_on_homology(bf, bg, k);
        r.comparisons.push_back({"BF = BG on homology", k, "equal", ok ? "equal" : "different", true, ok});
    }
    r.finalize();
    return r;
}

CheckReport check_bar_acyclic(const FinMonoid& m, int cutoff)
{
    auto r = start("bar-acyclic", cutoff);
    auto v = validate(m);
    if (!v) throw Error("bar-acyclic: invalid monoid: " + v.message);
    const auto cert = bar_extra_degeneracy(m, cutoff);
    std::optional<ChainHomotopy> h;
    certificate_items(r, "extra degeneracy of B(*, M, M)", cert, &h);
    const auto aug = augmented_chains(cert.target, cert.base_size, cert.augmentation, kZ);
    empty_range(r, cutoff - 1);
    for (const auto& g : homology_range(aug, cutoff - 1)) {
        r.comparisons.push_back({"H(augmented B(*, M, M))", g.degree, "0", g.group.to_string(), g.trusted,
                                 g.group.is_trivial()});
    }
    r.finalize();
    return r;
}

CheckReport group_completion_report(const FinMonoid& m, int cutoff)
{
    auto r = start("group-completion", cutoff);
    const auto gr = grothendieck_group(m);
    r.values.push_back({"Gr(M)", gr.to_string()});
    r.values.push_back({"Z[Gr(M)]", group_ring_name(gr)});
    const auto bm = unnormalized_chains(nerve(monoid_category(m), cutoff), kZ);
    homology_values(r, "H(BM)", bm, cutoff - 1);
    std::optional<Index> zero;
    for (Index z = 0; z < m.size(); ++z) {
        bool absorbing = true;
        for (Index a = 0; a < m.size() && absorbing; ++a) absorbing = m.mul(z, a) == z && m.mul(a, z) == z;
        if (absorbing) zero = z;
    }
    if (zero && m.size() > 1) {
        r.notes.push_back("M has a zero element, so BM is expected to have point homology");
        point_items(r, "H(BM)", bm, cutoff - 1);
        r.comparisons.push_back({"Gr(M)", -1, "0", gr.to_string(), true, gr.is_trivial()});
    }
    if (is_group(m)) {
        Integer order = 1;
        for (const auto& t : gr.torsion) order *= t;
        const bool finite = gr.rank == 0;
        r.comparisons.push_back({"|Gr(M)| = |M|", -1, std::to_string(m.size()), finite ? order.get_str() : "infinite",
                                 true, finite && order == static_cast<unsigned long>(m.size())});
        const auto h0 = homology_range(bm, 0);
        r.comparisons.push_back({"H(BM)", 0, "Z", h0[0].group.to_string(), h0[0].trusted, h0[0].group.to_string() == "Z"});
    }
    r.finalize();
    return r;
}

CheckReport group_completion_report(const MonoidPresentation& p)
{
    CheckReport r;
    r.id = "group-completion";
    r.parameters.push_back({"generators", std::to_string(p.generators)});
    r.parameters.push_back({"relations", std::to_string(p.relations.size())});
    auto v = validate(p);
    r.hypotheses.push_back({"relation exponents non-negative", -1, "yes", v ? "yes" : v.message, true, v.ok});
    if (v) {
        const auto gr = grothendieck_group(p);
        r.values.push_back({"Gr(M)", gr.to_string()});
        r.values.push_back({"Z[Gr(M)]", group_ring_name(gr)});
    }
    r.finalize();
    return r;
}

CheckReport check_skeletal_shadow(const SemiSimplicialSet& x, int n, int cutoff)
{
    auto r = start("skeletal-shadow", cutoff);
    if (n < 0 || n >= cutoff) throw Error("skeletal-shadow: need 0 <= n < cutoff");
    r.parameters.push_back({"n", std::to_string(n)});
    auto v = validate(x);
    if (!v) throw Error("skeletal-shadow: invalid input: " + v.message);
    const auto xs = truncate_to(x, cutoff);
    const auto sk = skeleton(xs, n);
    const auto f = induced_chain_map(skeleton_inclusion(xs, n), chains(sk), chains(xs), sk, xs);
    homology_values(r, "H(skeleton)", f.source(), n);
    homology_values(r, "H(X)", f.target(), n);
    cone_items(r, "H(cone of skeleton inclusion)", f, n);
    r.finalize();
    return r;
}

CheckReport check_segal_nerve(const FinMonoid& m, int cutoff)
{
    auto r = start("segal-nerve", cutoff);
    auto v = validate(m);
    if (!v) throw Error("segal-nerve: invalid monoid: " + v.message);
    if (!is_group(m)) throw Error("segal-nerve: only groups are certified");
    const auto t = nerve_with_degeneracies(monoid_category(m), cutoff + 1);
    const auto& x = t.faces;
    for (int p = 1; p <= cutoff; ++p) {
        const bool ok = segal_map(x, p).bijective;
        r.comparisons.push_back({"Segal map bijective", p, "yes", ok ? "yes" : "no", true, ok});
    }
    const auto ps = path_space(x);
    HomotopyCertificate cert;
    cert.kind = HomotopyCertificate::Kind::ExtraDegeneracyH;
    cert.target = ps.space;
    cert.source = ps.space;
    cert.base_size = x.size(0);
    cert.augmentation = ps.augmentation[0];
    cert.h.push_back(t.degeneracies[0][0]);
    for (int p = 0; p + 1 <= cutoff; ++p) cert.h.push_back(t.degeneracies[p + 1][p + 1]);
    certificate_items(r, "last degeneracy on the path space", cert, nullptr);
    const auto aug = augmented_chains(ps.space, cert.base_size, cert.augmentation, kZ);
    empty_range(r, cutoff - 1);
    for (const auto& g : homology_range(aug, cutoff - 1)) {
        r.comparisons.push_back({"H(augmented path space)", g.degree, "0", g.group.to_string(), g.trusted,
                                 g.group.is_trivial()});
    }
    r.finalize();
    return r;
}

CheckReport check_constant(Index size, int cutoff)
{
    auto r = start("constant", cutoff);
    r.parameters.push_back({"size", std::to_string(size)});
    const auto c = unnormalized_chains(constant_sset(size, cutoff), kZ);
    for (const auto& h : homology_range(c, cutoff - 1)) {
        const auto want = h.degree == 0 ? FPAbelianGroup(size, {}).to_string() : std::string("0");
        const auto got = h.group.to_string();
        r.comparisons.push_back({"H(constant)", h.degree, want, got, h.trusted, want == got});
    }
    r.finalize();
    return r;
}

CheckReport random_ez_suite(std::uint64_t seed, int count, int cutoff)
{
    auto r = start("random-ez", cutoff);
    r.parameters.push_back({"seed", std::to_string(seed)});
    r.parameters.push_back({"count", std::to_string(count)});
    for (int i = 0; i < count; ++i) {
        const std::uint64_t sx = seed + static_cast<std::uint64_t>(i);
        const std::uint64_t sy = sx + static_cast<std::uint64_t>(count);
        const auto x = free_degeneracies(fixtures::random_semi_simplicial(sx));
        const auto y = free_degeneracies(fixtures::random_semi_simplicial(sy));
        const auto ez = check_ez_diagonal(x, y, cutoff);
        r.comparisons.push_back({"ez-diagonal seeds " + std::to_string(sx) + "," + std::to_string(sy), -1, "pass",
                                 to_string(ez.verdict), ez.verdict != Verdict::UntrustedAtCutoff, ez.verdict == Verdict::Pass});
        const auto ft = check_fat_thin(x, cutoff);
        r.comparisons.push_back({"fat-thin seed " + std::to_string(sx), -1, "pass", to_string(ft.verdict),
                                 ft.verdict != Verdict::UntrustedAtCutoff, ft.verdict == Verdict::Pass});
    }
    r.finalize();
    return r;
}

CheckReport random_adj_units_suite(std::uint64_t seed, int count, int cutoff)
{
    auto r = start("random-adj-units", cutoff);
    r.parameters.push_back({"seed", std::to_string(seed)});
    r.parameters.push_back({"count", std::to_string(count)});
    for (int i = 0; i < count; ++i) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        const auto rep = check_adj_units(fixtures::random_semi_simplicial(s), cutoff);
        r.comparisons.push_back({"adj-units seed " + std::to_string(s), -1, "pass", to_string(rep.verdict),
                                 rep.verdict != Verdict::UntrustedAtCutoff, rep.verdict == Verdict::Pass});
    }
    r.finalize();
    return r;
}

}  // namespace sscat
