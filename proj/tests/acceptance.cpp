// One line per acceptance criterion. All comparisons are exact: homology
// groups by invariant factors, dimensions and Euler characteristics as
// integers, chain identities matrix-exactly. Tolerance 0 throughout.
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sscat/category.hpp"
#include "sscat/certificate.hpp"
#include "sscat/chain.hpp"
#include "sscat/fixtures.hpp"
#include "sscat/io.hpp"
#include "sscat/monoid.hpp"
#include "sscat/simplicial.hpp"
#include "sscat/specseq.hpp"
#include "sscat/sset.hpp"
#include "sscat/theorems.hpp"

using namespace sscat;

namespace {

const Ring kZ = Ring::integers();

struct Outcome {
    std::vector<std::string> failures;
    std::vector<std::string> facts;

    void require(bool ok, const std::string& what)
    {
        if (!ok) failures.push_back(what);
    }
    void pass(const CheckReport& r, const std::string& what)
    {
        if (r.verdict == Verdict::Pass) return;
        std::string detail = what + ": " + to_string(r.verdict);
        for (const auto* list : {&r.hypotheses, &r.comparisons}) {
            for (const auto& i : *list) {
                if (!i.ok) detail += "; " + i.name + " [" + std::to_string(i.degree) + "] got " + i.actual;
            }
        }
        failures.push_back(detail);
    }
};

std::vector<std::string> groups(const ChainComplex& c, int through)
{
    std::vector<std::string> out;
    for (const auto& h : homology_range(c, through)) out.push_back(h.trusted ? h.group.to_string() : "untrusted");
    return out;
}

std::string join(const std::vector<std::string>& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
    return out + ")";
}

std::string value(const CheckReport& r, const std::string& key)
{
    for (const auto& [k, v] : r.values) {
        if (k == key) return v;
    }
    return "<missing>";
}

std::vector<std::pair<std::string, SemiSimplicialSet>> shipped_ssets()
{
    std::vector<std::pair<std::string, SemiSimplicialSet>> out;
    std::set<std::filesystem::path> paths;
    for (const auto& e : std::filesystem::directory_iterator(SSCAT_FIXTURE_DIR)) {
        const auto name = e.path().filename().string();
        if (name.size() > 8 && name.ends_with(".ss.json")) paths.insert(e.path());
    }
    for (const auto& p : paths) {
        out.push_back({p.filename().string(), io::expect<SemiSimplicialSet>(io::load_file(p), "sset")});
    }
    return out;
}

// 1 ---------------------------------------------------------------------------------

Outcome classical()
{
    Outcome o;
    for (int p = 1; p <= 3; ++p) {
        std::vector<std::string> want(p + 1, "0");
        want[0] = "Z";
        want[p] = "Z";
        const auto got = groups(unnormalized_chains(boundary_semi_simplex(p + 1), kZ), p);
        o.require(got == want, "H(boundary of the " + std::to_string(p + 1) + "-simplex) = " + join(got));
    }
    const auto rp2 = groups(unnormalized_chains(fixtures::rp2(), kZ), 2);
    o.require(rp2 == std::vector<std::string>{"Z", "Z/2", "0"}, "H(RP2) = " + join(rp2));
    const auto bz2 = groups(unnormalized_chains(nerve(monoid_category(cyclic_group_monoid(2)), 7), kZ), 5);
    o.require(bz2 == std::vector<std::string>{"Z", "Z/2", "0", "Z/2", "0", "Z/2"}, "H(BZ/2) = " + join(bz2));
    o.facts.push_back("H(RP2) = " + join(rp2) + ", H(BZ/2) = " + join(bz2));
    return o;
}

// 2 ---------------------------------------------------------------------------------

Outcome adj_units()
{
    Outcome o;
    const auto corpus = shipped_ssets();
    o.require(corpus.size() >= 10, "shipped corpus has only " + std::to_string(corpus.size()) + " files");
    for (const auto& [name, x] : corpus) o.pass(check_adj_units(x, 5), name);
    o.pass(random_adj_units_suite(1, 20, 5), "random suite");
    o.facts.push_back(std::to_string(corpus.size()) + " fixtures + 20 random, cutoff 5");
    return o;
}

// 3 ---------------------------------------------------------------------------------

Outcome fat_thin()
{
    Outcome o;
    for (int n = 0; n <= 3; ++n) o.pass(check_fat_thin(standard_simplex(n), 5), "simplex " + std::to_string(n));
    o.pass(check_fat_thin(free_degeneracies(boundary_semi_simplex(2)), 5), "E(boundary2)");
    o.pass(check_fat_thin(free_degeneracies(fixtures::rp2()), 5), "E(RP2)");
    return o;
}

// 4 ---------------------------------------------------------------------------------

Outcome ez_diagonal()
{
    Outcome o;
    const int cutoff = 5;
    for (int n = 0; n <= 2; ++n) {
        for (int m = 0; m <= 2; ++m) {
            o.pass(check_ez_diagonal(standard_simplex(n), standard_simplex(m), cutoff),
                   "simplex " + std::to_string(n) + " x simplex " + std::to_string(m));
        }
    }
    const auto circle = free_degeneracies(boundary_semi_simplex(2));
    const auto torus = check_ez_diagonal(circle, circle, cutoff);
    o.pass(torus, "E(boundary2) x E(boundary2)");
    const auto th = groups(unnormalized_chains(interior_product(circle, circle, cutoff), kZ), 2);
    o.require(th == std::vector<std::string>{"Z", "Z^2", "Z"}, "torus homology " + join(th));
    const auto rp2 = free_degeneracies(fixtures::rp2());
    o.pass(check_ez_diagonal(rp2, rp2, cutoff), "E(RP2) x E(RP2)");
    o.pass(random_ez_suite(1, 20, cutoff), "random suite");

    const auto semi = check_semi_diagonal_euler(1, 1);
    o.pass(semi, "semi-simplicial diagonal");
    o.require(value(semi, "chi(diagonal)") == "3", "chi(diagonal) = " + value(semi, "chi(diagonal)"));
    const auto i = standard_semi_simplex(1);
    const auto tot = groups(total_complex(bicomplex(exterior_product(i, i), kZ)), 2);
    o.require(tot == std::vector<std::string>{"Z", "0", "0"}, "H(Tot) = " + join(tot));
    o.facts.push_back("torus " + join(th) + ", chi(diagonal) = " + value(semi, "chi(diagonal)") + ", H(Tot) = " + join(tot) +
                      ", random suite at cutoff 5");
    return o;
}

// 5 ---------------------------------------------------------------------------------

Outcome products()
{
    Outcome o;
    for (int n = 0; n <= 2; ++n) {
        for (int m = 0; m <= 2; ++m) {
            o.pass(check_products(standard_simplex(n), standard_simplex(m), 5),
                   "simplex " + std::to_string(n) + " x simplex " + std::to_string(m));
        }
    }
    const auto circle = free_degeneracies(boundary_semi_simplex(2));
    o.pass(check_products(circle, circle, 5), "circle x circle");
    const auto rp2 = free_degeneracies(fixtures::rp2());
    const auto r = check_products(rp2, rp2, 5);
    o.pass(r, "RP2 x RP2");
    std::string h3 = "<missing>";
    for (const auto& i : r.comparisons) {
        if (i.degree == 3) h3 = i.actual;
    }
    o.require(h3 == "Z/2", "H_3(RP2 x RP2) = " + h3);
    o.facts.push_back("H_3(RP2 x RP2) = " + h3);
    return o;
}

// 6 ---------------------------------------------------------------------------------

Outcome krannich()
{
    Outcome o;
    const auto cats = fixtures::non_unital_categories();
    o.require(cats.size() >= 5, "only " + std::to_string(cats.size()) + " non-unital fixtures");
    for (const auto& [name, c] : cats) o.pass(check_krannich(c, 5), name);
    o.facts.push_back(std::to_string(cats.size()) + " categories, cutoff 5");
    return o;
}

// 7 ---------------------------------------------------------------------------------

Outcome quillen()
{
    Outcome o;
    for (const auto& fx : fixtures::functor_corpus()) {
        const auto r = check_quillen_a(fx.functor, fx.source, fx.target, 5);
        if (fx.name == "two-points-into-interval") {
            o.require(r.verdict == Verdict::HypothesesNotMet, fx.name + " verdict " + to_string(r.verdict));
        } else {
            o.pass(r, fx.name);
            o.pass(check_resolution_triangle(fx.functor, fx.source, fx.target, 5), fx.name + " triangle");
        }
    }
    return o;
}

// 8 ---------------------------------------------------------------------------------

Outcome group_completion()
{
    Outcome o;
    const auto n = group_completion_report(MonoidPresentation{1, {}});
    o.require(value(n, "Gr(M)") == "Z", "Gr(N) = " + value(n, "Gr(M)"));
    o.require(value(n, "Z[Gr(M)]") == "Z[t,t^-1]", "Z[Gr(N)] = " + value(n, "Z[Gr(M)]"));
    const auto n2 = group_completion_report(MonoidPresentation{2, {{{1, 0}, {0, 1}}}});
    o.require(value(n2, "Gr(M)") == "Z", "Gr(N^2/~) = " + value(n2, "Gr(M)"));
    const auto z = group_completion_report(absorbing_monoid(), 7);
    o.pass(z, "{1, z}");
    o.require(value(z, "Gr(M)") == "0", "Gr({1, z}) = " + value(z, "Gr(M)"));
    const auto bz = groups(unnormalized_chains(nerve(monoid_category(absorbing_monoid()), 7), kZ), 6);
    o.require(bz == std::vector<std::string>{"Z", "0", "0", "0", "0", "0", "0"}, "H(B{1, z}) = " + join(bz));
    for (const auto& [name, m] :
         std::vector<std::pair<std::string, FinMonoid>>{{"Z/2", cyclic_group_monoid(2)},
                                                         {"Z/3", cyclic_group_monoid(3)},
                                                         {"{1, z}", absorbing_monoid()}}) {
        o.pass(check_bar_acyclic(m, 6), "bar " + name);
    }
    o.facts.push_back("Gr(N) = Z, Z[t,t^-1]; Gr(N^2/~) = " + value(n2, "Gr(M)") + "; Gr({1,z}) = " + value(z, "Gr(M)"));
    return o;
}

// 9 ---------------------------------------------------------------------------------

std::vector<Index> e_infinity_totals(const SSPage& p)
{
    std::vector<Index> out(p.max_s() + p.max_t() + 1, 0);
    for (int s = 0; s <= p.max_s(); ++s) {
        for (int t = 0; t <= p.max_t(); ++t) out[s + t] += p.dims[s][t];
    }
    return out;
}

Outcome spectral()
{
    Outcome o;
    const auto i = standard_semi_simplex(1);
    const auto sq = bicomplex(exterior_product(i, i), Ring::prime_field(2));
    const auto pages = spectral_sequence(sq, Filtration::Columns, 10);
    o.require(pages.size() >= 3, "interval square: fewer than 3 pages");
    if (pages.size() >= 3) {
        o.require(pages[1].dims == std::vector<std::vector<Index>>{{2, 0}, {1, 0}}, "interval square E1");
        o.require(pages[2].dims == std::vector<std::vector<Index>>{{1, 0}, {0, 0}}, "interval square E2");
    }
    const auto circle = boundary_semi_simplex(2);
    const auto torus = bicomplex(exterior_product(circle, circle), Ring::rationals());
    const auto tot = total_complex(torus);
    std::vector<std::vector<Index>> totals;
    for (int which = 0; which < 2; ++which) {
        const auto& d = which == 0 ? sq : torus;
        for (auto orient : {Filtration::Columns, Filtration::Rows}) {
            const auto ps = spectral_sequence(d, orient, 20);
            const std::string tag = (which == 0 ? "interval square " : "torus ") + to_string(orient);
            if (auto bad = check_page_invariants(ps)) o.failures.push_back(tag + ": " + *bad);
            if (auto bad = check_d1(d, ps.at(1))) o.failures.push_back(tag + " d1: " + *bad);
            o.require(ps.back().stable, tag + ": not stable");
            o.require(check_convergence(ps, total_complex(d)).ok, tag + ": convergence");
            if (which == 1) totals.push_back(e_infinity_totals(ps.back()));
        }
    }
    const auto betti = betti_numbers(tot, 2);
    o.require(totals.size() == 2 && totals[0] == totals[1], "orientations disagree on E-infinity");
    o.require(!totals.empty() && totals[0] == std::vector<Index>{1, 2, 1} && betti == std::vector<Index>{1, 2, 1},
              "torus E-infinity totals");
    o.facts.push_back("torus E-infinity totals (1, 2, 1) in both orientations");
    return o;
}

// 10 --------------------------------------------------------------------------------

Outcome skeletal()
{
    Outcome o;
    const int cutoff = 5;
    const auto corpus = shipped_ssets();
    for (const auto& [name, x] : corpus) {
        for (int n = 0; n < cutoff; ++n) o.pass(check_skeletal_shadow(x, n, cutoff), name + " n=" + std::to_string(n));
    }
    o.facts.push_back(std::to_string(corpus.size()) + " fixtures, n < 5");
    return o;
}

// 11 --------------------------------------------------------------------------------

Outcome segal()
{
    Outcome o;
    o.pass(check_segal_nerve(cyclic_group_monoid(2), 5), "Z/2");
    o.pass(check_segal_nerve(cyclic_group_monoid(3), 5), "Z/3");
    return o;
}

// 12 --------------------------------------------------------------------------------

/// Weakly increasing vertex list of a simplex of the simplicial n-simplex.
std::vector<Index> vertices_of(const SimplexRef& r, const std::vector<std::vector<std::vector<Index>>>& subsets)
{
    std::vector<Index> v = subsets[r.degree][r.index];
    for (auto it = r.word.indices.rbegin(); it != r.word.indices.rend(); ++it) v.insert(v.begin() + *it, v[*it]);
    return v;
}

void check_d_squared(Outcome& o, const ChainComplex& c, const std::string& name)
{
    for (int p = 2; p <= c.top_degree(); ++p) {
        auto dd = c.boundary(p - 1) * c.boundary(p);
        if (c.ring().kind == Ring::Kind::PrimeField) dd = dd.reduced_mod(c.ring().p);
        o.require(dd.is_zero(), name + ": d d != 0 at " + std::to_string(p));
    }
}

void check_homotopy(Outcome& o, const HomotopyCertificate& cert, const std::string& name)
{
    const auto rep = check_certificate(cert);
    if (!rep.ok) {
        o.failures.push_back(name + ": " + rep.failures.front());
        return;
    }
    try {
        const auto h = chain_homotopy_from_certificate(cert, kZ);
        const auto bad = h.first_failure(chain_homotopy_range(cert));
        o.require(!bad, name + ": chain homotopy identity fails in degree " + std::to_string(bad.value_or(-1)));
    } catch (const Error& e) {
        o.failures.push_back(name + ": " + e.what());
    }
}

Outcome properties()
{
    Outcome o;
    int validated = 0;
    for (const auto& [name, x] : fixtures::semi_simplicial_corpus()) {
        o.require(validate(x).ok, name + " invalid");
        ++validated;
    }
    for (std::uint64_t s = 0; s < 50; ++s) {
        o.require(validate(fixtures::random_semi_simplicial(s)).ok, "random " + std::to_string(s));
        ++validated;
    }
    for (const auto& [name, y] : fixtures::simplicial_corpus()) {
        o.require(validate(y).ok, name + " invalid");
        o.require(validate(enumerate(y, 4)).ok, name + " enumeration invalid");
        ++validated;
    }
    for (const auto& [name, c] : fixtures::non_unital_categories()) {
        o.require(validate(c).ok, name + " invalid");
        o.require(validate(nerve_with_degeneracies(unitalize(c), 3)).ok, name + "+ nerve invalid");
    }

    // normalize_face and apply_degeneracy against vertex sequences
    Index face_checks = 0;
    for (int n = 0; n <= 3; ++n) {
        const auto y = standard_simplex(n);
        const auto subsets = increasing_subsets(n + 1, n);
        const auto e = enumerate_full(y, 3);
        for (int p = 0; p <= 3; ++p) {
            for (const auto& r : e.simplices[p]) {
                const auto v = vertices_of(r, subsets);
                for (int i = 0; p > 0 && i <= p; ++i) {
                    auto w = v;
                    w.erase(w.begin() + i);
                    o.require(vertices_of(normalize_face(y, i, r), subsets) == w, "normalize_face on simplex " + std::to_string(n));
                    ++face_checks;
                }
                for (int j = 0; j <= p; ++j) {
                    auto w = v;
                    w.insert(w.begin() + j, v[j]);
                    o.require(vertices_of(apply_degeneracy(j, r), subsets) == w, "apply_degeneracy on simplex " + std::to_string(n));
                }
            }
        }
    }

    // triangle identities of E -| F
    const int cutoff = 3;
    for (const auto& [name, x] : fixtures::semi_simplicial_corpus()) {
        const auto ex = enumerate_full(free_degeneracies(x), cutoff);
        const auto eex = enumerate_full(free_degeneracies(ex.sset), cutoff);
        const auto eta = unit_map(x, cutoff);
        const auto eps = counit_map(free_degeneracies(x), cutoff);
        for (int p = 0; p <= cutoff; ++p) {
            for (Index s = 0; s < ex.simplices[p].size(); ++s) {
                const auto& r = ex.simplices[p][s];
                const SimplexRef lifted{r.word, r.degree, eta(r.degree, r.index)};
                o.require(eps(p, eex.index_of(lifted)) == s, name + ": counit after E(unit) is not the identity");
            }
        }
    }
    for (const auto& [name, y] : fixtures::simplicial_corpus()) {
        const auto fy = enumerate(y, cutoff);
        const auto composite = compose(unit_map(fy, cutoff), counit_map(y, cutoff));
        o.require(composite == identity_map(fy), name + ": F(counit) after unit is not the identity");
    }

    // d d = 0
    for (const auto& [name, x] : fixtures::semi_simplicial_corpus()) {
        check_d_squared(o, unnormalized_chains(x, kZ), name);
        check_d_squared(o, total_complex(bicomplex(exterior_product(x, standard_semi_simplex(1)), kZ)), name + " x I");
    }
    for (const auto& [name, y] : fixtures::simplicial_corpus()) check_d_squared(o, normalized_chains(y, kZ, 4), name);
    for (std::uint64_t s = 0; s < 20; ++s) {
        check_d_squared(o, unnormalized_chains(fixtures::random_semi_simplicial(s), Ring::prime_field(3)), "random");
    }

    // certificates
    Index certificates = 0;
    for (const auto& m : {cyclic_group_monoid(2), cyclic_group_monoid(3), absorbing_monoid()}) {
        check_homotopy(o, bar_extra_degeneracy(m, 5), "bar extra degeneracy");
        ++certificates;
    }
    for (const auto& fx : fixtures::nat_trans_corpus()) {
        check_homotopy(o, nat_trans_homotopy(fx.eta, fx.f, fx.g, fx.source, fx.target, 4), fx.name);
        ++certificates;
    }
    for (const auto& fx : fixtures::functor_corpus()) {
        for (bool dual : {false, true}) {
            const auto r = dual ? comma_resolution_dual(fx.functor, fx.source, fx.target, 4)
                                : comma_resolution(fx.functor, fx.source, fx.target, 4);
            for (int p = 0; p <= 4; ++p) {
                const auto rep = check_certificate(row_extra_degeneracy(r, fx.target, fx.functor, p));
                o.require(rep.ok, fx.name + " row " + std::to_string(p));
                ++certificates;
            }
        }
    }

    // determinism
    const auto twice = [&](const std::function<CheckReport()>& run, const std::string& name) {
        o.require(io::dump(io::report_json(run())) == io::dump(io::report_json(run())), name + " not deterministic");
    };
    twice([] { return random_ez_suite(9, 3, 4); }, "random-ez");
    twice([] { return random_adj_units_suite(9, 5, 4); }, "random-adj-units");
    twice([] { return check_products(free_degeneracies(fixtures::rp2()), standard_simplex(1), 4); }, "products");
    twice([] { return group_completion_report(cyclic_group_monoid(3), 5); }, "group-completion");

    o.facts.push_back(std::to_string(validated) + " sets validated, " + std::to_string(face_checks) + " face checks, " +
                      std::to_string(certificates) + " certificates");
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"classical fixtures", classical},
        {"adjunction unit", adj_units},
        {"fat and thin realizations", fat_thin},
        {"diagonal of bisimplicial sets", ez_diagonal},
        {"products", products},
        {"unitalization", krannich},
        {"Quillen A and resolution triangle", quillen},
        {"group completion and bar acyclicity", group_completion},
        {"spectral sequence", spectral},
        {"skeletal connectivity", skeletal},
        {"Segal condition and path space", segal},
        {"property suites", properties},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = o.failures.empty();
        failed += ok ? 0 : 1;
        std::ostringstream line;
        line << "criterion " << (k + 1) << " " << (ok ? "PASS" : "FAIL") << " " << criteria[k].first
             << " [exact, tolerance 0]";
        for (const auto& f : o.facts) line << " " << f << ";";
        line << " (" << std::fixed;
        line.precision(2);
        line << secs << "s)";
        std::cout << line.str() << "\n";
        for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
    return failed == 0 ? 0 : 1;
}
