#include <doctest.h>

#include "sscat/category.hpp"
#include "sscat/certificate.hpp"
#include "sscat/chain.hpp"

using namespace sscat;

namespace {

FinNonUnitalCategory cyclic_group(Index n)
{
    std::vector<FinNonUnitalCategory::Morphism> m(n, {0, 0});
    std::vector<FinNonUnitalCategory::Composite> comp;
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) comp.push_back({a, b, (a + b) % n});
    }
    return FinNonUnitalCategory(1, m, comp, std::vector<Index>{0});
}

}  // namespace

TEST_CASE("nerve sizes of small categories")
{
    auto p1 = poset_category(1);
    CHECK(validate(p1));
    auto n = nerve(p1, 4);
    for (int p = 0; p <= 4; ++p) CHECK(n.size(p) == static_cast<Index>(p + 2));
    CHECK(validate(n));

    auto z2 = cyclic_group(2);
    auto nz = nerve(z2, 5);
    for (int p = 0; p <= 5; ++p) CHECK(nz.size(p) == (Index{1} << p));
    CHECK(validate(nz));
}

TEST_CASE("nerve with degeneracies is a valid simplicial table")
{
    CHECK(validate(nerve_with_degeneracies(poset_category(2), 4)));
    CHECK(validate(nerve_with_degeneracies(cyclic_group(3), 3)));
}

TEST_CASE("validation catches broken composition")
{
    // two endomorphisms a, b with a a = b, b anything = b, except a b = a (not associative)
    std::vector<FinNonUnitalCategory::Morphism> m{{0, 0}, {0, 0}};
    std::vector<FinNonUnitalCategory::Composite> comp{{0, 0, 1}, {0, 1, 0}, {1, 0, 1}, {1, 1, 1}};
    FinNonUnitalCategory c(1, m, comp);
    CHECK_FALSE(validate(c));

    FinNonUnitalCategory missing(1, m, {{0, 0, 1}});
    CHECK_FALSE(validate(missing));
    CHECK_THROWS_AS(FinNonUnitalCategory(1, m, {{0, 0, 1}, {0, 0, 0}}), Error);
}

TEST_CASE("unitalization adds one unit per object")
{
    std::vector<FinNonUnitalCategory::Morphism> m{{0, 0}};
    FinNonUnitalCategory idem(1, m, {{0, 0, 0}});
    CHECK(validate(idem));
    auto plus = unitalize(idem);
    CHECK(validate(plus));
    CHECK(plus.has_units());
    CHECK(plus.morphisms() == 2);
    CHECK(validate(unitalization_inclusion(idem), idem, plus));
}

TEST_CASE("over and under categories have terminal and initial objects")
{
    auto p2 = poset_category(2);
    auto over = over_category(p2, 1);
    CHECK(validate(over));
    CHECK(over.objects() == 2);
    CHECK(terminal_object(over).has_value());
    auto under = under_category(p2, 1);
    CHECK(validate(under));
    CHECK(under.objects() == 2);
    CHECK_FALSE(terminal_object(discrete_category(2, true)).has_value());

    auto ring = Ring::integers();
    auto h = homology_range(unnormalized_chains(nerve(over, 4), ring), 3);
    CHECK(h[0].group == FPAbelianGroup(1, {}));
    for (int k = 1; k <= 3; ++k) CHECK(h[k].group.is_trivial());
}

TEST_CASE("product category is componentwise")
{
    auto sq = product_category(poset_category(1), poset_category(1));
    CHECK(validate(sq));
    CHECK(sq.objects() == 4);
    CHECK(sq.morphisms() == 9);
    CHECK(terminal_object(sq) == Index{3});
}

TEST_CASE("comma resolution of the identity on [1]")
{
    auto c = poset_category(1);
    auto id = identity_functor(c);
    for (bool dual : {false, true}) {
        auto r = dual ? comma_resolution_dual(id, c, c, 3) : comma_resolution(id, c, c, 3);
        CHECK(validate(r.bisset));
        CHECK(r.bisset.size(0, 0) == 3);
        for (int p = 0; p <= 3; ++p) {
            auto cert = row_extra_degeneracy(r, c, id, p);
            auto rep = check_certificate(cert);
            CHECK_MESSAGE(rep.ok, (rep.failures.empty() ? std::string() : rep.failures.front()));
        }
    }
}

TEST_CASE("resolution faces agree with augmentations")
{
    auto c = poset_category(2);
    auto d = cyclic_group(2);
    auto f = constant_functor(c, 0, 0);
    REQUIRE(validate(f, c, d, true));
    for (bool dual : {false, true}) {
        auto r = dual ? comma_resolution_dual(f, c, d, 3) : comma_resolution(f, c, d, 3);
        REQUIRE(validate(r.bisset));
        const auto& nc = r.source_nerve.sset;
        const auto& nd = r.target_nerve.sset;
        for (int p = 0; p <= 3; ++p) {
            for (int q = 0; q <= 3; ++q) {
                for (Index s = 0; s < r.bisset.size(p, q); ++s) {
                    for (int i = 0; p > 0 && i <= p; ++i) {
                        CHECK(r.aug_c[p - 1][q][r.bisset.dh(p, q, i, s)] == nc.face(p, i, r.aug_c[p][q][s]));
                    }
                    for (int j = 0; q > 0 && j <= q; ++j) {
                        CHECK(r.aug_d[p][q - 1][r.bisset.dv(p, q, j, s)] == nd.face(q, j, r.aug_d[p][q][s]));
                        CHECK(r.aug_c[p][q - 1][r.bisset.dv(p, q, j, s)] == r.aug_c[p][q][s]);
                    }
                }
            }
        }
        for (int p = 0; p <= 3; ++p) CHECK(check_certificate(row_extra_degeneracy(r, d, f, p)).ok);
    }
}

TEST_CASE("natural transformation gives a certified homotopy")
{
    auto c = poset_category(2);
    auto f = constant_functor(c, 0, 0);
    auto g = identity_functor(c);
    NatTransData eta;
    // eta_x : 0 -> x is morphism (0, x), which has index x in the poset listing
    for (Index x = 0; x < 3; ++x) eta.components.push_back(x);
    REQUIRE(validate(eta, f, g, c, c));
    auto cert = nat_trans_homotopy(eta, f, g, c, c, 4);
    auto rep = check_certificate(cert);
    CHECK(rep.ok);
    auto ch = chain_homotopy_from_certificate(cert, Ring::integers());
    CHECK_FALSE(ch.first_failure(chain_homotopy_range(cert)).has_value());

    NatTransData bad{{0, 0, 0}};
    CHECK_FALSE(validate(bad, f, g, c, c));
    CHECK_THROWS_AS(nat_trans_homotopy(bad, f, g, c, c, 3), Error);
}
