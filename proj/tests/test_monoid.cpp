#include <doctest.h>

#include "sscat/chain.hpp"
#include "sscat/monoid.hpp"

using namespace sscat;

TEST_CASE("monoid fixtures are valid")
{
    CHECK(validate(trivial_monoid()));
    CHECK(validate(cyclic_group_monoid(3)));
    CHECK(validate(absorbing_monoid()));
    CHECK(is_group(cyclic_group_monoid(4)));
    CHECK_FALSE(is_group(absorbing_monoid()));
    FinMonoid bad{{{0, 1}, {0, 1}}, 0};
    CHECK_FALSE(validate(bad));
}

TEST_CASE("bar construction with point actions is the nerve")
{
    for (const auto& m : {cyclic_group_monoid(2), cyclic_group_monoid(3), absorbing_monoid()}) {
        auto pt_r = point_action(m, MonoidAction::Side::Right);
        auto pt_l = point_action(m, MonoidAction::Side::Left);
        CHECK(bar_construction(pt_r, m, pt_l, 4) == nerve(monoid_category(m), 4));
    }
}

TEST_CASE("bar construction sizes and extra degeneracy")
{
    auto z2 = cyclic_group_monoid(2);
    auto b = bar_construction(point_action(z2, MonoidAction::Side::Right), z2,
                              regular_action(z2, MonoidAction::Side::Left), 5);
    CHECK(validate(b));
    for (int p = 0; p <= 5; ++p) CHECK(b.size(p) == (Index{1} << (p + 1)));
    for (const auto& m : {trivial_monoid(), z2, cyclic_group_monoid(3), absorbing_monoid()}) {
        auto cert = bar_extra_degeneracy(m, 4);
        CHECK(check_certificate(cert).ok);
        auto h = chain_homotopy_from_certificate(cert, Ring::integers());
        CHECK_FALSE(h.first_failure(chain_homotopy_range(cert)).has_value());
    }
}

TEST_CASE("grothendieck groups")
{
    MonoidPresentation nat{1, {}};
    CHECK(grothendieck_group(nat) == FPAbelianGroup(1, {}));
    CHECK(group_ring_name(grothendieck_group(nat)) == "Z[t,t^-1]");
    MonoidPresentation n2{2, {{{1, 0}, {0, 1}}}};
    CHECK(grothendieck_group(n2) == FPAbelianGroup(1, {}));
    CHECK(grothendieck_group(MonoidPresentation{3, {}}) == FPAbelianGroup(3, {}));
    CHECK(grothendieck_group(absorbing_monoid()).is_trivial());
    CHECK(group_ring_name(grothendieck_group(absorbing_monoid())) == "Z");
    CHECK(grothendieck_group(cyclic_group_monoid(6)) == FPAbelianGroup(0, {Integer(6)}));
    CHECK(group_ring_name(grothendieck_group(cyclic_group_monoid(2))) == "Z[Z/2]");
    FinMonoid noncomm{{{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0};  // left-zero semigroup plus unit
    REQUIRE(validate(noncomm));
    CHECK_THROWS_AS(grothendieck_group(noncomm), Error);
    CHECK_FALSE(validate(MonoidPresentation{1, {{{-1}, {0}}}}));
}
