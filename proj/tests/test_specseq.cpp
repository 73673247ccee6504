#include <doctest.h>

#include "sscat/category.hpp"
#include "sscat/specseq.hpp"

using namespace sscat;

namespace {

/// Homology of column s (the dv direction) as an independent E^1 oracle.
std::vector<Index> column_betti(const DoubleComplex& d, int s)
{
    std::vector<Index> ranks;
    std::vector<SparseMatrix> bd(d.max_q() + 1);
    for (int q = 0; q <= d.max_q(); ++q) {
        ranks.push_back(d.rank(s, q));
        if (q > 0) bd[q] = d.dv[s][q];
    }
    ChainComplex c(d.ring, ranks, bd);
    return betti_numbers(c, d.max_q());
}

void check_all(const DoubleComplex& d)
{
    const auto tot = total_complex(d);
    for (auto o : {Filtration::Columns, Filtration::Rows}) {
        auto pages = spectral_sequence(d, o, 20);
        REQUIRE(pages.size() >= 2);
        CHECK_FALSE(check_page_invariants(pages).has_value());
        CHECK_FALSE(check_d1(d, pages[1]).has_value());
        CHECK(pages.back().stable);
        CHECK(check_convergence(pages, tot).ok);
        for (std::size_t k = 1; k < pages.size(); ++k) {
            for (int s = 0; s <= pages[k].max_s(); ++s) {
                for (int t = 0; t <= pages[k].max_t(); ++t) CHECK(pages[k].dims[s][t] <= pages[k - 1].dims[s][t]);
            }
        }
        if (o == Filtration::Columns) {
            for (int s = 0; s <= d.max_p(); ++s) {
                auto b = column_betti(d, s);
                for (int t = 0; t <= d.max_q(); ++t) CHECK(pages[1].dims[s][t] == b[t]);
            }
        }
    }
}

}  // namespace

TEST_CASE("interval times interval over F2")
{
    auto i = standard_semi_simplex(1);
    auto d = bicomplex(exterior_product(i, i), Ring::prime_field(2));
    auto pages = spectral_sequence(d, Filtration::Columns, 10);
    REQUIRE(pages.size() == 3);
    CHECK(pages[1].dims == std::vector<std::vector<Index>>{{2, 0}, {1, 0}});
    CHECK(pages[2].dims == std::vector<std::vector<Index>>{{1, 0}, {0, 0}});
    CHECK(pages[2].stable);
    auto conv = check_convergence(pages, total_complex(d));
    CHECK(conv.ok);
    CHECK(conv.degrees[0].e_infinity == 1);
    CHECK(conv.degrees[1].e_infinity == 0);
    check_all(d);
}

TEST_CASE("torus from two circles over Q")
{
    auto c = boundary_semi_simplex(2);
    auto d = bicomplex(exterior_product(c, c), Ring::rationals());
    auto pages = spectral_sequence(d, Filtration::Columns, 10);
    const auto& e2 = pages[2];
    CHECK(e2.dim(0, 0) == 1);
    CHECK(e2.dim(1, 0) == 1);
    CHECK(e2.dim(0, 1) == 1);
    CHECK(e2.dim(1, 1) == 1);
    for (std::size_t k = 2; k < pages.size(); ++k) {
        for (const auto& row : pages[k].differential_rank) {
            for (Index rk : row) CHECK(rk == 0);
        }
    }
    auto conv = check_convergence(pages, total_complex(d));
    CHECK(conv.ok);
    CHECK(conv.degrees[0].homology == 1);
    CHECK(conv.degrees[1].homology == 2);
    CHECK(conv.degrees[2].homology == 1);
    check_all(d);
    check_all(bicomplex(exterior_product(c, c), Ring::prime_field(3)));
}

TEST_CASE("single column degenerates at E1")
{
    auto x = standard_semi_simplex(0);
    auto y = boundary_semi_simplex(3);
    auto d = bicomplex(exterior_product(x, y), Ring::prime_field(5));
    auto pages = spectral_sequence(d, Filtration::Columns, 10);
    REQUIRE(pages.size() == 2);
    CHECK(pages[1].stable);
    CHECK(pages[1].dims[0] == std::vector<Index>{1, 0, 1});
    check_all(d);
}

TEST_CASE("resolution of the identity on [1] converges to a point")
{
    auto c = poset_category(1);
    auto r = comma_resolution(identity_functor(c), c, c, 3);
    for (auto ring : {Ring::prime_field(2), Ring::rationals()}) {
        auto d = bicomplex(r.bisset, ring);
        auto pages = spectral_sequence(d, Filtration::Columns, 10);
        auto conv = check_convergence(pages, total_complex(d));
        CHECK(conv.ok);
        CHECK(conv.degrees[0].e_infinity == 1);
        for (const auto& deg : conv.degrees) {
            if (deg.trusted && deg.n > 0) CHECK(deg.e_infinity == 0);
        }
        check_all(d);
    }
}

TEST_CASE("integer coefficients are rejected")
{
    auto i = standard_semi_simplex(1);
    CHECK_THROWS_AS(spectral_sequence(bicomplex(exterior_product(i, i), Ring::integers()), Filtration::Columns, 3), Error);
}
