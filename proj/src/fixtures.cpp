#include "sscat/fixtures.hpp"

#include <algorithm>
#include <random>

namespace sscat::fixtures {

namespace {

SemiSimplicialSet from_faces(const std::vector<Index>& sizes, const std::vector<std::vector<std::vector<Index>>>& faces)
{
    std::vector<Level> levels;
    for (std::size_t p = 0; p < sizes.size(); ++p) {
        Level lv;
        lv.size = sizes[p];
        if (p > 0) lv.faces = faces[p - 1];
        levels.push_back(std::move(lv));
    }
    return SemiSimplicialSet(std::move(levels), static_cast<int>(sizes.size()) - 1, std::nullopt);
}

/// Triangles given as (d0, d1, d2) edge triples on a one-vertex set of three loops.
SemiSimplicialSet one_vertex_surface(const std::vector<std::vector<Index>>& triangles)
{
    std::vector<std::vector<Index>> tri(3, std::vector<Index>(triangles.size()));
    for (std::size_t t = 0; t < triangles.size(); ++t) {
        for (int i = 0; i < 3; ++i) tri[i][t] = triangles[t][i];
    }
    return from_faces({1, 3, triangles.size()}, {{{0, 0, 0}, {0, 0, 0}}, tri});
}

}  // namespace

SemiSimplicialSet rp2()
{
    return from_faces({2, 3, 2}, {{{0, 0, 1}, {0, 0, 0}}, {{0, 2}, {1, 2}, {0, 1}}});
}

// edges a = 0, b = 1, c = 2
SemiSimplicialSet torus() { return one_vertex_surface({{1, 2, 0}, {0, 2, 1}}); }
SemiSimplicialSet klein_bottle() { return one_vertex_surface({{1, 2, 0}, {0, 1, 2}}); }

SemiSimplicialSet loop() { return from_faces({1, 1}, {{{0}, {0}}}); }
SemiSimplicialSet wedge_of_circles() { return from_faces({1, 2}, {{{0, 0}, {0, 0}}}); }
SemiSimplicialSet discrete(Index n) { return from_faces({n}, {}); }

std::vector<std::pair<std::string, SemiSimplicialSet>> semi_simplicial_corpus()
{
    std::vector<std::pair<std::string, SemiSimplicialSet>> out{
        {"boundary2", boundary_semi_simplex(2)},
        {"boundary3", boundary_semi_simplex(3)},
        {"boundary4", boundary_semi_simplex(4)},
        {"klein", klein_bottle()},
        {"loop", loop()},
        {"point", standard_semi_simplex(0)},
        {"rp2", rp2()},
        {"simplex1", standard_semi_simplex(1)},
        {"simplex2", standard_semi_simplex(2)},
        {"simplex3", standard_semi_simplex(3)},
        {"torus", torus()},
        {"two-points", discrete(2)},
        {"wedge", wedge_of_circles()},
    };
    return out;
}

std::vector<std::pair<std::string, SimplicialSet>> simplicial_corpus()
{
    return {
        {"point", simplicial_point()},
        {"simplex1", standard_simplex(1)},
        {"simplex2", standard_simplex(2)},
        {"simplex3", standard_simplex(3)},
        {"E-boundary2", free_degeneracies(boundary_semi_simplex(2))},
        {"E-rp2", free_degeneracies(rp2())},
        {"nerve-poset1", present(nerve_with_degeneracies(poset_category(1), 4))},
    };
}

FinNonUnitalCategory idempotent() { return FinNonUnitalCategory(1, {{0, 0}}, {{0, 0, 0}}); }

FinNonUnitalCategory composable_pair()
{
    return FinNonUnitalCategory(3, {{0, 1}, {1, 2}, {0, 2}}, {{0, 1, 2}});
}

FinNonUnitalCategory nilpotent()
{
    return FinNonUnitalCategory(1, {{0, 0}, {0, 0}}, {{0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 1}});
}

FinNonUnitalCategory cyclic_no_units(Index n)
{
    std::vector<FinNonUnitalCategory::Morphism> m(n, {0, 0});
    std::vector<FinNonUnitalCategory::Composite> comp;
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) comp.push_back({a, b, (a + b) % n});
    }
    return FinNonUnitalCategory(1, std::move(m), comp);
}

FinNonUnitalCategory parallel_arrows() { return FinNonUnitalCategory(2, {{0, 1}, {0, 1}}, {}); }

std::vector<std::pair<std::string, FinNonUnitalCategory>> non_unital_categories()
{
    return {
        {"composable-pair", composable_pair()},
        {"cyclic2-no-units", cyclic_no_units(2)},
        {"discrete3", discrete_category(3, false)},
        {"idempotent", idempotent()},
        {"nilpotent", nilpotent()},
        {"parallel-arrows", parallel_arrows()},
    };
}

std::vector<FunctorFixture> functor_corpus()
{
    std::vector<FunctorFixture> out;
    // poset [1] lists its morphisms as (0,0), (0,1), (1,1)
    out.push_back({"point-to-1-in-interval", poset_category(0), poset_category(1), FunctorData{{1}, {2}}});
    out.push_back({"interval-to-point", poset_category(1), poset_category(0), FunctorData{{0, 0}, {0, 0, 0}}});
    for (int n = 0; n <= 2; ++n) {
        auto c = poset_category(n);
        out.push_back({"identity-poset" + std::to_string(n), c, c, identity_functor(c)});
    }
    out.push_back({"two-points-into-interval", discrete_category(2, true), poset_category(1), FunctorData{{0, 1}, {0, 2}}});
    return out;
}

std::vector<NatTransFixture> nat_trans_corpus()
{
    std::vector<NatTransFixture> out;
    auto i1 = poset_category(1);
    out.push_back({"identity-to-top", i1, i1, identity_functor(i1), constant_functor(i1, 1, 2), NatTransData{{1, 2}}});
    out.push_back({"identity-self", i1, i1, identity_functor(i1), identity_functor(i1), NatTransData{{0, 2}}});
    auto i2 = poset_category(2);
    // (0,0) (0,1) (0,2) (1,1) (1,2) (2,2)
    out.push_back({"bottom-to-identity", i2, i2, constant_functor(i2, 0, 0), identity_functor(i2), NatTransData{{0, 1, 2}}});
    return out;
}

SemiSimplicialSet random_semi_simplicial(std::uint64_t seed, Index max_per_level, int max_dim)
{
    std::mt19937_64 rng(seed);
    std::vector<Level> levels;
    Level l0;
    l0.size = 1 + rng() % max_per_level;
    levels.push_back(l0);
    for (int p = 1; p <= max_dim; ++p) {
        const Level& below = levels[p - 1];
        // All face tuples (x_0..x_p) with d_i x_j = d_{j-1} x_i for i < j.
        std::vector<std::vector<Index>> tuples;
        std::vector<Index> cur;
        auto extend = [&](auto&& self) -> void {
            const int j = static_cast<int>(cur.size());
            if (j == p + 1) {
                tuples.push_back(cur);
                return;
            }
            for (Index x = 0; x < below.size; ++x) {
                bool ok = true;
                for (int i = 0; i < j && ok && p >= 2; ++i) {
                    ok = below.faces[i][x] == below.faces[j - 1][cur[i]];
                }
                if (!ok) continue;
                cur.push_back(x);
                self(self);
                cur.pop_back();
            }
        };
        if (below.size > 0) extend(extend);
        Level lv;
        if (!tuples.empty()) lv.size = rng() % (max_per_level + 1);
        lv.faces.assign(p + 1, std::vector<Index>(lv.size));
        for (Index s = 0; s < lv.size; ++s) {
            const auto& t = tuples[rng() % tuples.size()];
            for (int i = 0; i <= p; ++i) lv.faces[i][s] = t[i];
        }
        levels.push_back(std::move(lv));
    }
    while (levels.size() > 1 && levels.back().size == 0) levels.pop_back();
    const int top = static_cast<int>(levels.size()) - 1;
    return SemiSimplicialSet(std::move(levels), top, std::nullopt);
}

}  // namespace sscat::fixtures
