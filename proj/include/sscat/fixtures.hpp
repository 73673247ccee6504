#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sscat/category.hpp"
#include "sscat/monoid.hpp"
#include "sscat/simplicial.hpp"
#include "sscat/sset.hpp"

namespace sscat::fixtures {

/// Two vertices, three edges, two triangles; H = (Z, Z/2, 0).
SemiSimplicialSet rp2();
/// One vertex, three edges, two triangles.
SemiSimplicialSet torus();
SemiSimplicialSet klein_bottle();
/// One vertex with one loop.
SemiSimplicialSet loop();
/// One vertex with two loops.
SemiSimplicialSet wedge_of_circles();
/// `n` vertices and nothing else.
SemiSimplicialSet discrete(Index n);

/// The named semi-simplicial corpus, sorted by name.
std::vector<std::pair<std::string, SemiSimplicialSet>> semi_simplicial_corpus();

/// Simplicial inputs used by the fat/thin and product checks.
std::vector<std::pair<std::string, SimplicialSet>> simplicial_corpus();

/// Non-unital category fixtures (no declared units).
std::vector<std::pair<std::string, FinNonUnitalCategory>> non_unital_categories();

/// One object, endomorphism e with e e = e.
FinNonUnitalCategory idempotent();
/// f : 0 -> 1, g : 1 -> 2 and their composite.
FinNonUnitalCategory composable_pair();
/// One object, morphisms a, b with a a = b and b absorbing.
FinNonUnitalCategory nilpotent();
/// Z/2 as a one-object category without declared units.
FinNonUnitalCategory cyclic_no_units(Index n);
/// Two objects with two parallel arrows 0 -> 1.
FinNonUnitalCategory parallel_arrows();

struct FunctorFixture {
    std::string name;
    FinNonUnitalCategory source;
    FinNonUnitalCategory target;
    FunctorData functor;
};

/// {1} -> [1], [1] -> [0], id on [n] for n <= 2, two discrete objects -> [1].
std::vector<FunctorFixture> functor_corpus();

struct NatTransFixture {
    std::string name;
    FinNonUnitalCategory source;
    FinNonUnitalCategory target;
    FunctorData f;
    FunctorData g;
    NatTransData eta;
};

std::vector<NatTransFixture> nat_trans_corpus();

/// Random valid semi-simplicial set: at most `max_per_level` simplices in
/// each level up to `max_dim`, each with faces drawn from the compatible tuples.
SemiSimplicialSet random_semi_simplicial(std::uint64_t seed, Index max_per_level = 5, int max_dim = 3);

}  // namespace sscat::fixtures
