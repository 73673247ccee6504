#include <doctest.h>

#include "sscat/chain.hpp"
#include "sscat/fixtures.hpp"

using namespace sscat;

namespace {

std::vector<std::string> homology_strings(const SemiSimplicialSet& x, int max_degree)
{
    std::vector<std::string> out;
    for (const auto& h : homology_range(unnormalized_chains(x, Ring::integers()), max_degree)) {
        out.push_back(h.group.to_string());
    }
    return out;
}

}  // namespace

TEST_CASE("semi-simplicial corpus is valid with known homology")
{
    auto corpus = fixtures::semi_simplicial_corpus();
    CHECK(corpus.size() >= 10);
    for (const auto& [name, x] : corpus) CHECK_MESSAGE(validate(x), name);
    using V = std::vector<std::string>;
    CHECK(homology_strings(fixtures::rp2(), 2) == V{"Z", "Z/2", "0"});
    CHECK(homology_strings(fixtures::torus(), 2) == V{"Z", "Z^2", "Z"});
    CHECK(homology_strings(fixtures::klein_bottle(), 2) == V{"Z", "Z + Z/2", "0"});
    CHECK(homology_strings(boundary_semi_simplex(4), 3) == V{"Z", "0", "0", "Z"});
    CHECK(homology_strings(fixtures::wedge_of_circles(), 1) == V{"Z", "Z^2"});
}

TEST_CASE("other fixture families validate")
{
    for (const auto& [name, y] : fixtures::simplicial_corpus()) CHECK_MESSAGE(validate(y), name);
    for (const auto& [name, c] : fixtures::non_unital_categories()) {
        CHECK_MESSAGE(validate(c), name);
        CHECK_FALSE(c.has_units());
    }
    for (const auto& f : fixtures::functor_corpus()) {
        CHECK_MESSAGE(validate(f.source), f.name);
        CHECK_MESSAGE(validate(f.target), f.name);
        CHECK_MESSAGE(validate(f.functor, f.source, f.target, true), f.name);
    }
    for (const auto& n : fixtures::nat_trans_corpus()) CHECK_MESSAGE(validate(n.eta, n.f, n.g, n.source, n.target), n.name);
}

TEST_CASE("random semi-simplicial sets are valid and reproducible")
{
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        auto x = fixtures::random_semi_simplicial(seed);
        CHECK(validate(x));
        CHECK(x == fixtures::random_semi_simplicial(seed));
        CHECK(x.num_levels() <= 4);
        for (int p = 0; p < x.num_levels(); ++p) CHECK(x.size(p) <= 5);
    }
}
