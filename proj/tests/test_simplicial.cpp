#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "sscat/simplicial.hpp"
#include "sscat/sset.hpp"

using namespace sscat;

namespace {

// Vertex-sequence model of the n-simplex: a p-simplex is a weakly increasing
// list of p+1 vertices, d_i deletes entry i, s_j repeats entry j.
std::vector<Index> vertices_of(const SimplexRef& r, const std::vector<std::vector<std::vector<Index>>>& subsets)
{
    std::vector<Index> v = subsets[r.degree][r.index];
    for (auto it = r.word.indices.rbegin(); it != r.word.indices.rend(); ++it) {
        v.insert(v.begin() + *it, v[*it]);
    }
    return v;
}

}  // namespace

TEST_CASE("canonical degeneracy words")
{
    CHECK(DegeneracyWord::canonical({0, 0}).indices == std::vector<int>{1, 0});
    CHECK(DegeneracyWord::canonical({0, 1}).indices == std::vector<int>{2, 0});
    CHECK(DegeneracyWord::canonical({3, 1, 0}).indices == std::vector<int>{3, 1, 0});
    CHECK(DegeneracyWord::canonical({1, 1}).is_canonical());
}

TEST_CASE("faces of the simplicial simplex agree with the vertex-sequence model")
{
    for (int n = 0; n <= 3; ++n) {
        const int cutoff = 4;
        auto y = standard_simplex(n);
        REQUIRE(validate(y).ok);
        auto subsets = increasing_subsets(n + 1, n);
        auto e = enumerate_full(y, cutoff);
        for (int p = 0; p <= cutoff; ++p) {
            std::set<std::vector<Index>> seen;
            for (const auto& r : e.simplices[p]) {
                auto v = vertices_of(r, subsets);
                CHECK(v.size() == static_cast<std::size_t>(p + 1));
                CHECK(std::is_sorted(v.begin(), v.end()));
                seen.insert(v);
                for (int i = 0; p > 0 && i <= p; ++i) {
                    auto w = v;
                    w.erase(w.begin() + i);
                    CHECK(vertices_of(normalize_face(y, i, r), subsets) == w);
                }
                for (int j = 0; j <= p; ++j) {
                    auto w = v;
                    w.insert(w.begin() + j, v[j]);
                    CHECK(vertices_of(apply_degeneracy(j, r), subsets) == w);
                }
            }
            // weakly increasing (p+1)-sequences in n+1 letters
            CHECK(seen.size() == static_cast<std::size_t>(binomial(n + p + 1, p + 1)));
            CHECK(e.simplices[p].size() == seen.size());
        }
        CHECK(validate(e.sset).ok);
    }
}

TEST_CASE("present recovers the generator presentation")
{
    auto y = standard_simplex(2);
    auto e = enumerate_full(y, 3);
    SimplicialTable t{e.sset, e.degeneracies};
    REQUIRE(validate(t).ok);
    auto back = present(t);
    CHECK(back.counts() == std::vector<Index>{3, 3, 1, 0});
}

TEST_CASE("unit and counit")
{
    auto x = boundary_semi_simplex(2);
    auto u = unit_map(x, 3);
    auto ex = enumerate(free_degeneracies(x), 3);
    CHECK(validate_map(u, x, ex).ok);
    CHECK(ex.size(0) == 3);
    CHECK(ex.size(1) == 3 + 3);
    CHECK(ex.size(2) == 1 * 3 + 2 * 3);
}
