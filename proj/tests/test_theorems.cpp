#include <doctest.h>

#include <string>

#include "sscat/fixtures.hpp"
#include "sscat/theorems.hpp"

using namespace sscat;

namespace {

std::string failures(const CheckReport& r)
{
    std::string out = r.id + " " + to_string(r.verdict) + ":";
    for (const auto* list : {&r.hypotheses, &r.comparisons}) {
        for (const auto& i : *list) {
            if (!i.ok) out += " [" + i.name + " @" + std::to_string(i.degree) + ": " + i.actual + "]";
        }
    }
    return out;
}

#define CHECK_PASS(expr)                                  \
    do {                                                  \
        const auto rep_ = (expr);                         \
        INFO(failures(rep_));                             \
        CHECK(rep_.verdict == Verdict::Pass);             \
    } while (0)

}  // namespace

TEST_CASE("finalize ordering")
{
    CheckReport r;
    r.comparisons.push_back({"a", 0, "0", "Z", false, false});
    r.finalize();
    CHECK(r.verdict == Verdict::UntrustedAtCutoff);
    r.comparisons.push_back({"b", 0, "0", "0", true, true});
    r.finalize();
    CHECK(r.verdict == Verdict::Pass);
    r.comparisons.push_back({"c", 0, "0", "Z", true, false});
    r.finalize();
    CHECK(r.verdict == Verdict::Fail);
    r.hypotheses.push_back({"h", -1, "yes", "no", true, false});
    r.finalize();
    CHECK(r.verdict == Verdict::HypothesesNotMet);
    CHECK(exit_code(Verdict::Pass) == 0);
    CHECK(exit_code(Verdict::HypothesesNotMet) == 1);
}

TEST_CASE("adjunction unit on the semi-simplicial corpus")
{
    CHECK_PASS(check_adj_units(fixtures::rp2(), 4));
    for (const auto& [name, x] : fixtures::semi_simplicial_corpus()) {
        INFO(name);
        CHECK_PASS(check_adj_units(x, 4));
    }
}

TEST_CASE("fat and thin chains")
{
    for (const auto& [name, y] : fixtures::simplicial_corpus()) {
        INFO(name);
        CHECK_PASS(check_fat_thin(y, 4));
    }
}

TEST_CASE("ez diagonal")
{
    const auto s1 = standard_simplex(1);
    CHECK_PASS(check_ez_diagonal(s1, s1, 4));
    CHECK_PASS(check_ez_diagonal(free_degeneracies(fixtures::rp2()), s1, 4));
    CHECK_PASS(check_ez_diagonal(free_degeneracies(fixtures::loop()), free_degeneracies(fixtures::loop()), 4));
}

TEST_CASE("semi-simplicial diagonal Euler characteristic")
{
    const auto r = check_semi_diagonal_euler(1, 1);
    CHECK_PASS(r);
    bool found = false;
    for (const auto& [k, v] : r.values) {
        if (k == "chi(diagonal)") {
            CHECK(v == "3");
            found = true;
        }
    }
    CHECK(found);
    CHECK_PASS(check_semi_diagonal_euler(2, 1));
    CHECK_PASS(check_semi_diagonal_euler(0, 3));
}

TEST_CASE("products against Kunneth")
{
    const auto rp2 = free_degeneracies(fixtures::rp2());
    const auto r = check_products(rp2, rp2, 5);
    CHECK_PASS(r);
    bool seen = false;
    for (const auto& i : r.comparisons) {
        if (i.degree == 3) {
            CHECK(i.actual == "Z/2");
            seen = true;
        }
    }
    CHECK(seen);
}

TEST_CASE("unitalization of non-unital categories")
{
    for (const auto& [name, c] : fixtures::non_unital_categories()) {
        INFO(name);
        CHECK_PASS(check_krannich(c, 4));
    }
}

TEST_CASE("terminal object contracts the nerve")
{
    CHECK_PASS(check_terminal_contractible(poset_category(2), 4));
    CHECK_PASS(check_terminal_contractible(product_category(poset_category(1), poset_category(1)), 4));
    CHECK_THROWS_AS(check_terminal_contractible(discrete_category(2, true), 4), Error);
    CHECK_THROWS_AS(check_terminal_contractible(fixtures::idempotent(), 4), Error);
}

TEST_CASE("Quillen A on the functor corpus")
{
    for (const auto& fx : fixtures::functor_corpus()) {
        INFO(fx.name);
        const auto r = check_quillen_a(fx.functor, fx.source, fx.target, 4);
        if (fx.name == "two-points-into-interval") {
            CHECK(r.verdict == Verdict::HypothesesNotMet);
        } else {
            CHECK_PASS(r);
        }
    }
}

TEST_CASE("resolution triangle")
{
    for (const auto& fx : fixtures::functor_corpus()) {
        INFO(fx.name);
        CHECK_PASS(check_resolution_triangle(fx.functor, fx.source, fx.target, 4));
    }
}

TEST_CASE("natural transformations give equal maps on homology")
{
    for (const auto& fx : fixtures::nat_trans_corpus()) {
        INFO(fx.name);
        CHECK_PASS(check_nat_trans(fx.eta, fx.f, fx.g, fx.source, fx.target, 4));
    }
}

TEST_CASE("bar construction is acyclic")
{
    for (const auto& m : {cyclic_group_monoid(2), cyclic_group_monoid(3), absorbing_monoid(), trivial_monoid()}) {
        CHECK_PASS(check_bar_acyclic(m, 5));
    }
}

TEST_CASE("group completion")
{
    const auto z2 = group_completion_report(cyclic_group_monoid(2), 6);
    CHECK_PASS(z2);
    std::vector<std::pair<std::string, std::string>> expect = {
        {"Gr(M)", "Z/2"}, {"H(BM)_1", "Z/2"}, {"H(BM)_2", "0"}, {"H(BM)_3", "Z/2"}, {"H(BM)_5", "Z/2"}};
    for (const auto& e : expect) {
        bool found = false;
        for (const auto& v : z2.values) found = found || v == e;
        INFO(e.first);
        CHECK(found);
    }
    const auto abs = group_completion_report(absorbing_monoid(), 5);
    CHECK_PASS(abs);
    CHECK(abs.values.front().second == "0");

    MonoidPresentation n{1, {}};
    const auto free = group_completion_report(n);
    CHECK(free.values.at(1).second == "Z[t,t^-1]");
}

TEST_CASE("skeleta")
{
    for (int n = 0; n < 4; ++n) {
        CHECK_PASS(check_skeletal_shadow(fixtures::torus(), n, 4));
        CHECK_PASS(check_skeletal_shadow(standard_semi_simplex(3), n, 4));
    }
    CHECK_THROWS_AS(check_skeletal_shadow(fixtures::torus(), 4, 4), Error);
}

TEST_CASE("Segal nerve of a group")
{
    CHECK_PASS(check_segal_nerve(cyclic_group_monoid(2), 4));
    CHECK_PASS(check_segal_nerve(cyclic_group_monoid(3), 4));
    CHECK_THROWS_AS(check_segal_nerve(absorbing_monoid(), 4), Error);
}

TEST_CASE("constant simplicial sets")
{
    CHECK_PASS(check_constant(1, 5));
    CHECK_PASS(check_constant(3, 5));
}

TEST_CASE("random suites are deterministic and pass")
{
    const auto a = random_adj_units_suite(7, 4, 4);
    CHECK_PASS(a);
    const auto b = random_adj_units_suite(7, 4, 4);
    CHECK(a.comparisons.size() == b.comparisons.size());
    for (std::size_t i = 0; i < a.comparisons.size(); ++i) CHECK(a.comparisons[i].name == b.comparisons[i].name);
    CHECK_PASS(random_ez_suite(11, 2, 4));
}

TEST_CASE("semi-simplicial diagonal is a valid semi-simplicial set")
{
    for (const auto& [name, x] : fixtures::semi_simplicial_corpus()) {
        INFO(name);
        const auto d = diagonal(exterior_product(x, standard_semi_simplex(2)));
        CHECK(validate(d).ok);
    }
    const auto i = standard_semi_simplex(1);
    const auto d = diagonal(exterior_product(i, i));
    CHECK(d.sizes() == std::vector<Index>{4, 1});
    CHECK(euler_characteristic(d) == 3);
}
