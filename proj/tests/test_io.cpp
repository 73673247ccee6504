#include <doctest.h>

#include <filesystem>
#include <string>

#include "sscat/fixtures.hpp"
#include "sscat/io.hpp"

using namespace sscat;
using io::Json;

namespace {

template <class T>
void round_trip(const T& value)
{
    const auto j = io::to_json(value);
    const auto back = io::from_json(Json::parse(io::dump(j)));
    const auto* got = std::get_if<T>(&back);
    REQUIRE(got != nullptr);
    CHECK(*got == value);
    CHECK(io::dump(io::to_json(*got)) == io::dump(j));
}

std::string error_path(const std::string& text)
{
    try {
        io::from_json(Json::parse(text));
    } catch (const io::FormatError& e) {
        return e.path();
    }
    return "<no error>";
}

}  // namespace

TEST_CASE("round trips")
{
    for (const auto& [name, x] : fixtures::semi_simplicial_corpus()) {
        INFO(name);
        round_trip(x);
    }
    for (const auto& [name, y] : fixtures::simplicial_corpus()) {
        INFO(name);
        round_trip(y);
    }
    round_trip(fixtures::random_semi_simplicial(3));
    round_trip(exterior_product(fixtures::rp2(), standard_semi_simplex(1)));
    for (const auto& [name, c] : fixtures::non_unital_categories()) round_trip(c);
    round_trip(poset_category(2));
    for (const auto& f : fixtures::functor_corpus()) round_trip(io::FunctorDocument{f.source, f.target, f.functor});
    for (const auto& n : fixtures::nat_trans_corpus()) round_trip(io::NatTransDocument{n.source, n.target, n.f, n.g, n.eta});
    round_trip(cyclic_group_monoid(3));
    round_trip(MonoidPresentation{2, {{{1, 0}, {0, 1}}}});
    const auto z2 = cyclic_group_monoid(2);
    round_trip(io::ActionDocument{z2, regular_action(z2, MonoidAction::Side::Left)});
    SparseMatrix m(2, 3);
    m.add(0, 1, 5);
    m.add(1, 2, Integer("123456789012345678901234567890"));
    round_trip(m);
}

TEST_CASE("schema errors name the offending field")
{
    CHECK(error_path(R"({"levels":[]})") == "/type");
    CHECK(error_path(R"({"type":"nope"})") == "/type");
    CHECK(error_path(R"({"type":"sset","levels":[{"size":1},{"size":1,"faces":[[0],[1]]}]})") ==
          "/levels/1/faces/1/0");
    CHECK(error_path(R"({"type":"sset","levels":[{"size":1},{"size":1,"faces":[[0]]}]})") == "/levels/1/faces");
    CHECK(error_path(R"({"type":"sset","levels":[{"size":-1}]})") == "/levels/0/size");
    CHECK(error_path(R"({"type":"category","objects":1,"morphisms":[{"src":0,"tgt":3}],"compose":[]})") ==
          "/morphisms/0/tgt");
    CHECK(error_path(R"({"type":"monoid","table":[[0,1],[1]],"unit":0})") == "/table/1");
    CHECK(error_path(R"({"type":"simplicial","generators":[{"size":1},{"size":1,"faces":[[{"word":[],"deg":0,"idx":0},{"word":[],"deg":0,"idx":2}]]}]})") ==
          "/generators/1/faces/0/1/idx");
}

TEST_CASE("semantically invalid documents are rejected")
{
    // d_0 d_1 = d_0 d_0 fails on a 2-simplex whose edges disagree
    const auto bad = R"({"type":"sset","levels":[{"size":2},{"size":2,"faces":[[0,1],[0,1]]},
        {"size":1,"faces":[[0],[0],[1]]}]})";
    CHECK_THROWS_AS(io::from_json(Json::parse(bad)), io::FormatError);
    const auto nonassoc = R"({"type":"monoid","table":[[0,1],[1,1]],"unit":1})";
    CHECK_THROWS_AS(io::from_json(Json::parse(nonassoc)), io::FormatError);
}

TEST_CASE("report JSON is deterministic and hides timing by default")
{
    CheckReport r;
    r.id = "x";
    r.parameters = {{"cutoff", "3"}};
    r.comparisons.push_back({"c", 1, "0", "0", true, true});
    r.seconds = 0.5;
    r.finalize();
    CHECK(io::dump(io::report_json(r)) == io::dump(io::report_json(r)));
    CHECK_FALSE(io::report_json(r).contains("timing"));
    CHECK(io::report_json(r, true)["timing"]["seconds"] == 0.5);
    CHECK(io::report_json(r)["verdict"] == "pass");
}

TEST_CASE("shipped fixture files match the in-code fixtures")
{
    const std::filesystem::path dir = SSCAT_FIXTURE_DIR;
    for (const auto& [name, x] : fixtures::semi_simplicial_corpus()) {
        INFO(name);
        CHECK(io::expect<SemiSimplicialSet>(io::load_file(dir / (name + ".ss.json")), "sset") == x);
    }
    for (const auto& [name, y] : fixtures::simplicial_corpus()) {
        INFO(name);
        CHECK(io::expect<SimplicialSet>(io::load_file(dir / (name + ".simplicial.json")), "simplicial") == y);
    }
    for (const auto& [name, c] : fixtures::non_unital_categories()) {
        INFO(name);
        CHECK(io::expect<FinNonUnitalCategory>(io::load_file(dir / (name + ".cat.json")), "category") == c);
    }
    for (const auto& f : fixtures::functor_corpus()) {
        INFO(f.name);
        const auto doc = io::expect<io::FunctorDocument>(io::load_file(dir / (f.name + ".functor.json")), "functor");
        CHECK(doc == io::FunctorDocument{f.source, f.target, f.functor});
    }
    for (const auto& n : fixtures::nat_trans_corpus()) {
        INFO(n.name);
        const auto doc = io::expect<io::NatTransDocument>(io::load_file(dir / (n.name + ".nat.json")), "nat-trans");
        CHECK(doc == io::NatTransDocument{n.source, n.target, n.f, n.g, n.eta});
    }
    CHECK(io::expect<FinMonoid>(io::load_file(dir / "z2.monoid.json"), "monoid") == cyclic_group_monoid(2));
    CHECK(io::expect<FinMonoid>(io::load_file(dir / "absorbing.monoid.json"), "monoid") == absorbing_monoid());
    std::size_t files = 0;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        if (e.path().extension() != ".json") continue;
        ++files;
        INFO(e.path().string());
        CHECK_NOTHROW(io::load_file(e.path()));
    }
    CHECK(files >= 10);
}
