// Writes the shipped fixture documents into the given directory.
#include <filesystem>
#include <iostream>

#include "sscat/fixtures.hpp"
#include "sscat/io.hpp"

using namespace sscat;

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: make_fixtures <dir>\n";
        return 2;
    }
    const std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);
    for (const auto& [name, x] : fixtures::semi_simplicial_corpus()) io::save_file(x, dir / (name + ".ss.json"));
    for (const auto& [name, y] : fixtures::simplicial_corpus()) io::save_file(y, dir / (name + ".simplicial.json"));
    for (const auto& [name, c] : fixtures::non_unital_categories()) io::save_file(c, dir / (name + ".cat.json"));
    io::save_file(poset_category(2), dir / "poset2.cat.json");
    io::save_file(product_category(poset_category(1), poset_category(1)), dir / "square.cat.json");
    for (const auto& f : fixtures::functor_corpus()) {
        io::save_file(io::FunctorDocument{f.source, f.target, f.functor}, dir / (f.name + ".functor.json"));
    }
    for (const auto& n : fixtures::nat_trans_corpus()) {
        io::save_file(io::NatTransDocument{n.source, n.target, n.f, n.g, n.eta}, dir / (n.name + ".nat.json"));
    }
    io::save_file(cyclic_group_monoid(2), dir / "z2.monoid.json");
    io::save_file(cyclic_group_monoid(3), dir / "z3.monoid.json");
    io::save_file(absorbing_monoid(), dir / "absorbing.monoid.json");
    io::save_file(MonoidPresentation{1, {}}, dir / "naturals.presentation.json");
    io::save_file(MonoidPresentation{2, {{{1, 0}, {0, 1}}}}, dir / "n2-identified.presentation.json");
    const auto z2 = cyclic_group_monoid(2);
    io::save_file(io::ActionDocument{z2, regular_action(z2, MonoidAction::Side::Left)}, dir / "z2-regular.action.json");
    io::save_file(exterior_product(standard_semi_simplex(1), standard_semi_simplex(1)), dir / "interval-square.bisset.json");
    io::save_file(exterior_product(fixtures::loop(), fixtures::loop()), dir / "torus.bisset.json");
    return 0;
}
