#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sscat/category.hpp"
#include "sscat/chain.hpp"
#include "sscat/io.hpp"
#include "sscat/monoid.hpp"
#include "sscat/simplicial.hpp"
#include "sscat/specseq.hpp"
#include "sscat/sset.hpp"
#include "sscat/theorems.hpp"

using namespace sscat;
using io::Json;

namespace {

/// Bad invocation; exit code 2.
struct Usage : Error {
    using Error::Error;
};

struct Result {
    Json body;
    std::string table;
    int code = 0;
};

struct Options {
    std::vector<std::string> files;
    std::string check_id;
    std::string coeff = "z";
    std::optional<int> cutoff;
    std::optional<int> max_degree;
    std::optional<int> n;
    std::optional<int> m;
    std::optional<Index> object;
    std::optional<Index> size;
    std::optional<int> max_page;
    std::uint64_t seed = 1;
    int count = 20;
    bool dual = false;
    bool rows = false;
    bool timing = false;
    std::string left = "regular";
    std::string right = "point";
};

int need_cutoff(const Options& o)
{
    if (!o.cutoff) throw Usage("--cutoff is required for this command");
    if (*o.cutoff < 1) throw Usage("--cutoff must be at least 1");
    return *o.cutoff;
}

int need(const std::optional<int>& v, const std::string& flag)
{
    if (!v) throw Usage(flag + " is required for this command");
    return *v;
}

const std::string& file(const Options& o, std::size_t i)
{
    if (o.files.size() <= i) throw Usage("expected " + std::to_string(i + 1) + " input file(s)");
    return o.files[i];
}

io::Document load(const Options& o, std::size_t i) { return io::load_file(file(o, i)); }

/// Simplicial input: generator form, or a semi-simplicial set with free degeneracies.
SimplicialSet load_simplicial(const Options& o, std::size_t i)
{
    auto d = load(o, i);
    if (auto* x = std::get_if<SemiSimplicialSet>(&d)) return free_degeneracies(*x);
    return io::expect<SimplicialSet>(std::move(d), "simplicial");
}

// Tables -------------------------------------------------------------------------

std::string homology_table(const std::vector<HomologyGroup>& hs, const Ring& ring)
{
    std::ostringstream out;
    for (const auto& h : hs) out << "H_" << h.degree << " = " << io::group_name(h.group, ring) << (h.trusted ? "" : "  (untrusted)") << "\n";
    return out.str();
}

std::string items_table(const std::string& title, const std::vector<CheckItem>& items)
{
    std::ostringstream out;
    if (items.empty()) return "";
    out << title << ":\n";
    for (const auto& i : items) {
        out << "  " << (i.ok ? "ok  " : (i.trusted ? "FAIL" : "??  ")) << "  " << i.name;
        if (i.degree >= 0) out << " [" << i.degree << "]";
        out << "  expected " << i.expected << ", got " << i.actual << (i.trusted ? "" : " (untrusted)") << "\n";
    }
    return out.str();
}

std::string report_table(const CheckReport& r)
{
    std::ostringstream out;
    out << r.id;
    for (const auto& [k, v] : r.parameters) out << " " << k << "=" << v;
    out << "\n" << items_table("hypotheses", r.hypotheses) << items_table("comparisons", r.comparisons);
    for (const auto& [k, v] : r.values) out << "  " << k << " = " << v << "\n";
    for (const auto& n : r.notes) out << "  note: " << n << "\n";
    out << "verdict: " << to_string(r.verdict) << "\n";
    return out.str();
}

Result from_report(CheckReport r, bool timing)
{
    return {io::report_json(r, timing), report_table(r), exit_code(r.verdict)};
}

Result document_result(const io::Document& d, const std::string& summary)
{
    return {io::to_json(d), summary + "\n", 0};
}

std::string sizes_summary(const SemiSimplicialSet& x)
{
    std::ostringstream out;
    out << "sizes";
    for (auto s : x.sizes()) out << " " << s;
    if (x.is_truncated()) out << " (truncated at " << *x.truncated_at() << ")";
    return out.str();
}

// Commands ------------------------------------------------------------------------

Result cmd_validate(const Options& o)
{
    try {
        auto d = load(o, 0);
        return {Json{{"file", file(o, 0)}, {"type", io::type_name(d)}, {"valid", true}}, "valid " + io::type_name(d) + "\n", 0};
    } catch (const io::InvalidDocument& e) {
        return {Json{{"file", file(o, 0)}, {"valid", false}, {"error", e.what()}}, std::string("invalid: ") + e.what() + "\n", 1};
    }
}

ChainComplex complex_of(const io::Document& d, const Ring& ring, const Options& o)
{
    if (auto* x = std::get_if<SemiSimplicialSet>(&d)) return unnormalized_chains(*x, ring);
    if (auto* y = std::get_if<SimplicialSet>(&d)) return normalized_chains(*y, ring, need_cutoff(o));
    if (auto* b = std::get_if<BiSemiSimplicialSet>(&d)) return total_complex(bicomplex(*b, ring));
    if (auto* c = std::get_if<FinNonUnitalCategory>(&d)) return unnormalized_chains(nerve(*c, need_cutoff(o)), ring);
    if (auto* m = std::get_if<FinMonoid>(&d)) return unnormalized_chains(nerve(monoid_category(*m), need_cutoff(o)), ring);
    throw Usage("homology is not defined for a '" + io::type_name(d) + "' document");
}

Result cmd_homology(const Options& o)
{
    const auto ring = Ring::parse(o.coeff);
    const auto c = complex_of(load(o, 0), ring, o);
    int top = c.top_degree();
    if (c.truncation()) top = *c.truncation() - 1;
    if (o.max_degree) top = *o.max_degree;
    const auto hs = homology_range(c, top);
    return {io::homology_json(hs, ring), homology_table(hs, ring), 0};
}

Result cmd_euler(const Options& o)
{
    const auto x = io::expect<SemiSimplicialSet>(load(o, 0), "sset");
    if (!x.top_dim()) throw Usage("the Euler characteristic needs a finite (untruncated) set");
    const long chi = euler_characteristic(x);
    return {Json{{"euler_characteristic", chi}, {"sizes", x.sizes()}}, "chi = " + std::to_string(chi) + "\n", 0};
}

Result cmd_skeleton(const Options& o)
{
    const auto x = io::expect<SemiSimplicialSet>(load(o, 0), "sset");
    const auto sk = skeleton(x, need(o.n, "--n"));
    return document_result(sk, sizes_summary(sk));
}

Result cmd_nerve(const Options& o)
{
    auto d = load(o, 0);
    const int cutoff = need_cutoff(o);
    SemiSimplicialSet x;
    if (auto* m = std::get_if<FinMonoid>(&d)) {
        x = nerve(monoid_category(*m), cutoff);
    } else {
        x = nerve(io::expect<FinNonUnitalCategory>(std::move(d), "category"), cutoff);
    }
    return document_result(x, sizes_summary(x));
}

Result cmd_unitalize(const Options& o)
{
    const auto c = io::expect<FinNonUnitalCategory>(load(o, 0), "category");
    const auto plus = unitalize(c);
    return document_result(plus, std::to_string(plus.objects()) + " objects, " + std::to_string(plus.morphisms()) + " morphisms");
}

Result cmd_over(const Options& o)
{
    if (!o.object) throw Usage("--object is required");
    auto d = load(o, 0);
    FinNonUnitalCategory k;
    if (auto* f = std::get_if<io::FunctorDocument>(&d)) {
        if (*o.object >= f->target.objects()) throw Usage("--object out of range");
        k = o.dual ? comma_under(f->functor, f->source, f->target, *o.object)
                   : comma_over(f->functor, f->source, f->target, *o.object);
    } else {
        const auto c = io::expect<FinNonUnitalCategory>(std::move(d), "category");
        if (*o.object >= c.objects()) throw Usage("--object out of range");
        k = o.dual ? under_category(c, *o.object) : over_category(c, *o.object);
    }
    return document_result(k, std::to_string(k.objects()) + " objects, " + std::to_string(k.morphisms()) + " morphisms");
}

MonoidAction action_of(const FinMonoid& m, const std::string& kind, MonoidAction::Side side)
{
    if (kind == "point") return point_action(m, side);
    if (kind == "regular") return regular_action(m, side);
    throw Usage("action must be 'point' or 'regular', got '" + kind + "'");
}

Result cmd_bar(const Options& o)
{
    const auto m = io::expect<FinMonoid>(load(o, 0), "monoid");
    const auto y = action_of(m, o.right, MonoidAction::Side::Right);
    const auto x = action_of(m, o.left, MonoidAction::Side::Left);
    const auto b = bar_construction(y, m, x, need_cutoff(o));
    return document_result(b, sizes_summary(b));
}

Result cmd_resolve(const Options& o)
{
    const auto f = io::expect<io::FunctorDocument>(load(o, 0), "functor");
    const int cutoff = need_cutoff(o);
    const auto r = o.dual ? comma_resolution_dual(f.functor, f.source, f.target, cutoff)
                          : comma_resolution(f.functor, f.source, f.target, cutoff);
    std::ostringstream t;
    for (int p = 0; p <= r.bisset.max_p(); ++p) {
        for (int q = 0; q <= r.bisset.max_q(); ++q) t << std::setw(6) << r.bisset.size(p, q);
        t << "\n";
    }
    return {io::to_json(r.bisset), t.str(), 0};
}

Result cmd_specseq(const Options& o)
{
    const auto b = io::expect<BiSemiSimplicialSet>(load(o, 0), "bisset");
    const auto ring = Ring::parse(o.coeff == "z" ? "q" : o.coeff);
    if (o.coeff == "z") throw Usage("spectral sequences need field coefficients: --coeff q or f<p>");
    const auto dc = bicomplex(b, ring);
    const auto orient = o.rows ? Filtration::Rows : Filtration::Columns;
    const int max_page = o.max_page.value_or(dc.max_p() + dc.max_q() + 2);
    const auto pages = spectral_sequence(dc, orient, max_page);
    Json j = io::pages_json(pages);
    std::ostringstream t;
    for (const auto& p : pages) {
        t << "E" << p.r << (p.stable ? " (stable)" : "") << "\n";
        for (int s = 0; s <= p.max_s(); ++s) {
            for (int tt = 0; tt <= p.max_t(); ++tt) t << std::setw(5) << p.dims[s][tt];
            t << "\n";
        }
    }
    int code = 0;
    if (auto bad = check_page_invariants(pages)) {
        j["page_invariants"] = *bad;
        code = 1;
    } else {
        j["page_invariants"] = "ok";
    }
    if (!pages.empty() && pages.back().stable) {
        const auto conv = check_convergence(pages, total_complex(dc));
        j["convergence"] = io::convergence_json(conv);
        t << "convergence: " << (conv.ok ? "ok" : "MISMATCH") << "\n";
        if (!conv.ok) code = 1;
    }
    return {j, t.str(), code};
}

Result cmd_group_complete(const Options& o)
{
    auto d = load(o, 0);
    if (auto* p = std::get_if<MonoidPresentation>(&d)) return from_report(group_completion_report(*p), o.timing);
    const auto m = io::expect<FinMonoid>(std::move(d), "monoid");
    return from_report(group_completion_report(m, need_cutoff(o)), o.timing);
}

CheckReport run_check(const Options& o)
{
    const std::string& id = o.check_id;
    if (id == "adj-units") return check_adj_units(io::expect<SemiSimplicialSet>(load(o, 0), "sset"), need_cutoff(o));
    if (id == "fat-thin") return check_fat_thin(load_simplicial(o, 0), need_cutoff(o));
    if (id == "ez-diagonal") return check_ez_diagonal(load_simplicial(o, 0), load_simplicial(o, 1), need_cutoff(o));
    if (id == "semi-diagonal-euler") return check_semi_diagonal_euler(need(o.n, "--n"), need(o.m, "--m"));
    if (id == "products") return check_products(load_simplicial(o, 0), load_simplicial(o, 1), need_cutoff(o));
    if (id == "krannich") return check_krannich(io::expect<FinNonUnitalCategory>(load(o, 0), "category"), need_cutoff(o));
    if (id == "terminal-contractible") {
        return check_terminal_contractible(io::expect<FinNonUnitalCategory>(load(o, 0), "category"), need_cutoff(o));
    }
    if (id == "quillen-a" || id == "resolution-triangle") {
        const auto f = io::expect<io::FunctorDocument>(load(o, 0), "functor");
        return id == "quillen-a" ? check_quillen_a(f.functor, f.source, f.target, need_cutoff(o))
                                 : check_resolution_triangle(f.functor, f.source, f.target, need_cutoff(o));
    }
    if (id == "nat-trans") {
        const auto n = io::expect<io::NatTransDocument>(load(o, 0), "nat-trans");
        return check_nat_trans(n.eta, n.f, n.g, n.source, n.target, need_cutoff(o));
    }
    if (id == "bar-acyclic") return check_bar_acyclic(io::expect<FinMonoid>(load(o, 0), "monoid"), need_cutoff(o));
    if (id == "group-completion") {
        auto d = load(o, 0);
        if (auto* p = std::get_if<MonoidPresentation>(&d)) return group_completion_report(*p);
        return group_completion_report(io::expect<FinMonoid>(std::move(d), "monoid"), need_cutoff(o));
    }
    if (id == "skeletal-shadow") {
        return check_skeletal_shadow(io::expect<SemiSimplicialSet>(load(o, 0), "sset"), need(o.n, "--n"), need_cutoff(o));
    }
    if (id == "segal-nerve") return check_segal_nerve(io::expect<FinMonoid>(load(o, 0), "monoid"), need_cutoff(o));
    if (id == "constant") {
        if (!o.size) throw Usage("--size is required");
        return check_constant(*o.size, need_cutoff(o));
    }
    if (id == "random-ez") return random_ez_suite(o.seed, o.count, need_cutoff(o));
    if (id == "random-adj-units") return random_adj_units_suite(o.seed, o.count, need_cutoff(o));
    throw Usage("unknown check '" + id + "'");
}

Result cmd_check(const Options& o)
{
    const auto start = std::chrono::steady_clock::now();
    auto r = run_check(o);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return from_report(std::move(r), o.timing);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Semi-simplicial sets, nerves and homology checks"};
    app.require_subcommand(1);
    Options o;
    std::map<std::string, Result (*)(const Options&)> handlers;

    auto files = [&](CLI::App* s, bool required = true) {
        auto* opt = s->add_option("files", o.files, "Input JSON documents");
        if (required) opt->required();
    };
    auto coeff = [&](CLI::App* s) { s->add_option("--coeff", o.coeff, "Coefficients: z, q or f<p>"); };
    auto cutoff = [&](CLI::App* s) { s->add_option("--cutoff", o.cutoff, "Truncation degree N"); };

    auto* validate_cmd = app.add_subcommand("validate", "Parse and validate a document");
    files(validate_cmd);
    handlers["validate"] = cmd_validate;

    auto* homology_cmd = app.add_subcommand("homology", "Homology of a set, nerve or total complex");
    files(homology_cmd);
    coeff(homology_cmd);
    cutoff(homology_cmd);
    homology_cmd->add_option("--max-degree", o.max_degree, "Highest degree to report");
    handlers["homology"] = cmd_homology;

    auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic of a finite semi-simplicial set");
    files(euler_cmd);
    handlers["euler"] = cmd_euler;

    auto* skeleton_cmd = app.add_subcommand("skeleton", "n-skeleton of a semi-simplicial set");
    files(skeleton_cmd);
    skeleton_cmd->add_option("--n", o.n, "Skeleton dimension")->required();
    handlers["skeleton"] = cmd_skeleton;

    auto* nerve_cmd = app.add_subcommand("nerve", "Nerve of a category or monoid");
    files(nerve_cmd);
    cutoff(nerve_cmd);
    handlers["nerve"] = cmd_nerve;

    auto* unitalize_cmd = app.add_subcommand("unitalize", "Freely adjoin units");
    files(unitalize_cmd);
    handlers["unitalize"] = cmd_unitalize;

    auto* over_cmd = app.add_subcommand("over", "Over category C/b, or comma category F/b for a functor");
    files(over_cmd);
    over_cmd->add_option("--object", o.object, "Object b")->required();
    over_cmd->add_flag("--under", o.dual, "Under category b/C or b/F instead");
    handlers["over"] = cmd_over;

    auto* bar_cmd = app.add_subcommand("bar", "Two-sided bar construction B(Y, M, X)");
    files(bar_cmd);
    cutoff(bar_cmd);
    bar_cmd->add_option("--right", o.right, "Right action Y: point or regular (default point)");
    bar_cmd->add_option("--left", o.left, "Left action X: point or regular (default regular)");
    handlers["bar"] = cmd_bar;

    auto* resolve_cmd = app.add_subcommand("resolve", "Comma resolution of a functor as a bi-semi-simplicial set");
    files(resolve_cmd);
    cutoff(resolve_cmd);
    resolve_cmd->add_flag("--dual", o.dual, "Use the b/F resolution");
    handlers["resolve"] = cmd_resolve;

    auto* specseq_cmd = app.add_subcommand("specseq", "Spectral sequence of a bi-semi-simplicial set");
    files(specseq_cmd);
    specseq_cmd->add_option("--coeff", o.coeff, "Field: q or f<p>")->required();
    specseq_cmd->add_option("--max-page", o.max_page, "Last page to compute");
    specseq_cmd->add_flag("--rows", o.rows, "Filter by rows instead of columns");
    handlers["specseq"] = cmd_specseq;

    auto* group_cmd = app.add_subcommand("group-complete", "Grothendieck group and classifying-space homology");
    files(group_cmd);
    cutoff(group_cmd);
    group_cmd->add_flag("--timing", o.timing, "Include wall-clock timing in the report");
    handlers["group-complete"] = cmd_group_complete;

    auto* check_cmd = app.add_subcommand("check", "Run a named check");
    check_cmd->add_option("id", o.check_id, "Check id")->required();
    files(check_cmd, false);
    cutoff(check_cmd);
    check_cmd->add_option("--seed", o.seed, "Seed for random suites");
    check_cmd->add_option("--count", o.count, "Instances in random suites (default 20)");
    check_cmd->add_option("--n", o.n, "Dimension parameter");
    check_cmd->add_option("--m", o.m, "Second dimension parameter");
    check_cmd->add_option("--size", o.size, "Size for the constant check");
    check_cmd->add_flag("--timing", o.timing, "Include wall-clock timing in the report");
    handlers["check"] = cmd_check;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        const auto r = handlers.at(name)(o);
        std::cout << io::dump(r.body);
        std::cerr << r.table;
        return r.code;
    } catch (const io::FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 2;
    } catch (const Usage& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
