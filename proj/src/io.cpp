#include "sscat/io.hpp"

#include <fstream>
#include <sstream>

namespace sscat::io {

FormatError::FormatError(std::string path, const std::string& what)
    : Error((path.empty() ? std::string("/") : path) + ": " + what), path_(std::move(path))
{
}

namespace {

/// A JSON value together with its pointer path, for error messages.
class Node {
public:
    Node(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

    const Json& json() const { return j_; }
    const std::string& path() const { return path_; }
    [[noreturn]] void fail(const std::string& what) const { throw FormatError(path_, what); }

    bool has(const std::string& key) const { return j_.is_object() && j_.contains(key); }

    Node at(const std::string& key) const
    {
        if (!j_.is_object()) fail("expected an object");
        auto it = j_.find(key);
        if (it == j_.end()) throw FormatError(path_ + "/" + key, "missing field");
        return Node(*it, path_ + "/" + key);
    }

    std::size_t size() const
    {
        if (!j_.is_array()) fail("expected an array");
        return j_.size();
    }

    Node operator[](std::size_t i) const { return Node(j_[i], path_ + "/" + std::to_string(i)); }

    Index index() const
    {
        if (!j_.is_number_integer() || j_.get<long long>() < 0) fail("expected a non-negative integer");
        return j_.get<Index>();
    }

    Index index_below(Index bound) const
    {
        const Index v = index();
        if (v >= bound) fail("index " + std::to_string(v) + " out of range (size " + std::to_string(bound) + ")");
        return v;
    }

    long integer() const
    {
        if (!j_.is_number_integer()) fail("expected an integer");
        return j_.get<long>();
    }

    Integer big() const
    {
        if (j_.is_number_integer()) return Integer(j_.get<long>());
        if (j_.is_string()) {
            Integer v;
            if (v.set_str(j_.get<std::string>(), 10) != 0) fail("expected a decimal integer string");
            return v;
        }
        fail("expected an integer or a decimal string");
    }

    std::string string() const
    {
        if (!j_.is_string()) fail("expected a string");
        return j_.get<std::string>();
    }

    std::vector<Index> indices(Index bound) const
    {
        std::vector<Index> out(size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)[i].index_below(bound);
        return out;
    }

    std::vector<Index> indices_exact(Index count, Index bound) const
    {
        if (size() != count) fail("expected " + std::to_string(count) + " entries, got " + std::to_string(size()));
        return indices(bound);
    }

    std::optional<int> optional_int(const std::string& key) const
    {
        if (!has(key) || j_[key].is_null()) return std::nullopt;
        const auto v = at(key).integer();
        if (v < 0) at(key).fail("expected a non-negative integer");
        return static_cast<int>(v);
    }

private:
    const Json& j_;
    std::string path_;
};

void require_type(const Node& n, const std::string& type)
{
    const auto t = n.at("type").string();
    if (t != type) n.at("type").fail("expected type '" + type + "', got '" + t + "'");
}

void check_valid(const ValidationReport& v, const std::string& what)
{
    if (!v) throw InvalidDocument("", "invalid " + what + ": " + v.message);
}

Json opt(std::optional<int> v) { return v ? Json(*v) : Json(nullptr); }

Json big_json(const Integer& v)
{
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

// Semi-simplicial sets ----------------------------------------------------------

SemiSimplicialSet read_sset(const Node& n)
{
    require_type(n, "sset");
    const auto lv = n.at("levels");
    std::vector<Level> levels(lv.size());
    for (std::size_t p = 0; p < levels.size(); ++p) {
        const auto l = lv[p];
        levels[p].size = l.at("size").index();
        if (p == 0) {
            if (l.has("faces") && l.at("faces").size() != 0) l.at("faces").fail("level 0 has no faces");
            continue;
        }
        const auto f = l.at("faces");
        if (f.size() != p + 1) f.fail("expected " + std::to_string(p + 1) + " face tables");
        for (std::size_t i = 0; i <= p; ++i) levels[p].faces.push_back(f[i].indices_exact(levels[p].size, levels[p - 1].size));
    }
    const auto trunc = n.optional_int("truncated_at");
    if (trunc && *trunc + 1 != static_cast<int>(levels.size())) n.at("truncated_at").fail("must equal the last level");
    const std::optional<int> top = trunc ? std::nullopt : std::optional<int>(static_cast<int>(levels.size()) - 1);
    SemiSimplicialSet x(std::move(levels), top, trunc);
    check_valid(validate(x), "semi-simplicial set");
    return x;
}

// Simplicial sets -----------------------------------------------------------------

SimplexRef read_ref(const Node& n, int q, const std::vector<Index>& counts)
{
    SimplexRef r;
    const auto deg = n.at("deg").integer();
    if (deg < 0 || deg >= q) n.at("deg").fail("generator degree must lie in [0, " + std::to_string(q - 1) + "]");
    r.degree = static_cast<int>(deg);
    r.index = n.at("idx").index_below(counts[deg]);
    const auto w = n.at("word");
    for (std::size_t k = 0; k < w.size(); ++k) r.word.indices.push_back(static_cast<int>(w[k].integer()));
    if (r.simplex_degree() != q - 1) n.fail("a face of a " + std::to_string(q) + "-simplex must have degree " + std::to_string(q - 1));
    if (!r.word.is_canonical()) n.at("word").fail("degeneracy word must be strictly decreasing and in range");
    return r;
}

SimplicialSet read_simplicial(const Node& n)
{
    require_type(n, "simplicial");
    const auto gens = n.at("generators");
    std::vector<Index> counts(gens.size());
    SimplicialSet::FaceTable faces(gens.size());
    for (std::size_t q = 0; q < counts.size(); ++q) {
        const auto g = gens[q];
        counts[q] = g.at("size").index();
        if (q == 0) continue;
        const auto f = g.at("faces");
        if (f.size() != counts[q]) f.fail("expected " + std::to_string(counts[q]) + " face lists");
        faces[q].resize(counts[q]);
        for (Index s = 0; s < counts[q]; ++s) {
            const auto fs = f[s];
            if (fs.size() != q + 1) fs.fail("expected " + std::to_string(q + 1) + " faces");
            for (std::size_t i = 0; i <= q; ++i) faces[q][s].push_back(read_ref(fs[i], static_cast<int>(q), counts));
        }
    }
    SimplicialSet y(std::move(counts), std::move(faces), n.optional_int("truncated_at"));
    check_valid(validate(y), "simplicial set");
    return y;
}

Json ref_json(const SimplexRef& r)
{
    return Json{{"word", r.word.indices}, {"deg", r.degree}, {"idx", r.index}};
}

// Bi-semi-simplicial sets -------------------------------------------------------------

BiSemiSimplicialSet read_bisset(const Node& n)
{
    require_type(n, "bisset");
    const auto cs = n.at("cells");
    std::vector<std::vector<BiSemiSimplicialSet::Cell>> cells(cs.size());
    std::size_t width = 0;
    for (std::size_t p = 0; p < cells.size(); ++p) {
        const auto row = cs[p];
        if (p == 0) width = row.size();
        if (row.size() != width) row.fail("cells must form a rectangle");
        cells[p].resize(width);
        for (std::size_t q = 0; q < width; ++q) cells[p][q].size = row[q].at("size").index();
    }
    for (std::size_t p = 0; p < cells.size(); ++p) {
        for (std::size_t q = 0; q < width; ++q) {
            const auto c = cs[p][q];
            auto& cell = cells[p][q];
            if (p > 0) {
                const auto dh = c.at("dh");
                if (dh.size() != p + 1) dh.fail("expected " + std::to_string(p + 1) + " tables");
                for (std::size_t i = 0; i <= p; ++i) cell.dh.push_back(dh[i].indices_exact(cell.size, cells[p - 1][q].size));
            }
            if (q > 0) {
                const auto dv = c.at("dv");
                if (dv.size() != q + 1) dv.fail("expected " + std::to_string(q + 1) + " tables");
                for (std::size_t j = 0; j <= q; ++j) cell.dv.push_back(dv[j].indices_exact(cell.size, cells[p][q - 1].size));
            }
        }
    }
    BiSemiSimplicialSet b(std::move(cells), n.optional_int("truncated_p"), n.optional_int("truncated_q"));
    check_valid(validate(b), "bi-semi-simplicial set");
    return b;
}

// Categories, functors, transformations ---------------------------------------------

FinNonUnitalCategory read_category(const Node& n)
{
    require_type(n, "category");
    const Index objects = n.at("objects").index();
    const auto ms = n.at("morphisms");
    std::vector<FinNonUnitalCategory::Morphism> morphisms(ms.size());
    for (std::size_t f = 0; f < morphisms.size(); ++f) {
        morphisms[f].src = ms[f].at("src").index_below(objects);
        morphisms[f].tgt = ms[f].at("tgt").index_below(objects);
    }
    const auto cs = n.at("compose");
    std::vector<FinNonUnitalCategory::Composite> composites(cs.size());
    for (std::size_t k = 0; k < composites.size(); ++k) {
        composites[k].f = cs[k].at("f").index_below(morphisms.size());
        composites[k].g = cs[k].at("g").index_below(morphisms.size());
        composites[k].gf = cs[k].at("gf").index_below(morphisms.size());
    }
    std::optional<std::vector<Index>> units;
    if (n.has("units") && !n.json()["units"].is_null()) units = n.at("units").indices_exact(objects, morphisms.size());
    try {
        FinNonUnitalCategory c(objects, std::move(morphisms), composites, std::move(units));
        check_valid(validate(c), "category");
        return c;
    } catch (const FormatError&) {
        throw;
    } catch (const Error& e) {
        throw FormatError(n.path() + "/compose", e.what());
    }
}

Json category_json(const FinNonUnitalCategory& c)
{
    Json ms = Json::array();
    for (const auto& m : c.morphism_list()) ms.push_back(Json{{"src", m.src}, {"tgt", m.tgt}});
    Json cs = Json::array();
    for (const auto& k : c.composites()) cs.push_back(Json{{"f", k.f}, {"g", k.g}, {"gf", k.gf}});
    Json j{{"type", "category"}, {"objects", c.objects()}, {"morphisms", ms}, {"compose", cs}};
    j["units"] = c.has_units() ? Json(*c.units()) : Json(nullptr);
    return j;
}

FunctorData read_functor_data(const Node& n, const FinNonUnitalCategory& c, const FinNonUnitalCategory& d)
{
    FunctorData f;
    f.objects = n.at("objects").indices_exact(c.objects(), d.objects());
    f.morphisms = n.at("morphisms").indices_exact(c.morphisms(), d.morphisms());
    return f;
}

Json functor_data_json(const FunctorData& f) { return Json{{"objects", f.objects}, {"morphisms", f.morphisms}}; }

FunctorDocument read_functor(const Node& n)
{
    require_type(n, "functor");
    FunctorDocument doc;
    doc.source = read_category(n.at("source"));
    doc.target = read_category(n.at("target"));
    doc.functor = read_functor_data(n, doc.source, doc.target);
    check_valid(validate(doc.functor, doc.source, doc.target), "functor");
    return doc;
}

NatTransDocument read_nat_trans(const Node& n)
{
    require_type(n, "nat-trans");
    NatTransDocument doc;
    doc.source = read_category(n.at("source"));
    doc.target = read_category(n.at("target"));
    doc.f = read_functor_data(n.at("f"), doc.source, doc.target);
    doc.g = read_functor_data(n.at("g"), doc.source, doc.target);
    check_valid(validate(doc.f, doc.source, doc.target), "functor f");
    check_valid(validate(doc.g, doc.source, doc.target), "functor g");
    doc.eta.components = n.at("components").indices_exact(doc.source.objects(), doc.target.morphisms());
    check_valid(validate(doc.eta, doc.f, doc.g, doc.source, doc.target), "natural transformation");
    return doc;
}

// Monoids ----------------------------------------------------------------------------

FinMonoid read_monoid(const Node& n)
{
    require_type(n, "monoid");
    FinMonoid m;
    const auto t = n.at("table");
    const Index size = t.size();
    for (Index a = 0; a < size; ++a) m.table.push_back(t[a].indices_exact(size, size));
    m.unit = n.at("unit").index_below(std::max<Index>(size, 1));
    if (size == 0) n.at("table").fail("a monoid has at least one element");
    check_valid(validate(m), "monoid");
    return m;
}

std::vector<long> read_exponents(const Node& n, Index k)
{
    if (n.size() != k) n.fail("expected " + std::to_string(k) + " exponents");
    std::vector<long> out(k);
    for (Index i = 0; i < k; ++i) {
        out[i] = n[i].integer();
        if (out[i] < 0) n[i].fail("exponents are non-negative");
    }
    return out;
}

MonoidPresentation read_presentation(const Node& n)
{
    require_type(n, "monoid-presentation");
    MonoidPresentation p;
    p.generators = n.at("generators").index();
    const auto rs = n.at("relations");
    for (std::size_t k = 0; k < rs.size(); ++k) {
        if (rs[k].size() != 2) rs[k].fail("a relation is a pair [lhs, rhs]");
        p.relations.push_back({read_exponents(rs[k][0], p.generators), read_exponents(rs[k][1], p.generators)});
    }
    check_valid(validate(p), "monoid presentation");
    return p;
}

ActionDocument read_action(const Node& n)
{
    require_type(n, "action");
    ActionDocument doc;
    doc.monoid = read_monoid(n.at("monoid"));
    const auto side = n.at("side").string();
    if (side != "left" && side != "right") n.at("side").fail("expected 'left' or 'right'");
    doc.action.side = side == "left" ? MonoidAction::Side::Left : MonoidAction::Side::Right;
    doc.action.size = n.at("size").index();
    const auto t = n.at("table");
    if (t.size() != doc.monoid.size()) t.fail("expected one row per monoid element");
    for (Index m = 0; m < doc.monoid.size(); ++m) doc.action.table.push_back(t[m].indices_exact(doc.action.size, doc.action.size));
    check_valid(validate(doc.action, doc.monoid), "action");
    return doc;
}

// Matrices ------------------------------------------------------------------------------

SparseMatrix read_matrix(const Node& n)
{
    require_type(n, "matrix");
    const Index rows = n.at("rows").index();
    const Index cols = n.at("cols").index();
    SparseMatrix m(rows, cols);
    const auto es = n.at("entries");
    for (std::size_t k = 0; k < es.size(); ++k) {
        const auto e = es[k];
        if (e.size() != 3) e.fail("an entry is [row, col, value]");
        m.add(e[0].index_below(rows), e[1].index_below(cols), e[2].big());
    }
    return m;
}

}  // namespace

std::string type_name(const Document& d)
{
    static const char* names[] = {"sset",  "simplicial", "bisset", "category", "functor",
                                  "nat-trans", "monoid", "monoid-presentation", "action", "matrix"};
    return names[d.index()];
}

Json to_json(const SemiSimplicialSet& x)
{
    Json levels = Json::array();
    for (int p = 0; p < x.num_levels(); ++p) {
        Json l{{"size", x.size(p)}};
        if (p > 0) l["faces"] = x.level(p).faces;
        levels.push_back(std::move(l));
    }
    Json j{{"type", "sset"}, {"levels", levels}};
    if (x.is_truncated()) j["truncated_at"] = *x.truncated_at();
    return j;
}

Json to_json(const SimplicialSet& y)
{
    Json gens = Json::array();
    for (int q = 0; q <= y.top_degree(); ++q) {
        Json g{{"size", y.generators(q)}};
        if (q > 0) {
            Json fs = Json::array();
            for (Index s = 0; s < y.generators(q); ++s) {
                Json one = Json::array();
                for (int i = 0; i <= q; ++i) one.push_back(ref_json(y.generator_face(q, s, i)));
                fs.push_back(std::move(one));
            }
            g["faces"] = std::move(fs);
        }
        gens.push_back(std::move(g));
    }
    Json j{{"type", "simplicial"}, {"generators", gens}};
    if (y.truncated_at()) j["truncated_at"] = *y.truncated_at();
    return j;
}

Json to_json(const BiSemiSimplicialSet& b)
{
    Json cells = Json::array();
    for (int p = 0; p <= b.max_p(); ++p) {
        Json row = Json::array();
        for (int q = 0; q <= b.max_q(); ++q) {
            const auto& c = b.cell(p, q);
            Json cell{{"size", c.size}};
            if (p > 0) cell["dh"] = c.dh;
            if (q > 0) cell["dv"] = c.dv;
            row.push_back(std::move(cell));
        }
        cells.push_back(std::move(row));
    }
    return Json{{"type", "bisset"}, {"cells", cells}, {"truncated_p", opt(b.truncated_p())},
                {"truncated_q", opt(b.truncated_q())}};
}

Json to_json(const FinNonUnitalCategory& c) { return category_json(c); }

Json to_json(const FunctorDocument& f)
{
    return Json{{"type", "functor"},
                {"source", category_json(f.source)},
                {"target", category_json(f.target)},
                {"objects", f.functor.objects},
                {"morphisms", f.functor.morphisms}};
}

Json to_json(const NatTransDocument& n)
{
    return Json{{"type", "nat-trans"},          {"source", category_json(n.source)},
                {"target", category_json(n.target)}, {"f", functor_data_json(n.f)},
                {"g", functor_data_json(n.g)},       {"components", n.eta.components}};
}

Json to_json(const FinMonoid& m) { return Json{{"type", "monoid"}, {"table", m.table}, {"unit", m.unit}}; }

Json to_json(const MonoidPresentation& p)
{
    Json rels = Json::array();
    for (const auto& [l, r] : p.relations) rels.push_back(Json::array({l, r}));
    return Json{{"type", "monoid-presentation"}, {"generators", p.generators}, {"relations", rels}};
}

Json to_json(const ActionDocument& a)
{
    return Json{{"type", "action"},
                {"monoid", to_json(a.monoid)},
                {"side", a.action.side == MonoidAction::Side::Left ? "left" : "right"},
                {"size", a.action.size},
                {"table", a.action.table}};
}

Json to_json(const SparseMatrix& m)
{
    Json entries = Json::array();
    for (Index c = 0; c < m.cols(); ++c) {
        auto col = m.column(c);
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
        for (const auto& e : col) entries.push_back(Json::array({e.row, c, big_json(e.value)}));
    }
    return Json{{"type", "matrix"}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const Document& d)
{
    return std::visit([](const auto& v) { return to_json(v); }, d);
}

Document from_json(const Json& j)
{
    const Node n(j, "");
    const auto type = n.at("type").string();
    if (type == "sset") return read_sset(n);
    if (type == "simplicial") return read_simplicial(n);
    if (type == "bisset") return read_bisset(n);
    if (type == "category") return read_category(n);
    if (type == "functor") return read_functor(n);
    if (type == "nat-trans") return read_nat_trans(n);
    if (type == "monoid") return read_monoid(n);
    if (type == "monoid-presentation") return read_presentation(n);
    if (type == "action") return read_action(n);
    if (type == "matrix") return read_matrix(n);
    n.at("type").fail("unknown document type '" + type + "'");
}

Document load_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw FormatError("", "cannot open " + path.string());
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw FormatError("", path.string() + ": " + e.what());
    }
    return from_json(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void save_file(const Document& d, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << dump(to_json(d));
}

// Reports -------------------------------------------------------------------------------

namespace {

Json items_json(const std::vector<CheckItem>& items)
{
    Json out = Json::array();
    for (const auto& i : items) {
        Json e{{"name", i.name}};
        e["degree"] = i.degree >= 0 ? Json(i.degree) : Json(nullptr);
        e["expected"] = i.expected;
        e["actual"] = i.actual;
        e["trusted"] = i.trusted;
        e["ok"] = i.ok;
        out.push_back(std::move(e));
    }
    return out;
}

Json pairs_json(const std::vector<std::pair<std::string, std::string>>& pairs)
{
    Json out = Json::object();
    for (const auto& [k, v] : pairs) out[k] = v;
    return out;
}

}  // namespace

Json report_json(const CheckReport& r, bool with_timing)
{
    Json j{{"check", r.id},
           {"verdict", to_string(r.verdict)},
           {"parameters", pairs_json(r.parameters)},
           {"hypotheses", items_json(r.hypotheses)},
           {"comparisons", items_json(r.comparisons)},
           {"values", pairs_json(r.values)},
           {"notes", r.notes}};
    if (with_timing && r.seconds) j["timing"] = Json{{"seconds", *r.seconds}};
    return j;
}

std::string group_name(const FPAbelianGroup& g, const Ring& ring)
{
    if (!ring.is_field()) return g.to_string();
    if (g.rank == 0) return "0";
    return g.rank == 1 ? ring.name() : ring.name() + "^" + std::to_string(g.rank);
}

Json homology_json(const std::vector<HomologyGroup>& groups, const Ring& ring)
{
    Json gs = Json::array();
    for (const auto& h : groups) {
        Json torsion = Json::array();
        for (const auto& t : h.group.torsion) torsion.push_back(big_json(t));
        gs.push_back(Json{{"degree", h.degree},
                          {"group", group_name(h.group, ring)},
                          {"rank", h.group.rank},
                          {"torsion", torsion},
                          {"trusted", h.trusted}});
    }
    return Json{{"coefficients", ring.name()}, {"homology", gs}};
}

Json pages_json(const std::vector<SSPage>& pages)
{
    Json ps = Json::array();
    for (const auto& p : pages) {
        Json trusted = Json::array();
        for (const auto& row : p.trusted) trusted.push_back(std::vector<bool>(row.begin(), row.end()));
        ps.push_back(Json{{"r", p.r},
                          {"stable", p.stable},
                          {"dims", p.dims},
                          {"differential_rank", p.differential_rank},
                          {"trusted", trusted}});
    }
    Json j{{"orientation", pages.empty() ? "columns" : to_string(pages.front().orientation)}};
    j["coefficients"] = pages.empty() || pages.front().characteristic == 0
                            ? std::string("q")
                            : "f" + std::to_string(pages.front().characteristic);
    j["pages"] = ps;
    return j;
}

Json convergence_json(const ConvergenceReport& c)
{
    Json ds = Json::array();
    for (const auto& d : c.degrees) {
        ds.push_back(Json{{"n", d.n}, {"e_infinity", d.e_infinity}, {"homology", d.homology}, {"trusted", d.trusted}});
    }
    return Json{{"ok", c.ok}, {"degrees", ds}};
}

}  // namespace sscat::io
