#include "sscat/category.hpp"

#include <algorithm>
#include <map>

#include "sscat/detail/keyed.hpp"

namespace sscat {

using detail::Key;

FinNonUnitalCategory::FinNonUnitalCategory(Index objects, std::vector<Morphism> morphisms,
                                           const std::vector<Composite>& composites,
                                           std::optional<std::vector<Index>> units)
    : objects_(objects), morphisms_(std::move(morphisms)), units_(std::move(units))
{
    const Index m = morphisms_.size();
    for (Index f = 0; f < m; ++f) {
        if (morphisms_[f].src >= objects_ || morphisms_[f].tgt >= objects_) {
            throw Error("morphism " + std::to_string(f) + " has an endpoint out of range");
        }
    }
    table_.assign(m * m, npos);
    for (const auto& c : composites) {
        if (c.f >= m || c.g >= m || c.gf >= m) throw Error("composite refers to a morphism out of range");
        Index& slot = table_[c.f * m + c.g];
        if (slot != npos) {
            throw Error("composite of (" + std::to_string(c.f) + ", " + std::to_string(c.g) + ") listed twice");
        }
        slot = c.gf;
    }
    if (units_) {
        if (units_->size() != objects_) throw Error("units must list one morphism per object");
        for (Index u : *units_) {
            if (u >= m) throw Error("unit morphism out of range");
        }
    }
    outgoing_.assign(objects_, {});
    incoming_.assign(objects_, {});
    for (Index f = 0; f < m; ++f) {
        outgoing_[morphisms_[f].src].push_back(f);
        incoming_[morphisms_[f].tgt].push_back(f);
    }
}

Index FinNonUnitalCategory::compose(Index f, Index g) const
{
    if (tgt(f) != src(g)) throw Error("compose: morphisms " + std::to_string(f) + ", " + std::to_string(g) + " are not composable");
    Index r = composite(f, g);
    if (r == npos) throw Error("compose: no composite recorded for (" + std::to_string(f) + ", " + std::to_string(g) + ")");
    return r;
}

std::vector<FinNonUnitalCategory::Composite> FinNonUnitalCategory::composites() const
{
    std::vector<Composite> out;
    const Index m = morphisms();
    for (Index f = 0; f < m; ++f) {
        for (Index g = 0; g < m; ++g) {
            if (table_[f * m + g] != npos) out.push_back({f, g, table_[f * m + g]});
        }
    }
    return out;
}

ValidationReport validate(const FinNonUnitalCategory& c)
{
    const Index m = c.morphisms();
    for (Index f = 0; f < m; ++f) {
        for (Index g = 0; g < m; ++g) {
            const Index gf = c.composite(f, g);
            const bool composable = c.tgt(f) == c.src(g);
            if (composable && gf == npos) {
                return ValidationReport::fail("composition undefined on composable pair (" + std::to_string(f) + ", " +
                                              std::to_string(g) + ")");
            }
            if (!composable && gf != npos) {
                return ValidationReport::fail("composite given for non-composable pair (" + std::to_string(f) + ", " +
                                              std::to_string(g) + ")");
            }
            if (composable && (c.src(gf) != c.src(f) || c.tgt(gf) != c.tgt(g))) {
                return ValidationReport::fail("composite of (" + std::to_string(f) + ", " + std::to_string(g) +
                                              ") has the wrong source or target");
            }
        }
    }
    for (Index f = 0; f < m; ++f) {
        for (Index g : c.outgoing(c.tgt(f))) {
            const Index gf = c.composite(f, g);
            for (Index h : c.outgoing(c.tgt(g))) {
                if (c.composite(gf, h) != c.composite(f, c.composite(g, h))) {
                    return ValidationReport::fail("associativity fails on (" + std::to_string(f) + ", " +
                                                  std::to_string(g) + ", " + std::to_string(h) + ")");
                }
            }
        }
    }
    if (c.has_units()) {
        for (Index x = 0; x < c.objects(); ++x) {
            const Index u = c.unit(x);
            if (c.src(u) != x || c.tgt(u) != x) {
                return ValidationReport::fail("unit of object " + std::to_string(x) + " is not an endomorphism of it");
            }
        }
        for (Index f = 0; f < m; ++f) {
            if (c.composite(c.unit(c.src(f)), f) != f || c.composite(f, c.unit(c.tgt(f))) != f) {
                return ValidationReport::fail("unit law fails for morphism " + std::to_string(f));
            }
        }
    }
    return ValidationReport::pass();
}

ValidationReport validate(const FunctorData& f, const FinNonUnitalCategory& c, const FinNonUnitalCategory& d,
                          bool preserve_units)
{
    if (f.objects.size() != c.objects() || f.morphisms.size() != c.morphisms()) {
        return ValidationReport::fail("functor tables do not match the source category");
    }
    for (Index x : f.objects) {
        if (x >= d.objects()) return ValidationReport::fail("functor object image out of range");
    }
    for (Index k = 0; k < c.morphisms(); ++k) {
        const Index fk = f.morphisms[k];
        if (fk >= d.morphisms()) return ValidationReport::fail("functor morphism image out of range");
        if (d.src(fk) != f.objects[c.src(k)] || d.tgt(fk) != f.objects[c.tgt(k)]) {
            return ValidationReport::fail("functor does not preserve source/target of morphism " + std::to_string(k));
        }
    }
    for (const auto& comp : c.composites()) {
        if (d.composite(f.morphisms[comp.f], f.morphisms[comp.g]) != f.morphisms[comp.gf]) {
            return ValidationReport::fail("functor does not preserve the composite of (" + std::to_string(comp.f) +
                                          ", " + std::to_string(comp.g) + ")");
        }
    }
    if (preserve_units) {
        if (!c.has_units() || !d.has_units()) return ValidationReport::fail("unit preservation needs units on both sides");
        for (Index x = 0; x < c.objects(); ++x) {
            if (f.morphisms[c.unit(x)] != d.unit(f.objects[x])) {
                return ValidationReport::fail("functor does not preserve the unit of object " + std::to_string(x));
            }
        }
    }
    return ValidationReport::pass();
}

ValidationReport validate(const NatTransData& eta, const FunctorData& f, const FunctorData& g,
                          const FinNonUnitalCategory& c, const FinNonUnitalCategory& d)
{
    if (eta.components.size() != c.objects()) return ValidationReport::fail("one component per object required");
    for (Index x = 0; x < c.objects(); ++x) {
        const Index e = eta.components[x];
        if (e >= d.morphisms() || d.src(e) != f.objects[x] || d.tgt(e) != g.objects[x]) {
            return ValidationReport::fail("component at object " + std::to_string(x) + " is not F(c) -> G(c)");
        }
    }
    for (Index k = 0; k < c.morphisms(); ++k) {
        const Index lhs = d.composite(eta.components[c.src(k)], g.morphisms[k]);
        const Index rhs = d.composite(f.morphisms[k], eta.components[c.tgt(k)]);
        if (lhs == npos || lhs != rhs) {
            return ValidationReport::fail("naturality square fails at morphism " + std::to_string(k));
        }
    }
    return ValidationReport::pass();
}

// Nerves ----------------------------------------------------------------------

namespace {

/// Face i of an arrow chain of length L >= 1; for L == 1 returns the object.
Key chain_face(const FinNonUnitalCategory& c, const Key& arrows, int i)
{
    const int len = static_cast<int>(arrows.size());
    if (len == 1) return {i == 0 ? c.tgt(arrows[0]) : c.src(arrows[0])};
    Key out;
    out.reserve(len - 1);
    for (int k = 0; k < len; ++k) {
        if (i == 0 && k == 0) continue;
        if (i == len && k == len - 1) continue;
        if (i > 0 && i < len && k == i - 1) {
            out.push_back(c.compose(arrows[k], arrows[k + 1]));
            ++k;
            continue;
        }
        out.push_back(arrows[k]);
    }
    return out;
}

std::vector<std::vector<Key>> chains_through(const FinNonUnitalCategory& c, int cutoff)
{
    std::vector<std::vector<Key>> keys(cutoff + 1);
    for (Index x = 0; x < c.objects(); ++x) keys[0].push_back({x});
    if (cutoff >= 1) {
        for (Index f = 0; f < c.morphisms(); ++f) keys[1].push_back({f});
    }
    for (int p = 2; p <= cutoff; ++p) {
        for (const auto& k : keys[p - 1]) {
            for (Index g : c.outgoing(c.tgt(k.back()))) {
                Key n = k;
                n.push_back(g);
                keys[p].push_back(std::move(n));
            }
        }
        std::sort(keys[p].begin(), keys[p].end());
    }
    std::sort(keys[1].begin(), keys[1].end());
    return keys;
}

Index first_object(const FinNonUnitalCategory& c, int p, const Key& chain)
{
    return p == 0 ? chain[0] : c.src(chain.front());
}

Index last_object(const FinNonUnitalCategory& c, int p, const Key& chain)
{
    return p == 0 ? chain[0] : c.tgt(chain.back());
}

Key nerve_face(const FinNonUnitalCategory& c, int p, const Key& chain, int i)
{
    (void)p;
    return chain_face(c, chain, i);
}

}  // namespace

Index NerveData::index_of(int p, const std::vector<Index>& chain) const
{
    return detail::find_key(chains[p], chain);
}

NerveData nerve_full(const FinNonUnitalCategory& c, int cutoff)
{
    if (cutoff < 0) throw Error("nerve: cutoff must be non-negative");
    auto v = validate(c);
    if (!v) throw Error("nerve: invalid category: " + v.message);
    NerveData n;
    n.chains = chains_through(c, cutoff);
    auto levels = detail::levels_from_keys(n.chains, [&](int p, int i, const Key& k) { return nerve_face(c, p, k, i); });
    n.sset = SemiSimplicialSet(std::move(levels), std::nullopt, cutoff);
    return n;
}

SemiSimplicialSet nerve(const FinNonUnitalCategory& c, int cutoff) { return nerve_full(c, cutoff).sset; }

SSetMap nerve_map(const FunctorData& f, const NerveData& nc, const NerveData& nd)
{
    SSetMap m;
    const int top = std::min(static_cast<int>(nc.chains.size()), static_cast<int>(nd.chains.size())) - 1;
    for (int p = 0; p <= top; ++p) {
        std::vector<Index> comp;
        comp.reserve(nc.chains[p].size());
        for (const auto& chain : nc.chains[p]) {
            Key img;
            if (p == 0) {
                img = {f.objects[chain[0]]};
            } else {
                for (Index k : chain) img.push_back(f.morphisms[k]);
            }
            comp.push_back(nd.index_of(p, img));
        }
        m.components.push_back(std::move(comp));
    }
    return m;
}

SimplicialTable nerve_with_degeneracies(const FinNonUnitalCategory& c, int cutoff)
{
    if (!c.has_units()) throw Error("degeneracies need a unital category");
    auto n = nerve_full(c, cutoff);
    SimplicialTable t;
    t.faces = n.sset;
    for (int p = 0; p < cutoff; ++p) {
        std::vector<std::vector<Index>> level(p + 1, std::vector<Index>(n.chains[p].size()));
        for (Index s = 0; s < n.chains[p].size(); ++s) {
            const Key& chain = n.chains[p][s];
            for (int j = 0; j <= p; ++j) {
                Key img;
                if (p == 0) {
                    img = {c.unit(chain[0])};
                } else {
                    const Index obj = j == 0 ? c.src(chain[0]) : c.tgt(chain[j - 1]);
                    img = chain;
                    img.insert(img.begin() + j, c.unit(obj));
                }
                level[j][s] = n.index_of(p + 1, img);
            }
        }
        t.degeneracies.push_back(std::move(level));
    }
    return t;
}

// Constructions ---------------------------------------------------------------

FinNonUnitalCategory unitalize(const FinNonUnitalCategory& c)
{
    auto morphisms = c.morphism_list();
    auto composites = c.composites();
    const Index m = c.morphisms();
    std::vector<Index> units;
    for (Index x = 0; x < c.objects(); ++x) {
        morphisms.push_back({x, x});
        units.push_back(m + x);
    }
    for (Index f = 0; f < m; ++f) {
        composites.push_back({units[c.src(f)], f, f});
        composites.push_back({f, units[c.tgt(f)], f});
    }
    for (Index x = 0; x < c.objects(); ++x) composites.push_back({units[x], units[x], units[x]});
    return FinNonUnitalCategory(c.objects(), std::move(morphisms), composites, units);
}

FunctorData unitalization_inclusion(const FinNonUnitalCategory& c)
{
    FunctorData f;
    for (Index x = 0; x < c.objects(); ++x) f.objects.push_back(x);
    for (Index k = 0; k < c.morphisms(); ++k) f.morphisms.push_back(k);
    return f;
}

FunctorData identity_functor(const FinNonUnitalCategory& c) { return unitalization_inclusion(c); }

FunctorData constant_functor(const FinNonUnitalCategory& c, Index object, Index morphism)
{
    FunctorData f;
    f.objects.assign(c.objects(), object);
    f.morphisms.assign(c.morphisms(), morphism);
    return f;
}

FinNonUnitalCategory comma_over(const FunctorData& f, const FinNonUnitalCategory& c, const FinNonUnitalCategory& d,
                                Index b)
{
    // objects (a, u : F(a) -> b); morphisms (k : a -> a', target object (a', u'))
    std::vector<std::pair<Index, Index>> objs;
    for (Index a = 0; a < c.objects(); ++a) {
        for (Index u : d.incoming(b)) {
            if (d.src(u) == f.objects[a]) objs.push_back({a, u});
        }
    }
    std::map<std::pair<Index, Index>, Index> obj_index;
    for (Index i = 0; i < objs.size(); ++i) obj_index[objs[i]] = i;
    std::vector<FinNonUnitalCategory::Morphism> morphisms;
    std::vector<std::pair<Index, Index>> mor_data;  // (k, target object)
    for (Index t = 0; t < objs.size(); ++t) {
        const auto [a2, u2] = objs[t];
        for (Index k : c.incoming(a2)) {
            const Index s = obj_index.at({c.src(k), d.compose(f.morphisms[k], u2)});
            morphisms.push_back({s, t});
            mor_data.push_back({k, t});
        }
    }
    std::map<std::pair<Index, Index>, Index> mor_index;
    for (Index i = 0; i < mor_data.size(); ++i) mor_index[mor_data[i]] = i;
    std::vector<FinNonUnitalCategory::Composite> composites;
    for (Index m1 = 0; m1 < morphisms.size(); ++m1) {
        for (Index m2 = 0; m2 < morphisms.size(); ++m2) {
            if (morphisms[m1].tgt != morphisms[m2].src) continue;
            const Index k = c.compose(mor_data[m1].first, mor_data[m2].first);
            composites.push_back({m1, m2, mor_index.at({k, mor_data[m2].second})});
        }
    }
    std::optional<std::vector<Index>> units;
    if (c.has_units() && d.has_units() && validate(f, c, d, true)) {
        std::vector<Index> u;
        for (Index i = 0; i < objs.size(); ++i) u.push_back(mor_index.at({c.unit(objs[i].first), i}));
        units = u;
    }
    return FinNonUnitalCategory(objs.size(), std::move(morphisms), composites, units);
}

FinNonUnitalCategory comma_under(const FunctorData& f, const FinNonUnitalCategory& c, const FinNonUnitalCategory& d,
                                 Index b)
{
    // objects (a, u : b -> F(a)); morphisms (k : a -> a', source object (a, u))
    std::vector<std::pair<Index, Index>> objs;
    for (Index a = 0; a < c.objects(); ++a) {
        for (Index u : d.outgoing(b)) {
            if (d.tgt(u) == f.objects[a]) objs.push_back({a, u});
        }
    }
    std::map<std::pair<Index, Index>, Index> obj_index;
    for (Index i = 0; i < objs.size(); ++i) obj_index[objs[i]] = i;
    std::vector<FinNonUnitalCategory::Morphism> morphisms;
    std::vector<std::pair<Index, Index>> mor_data;  // (k, source object)
    for (Index s = 0; s < objs.size(); ++s) {
        const auto [a, u] = objs[s];
        for (Index k : c.outgoing(a)) {
            const Index t = obj_index.at({c.tgt(k), d.compose(u, f.morphisms[k])});
            morphisms.push_back({s, t});
            mor_data.push_back({k, s});
        }
    }
    std::map<std::pair<Index, Index>, Index> mor_index;
    for (Index i = 0; i < mor_data.size(); ++i) mor_index[mor_data[i]] = i;
    std::vector<FinNonUnitalCategory::Composite> composites;
    for (Index m1 = 0; m1 < morphisms.size(); ++m1) {
        for (Index m2 = 0; m2 < morphisms.size(); ++m2) {
            if (morphisms[m1].tgt != morphisms[m2].src) continue;
            const Index k = c.compose(mor_data[m1].first, mor_data[m2].first);
            composites.push_back({m1, m2, mor_index.at({k, mor_data[m1].second})});
        }
    }
    std::optional<std::vector<Index>> units;
    if (c.has_units() && d.has_units() && validate(f, c, d, true)) {
        std::vector<Index> u;
        for (Index i = 0; i < objs.size(); ++i) u.push_back(mor_index.at({c.unit(objs[i].first), i}));
        units = u;
    }
    return FinNonUnitalCategory(objs.size(), std::move(morphisms), composites, units);
}

FinNonUnitalCategory over_category(const FinNonUnitalCategory& c, Index object)
{
    if (object >= c.objects()) throw Error("over_category: object out of range");
    return comma_over(identity_functor(c), c, c, object);
}

FinNonUnitalCategory under_category(const FinNonUnitalCategory& c, Index object)
{
    if (object >= c.objects()) throw Error("under_category: object out of range");
    return comma_under(identity_functor(c), c, c, object);
}

FinNonUnitalCategory poset_category(int n)
{
    if (n < 0) throw Error("poset_category: n must be non-negative");
    std::vector<FinNonUnitalCategory::Morphism> morphisms;
    std::map<std::pair<Index, Index>, Index> idx;
    for (int i = 0; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            idx[{i, j}] = morphisms.size();
            morphisms.push_back({static_cast<Index>(i), static_cast<Index>(j)});
        }
    }
    std::vector<FinNonUnitalCategory::Composite> composites;
    for (int i = 0; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            for (int k = j; k <= n; ++k) composites.push_back({idx[{i, j}], idx[{j, k}], idx[{i, k}]});
        }
    }
    std::vector<Index> units;
    for (int i = 0; i <= n; ++i) units.push_back(idx[{i, i}]);
    return FinNonUnitalCategory(n + 1, std::move(morphisms), composites, units);
}

FinNonUnitalCategory discrete_category(Index objects, bool with_units)
{
    if (!with_units) return FinNonUnitalCategory(objects, {}, {});
    std::vector<FinNonUnitalCategory::Morphism> morphisms;
    std::vector<FinNonUnitalCategory::Composite> composites;
    std::vector<Index> units;
    for (Index x = 0; x < objects; ++x) {
        morphisms.push_back({x, x});
        composites.push_back({x, x, x});
        units.push_back(x);
    }
    return FinNonUnitalCategory(objects, std::move(morphisms), composites, units);
}

FinNonUnitalCategory product_category(const FinNonUnitalCategory& a, const FinNonUnitalCategory& b)
{
    const Index ob = b.objects();
    const Index mb = b.morphisms();
    std::vector<FinNonUnitalCategory::Morphism> morphisms;
    for (Index f = 0; f < a.morphisms(); ++f) {
        for (Index g = 0; g < mb; ++g) {
            morphisms.push_back({a.src(f) * ob + b.src(g), a.tgt(f) * ob + b.tgt(g)});
        }
    }
    std::vector<FinNonUnitalCategory::Composite> composites;
    for (const auto& ca : a.composites()) {
        for (const auto& cb : b.composites()) {
            composites.push_back({ca.f * mb + cb.f, ca.g * mb + cb.g, ca.gf * mb + cb.gf});
        }
    }
    std::optional<std::vector<Index>> units;
    if (a.has_units() && b.has_units()) {
        std::vector<Index> u;
        for (Index x = 0; x < a.objects(); ++x) {
            for (Index y = 0; y < ob; ++y) u.push_back(a.unit(x) * mb + b.unit(y));
        }
        units = u;
    }
    return FinNonUnitalCategory(a.objects() * ob, std::move(morphisms), composites, units);
}

std::optional<Index> terminal_object(const FinNonUnitalCategory& c)
{
    for (Index t = 0; t < c.objects(); ++t) {
        std::vector<Index> count(c.objects(), 0);
        for (Index f : c.incoming(t)) ++count[c.src(f)];
        if (std::all_of(count.begin(), count.end(), [](Index n) { return n == 1; })) return t;
    }
    return std::nullopt;
}

// Resolutions -----------------------------------------------------------------

namespace {

/// Arrow chains of D of length `len` starting at `start` (for the dual, ending at it).
void extend_chains(const FinNonUnitalCategory& d, Key prefix, Index at, int remaining, std::vector<Key>& out)
{
    if (remaining == 0) {
        out.push_back(std::move(prefix));
        return;
    }
    for (Index g : d.outgoing(at)) {
        Key next = prefix;
        next.push_back(g);
        extend_chains(d, std::move(next), d.tgt(g), remaining - 1, out);
    }
}

void chains_ending(const FinNonUnitalCategory& d, Key suffix, Index at, int remaining, std::vector<Key>& out)
{
    if (remaining == 0) {
        out.push_back(std::move(suffix));
        return;
    }
    for (Index g : d.incoming(at)) {
        Key next;
        next.reserve(suffix.size() + 1);
        next.push_back(g);
        next.insert(next.end(), suffix.begin(), suffix.end());
        chains_ending(d, std::move(next), d.src(g), remaining - 1, out);
    }
}

std::size_t a_len(int p) { return p == 0 ? 1 : static_cast<std::size_t>(p); }

Key a_part(const Key& key, int p) { return Key(key.begin(), key.begin() + a_len(p)); }
Key d_part(const Key& key, int p) { return Key(key.begin() + a_len(p), key.end()); }

Key join(const Key& a, const Key& b)
{
    Key out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

CommaResolution build_resolution(const FunctorData& f, const FinNonUnitalCategory& c, const FinNonUnitalCategory& d,
                                 int cutoff, bool dual)
{
    if (cutoff < 0) throw Error("comma resolution: cutoff must be non-negative");
    auto vf = validate(f, c, d);
    if (!vf) throw Error("comma resolution: invalid functor: " + vf.message);
    CommaResolution r;
    r.dual = dual;
    r.source_nerve = nerve_full(c, cutoff);
    r.target_nerve = nerve_full(d, cutoff);
    const int n = cutoff;
    r.keys.assign(n + 1, std::vector<std::vector<Key>>(n + 1));
    for (int p = 0; p <= n; ++p) {
        for (const auto& a : r.source_nerve.chains[p]) {
            for (int q = 0; q <= n; ++q) {
                std::vector<Key> tails;
                if (!dual) {
                    extend_chains(d, {}, f.objects[last_object(c, p, a)], q + 1, tails);
                } else {
                    chains_ending(d, {}, f.objects[first_object(c, p, a)], q + 1, tails);
                }
                for (auto& t : tails) r.keys[p][q].push_back(join(a, t));
            }
        }
        for (int q = 0; q <= n; ++q) std::sort(r.keys[p][q].begin(), r.keys[p][q].end());
    }

    std::vector<std::vector<BiSemiSimplicialSet::Cell>> cells(n + 1, std::vector<BiSemiSimplicialSet::Cell>(n + 1));
    r.aug_c.assign(n + 1, std::vector<std::vector<Index>>(n + 1));
    r.aug_d.assign(n + 1, std::vector<std::vector<Index>>(n + 1));
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= n; ++q) {
            const auto& keys = r.keys[p][q];
            auto& cell = cells[p][q];
            cell.size = keys.size();
            if (p > 0) cell.dh.assign(p + 1, std::vector<Index>(keys.size()));
            if (q > 0) cell.dv.assign(q + 1, std::vector<Index>(keys.size()));
            for (Index s = 0; s < keys.size(); ++s) {
                const Key a = a_part(keys[s], p);
                const Key t = d_part(keys[s], p);
                for (int i = 0; p > 0 && i <= p; ++i) {
                    Key na = nerve_face(c, p, a, i);
                    Key nt = t;
                    if (!dual && i == p) nt[0] = d.compose(f.morphisms[a.back()], t[0]);
                    if (dual && i == 0) nt.back() = d.compose(t.back(), f.morphisms[a.front()]);
                    cell.dh[i][s] = detail::find_key(r.keys[p - 1][q], join(na, nt));
                }
                for (int j = 0; q > 0 && j <= q; ++j) {
                    Key nt = chain_face(d, t, dual ? j : j + 1);
                    cell.dv[j][s] = detail::find_key(r.keys[p][q - 1], join(a, nt));
                }
                r.aug_c[p][q].push_back(r.source_nerve.index_of(p, a));
                Key b;
                if (!dual) {
                    b = q == 0 ? Key{d.tgt(t[0])} : Key(t.begin() + 1, t.end());
                } else {
                    b = q == 0 ? Key{d.src(t[0])} : Key(t.begin(), t.end() - 1);
                }
                r.aug_d[p][q].push_back(r.target_nerve.index_of(q, b));
            }
        }
    }
    r.bisset = BiSemiSimplicialSet(std::move(cells), cutoff, cutoff);
    return r;
}

}  // namespace

CommaResolution comma_resolution(const FunctorData& f, const FinNonUnitalCategory& c, const FinNonUnitalCategory& d,
                                 int cutoff)
{
    return build_resolution(f, c, d, cutoff, false);
}

CommaResolution comma_resolution_dual(const FunctorData& f, const FinNonUnitalCategory& c,
                                      const FinNonUnitalCategory& d, int cutoff)
{
    return build_resolution(f, c, d, cutoff, true);
}

HomotopyCertificate row_extra_degeneracy(const CommaResolution& r, const FinNonUnitalCategory& d,
                                         const FunctorData& f, int p)
{
    if (!d.has_units()) throw Error("row extra degeneracy needs a unital target category");
    const int n = static_cast<int>(r.keys.size()) - 1;
    if (p < 0 || p > n) throw Error("row extra degeneracy: row out of range");
    HomotopyCertificate cert;
    cert.kind = r.dual ? HomotopyCertificate::Kind::ExtraDegeneracyH : HomotopyCertificate::Kind::ExtraDegeneracyG;
    cert.target = row(r.bisset, p);
    cert.source = cert.target;
    cert.base_size = r.source_nerve.chains[p].size();
    cert.augmentation = r.aug_c[p][0];
    // h_0 : N_p C -> (p, 0)
    std::vector<Index> h0;
    for (const auto& a : r.source_nerve.chains[p]) {
        Index obj;
        if (p == 0) {
            obj = f.objects[a[0]];
        } else if (!r.dual) {
            obj = d.tgt(f.morphisms[a.back()]);
        } else {
            obj = d.src(f.morphisms[a.front()]);
        }
        h0.push_back(detail::find_key(r.keys[p][0], join(a, {d.unit(obj)})));
    }
    cert.h.push_back(std::move(h0));
    for (int q = 0; q + 1 <= n; ++q) {
        std::vector<Index> hq;
        for (const auto& key : r.keys[p][q]) {
            Key a = a_part(key, p);
            Key t = d_part(key, p);
            Key nt;
            if (!r.dual) {
                nt.push_back(d.unit(d.src(t.front())));
                nt.insert(nt.end(), t.begin(), t.end());
            } else {
                nt = t;
                nt.push_back(d.unit(d.tgt(t.back())));
            }
            hq.push_back(detail::find_key(r.keys[p][q + 1], join(a, nt)));
        }
        cert.h.push_back(std::move(hq));
    }
    return cert;
}

HomotopyCertificate nat_trans_homotopy(const NatTransData& eta, const FunctorData& f, const FunctorData& g,
                                       const FinNonUnitalCategory& c, const FinNonUnitalCategory& d, int cutoff)
{
    auto v = validate(eta, f, g, c, d);
    if (!v) throw Error("nat_trans_homotopy: " + v.message);
    auto nc = nerve_full(c, cutoff);
    auto nd = nerve_full(d, cutoff);
    HomotopyCertificate cert;
    cert.kind = HomotopyCertificate::Kind::Homotopy;
    cert.source = nc.sset;
    cert.target = nd.sset;
    cert.f = nerve_map(g, nc, nd);
    cert.g = nerve_map(f, nc, nd);
    cert.hh.resize(1);
    for (int p = 0; p + 1 <= cutoff; ++p) {
        std::vector<std::vector<Index>> level(p + 1);
        for (const auto& chain : nc.chains[p]) {
            for (int i = 0; i <= p; ++i) {
                const Index ci = p == 0 ? chain[0] : (i == 0 ? c.src(chain[0]) : c.tgt(chain[i - 1]));
                Key img;
                for (int k = 0; k < i; ++k) img.push_back(f.morphisms[chain[k]]);
                img.push_back(eta.components[ci]);
                for (int k = i; k < p; ++k) img.push_back(g.morphisms[chain[k]]);
                level[i].push_back(nd.index_of(p + 1, img));
            }
        }
        cert.hh.push_back(std::move(level));
    }
    return cert;
}

}  // namespace sscat
