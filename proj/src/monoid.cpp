#include "sscat/monoid.hpp"

#include "sscat/snf.hpp"

namespace sscat {

ValidationReport validate(const FinMonoid& m)
{
    const Index n = m.size();
    if (n == 0) return ValidationReport::fail("a monoid needs at least one element");
    if (m.unit >= n) return ValidationReport::fail("unit index out of range");
    for (Index a = 0; a < n; ++a) {
        if (m.table[a].size() != n) return ValidationReport::fail("multiplication table row " + std::to_string(a) + " has the wrong length");
        for (Index b : m.table[a]) {
            if (b >= n) return ValidationReport::fail("product out of range in row " + std::to_string(a));
        }
    }
    for (Index a = 0; a < n; ++a) {
        if (m.mul(m.unit, a) != a || m.mul(a, m.unit) != a) {
            return ValidationReport::fail("unit law fails at element " + std::to_string(a));
        }
        for (Index b = 0; b < n; ++b) {
            for (Index c = 0; c < n; ++c) {
                if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c))) {
                    return ValidationReport::fail("associativity fails on (" + std::to_string(a) + ", " + std::to_string(b) +
                                                  ", " + std::to_string(c) + ")");
                }
            }
        }
    }
    return ValidationReport::pass();
}

bool is_commutative(const FinMonoid& m)
{
    for (Index a = 0; a < m.size(); ++a) {
        for (Index b = a + 1; b < m.size(); ++b) {
            if (m.mul(a, b) != m.mul(b, a)) return false;
        }
    }
    return true;
}

bool is_group(const FinMonoid& m)
{
    for (Index a = 0; a < m.size(); ++a) {
        bool found = false;
        for (Index b = 0; b < m.size() && !found; ++b) found = m.mul(a, b) == m.unit && m.mul(b, a) == m.unit;
        if (!found) return false;
    }
    return true;
}

FinMonoid trivial_monoid() { return FinMonoid{{{0}}, 0}; }

FinMonoid cyclic_group_monoid(Index n)
{
    if (n == 0) throw Error("cyclic group of order 0");
    FinMonoid m;
    m.table.assign(n, std::vector<Index>(n));
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) m.table[a][b] = (a + b) % n;
    }
    return m;
}

FinMonoid absorbing_monoid() { return FinMonoid{{{0, 1}, {1, 1}}, 0}; }

ValidationReport validate(const MonoidPresentation& p)
{
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
        const auto& [lhs, rhs] = p.relations[r];
        if (lhs.size() != p.generators || rhs.size() != p.generators) {
            return ValidationReport::fail("relation " + std::to_string(r) + " does not have one exponent per generator");
        }
        for (std::size_t k = 0; k < lhs.size(); ++k) {
            if (lhs[k] < 0 || rhs[k] < 0) {
                return ValidationReport::fail("relation " + std::to_string(r) + " has a negative exponent");
            }
        }
    }
    return ValidationReport::pass();
}

MonoidPresentation presentation_of(const FinMonoid& m)
{
    auto v = validate(m);
    if (!v) throw Error("invalid monoid: " + v.message);
    if (!is_commutative(m)) throw Error("group completion needs a commutative monoid");
    MonoidPresentation p;
    p.generators = m.size();
    for (Index a = 0; a < m.size(); ++a) {
        for (Index b = a; b < m.size(); ++b) {
            std::vector<long> lhs(m.size(), 0), rhs(m.size(), 0);
            ++lhs[a];
            ++lhs[b];
            ++rhs[m.mul(a, b)];
            p.relations.push_back({lhs, rhs});
        }
    }
    return p;
}

FPAbelianGroup grothendieck_group(const MonoidPresentation& p)
{
    auto v = validate(p);
    if (!v) throw Error("invalid presentation: " + v.message);
    SparseMatrix rel(p.generators, p.relations.size());
    for (Index r = 0; r < p.relations.size(); ++r) {
        for (Index k = 0; k < p.generators; ++k) {
            const long d = p.relations[r].first[k] - p.relations[r].second[k];
            if (d != 0) rel.add(k, r, Integer(d));
        }
    }
    const auto factors = invariant_factors(rel);
    std::vector<Integer> torsion;
    for (const auto& f : factors) {
        if (f > 1) torsion.push_back(f);
    }
    return FPAbelianGroup(p.generators - factors.size(), torsion);
}

FPAbelianGroup grothendieck_group(const FinMonoid& m) { return grothendieck_group(presentation_of(m)); }

std::string group_ring_name(const FPAbelianGroup& g)
{
    if (g.is_trivial()) return "Z";
    if (g.torsion.empty()) {
        if (g.rank == 1) return "Z[t,t^-1]";
        std::string s = "Z[";
        for (Index i = 1; i <= g.rank; ++i) {
            if (i > 1) s += ",";
            s += "t" + std::to_string(i) + ",t" + std::to_string(i) + "^-1";
        }
        return s + "]";
    }
    return "Z[" + g.to_string() + "]";
}

ValidationReport validate(const MonoidAction& a, const FinMonoid& m)
{
    if (a.table.size() != m.size()) return ValidationReport::fail("action table needs one row per monoid element");
    for (const auto& row : a.table) {
        if (row.size() != a.size) return ValidationReport::fail("action table row has the wrong length");
        for (Index x : row) {
            if (x >= a.size) return ValidationReport::fail("action value out of range");
        }
    }
    for (Index x = 0; x < a.size; ++x) {
        if (a.act(m.unit, x) != x) return ValidationReport::fail("unit does not act trivially on " + std::to_string(x));
        for (Index s = 0; s < m.size(); ++s) {
            for (Index t = 0; t < m.size(); ++t) {
                // left: s.(t.x) = (st).x; right: (x.s).t = x.(st)
                const bool ok = a.side == MonoidAction::Side::Left ? a.act(s, a.act(t, x)) == a.act(m.mul(s, t), x)
                                                                   : a.act(t, a.act(s, x)) == a.act(m.mul(s, t), x);
                if (!ok) {
                    return ValidationReport::fail("action is not associative at (" + std::to_string(s) + ", " +
                                                  std::to_string(t) + ", " + std::to_string(x) + ")");
                }
            }
        }
    }
    return ValidationReport::pass();
}

MonoidAction point_action(const FinMonoid& m, MonoidAction::Side side)
{
    return MonoidAction{side, 1, std::vector<std::vector<Index>>(m.size(), std::vector<Index>{0})};
}

MonoidAction regular_action(const FinMonoid& m, MonoidAction::Side side)
{
    MonoidAction a{side, m.size(), std::vector<std::vector<Index>>(m.size(), std::vector<Index>(m.size()))};
    for (Index s = 0; s < m.size(); ++s) {
        for (Index x = 0; x < m.size(); ++x) a.table[s][x] = side == MonoidAction::Side::Left ? m.mul(s, x) : m.mul(x, s);
    }
    return a;
}

Index bar_index(const MonoidAction& y, const FinMonoid& m, const MonoidAction& x, const std::vector<Index>& tuple)
{
    (void)y;
    Index idx = tuple.front();
    for (std::size_t k = 1; k + 1 < tuple.size(); ++k) idx = idx * m.size() + tuple[k];
    return idx * x.size + tuple.back();
}

namespace {

std::vector<Index> bar_tuple(const MonoidAction& y, const FinMonoid& m, const MonoidAction& x, int p, Index s)
{
    std::vector<Index> t(p + 2);
    t[p + 1] = s % x.size;
    s /= x.size;
    for (int k = p; k >= 1; --k) {
        t[k] = s % m.size();
        s /= m.size();
    }
    t[0] = s;
    (void)y;
    return t;
}

}  // namespace

SemiSimplicialSet bar_construction(const MonoidAction& y, const FinMonoid& m, const MonoidAction& x, int cutoff)
{
    if (cutoff < 0) throw Error("bar construction: cutoff must be non-negative");
    for (const auto& v : {validate(m), validate(y, m), validate(x, m)}) {
        if (!v) throw Error("bar construction: " + v.message);
    }
    if (y.side != MonoidAction::Side::Right || x.side != MonoidAction::Side::Left) {
        throw Error("bar construction needs a right action on Y and a left action on X");
    }
    std::vector<Level> levels;
    Index size = y.size * x.size;
    for (int p = 0; p <= cutoff; ++p) {
        Level lv;
        lv.size = size;
        if (p > 0) {
            lv.faces.assign(p + 1, std::vector<Index>(size));
            for (Index s = 0; s < size; ++s) {
                const auto t = bar_tuple(y, m, x, p, s);
                for (int i = 0; i <= p; ++i) {
                    std::vector<Index> f;
                    f.reserve(p + 1);
                    for (int k = 0; k <= p + 1; ++k) {
                        if (k == i) {
                            if (i == 0) {
                                f.push_back(y.act(t[1], t[0]));
                            } else if (i == p) {
                                f.push_back(x.act(t[p], t[p + 1]));
                            } else {
                                f.push_back(m.mul(t[i], t[i + 1]));
                            }
                            ++k;
                            continue;
                        }
                        f.push_back(t[k]);
                    }
                    lv.faces[i][s] = bar_index(y, m, x, f);
                }
            }
        }
        levels.push_back(std::move(lv));
        size *= m.size();
    }
    return SemiSimplicialSet(std::move(levels), std::nullopt, cutoff);
}

HomotopyCertificate bar_extra_degeneracy(const FinMonoid& m, int cutoff)
{
    const auto y = point_action(m, MonoidAction::Side::Right);
    const auto x = regular_action(m, MonoidAction::Side::Left);
    HomotopyCertificate c;
    c.kind = HomotopyCertificate::Kind::ExtraDegeneracyH;
    c.target = bar_construction(y, m, x, cutoff);
    c.source = c.target;
    c.base_size = 1;
    c.augmentation.assign(c.target.size(0), 0);
    c.h.push_back({bar_index(y, m, x, {0, m.unit})});
    for (int p = 0; p + 1 <= cutoff; ++p) {
        std::vector<Index> level(c.target.size(p));
        for (Index s = 0; s < level.size(); ++s) {
            auto t = bar_tuple(y, m, x, p, s);
            t.push_back(m.unit);
            level[s] = bar_index(y, m, x, t);
        }
        c.h.push_back(std::move(level));
    }
    return c;
}

FinNonUnitalCategory monoid_category(const FinMonoid& m)
{
    std::vector<FinNonUnitalCategory::Morphism> morphisms(m.size(), {0, 0});
    std::vector<FinNonUnitalCategory::Composite> composites;
    for (Index a = 0; a < m.size(); ++a) {
        for (Index b = 0; b < m.size(); ++b) composites.push_back({a, b, m.mul(a, b)});
    }
    return FinNonUnitalCategory(1, std::move(morphisms), composites, std::vector<Index>{m.unit});
}

}  // namespace sscat
