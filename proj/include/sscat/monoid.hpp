#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sscat/abelian.hpp"
#include "sscat/category.hpp"
#include "sscat/certificate.hpp"
#include "sscat/sset.hpp"

namespace sscat {

/// Finite monoid as a multiplication table: table[a][b] = a * b.
struct FinMonoid {
    std::vector<std::vector<Index>> table;
    Index unit = 0;

    Index size() const { return table.size(); }
    Index mul(Index a, Index b) const { return table[a][b]; }
    bool operator==(const FinMonoid&) const = default;
};

/// Associativity and unit laws, exhaustively.
ValidationReport validate(const FinMonoid& m);
bool is_commutative(const FinMonoid& m);
/// Every element has a two-sided inverse.
bool is_group(const FinMonoid& m);

FinMonoid trivial_monoid();
FinMonoid cyclic_group_monoid(Index n);
/// {1, z} with z z = z.
FinMonoid absorbing_monoid();

/// Commutative monoid on `generators` generators modulo relations lhs ~ rhs,
/// each an exponent vector in N^k.
struct MonoidPresentation {
    Index generators = 0;
    std::vector<std::pair<std::vector<long>, std::vector<long>>> relations;
    bool operator==(const MonoidPresentation&) const = default;
};

ValidationReport validate(const MonoidPresentation& p);

/// One generator per element with relations e_a + e_b ~ e_{ab}.
/// Throws Error for a non-commutative table.
MonoidPresentation presentation_of(const FinMonoid& m);

/// Cokernel of the relation-difference matrix in Z^k.
FPAbelianGroup grothendieck_group(const MonoidPresentation& p);
/// Throws Error for a non-commutative table.
FPAbelianGroup grothendieck_group(const FinMonoid& m);

/// Z[G] for G = Gr(M): "Z[t,t^-1]" for Z, "Z[Z/2]" for Z/2, "Z" for 0.
std::string group_ring_name(const FPAbelianGroup& g);

/// Action of a FinMonoid on a finite set: table[m][x] is m . x (left)
/// or x . m (right).
struct MonoidAction {
    enum class Side { Left, Right };
    Side side = Side::Left;
    Index size = 0;
    std::vector<std::vector<Index>> table;

    Index act(Index m, Index x) const { return table[m][x]; }
    bool operator==(const MonoidAction&) const = default;
};

ValidationReport validate(const MonoidAction& a, const FinMonoid& m);

/// The one-point set with the trivial action.
MonoidAction point_action(const FinMonoid& m, MonoidAction::Side side);
/// M acting on itself by multiplication.
MonoidAction regular_action(const FinMonoid& m, MonoidAction::Side side);

/// Index of (y, m_1, .., m_p, x) at level p: lexicographic in the tuple.
Index bar_index(const MonoidAction& y, const FinMonoid& m, const MonoidAction& x, const std::vector<Index>& tuple);

/// B(Y, M, X) through level N: level p is Y x M^p x X with
/// d_0 = (y m_1, ..), inner d_i multiplies m_i m_{i+1}, d_p = (.., m_p x).
SemiSimplicialSet bar_construction(const MonoidAction& y, const FinMonoid& m, const MonoidAction& x, int cutoff);

/// B(*, M, M) augmented over a point with h(m_1, .., m_p, x) = (m_1, .., m_p, x, e)
/// and h_0(*) = e.
HomotopyCertificate bar_extra_degeneracy(const FinMonoid& m, int cutoff);

/// One object, morphisms = elements, m(f, g) = f g, unit = e.
FinNonUnitalCategory monoid_category(const FinMonoid& m);

}  // namespace sscat
