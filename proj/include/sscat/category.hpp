#pragma once

#include <optional>
#include <vector>

#include "sscat/certificate.hpp"
#include "sscat/simplicial.hpp"
#include "sscat/sset.hpp"

namespace sscat {

inline constexpr Index npos = static_cast<Index>(-1);

/// Finite category without required units. Composition is stored as
/// g o f = m(f, g) for t(f) = s(g).
class FinNonUnitalCategory {
public:
    struct Morphism {
        Index src = 0;
        Index tgt = 0;
        bool operator==(const Morphism&) const = default;
    };
    struct Composite {
        Index f = 0;
        Index g = 0;
        Index gf = 0;
        bool operator==(const Composite&) const = default;
    };

    FinNonUnitalCategory() = default;
    /// Throws Error on out-of-range indices or a pair listed twice.
    /// Missing composites are reported by validate().
    FinNonUnitalCategory(Index objects, std::vector<Morphism> morphisms, const std::vector<Composite>& composites,
                         std::optional<std::vector<Index>> units = std::nullopt);

    Index objects() const { return objects_; }
    Index morphisms() const { return morphisms_.size(); }
    const std::vector<Morphism>& morphism_list() const { return morphisms_; }
    Index src(Index f) const { return morphisms_[f].src; }
    Index tgt(Index f) const { return morphisms_[f].tgt; }
    /// g o f, or npos when not recorded.
    Index composite(Index f, Index g) const { return table_[f * morphisms_.size() + g]; }
    /// g o f; throws if the pair is not composable or the value is missing.
    Index compose(Index f, Index g) const;
    const std::optional<std::vector<Index>>& units() const { return units_; }
    bool has_units() const { return units_.has_value(); }
    Index unit(Index c) const { return (*units_)[c]; }

    /// Morphisms with the given source, in index order.
    const std::vector<Index>& outgoing(Index c) const { return outgoing_[c]; }
    const std::vector<Index>& incoming(Index c) const { return incoming_[c]; }

    std::vector<Composite> composites() const;

    bool operator==(const FinNonUnitalCategory& o) const
    {
        return objects_ == o.objects_ && morphisms_ == o.morphisms_ && table_ == o.table_ && units_ == o.units_;
    }

private:
    Index objects_ = 0;
    std::vector<Morphism> morphisms_;
    std::vector<Index> table_;
    std::optional<std::vector<Index>> units_;
    std::vector<std::vector<Index>> outgoing_;
    std::vector<std::vector<Index>> incoming_;
};

/// Composition total on composable pairs, source/target laws, associativity
/// and unit laws, all exhaustively.
ValidationReport validate(const FinNonUnitalCategory& c);

struct FunctorData {
    std::vector<Index> objects;
    std::vector<Index> morphisms;
    bool operator==(const FunctorData&) const = default;
};

/// Preserves sources, targets and composites; units too when `preserve_units`.
ValidationReport validate(const FunctorData& f, const FinNonUnitalCategory& c, const FinNonUnitalCategory& d,
                          bool preserve_units = false);

struct NatTransData {
    std::vector<Index> components;  ///< eta_c : F(c) -> G(c)
    bool operator==(const NatTransData&) const = default;
};

/// Component shapes and every naturality square G(f) o eta_c = eta_c' o F(f).
ValidationReport validate(const NatTransData& eta, const FunctorData& f, const FunctorData& g,
                          const FinNonUnitalCategory& c, const FinNonUnitalCategory& d);

// Nerves ----------------------------------------------------------------------

/// Nerve with its chains: chains[p][s] lists the p morphisms of simplex s
/// (for p = 0, the object).
struct NerveData {
    SemiSimplicialSet sset;
    std::vector<std::vector<std::vector<Index>>> chains;

    Index index_of(int p, const std::vector<Index>& chain) const;
};

NerveData nerve_full(const FinNonUnitalCategory& c, int cutoff);
SemiSimplicialSet nerve(const FinNonUnitalCategory& c, int cutoff);

/// N(F) : N C -> N D on chains through the cutoff.
SSetMap nerve_map(const FunctorData& f, const NerveData& nc, const NerveData& nd);

/// For unital C: s_j inserts the unit of the j-th object of the chain.
/// degeneracies[p][j][s] for p < cutoff.
SimplicialTable nerve_with_degeneracies(const FinNonUnitalCategory& c, int cutoff);

// Constructions ---------------------------------------------------------------

/// Adjoins a fresh unit at every object. Old morphisms keep their indices.
FinNonUnitalCategory unitalize(const FinNonUnitalCategory& c);
/// The inclusion C -> C+.
FunctorData unitalization_inclusion(const FinNonUnitalCategory& c);

/// C/c: objects are morphisms into c.
FinNonUnitalCategory over_category(const FinNonUnitalCategory& c, Index object);
/// c/C: objects are morphisms out of c.
FinNonUnitalCategory under_category(const FinNonUnitalCategory& c, Index object);

/// F/b: objects (a, F(a) -> b).
FinNonUnitalCategory comma_over(const FunctorData& f, const FinNonUnitalCategory& c,
                                const FinNonUnitalCategory& d, Index b);
/// b/F: objects (a, b -> F(a)).
FinNonUnitalCategory comma_under(const FunctorData& f, const FinNonUnitalCategory& c,
                                 const FinNonUnitalCategory& d, Index b);

/// The poset [n] = {0 < 1 < ... < n} with units.
FinNonUnitalCategory poset_category(int n);
/// Objects only; units optional.
FinNonUnitalCategory discrete_category(Index objects, bool with_units);
/// Componentwise product; unital when both factors are.
FinNonUnitalCategory product_category(const FinNonUnitalCategory& a, const FinNonUnitalCategory& b);

FunctorData identity_functor(const FinNonUnitalCategory& c);
/// Constant functor at `object` of d, sending every morphism to `morphism`.
FunctorData constant_functor(const FinNonUnitalCategory& c, Index object, Index morphism);

/// An object receiving exactly one morphism from every object.
std::optional<Index> terminal_object(const FinNonUnitalCategory& c);

// Resolutions -----------------------------------------------------------------

/// (F/D)_{p,q} (or (D/F)_{p,q}) with its two augmentations.
/// aug_c[p][q][s] indexes N_p C, aug_d[p][q][s] indexes N_q D.
struct CommaResolution {
    BiSemiSimplicialSet bisset;
    NerveData source_nerve;
    NerveData target_nerve;
    std::vector<std::vector<std::vector<Index>>> aug_c;
    std::vector<std::vector<std::vector<Index>>> aug_d;
    /// keys[p][q][s]: a-chain part (the object if p = 0) followed by the D-arrows.
    std::vector<std::vector<std::vector<std::vector<Index>>>> keys;
    bool dual = false;
};

/// Pairs (a_0 -> ... -> a_p, F(a_p) -> b_0 -> ... -> b_q), p, q <= N.
CommaResolution comma_resolution(const FunctorData& f, const FinNonUnitalCategory& c,
                                 const FinNonUnitalCategory& d, int cutoff);
/// Pairs (a_0 -> ... -> a_p, b_0 -> ... -> b_q -> F(a_0)), p, q <= N.
CommaResolution comma_resolution_dual(const FunctorData& f, const FinNonUnitalCategory& c,
                                      const FinNonUnitalCategory& d, int cutoff);

/// Row p of the resolution augmented over N_p C, with the extra degeneracy
/// inserting a unit of D next to F(a): g-type for F/D, h-type for D/F.
/// Requires unital D.
HomotopyCertificate row_extra_degeneracy(const CommaResolution& r, const FinNonUnitalCategory& d,
                                         const FunctorData& f, int p);

/// h_{p+1,i}(f_1..f_p) = (F f_1, .., F f_i, eta_{c_i}, G f_{i+1}, .., G f_p):
/// a homotopy from N(G) to N(F) in the certificate's naming.
/// Throws Error when eta is not natural.
HomotopyCertificate nat_trans_homotopy(const NatTransData& eta, const FunctorData& f, const FunctorData& g,
                                       const FinNonUnitalCategory& c, const FinNonUnitalCategory& d, int cutoff);

}  // namespace sscat
