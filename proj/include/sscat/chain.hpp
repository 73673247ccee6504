#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "sscat/abelian.hpp"
#include "sscat/matrix.hpp"
#include "sscat/simplicial.hpp"
#include "sscat/sset.hpp"

namespace sscat {

/// Free chain complex concentrated in degrees 0..top. Entries of F_p
/// complexes are kept reduced into [0, p).
class ChainComplex {
public:
    ChainComplex() = default;
    /// `boundaries[p]` is d_p : C_p -> C_{p-1} for 1 <= p <= top; index 0 is ignored.
    /// Throws Error if shapes disagree or d d != 0.
    ChainComplex(Ring ring, std::vector<Index> ranks, std::vector<SparseMatrix> boundaries,
                 std::optional<int> truncation = std::nullopt);

    const Ring& ring() const { return ring_; }
    int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
    Index rank(int p) const { return p >= 0 && p <= top_degree() ? ranks_[p] : 0; }
    const std::vector<Index>& ranks() const { return ranks_; }
    /// d_p as a rank(p-1) x rank(p) matrix, valid for every integer p.
    SparseMatrix boundary(int p) const;
    std::optional<int> truncation() const { return truncation_; }
    /// Degrees k with k + 1 <= truncation are exact.
    bool trusted(int k) const { return !truncation_ || k <= *truncation_ - 1; }

private:
    Ring ring_;
    std::vector<Index> ranks_;
    std::vector<SparseMatrix> boundaries_;
    std::optional<int> truncation_;
};

/// Brings a matrix into the coefficient convention of `ring`.
SparseMatrix coerce(const SparseMatrix& m, const Ring& ring);

struct HomologyGroup {
    int degree = 0;
    FPAbelianGroup group;  ///< over a field: rank = dimension, no torsion
    bool trusted = true;
};

HomologyGroup homology(const ChainComplex& c, int k);
/// H_0 .. H_max, reusing each boundary decomposition once.
std::vector<HomologyGroup> homology_range(const ChainComplex& c, int max_degree);
/// H_0 .. H_top.
std::vector<HomologyGroup> homology_all(const ChainComplex& c);

/// Betti numbers over the complex's ring (rank over Z, dimension over fields).
std::vector<Index> betti_numbers(const ChainComplex& c, int max_degree);

ChainComplex unnormalized_chains(const SemiSimplicialSet& x, const Ring& ring);

/// Chains on non-degenerate simplices through degree N.
ChainComplex normalized_chains(const SimplicialSet& y, const Ring& ring, int cutoff);

/// Augmented complex with X_{-1} of size `base` placed in degree 0 and X_p in degree p+1.
ChainComplex augmented_chains(const SemiSimplicialSet& x, Index base, const std::vector<Index>& augmentation,
                              const Ring& ring);

class ChainMap {
public:
    ChainMap() = default;
    /// Throws Error("non-commuting ...") unless d f = f d in every degree.
    ChainMap(std::shared_ptr<const ChainComplex> source, std::shared_ptr<const ChainComplex> target,
             std::vector<SparseMatrix> components);

    const ChainComplex& source() const { return *source_; }
    const ChainComplex& target() const { return *target_; }
    std::shared_ptr<const ChainComplex> source_ptr() const { return source_; }
    std::shared_ptr<const ChainComplex> target_ptr() const { return target_; }
    /// f_p, zero outside the stored range.
    SparseMatrix component(int p) const;
    int top_degree() const { return static_cast<int>(components_.size()) - 1; }

    static ChainMap identity(std::shared_ptr<const ChainComplex> c);
    static ChainMap zero(std::shared_ptr<const ChainComplex> source, std::shared_ptr<const ChainComplex> target);

private:
    std::shared_ptr<const ChainComplex> source_;
    std::shared_ptr<const ChainComplex> target_;
    std::vector<SparseMatrix> components_;
};

/// g after f.
ChainMap compose(const ChainMap& f, const ChainMap& g);

/// Matrix of a simplicial map on unnormalized chains.
ChainMap induced_chain_map(const SSetMap& f, std::shared_ptr<const ChainComplex> source,
                           std::shared_ptr<const ChainComplex> target, const SemiSimplicialSet& x,
                           const SemiSimplicialSet& y);
ChainMap induced_chain_map(const SSetMap& f, const SemiSimplicialSet& x, const SemiSimplicialSet& y,
                           const Ring& ring);

/// Cone_n = C_{n-1} + D_n with d(c, d) = (-d c, f c + d d).
ChainComplex mapping_cone(const ChainMap& f);

/// H_k(cone f) = 0 for every k <= d.
bool cone_acyclic_through(const ChainMap& f, int d);
/// f induces isomorphisms on H_k for k < d and a surjection at d, via the cone.
bool is_homology_iso(const ChainMap& f, int d);

/// f and g agree on H_k: (f - g)(Z_k) lies in B_k.
bool equal_on_homology(const ChainMap& f, const ChainMap& g, int k);

/// P_p : C_p -> D_{p+1} with d P + P d = g - f.
struct ChainHomotopy {
    ChainMap f;
    ChainMap g;
    std::vector<SparseMatrix> p;

    /// Exact check in degrees 0..max_degree. Returns the first failing degree.
    std::optional<int> first_failure(int max_degree) const;
};

/// Bigraded free module with unsigned horizontal and vertical differentials.
struct DoubleComplex {
    Ring ring;
    std::vector<std::vector<Index>> ranks;                 ///< [p][q]
    std::vector<std::vector<SparseMatrix>> dh;             ///< [p][q] : (p,q) -> (p-1,q)
    std::vector<std::vector<SparseMatrix>> dv;             ///< [p][q] : (p,q) -> (p,q-1)
    std::optional<int> truncation;                         ///< total degree bound

    int max_p() const { return static_cast<int>(ranks.size()) - 1; }
    int max_q() const { return ranks.empty() ? -1 : static_cast<int>(ranks[0].size()) - 1; }
    Index rank(int p, int q) const;
    /// Interchanges the two directions.
    DoubleComplex transposed() const;
};

DoubleComplex bicomplex(const BiSemiSimplicialSet& b, const Ring& ring);

/// Tot_n = sum over p+q=n in increasing p; d = dh + (-1)^p dv.
ChainComplex total_complex(const DoubleComplex& d);

/// Offset of block (p, q) inside Tot_{p+q}.
Index total_offset(const DoubleComplex& d, int p, int q);

/// Graded Kunneth prediction for H(C (x) D) from H(C) and H(D) over Z.
std::vector<FPAbelianGroup> kunneth(const std::vector<FPAbelianGroup>& hx, const std::vector<FPAbelianGroup>& hy);

/// dim H_k(C; F_p) predicted from integral homology of a Z complex.
Index universal_coefficient_dimension(const std::vector<HomologyGroup>& integral, int k, long p);

}  // namespace sscat
