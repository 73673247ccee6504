#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sscat/common.hpp"

namespace sscat {

/// One degree of a semi-simplicial set: `faces[i][s]` is the index of d_i(s)
/// in the level below. Level 0 carries no face tables.
struct Level {
    Index size = 0;
    std::vector<std::vector<Index>> faces;

    bool operator==(const Level&) const = default;
};

/// Finite-type semi-simplicial set stored as explicit face tables.
///
/// A set is either finite (every level above `top_dim` is empty) or truncated
/// at a cutoff N: levels 0..N were enumerated and everything above was
/// deliberately left out. Homology of a truncated set is only meaningful in
/// degrees up to N-1.
class SemiSimplicialSet {
public:
    SemiSimplicialSet() = default;

    /// Throws Error if the table shapes are inconsistent (wrong number of
    /// face tables, wrong table lengths). Index ranges and the simplicial
    /// identity are checked by validate().
    SemiSimplicialSet(std::vector<Level> levels, std::optional<int> top_dim,
                      std::optional<int> truncated_at);

    /// Number of stored levels.
    int num_levels() const { return static_cast<int>(levels_.size()); }
    Index size(int p) const;
    Index face(int p, int i, Index s) const { return levels_[p].faces[i][s]; }
    const std::vector<Index>& face_table(int p, int i) const { return levels_[p].faces[i]; }
    const Level& level(int p) const { return levels_[p]; }
    const std::vector<Level>& levels() const { return levels_; }

    std::optional<int> top_dim() const { return top_dim_; }
    std::optional<int> truncated_at() const { return truncated_at_; }
    bool is_truncated() const { return truncated_at_.has_value(); }

    /// Highest degree whose simplices are known: the cutoff for truncated
    /// sets, otherwise the highest stored level.
    int known_degree() const;

    std::vector<Index> sizes() const;
    bool is_empty() const;

    bool operator==(const SemiSimplicialSet&) const = default;

private:
    std::vector<Level> levels_;
    std::optional<int> top_dim_;
    std::optional<int> truncated_at_;
};

/// Level-wise index maps f_p : X_p -> Y_p.
struct SSetMap {
    std::vector<std::vector<Index>> components;

    int num_levels() const { return static_cast<int>(components.size()); }
    Index operator()(int p, Index s) const { return components[p][s]; }
    bool operator==(const SSetMap&) const = default;
};

/// Result of a structural check. On failure `message` names the first
/// violated identity and the indices involved.
struct ValidationReport {
    bool ok = true;
    std::string message;
    int degree = -1;
    int i = -1;
    int j = -1;
    Index simplex = 0;

    explicit operator bool() const { return ok; }

    static ValidationReport pass() { return {}; }
    static ValidationReport fail(std::string msg, int degree = -1, int i = -1, int j = -1,
                                 Index simplex = 0)
    {
        return {false, std::move(msg), degree, i, j, simplex};
    }
};

/// Bi-semi-simplicial set with horizontal faces `dh` (acting on p) and
/// vertical faces `dv` (acting on q).
class BiSemiSimplicialSet {
public:
    struct Cell {
        Index size = 0;
        std::vector<std::vector<Index>> dh;  // dh[i][s], i = 0..p
        std::vector<std::vector<Index>> dv;  // dv[j][s], j = 0..q

        bool operator==(const Cell&) const = default;
    };

    BiSemiSimplicialSet() = default;
    /// `cells[p][q]` for p < cells.size(), q < cells[p].size() (rectangular).
    BiSemiSimplicialSet(std::vector<std::vector<Cell>> cells, std::optional<int> truncated_p,
                        std::optional<int> truncated_q);

    int max_p() const { return static_cast<int>(cells_.size()) - 1; }
    int max_q() const { return cells_.empty() ? -1 : static_cast<int>(cells_[0].size()) - 1; }
    Index size(int p, int q) const;
    const Cell& cell(int p, int q) const { return cells_[p][q]; }
    Index dh(int p, int q, int i, Index s) const { return cells_[p][q].dh[i][s]; }
    Index dv(int p, int q, int j, Index s) const { return cells_[p][q].dv[j][s]; }
    std::optional<int> truncated_p() const { return truncated_p_; }
    std::optional<int> truncated_q() const { return truncated_q_; }

    /// Highest total degree n for which every (p, n-p) cell is known.
    std::optional<int> total_truncation() const;

    bool operator==(const BiSemiSimplicialSet&) const = default;

private:
    std::vector<std::vector<Cell>> cells_;
    std::optional<int> truncated_p_;
    std::optional<int> truncated_q_;
};

// Constructors ---------------------------------------------------------------

/// The semi-simplicial p-simplex: q-simplices are the strictly increasing
/// (q+1)-subsets of {0..p} in lexicographic order; d_i deletes the i-th vertex.
SemiSimplicialSet standard_semi_simplex(int p);

/// standard_semi_simplex(p) without its top simplex (a (p-1)-sphere).
SemiSimplicialSet boundary_semi_simplex(int p);

/// `size` points in every degree 0..N with identity faces, truncated at N.
SemiSimplicialSet constant_sset(Index size, int cutoff);

/// The subsets of {0..n-1} of each size, in lexicographic order.
std::vector<std::vector<std::vector<Index>>> increasing_subsets(int vertices, int max_dim);

// Checks ---------------------------------------------------------------------

ValidationReport validate(const SemiSimplicialSet& x);
ValidationReport validate(const BiSemiSimplicialSet& b);
/// f : x -> y commutes with every face table through the common known degree.
ValidationReport validate_map(const SSetMap& f, const SemiSimplicialSet& x,
                              const SemiSimplicialSet& y);

// Maps -----------------------------------------------------------------------

SSetMap identity_map(const SemiSimplicialSet& x);
/// g after f.
SSetMap compose(const SSetMap& f, const SSetMap& g);

// Transformations --------------------------------------------------------------

SemiSimplicialSet skeleton(const SemiSimplicialSet& x, int n);
/// The identity inclusion skeleton(x, n) -> x.
SSetMap skeleton_inclusion(const SemiSimplicialSet& x, int n);

/// Level (p,q) = X_p x Y_q, pairs ordered lexicographically.
BiSemiSimplicialSet exterior_product(const SemiSimplicialSet& x, const SemiSimplicialSet& y);

/// Semi-simplicial diagonal: level p is B_{p,p}, d_i = dh_i dv_i.
SemiSimplicialSet diagonal(const BiSemiSimplicialSet& b);

/// Row p of b: the semi-simplicial set q -> B_{p,q} with vertical faces.
SemiSimplicialSet row(const BiSemiSimplicialSet& b, int p);
/// Column q of b: p -> B_{p,q} with horizontal faces.
SemiSimplicialSet column(const BiSemiSimplicialSet& b, int q);

struct PathSpace {
    SemiSimplicialSet space;
    /// augmentation[p][s] = d_0^{p+1}(s) in X_0.
    std::vector<std::vector<Index>> augmentation;
};

/// PX_p = X_{p+1} with the faces d_0..d_p; augmented over X_0 by the last vertex.
PathSpace path_space(const SemiSimplicialSet& x);

/// Index of the simplex spanned by the vertices `keep` (increasing) of s in X_p.
Index restrict_to_vertices(const SemiSimplicialSet& x, int p, Index s,
                           const std::vector<int>& keep);

struct SegalMap {
    /// table[s] = (iota_1^* s, ..., iota_p^* s).
    std::vector<std::vector<Index>> table;
    bool bijective = false;
};

/// kappa_p : X_p -> (X_1)^p through the edges (j-1, j).
SegalMap segal_map(const SemiSimplicialSet& x, int p);

/// Alternating count of simplices. Requires a finite top dimension covered by
/// the enumeration.
long euler_characteristic(const SemiSimplicialSet& x);

}  // namespace sscat
