#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "sscat/common.hpp"
#include "sscat/sset.hpp"

namespace sscat {

/// s_{j1} s_{j2} ... s_{jk} with j1 > j2 > ... > jk, applied right to left.
struct DegeneracyWord {
    std::vector<int> indices;

    /// Rewrites an arbitrary composite into strictly decreasing form using
    /// s_i s_j = s_{j+1} s_i for i <= j.
    static DegeneracyWord canonical(std::vector<int> raw);

    bool is_canonical() const;
    std::size_t length() const { return indices.size(); }
    bool empty() const { return indices.empty(); }

    auto operator<=>(const DegeneracyWord&) const = default;
};

/// A simplex of a simplicial set in Eilenberg-Zilber normal form: a
/// degeneracy word applied to a non-degenerate generator.
struct SimplexRef {
    DegeneracyWord word;
    int degree = 0;  ///< degree of the generator
    Index index = 0; ///< generator index within its degree

    int simplex_degree() const { return degree + static_cast<int>(word.length()); }

    /// Enumeration order: generator degree, generator index, then word.
    friend bool operator<(const SimplexRef& a, const SimplexRef& b)
    {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.index != b.index) return a.index < b.index;
        return a.word < b.word;
    }
    friend bool operator==(const SimplexRef& a, const SimplexRef& b) = default;
};

/// Simplicial set presented by its non-degenerate simplices and their faces.
class SimplicialSet {
public:
    using FaceTable = std::vector<std::vector<std::vector<SimplexRef>>>;  // [q][g][i]

    SimplicialSet() = default;
    /// `counts[q]` generators in degree q; `faces[q][g]` holds q+1 refs for q >= 1.
    SimplicialSet(std::vector<Index> counts, FaceTable faces, std::optional<int> truncated_at = std::nullopt);

    int top_degree() const { return static_cast<int>(counts_.size()) - 1; }
    Index generators(int q) const { return q >= 0 && q <= top_degree() ? counts_[q] : 0; }
    const std::vector<Index>& counts() const { return counts_; }
    const SimplexRef& generator_face(int q, Index g, int i) const { return faces_[q][g][i]; }
    const FaceTable& faces() const { return faces_; }
    std::optional<int> truncated_at() const { return truncated_at_; }

    bool operator==(const SimplicialSet&) const = default;

private:
    std::vector<Index> counts_;
    FaceTable faces_;
    std::optional<int> truncated_at_;
};

/// d_i of the simplex `x`, in canonical form.
SimplexRef normalize_face(const SimplicialSet& y, int i, const SimplexRef& x);

/// s_j of the simplex `x`, in canonical form.
SimplexRef apply_degeneracy(int j, const SimplexRef& x);

/// Checks generator references and evaluates the simplicial identities on
/// every generator and every single degeneracy of a generator.
ValidationReport validate(const SimplicialSet& y);

/// All simplices of Y up to a cutoff, with face and degeneracy tables.
struct Enumeration {
    SemiSimplicialSet sset;
    std::vector<std::vector<SimplexRef>> simplices;                  ///< [p] sorted
    std::vector<std::vector<std::vector<Index>>> degeneracies;       ///< [p][j][s], p < N

    Index index_of(const SimplexRef& r) const;
};

Enumeration enumerate_full(const SimplicialSet& y, int cutoff);

/// The underlying semi-simplicial set of Y through degree N.
SemiSimplicialSet enumerate(const SimplicialSet& y, int cutoff);

/// E(X): generators are the simplices of X, all generator faces non-degenerate.
SimplicialSet free_degeneracies(const SemiSimplicialSet& x);

/// Unit X -> F E X, each simplex sent to its empty-word copy.
SSetMap unit_map(const SemiSimplicialSet& x, int cutoff);

/// F of the counit E F Y -> Y, as a map enumerate(E(enumerate(Y,N)),N) -> enumerate(Y,N).
SSetMap counit_map(const SimplicialSet& y, int cutoff);

/// Enumerated simplicial set: face tables plus degeneracies s_j : X_p -> X_{p+1}.
struct SimplicialTable {
    SemiSimplicialSet faces;
    std::vector<std::vector<std::vector<Index>>> degeneracies;  ///< [p][j][s], p < N
};

ValidationReport validate(const SimplicialTable& t);

/// Recovers the generator presentation (non-degenerate simplices and the
/// normal forms of their faces) of a valid table. Truncated at the table's cutoff.
SimplicialSet present(const SimplicialTable& t);

/// Bisimplicial set known through p, q <= N.
struct BiSimplicialTable {
    BiSemiSimplicialSet faces;
    std::vector<std::vector<std::vector<std::vector<Index>>>> sh;  ///< [p][q][j][s] -> (p+1, q)
    std::vector<std::vector<std::vector<std::vector<Index>>>> sv;  ///< [p][q][j][s] -> (p, q+1)
};

/// X (x) Y with both directions enumerated through N.
BiSimplicialTable exterior_product(const SimplicialSet& x, const SimplicialSet& y, int cutoff);

/// All simplicial identities in each direction and all four commutation
/// families between them.
ValidationReport validate(const BiSimplicialTable& b);

/// The simplicial diagonal, p -> B_{p,p}, presented by generators through N.
/// Throws Error naming the violated identity on invalid input.
SimplicialSet diagonal(const BiSimplicialTable& b);

/// delta(X (x) Y) as an enumerated semi-simplicial set through N.
SemiSimplicialSet interior_product(const SimplicialSet& x, const SimplicialSet& y, int cutoff);

/// The simplicial n-simplex: generators are the increasing vertex subsets.
SimplicialSet standard_simplex(int n);

/// One vertex, nothing else.
SimplicialSet simplicial_point();

}  // namespace sscat
