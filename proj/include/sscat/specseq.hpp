#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sscat/chain.hpp"

namespace sscat {

enum class Filtration { Columns, Rows };

std::string to_string(Filtration f);

/// Field elements are recorded as rationals; over F_p they are the
/// representatives 0..p-1.
using RationalMatrix = std::vector<std::vector<mpq_class>>;

/// One page E^r. Spots are indexed (s, t) with s the filtration degree:
/// s = p for column filtration and s = q for row filtration.
/// d^r goes from (s, t) to (s - r, t + r - 1).
struct SSPage {
    int r = 0;
    Filtration orientation = Filtration::Columns;
    long characteristic = 0;                                 ///< 0 for Q
    std::vector<std::vector<Index>> dims;                    ///< [s][t]
    std::vector<std::vector<RationalMatrix>> differential;   ///< [s][t], dim(target) x dim(source)
    std::vector<std::vector<Index>> differential_rank;       ///< [s][t]
    /// Representatives in Tot_{s+t} coordinates, one per basis element.
    std::vector<std::vector<std::vector<std::vector<mpq_class>>>> representatives;
    std::vector<std::vector<bool>> trusted;                  ///< depends only on s + t
    bool stable = false;                                     ///< equals E^infinity

    int max_s() const { return static_cast<int>(dims.size()) - 1; }
    int max_t() const { return dims.empty() ? -1 : static_cast<int>(dims[0].size()) - 1; }
    Index dim(int s, int t) const;
};

/// Pages E^0 .. E^R of the filtration of Tot(D) by columns or rows,
/// stopping early once the page is E^infinity. Throws Error over Z.
std::vector<SSPage> spectral_sequence(const DoubleComplex& d, Filtration orientation, int max_page);

/// d^r d^r = 0 and dim E^{r+1} = dim ker d^r - dim im d^r at every spot.
/// Returns a description of the first violation.
std::optional<std::string> check_page_invariants(const std::vector<SSPage>& pages);

/// d^1 recomputed from the horizontal (or vertical) block differential on
/// projected E^1 representatives, modulo the image of the other direction.
std::optional<std::string> check_d1(const DoubleComplex& d, const SSPage& e1);

struct ConvergenceReport {
    struct Degree {
        int n = 0;
        Index e_infinity = 0;
        Index homology = 0;
        bool trusted = true;
    };
    bool ok = true;
    std::vector<Degree> degrees;
};

/// Sum over s + t = n of dim E^infinity against dim H_n(T), for trusted n.
/// Requires the last page to be stable.
ConvergenceReport check_convergence(const std::vector<SSPage>& pages, const ChainComplex& total);

}  // namespace sscat
