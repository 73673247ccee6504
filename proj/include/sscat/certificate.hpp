#pragma once

#include <string>
#include <vector>

#include "sscat/chain.hpp"
#include "sscat/sset.hpp"

namespace sscat {

/// Combinatorial data witnessing a contraction or homotopy of
/// semi-simplicial sets.
///
/// ExtraDegeneracyH: h_{p+1} : Y_p -> Y_{p+1} for p >= -1 with
///   d_{p+1} h_{p+1} = id, d_i h_{p+1} = h_p d_i (i < p+1), eps h_0 = id.
/// ExtraDegeneracyG: g_{p+1} with d_0 g_{p+1} = id, d_i g_{p+1} = g_p d_{i-1}
///   (0 < i <= p+1), eps g_0 = id.
/// Nullhomotopy: h_{p+1} : X_p -> Y_{p+1} with d_{p+1} h_{p+1} = f,
///   d_i h_{p+1} = h_p d_i (i <= p, p >= 1), d_0 h_1 = y0.
/// Homotopy: h_{p+1,i} : X_p -> Y_{p+1}, i = 0..p, from f (d_0 h_{p+1,0} = f)
///   to g (d_{p+1} h_{p+1,p} = g).
struct HomotopyCertificate {
    enum class Kind { ExtraDegeneracyH, ExtraDegeneracyG, Nullhomotopy, Homotopy };

    Kind kind = Kind::ExtraDegeneracyH;
    SemiSimplicialSet source;  ///< X; equal to target for extra degeneracies
    SemiSimplicialSet target;  ///< Y

    /// Extra degeneracies: Y_{-1} and eps : Y_0 -> Y_{-1}.
    Index base_size = 0;
    std::vector<Index> augmentation;

    SSetMap f;
    SSetMap g;
    Index y0 = 0;

    /// h[p+1][s]; h[0] is h_0 : Y_{-1} -> Y_0 for extra degeneracies.
    std::vector<std::vector<Index>> h;
    /// hh[p+1][i][s] for homotopies.
    std::vector<std::vector<std::vector<Index>>> hh;
};

std::string to_string(HomotopyCertificate::Kind k);

struct CertificateReport {
    bool ok = true;
    std::vector<std::string> failures;
    /// Highest p for which all identities involving h_{p+1} were evaluated.
    int checked_through = -1;

    explicit operator bool() const { return ok; }
};

/// Evaluates every identity of the certificate on every simplex in the range
/// where both sides are known.
CertificateReport check_certificate(const HomotopyCertificate& c);

/// Chain-level shadow of a certificate over `ring`:
///   extra degeneracies: P on the augmented complex with dP + Pd = id
///     (P_{p+1} = (-1)^{p+1} h_{p+1} for the h-type, P = g for the g-type);
///   nullhomotopy: P_p = (-1)^p h_{p+1}, dP + Pd = const# - f#;
///   homotopy: P_p = sum_i (-1)^{i+1} h_{p+1,i}, dP + Pd = g# - f#.
/// The identity is checked exactly through the certified range; throws Error
/// if the certificate fails.
ChainHomotopy chain_homotopy_from_certificate(const HomotopyCertificate& c, const Ring& ring);

/// Degrees 0..d in which the returned homotopy's identity is meaningful.
int chain_homotopy_range(const HomotopyCertificate& c);

}  // namespace sscat
