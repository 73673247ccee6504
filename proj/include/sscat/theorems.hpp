#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sscat/category.hpp"
#include "sscat/monoid.hpp"
#include "sscat/simplicial.hpp"
#include "sscat/sset.hpp"

namespace sscat {

enum class Verdict { Pass, Fail, UntrustedAtCutoff, HypothesesNotMet };

std::string to_string(Verdict v);
/// 0 for pass, 1 otherwise.
int exit_code(Verdict v);

/// One itemized hypothesis or comparison. Untrusted items are reported but
/// never decide the verdict.
struct CheckItem {
    std::string name;
    int degree = -1;
    std::string expected;
    std::string actual;
    bool trusted = true;
    bool ok = true;
};

struct CheckReport {
    std::string id;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<CheckItem> hypotheses;
    std::vector<CheckItem> comparisons;
    /// Reported quantities that are not judged.
    std::vector<std::pair<std::string, std::string>> values;
    std::vector<std::string> notes;
    Verdict verdict = Verdict::Pass;
    /// Wall-clock seconds; filled in by runners, outside the deterministic body.
    std::optional<double> seconds;

    /// Hypothesis failures win, then trusted comparison failures; a report
    /// with comparisons but none trusted is untrusted-at-cutoff.
    void finalize();
};

/// X -> enumerate(E X, N) has acyclic cone through N-1.
CheckReport check_adj_units(const SemiSimplicialSet& x, int cutoff);

/// Unnormalized chains of enumerate(Y, N) against normalized chains: the
/// projection's cone is acyclic through N-1.
CheckReport check_fat_thin(const SimplicialSet& y, int cutoff);

/// H(delta(X (x) Y)) against H(Tot(X (x) Y)) through N-2, and the
/// front-face/back-face map between them has acyclic cone.
CheckReport check_ez_diagonal(const SimplicialSet& x, const SimplicialSet& y, int cutoff);

/// The semi-simplicial diagonal of nabla^n (x) nabla^m: Tot has point
/// homology while chi(delta) is reported against its closed form.
CheckReport check_semi_diagonal_euler(int n, int m);

/// H(X x Y) against the Kunneth prediction from H(X), H(Y) through N-1.
CheckReport check_products(const SimplicialSet& x, const SimplicialSet& y, int cutoff);

/// N C -> N C+ has acyclic cone through N-1.
CheckReport check_krannich(const FinNonUnitalCategory& c, int cutoff);

/// Contraction of N C onto a terminal object via the natural transformation
/// id => const_t. Throws Error if C has no units or no terminal object.
CheckReport check_terminal_contractible(const FinNonUnitalCategory& c, int cutoff);

/// Hypothesis (F/b, or b/F for the dual variant, has point homology through
/// N-1 for every b), resolution stage, and conclusion (N F has acyclic cone
/// through N-2). Throws Error for a non-unital target.
CheckReport check_quillen_a(const FunctorData& f, const FinNonUnitalCategory& c, const FinNonUnitalCategory& d,
                            int cutoff);

/// eta_* = (B F)_* eps_* on H_k, k <= N-2, for both comma resolutions.
CheckReport check_resolution_triangle(const FunctorData& f, const FinNonUnitalCategory& c,
                                      const FinNonUnitalCategory& d, int cutoff);

/// Certificate from eta, its chain homotopy, and equality of N(F)_*, N(G)_*.
CheckReport check_nat_trans(const NatTransData& eta, const FunctorData& f, const FunctorData& g,
                            const FinNonUnitalCategory& c, const FinNonUnitalCategory& d, int cutoff);

/// B(*, M, M) with its extra degeneracy: chain contraction and exact acyclicity
/// of the augmented complex through N-1.
CheckReport check_bar_acyclic(const FinMonoid& m, int cutoff);

/// Gr(M) and Z[Gr(M)]; for tables also H_k(BM) through N-1 and, for groups,
/// agreement of Z[Gr(M)] with Z[M]. Throws Error for non-commutative M.
CheckReport group_completion_report(const FinMonoid& m, int cutoff);
CheckReport group_completion_report(const MonoidPresentation& p);

/// sk_n X -> X has acyclic cone through n (iso below n, onto at n).
CheckReport check_skeletal_shadow(const SemiSimplicialSet& x, int n, int cutoff);

/// Segal maps of N M bijective through N, and the augmented path space is
/// contracted by the last degeneracy. Throws Error if M is not a group.
CheckReport check_segal_nerve(const FinMonoid& m, int cutoff);

/// H_0 = Z^size and H_k = 0 for 1 <= k <= N-1.
CheckReport check_constant(Index size, int cutoff);

/// check_ez_diagonal and check_fat_thin on E(X) for `count` seeded random X.
CheckReport random_ez_suite(std::uint64_t seed, int count, int cutoff);

/// check_adj_units on `count` seeded random semi-simplicial sets.
CheckReport random_adj_units_suite(std::uint64_t seed, int count, int cutoff);

}  // namespace sscat
