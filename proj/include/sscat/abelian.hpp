#pragma once

#include <string>
#include <vector>

#include "sscat/common.hpp"

namespace sscat {

/// Coefficient ring for chains: Z, Q or F_p.
struct Ring {
    enum class Kind { Integers, Rationals, PrimeField };
    Kind kind = Kind::Integers;
    long p = 0;

    static Ring integers() { return {}; }
    static Ring rationals() { return {Kind::Rationals, 0}; }
    static Ring prime_field(long p);
    /// "z", "q" or "f<p>".
    static Ring parse(const std::string& s);

    bool is_field() const { return kind != Kind::Integers; }
    std::string name() const;

    bool operator==(const Ring&) const = default;
};

bool is_prime(long p);

/// Z^rank + Z/t_1 + ... + Z/t_k with t_1 | t_2 | ... | t_k, all t_i > 1.
struct FPAbelianGroup {
    Index rank = 0;
    std::vector<Integer> torsion;

    FPAbelianGroup() = default;
    /// Normalizes arbitrary cyclic orders; orders 1 are dropped, 0 adds to the rank.
    FPAbelianGroup(Index rank, std::vector<Integer> orders);

    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    /// "0", "Z", "Z^2 + Z/2", ...
    std::string to_string() const;

    bool operator==(const FPAbelianGroup&) const = default;
};

FPAbelianGroup direct_sum(const FPAbelianGroup& a, const FPAbelianGroup& b);
FPAbelianGroup tensor(const FPAbelianGroup& a, const FPAbelianGroup& b);
FPAbelianGroup tor(const FPAbelianGroup& a, const FPAbelianGroup& b);

}  // namespace sscat
