#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace sscat {

/// Position of a simplex inside its level.
using Index = std::size_t;

/// Arbitrary-precision integer used for all chain-level data over Z.
using Integer = mpz_class;

/// Raised for precondition violations and malformed input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline long binomial(long n, long k)
{
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace sscat
