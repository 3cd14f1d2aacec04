#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ecvis/util/int.hpp"

namespace ecvis {

// Primes up to and including `bound`, by sieve.
std::vector<u64> primes_up_to(u64 bound);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(u64 n);

bool is_prime(const Int& n);

// Factorization as prime -> exponent, keys ascending.
using Factorization = std::map<Int, long>;

// Factor a 64-bit integer (trial division + Pollard rho).
Factorization factor_u64(u64 n);

// Factor |n|. Uses trial division up to `trial_bound`, then Pollard-Brent rho
// with Miller-Rabin certification. Returns false (with partial output) if a
// composite cofactor survives the effort budget.
bool factor_int(const Int& n, Factorization& out, u64 trial_bound = 1000000);

// Squarefree test for |n| within the same effort budget; throws
// SearchExhaustedError if the factorization gives out.
bool is_squarefree(const Int& n);

// gcd of valuations helper: ord_p(n) for u64.
long valuation_u64(u64 n, u64 p);

}  // namespace ecvis
