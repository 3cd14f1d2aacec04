#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace ecvis {

// Arbitrary-precision integers and rationals. All exact arithmetic in the
// library goes through these; machine words are reserved for residue
// computations mod a single prime.
using Int = mpz_class;
using Rat = mpq_class;

using i64 = std::int64_t;
using u64 = std::uint64_t;

inline int sign(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

inline Int abs_int(const Int& x) {
    Int r;
    mpz_abs(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Floor division and the matching remainder (sign of divisor irrelevant,
// remainder in [0, |b|)).
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int fmod(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact quotient; caller guarantees divisibility.
inline Int divexact(const Int& a, const Int& d) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

// p-adic valuation of a nonzero integer.
inline long valuation(Int x, const Int& p) {
    long v = 0;
    while (x != 0 && divides(p, x)) {
        x = divexact(x, p);
        ++v;
    }
    return v;
}

inline bool fits_i64(const Int& x) { return x.fits_slong_p(); }

inline i64 to_i64(const Int& x) { return static_cast<i64>(x.get_si()); }

inline Int int_from(i64 x) { return Int(static_cast<long>(x)); }

inline std::string to_string(const Int& x) { return x.get_str(); }

// Truncated integer square root; also reports whether x was a perfect square.
inline Int isqrt(const Int& x, bool* exact = nullptr) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    if (exact) *exact = (r * r == x);
    return r;
}

}  // namespace ecvis
