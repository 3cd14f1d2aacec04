#include "ecvis/util/primes.hpp"

#include <algorithm>

#include "ecvis/errors.hpp"

namespace ecvis {

std::vector<u64> primes_up_to(u64 bound) {
    std::vector<u64> out;
    if (bound < 2) return out;
    std::vector<bool> composite(bound + 1, false);
    for (u64 i = 2; i * i <= bound; ++i) {
        if (composite[i]) continue;
        for (u64 j = i * i; j <= bound; j += i) composite[j] = true;
    }
    for (u64 i = 2; i <= bound; ++i)
        if (!composite[i]) out.push_back(i);
    return out;
}

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Sufficient witness set for 64-bit integers.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

bool is_prime(const Int& n) {
    if (n <= 1) return false;
    if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

u64 pollard_rho_u64(u64 n) {
    if ((n & 1) == 0) return 2;
    u64 c = 1;
    while (true) {
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod_u64(x, x, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            y = (mulmod_u64(y, y, n) + c) % n;
            d = std::__gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
        ++c;
    }
}

void factor_u64_into(u64 n, Factorization& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out[int_from(static_cast<i64>(n))] += 1;
        return;
    }
    u64 d = pollard_rho_u64(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

// Pollard-Brent rho on mpz with an iteration cap. Returns a nontrivial factor
// or 0 on failure.
Int pollard_rho_int(const Int& n, unsigned long max_iter) {
    if (divides(2, n)) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xec715u);
    for (int attempt = 0; attempt < 12; ++attempt) {
        Int y = rng.get_z_range(n - 3) + 2;
        Int c = rng.get_z_range(n - 1) + 1;
        Int x = y, ys = y, q = 1, g = 1;
        unsigned long r = 1, iters = 0;
        const unsigned long m = 128;
        while (g == 1 && iters < max_iter) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs_int(x - y) % n;
                }
                g = gcd_int(q, n);
                k += m;
                iters += lim;
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd_int(abs_int(x - ys), n);
            }
        }
        if (g != 1 && g != n) return g;
    }
    return 0;
}

bool factor_int_rec(Int n, Factorization& out, unsigned long max_iter) {
    if (n == 1) return true;
    if (is_prime(n)) {
        out[n] += 1;
        return true;
    }
    if (n.fits_ulong_p()) {
        factor_u64_into(n.get_ui(), out);
        return true;
    }
    Int d = pollard_rho_int(n, max_iter);
    if (d == 0) return false;
    bool ok1 = factor_int_rec(d, out, max_iter);
    bool ok2 = factor_int_rec(divexact(n, d), out, max_iter);
    return ok1 && ok2;
}

}  // namespace

Factorization factor_u64(u64 n) {
    Factorization out;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % p == 0) {
            out[int_from(static_cast<i64>(p))] += 1;
            n /= p;
        }
    }
    factor_u64_into(n, out);
    return out;
}

bool factor_int(const Int& n, Factorization& out, u64 trial_bound) {
    Int m = abs_int(n);
    if (m == 0) throw Error("factor_int: zero input");
    for (u64 p = 2; p <= trial_bound; p = (p == 2 ? 3 : p + 2)) {
        if (m.fits_ulong_p()) {
            factor_u64_into(m.get_ui(), out);
            return true;
        }
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            out[int_from(static_cast<i64>(p))] += 1;
            m = divexact(m, Int(static_cast<unsigned long>(p)));
        }
    }
    if (m == 1) return true;
    return factor_int_rec(m, out, 4000000);
}

bool is_squarefree(const Int& n) {
    Factorization f;
    if (!factor_int(n, f))
        throw SearchExhaustedError("is_squarefree: factorization budget exceeded");
    for (const auto& [p, e] : f)
        if (e > 1) return false;
    return true;
}

long valuation_u64(u64 n, u64 p) {
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

}  // namespace ecvis
