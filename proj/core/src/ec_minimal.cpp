#include "ecvis/ec/minimal.hpp"

#include <algorithm>
#include <vector>

#include "ecvis/errors.hpp"
#include "ecvis/util/primes.hpp"

namespace ecvis::ec {

namespace {

// Mod-p^k valuation floor, with c = 0 treated as infinitely divisible.
long scaled_valuation(const Int& c, const Int& p, long per) {
    if (c == 0) return 1 << 20;
    return valuation(c, p) / per;
}

}  // namespace

std::optional<WeierstrassModel> model_from_c4c6(const Int& c4, const Int& c6) {
    // Any integral model with these invariants has b2 solving
    //   24 | b2^2 - c4  and  432 | b2^3 - 3 b2 c4 - 2 c6,
    // and the induced (b4, b6) must split into integral a-invariants. The
    // congruences have period dividing 1728 in b2, so scanning one period
    // settles existence.
    for (long w = 0; w <= 1728; ++w) {
        for (long sgn : {1, -1}) {
            if (w == 0 && sgn < 0) continue;
            Int b2 = sgn * w;
            Int t1 = b2 * b2 - c4;
            if (!divides(24, t1)) continue;
            Int b4 = divexact(t1, 24);
            Int t2 = b2 * b2 * b2 - 3 * b2 * c4 - 2 * c6;
            if (!divides(432, t2)) continue;
            Int b6 = divexact(t2, 432);
            // split b2 = a1^2 + 4 a2, b6 = a3^2 + 4 a6, b4 = 2 a4 + a1 a3
            Int a1 = fmod(b2, 2);
            if (!divides(4, b2 - a1 * a1)) continue;
            Int a2 = divexact(b2 - a1 * a1, 4);
            Int a3 = fmod(b6, 2);
            if (!divides(4, b6 - a3 * a3)) continue;
            Int a6 = divexact(b6 - a3 * a3, 4);
            if (!divides(2, b4 - a1 * a3)) continue;
            Int a4 = divexact(b4 - a1 * a3, 2);
            WeierstrassModel m = compute_invariants(a1, a2, a3, a4, a6);
            if (m.c4 == c4 && m.c6 == c6) return m;
        }
    }
    return std::nullopt;
}

WeierstrassModel normalized_model(const WeierstrassModel& m) {
    auto mod2 = [](const Int& x) { return fmod(x, 2); };
    Int s = divexact(mod2(m.a1) - m.a1, 2);
    WeierstrassModel t1 = transform_model(m, 1, 0, s, 0);
    Int a2r = fmod(t1.a2, 3);  // in {0,1,2}
    Int target = (a2r == 2) ? Int(-1) : a2r;
    Int r = divexact(target - t1.a2, 3);
    WeierstrassModel t2 = transform_model(t1, 1, r, 0, 0);
    Int t = divexact(mod2(t2.a3) - t2.a3, 2);
    return transform_model(t2, 1, 0, 0, t);
}

WeierstrassModel minimal_model(const WeierstrassModel& m) {
    // Candidate scaling primes must satisfy p^12 | disc.
    Int adisc = abs_int(m.disc);
    Int root;
    mpz_root(root.get_mpz_t(), adisc.get_mpz_t(), 12);
    if (root > 1000000)
        throw Error("minimal_model: discriminant too large for trial reduction");
    u64 bound = root.fits_ulong_p() ? root.get_ui() : 0;

    std::vector<Int> candidates;
    for (u64 p : primes_up_to(std::max<u64>(bound, 2))) {
        Int pp(static_cast<unsigned long>(p));
        if (valuation(adisc, pp) >= 12) candidates.push_back(pp);
    }

    Int c4 = m.c4, c6 = m.c6;
    for (const Int& p : candidates) {
        long d = std::min({scaled_valuation(c4, p, 4), scaled_valuation(c6, p, 6),
                           scaled_valuation(m.disc, p, 12)});
        while (d > 0) {
            Int u4 = pow_int(p, static_cast<unsigned long>(4 * d));
            Int u6 = pow_int(p, static_cast<unsigned long>(6 * d));
            if (model_from_c4c6(divexact(c4, u4), divexact(c6, u6))) break;
            --d;
        }
        if (d > 0) {
            c4 = divexact(c4, pow_int(p, static_cast<unsigned long>(4 * d)));
            c6 = divexact(c6, pow_int(p, static_cast<unsigned long>(6 * d)));
        }
    }

    auto reduced = model_from_c4c6(c4, c6);
    if (!reduced) throw Error("minimal_model: reconstruction failed");
    return normalized_model(*reduced);
}

bool is_globally_minimal(const WeierstrassModel& m) {
    WeierstrassModel mm = minimal_model(m);
    return abs_int(mm.disc) == abs_int(m.disc);
}

}  // namespace ecvis::ec
