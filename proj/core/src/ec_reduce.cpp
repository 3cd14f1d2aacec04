#include "ecvis/ec/reduce.hpp"

#include "ecvis/errors.hpp"

namespace ecvis::ec {

namespace {

u64 mod_u(const Int& x, u64 p) {
    Int r = fmod(x, Int(static_cast<unsigned long>(p)));
    return r.get_ui();
}

// Legendre symbol for odd prime p.
int legendre(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    u64 r = 1, b = a, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = (unsigned __int128)r * b % p;
        b = (unsigned __int128)b * b % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

// Split test at p = 2: move the singular point of the reduction to the
// origin, then the tangent cone y^2 + a1 xy - a2 x^2 splits over F_2 iff
// T^2 + a1 T - a2 has a root.
bool split_at_two(const WeierstrassModel& m) {
    auto f = [&](u64 x, u64 y) {
        u64 a1 = mod_u(m.a1, 2), a2 = mod_u(m.a2, 2), a3 = mod_u(m.a3, 2), a4 = mod_u(m.a4, 2),
            a6 = mod_u(m.a6, 2);
        return (y * y + a1 * x * y + a3 * y + x * x * x + a2 * x * x + a4 * x + a6) % 2;
    };
    // singular point: on curve with both partials vanishing
    for (u64 x0 = 0; x0 < 2; ++x0) {
        for (u64 y0 = 0; y0 < 2; ++y0) {
            if (f(x0, y0) != 0) continue;
            u64 a1 = mod_u(m.a1, 2), a2 = mod_u(m.a2, 2), a3 = mod_u(m.a3, 2),
                a4 = mod_u(m.a4, 2);
            u64 fx = (a1 * y0 + 3 * x0 * x0 + 2 * a2 * x0 + a4) % 2;
            u64 fy = (a1 * x0 + a3) % 2;  // 2y vanishes mod 2
            if (fx != 0 || fy != 0) continue;
            // Translate by (r,s,t) = (x0,0,y0); only the tangent cone
            // quadratic T^2 + a1 T - a2' matters, a2' = a2 + 3 x0.
            u64 a2p = (a2 + x0) % 2;
            // roots of T^2 + a1 T + a2' over F_2 (signs immaterial mod 2)
            for (u64 tt = 0; tt < 2; ++tt)
                if ((tt * tt + a1 * tt + a2p) % 2 == 0) return true;
            return false;
        }
    }
    throw Error("split_at_two: no singular point found on a multiplicative reduction");
}

}  // namespace

const char* reduction_kind_name(ReductionKind k) {
    switch (k) {
        case ReductionKind::good: return "good";
        case ReductionKind::multiplicative_split: return "multiplicative_split";
        case ReductionKind::multiplicative_nonsplit: return "multiplicative_nonsplit";
        case ReductionKind::additive: return "additive";
    }
    return "?";
}

ReducedCurve reduce(const WeierstrassModel& m, u64 p) {
    ReducedCurve rc;
    rc.p = p;
    rc.a = {mod_u(m.a1, p), mod_u(m.a2, p), mod_u(m.a3, p), mod_u(m.a4, p), mod_u(m.a6, p)};
    Int pp(static_cast<unsigned long>(p));
    if (!divides(pp, m.disc)) {
        rc.kind = ReductionKind::good;
        return rc;
    }
    if (divides(pp, m.c4)) {
        rc.kind = ReductionKind::additive;
        return rc;
    }
    // multiplicative; split iff the tangent directions at the node are
    // rational. After translating the node to the origin c6 = -b2^3 (mod p),
    // so for odd p the test is whether -c6 is a square mod p.
    bool split;
    if (p == 2) {
        split = split_at_two(m);
    } else {
        split = legendre(mod_u(-m.c6, p), p) == 1;
    }
    rc.kind = split ? ReductionKind::multiplicative_split : ReductionKind::multiplicative_nonsplit;
    return rc;
}

}  // namespace ecvis::ec
