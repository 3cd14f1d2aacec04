#include "ecvis/ec/torsion.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ecvis/ec/frobenius.hpp"
#include "ecvis/errors.hpp"
#include "ecvis/util/primes.hpp"

namespace ecvis::ec {

bool on_curve(const WeierstrassModel& m, const RatPoint& pt) {
    if (pt.inf) return true;
    const Rat& x = pt.x;
    const Rat& y = pt.y;
    Rat lhs = y * y + Rat(m.a1) * x * y + Rat(m.a3) * y;
    Rat rhs = x * x * x + Rat(m.a2) * x * x + Rat(m.a4) * x + Rat(m.a6);
    return lhs == rhs;
}

RatPoint negate(const WeierstrassModel& m, const RatPoint& pt) {
    if (pt.inf) return pt;
    return RatPoint::affine(pt.x, -pt.y - Rat(m.a1) * pt.x - Rat(m.a3));
}

RatPoint add(const WeierstrassModel& m, const RatPoint& a, const RatPoint& b) {
    if (a.inf) return b;
    if (b.inf) return a;
    Rat a1(m.a1), a2(m.a2), a3(m.a3), a4(m.a4), a6(m.a6);
    Rat lambda, nu;
    if (a.x == b.x) {
        if (a.y + b.y + a1 * a.x + a3 == 0) return RatPoint::infinity();
        // doubling
        Rat den = 2 * a.y + a1 * a.x + a3;
        lambda = (3 * a.x * a.x + 2 * a2 * a.x + a4 - a1 * a.y) / den;
        nu = (-a.x * a.x * a.x + a4 * a.x + 2 * a6 - a3 * a.y) / den;
    } else {
        lambda = (b.y - a.y) / (b.x - a.x);
        nu = a.y - lambda * a.x;
    }
    Rat x3 = lambda * lambda + a1 * lambda - a2 - a.x - b.x;
    Rat y3 = -(lambda + a1) * x3 - nu - a3;
    return RatPoint::affine(x3, y3);
}

RatPoint mul(const WeierstrassModel& m, long k, const RatPoint& a) {
    RatPoint p = a;
    if (k < 0) {
        p = negate(m, p);
        k = -k;
    }
    RatPoint r = RatPoint::infinity();
    while (k) {
        if (k & 1) r = add(m, r, p);
        p = add(m, p, p);
        k >>= 1;
    }
    return r;
}

std::optional<long> point_order_up_to(const WeierstrassModel& m, const RatPoint& pt,
                                      long max_order) {
    if (pt.inf) return 1;
    RatPoint acc = pt;
    for (long k = 2; k <= max_order + 1; ++k) {
        acc = add(m, acc, pt);
        if (acc.inf) return k <= max_order ? std::optional<long>(k) : std::nullopt;
    }
    return std::nullopt;
}

namespace {

// Integer roots of x^3 + A x + C by sign-change bisection over the monotone
// pieces; avoids any factoring.
std::vector<Int> integer_cubic_roots(const Int& A, const Int& C) {
    auto f = [&](const Int& x) -> Int { return x * x * x + A * x + C; };
    Int bound = abs_int(A) + abs_int(C) + 2;
    std::vector<std::pair<Int, Int>> intervals;
    if (A >= 0) {
        intervals.push_back({-bound, bound});  // nondecreasing everywhere
    } else {
        // f' = 3x^2 + A vanishes at +-sqrt(-A/3); with c0 = floor(sqrt(-A/3))
        // the integer ranges below are each monotone.
        Int c0 = isqrt(fdiv(-A, 3));
        intervals.push_back({-bound, -c0 - 1});
        intervals.push_back({-c0, c0});
        intervals.push_back({c0 + 1, bound});
    }
    std::vector<Int> roots;
    for (auto& [lo, hi] : intervals) {
        if (lo > hi) continue;
        Int a = lo, b = hi;
        Int fa = f(a), fb = f(b);
        if (fa == 0) roots.push_back(a);
        if (fb == 0) roots.push_back(b);
        if (sign(fa) == sign(fb)) continue;
        while (b - a > 1) {
            Int mid = fdiv(a + b, 2);
            Int fm = f(mid);
            if (fm == 0) {
                roots.push_back(mid);
                break;
            }
            if (sign(fm) == sign(fa)) {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    // bisection can straddle a root exactly on a boundary; verify
    std::vector<Int> out;
    for (const Int& r : roots)
        if (f(r) == 0) out.push_back(r);
    return out;
}

struct RatPointLess {
    bool operator()(const RatPoint& a, const RatPoint& b) const {
        if (a.inf != b.inf) return a.inf > b.inf;
        if (a.inf) return false;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

// Subgroup generated by a finite set of torsion points (all orders <= 12).
std::set<RatPoint, RatPointLess> closure(const WeierstrassModel& m,
                                         const std::vector<RatPoint>& gens) {
    std::set<RatPoint, RatPointLess> gr;
    gr.insert(RatPoint::infinity());
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<RatPoint> cur(gr.begin(), gr.end());
        for (const auto& g : gens) {
            for (const auto& h : cur) {
                RatPoint s = add(m, g, h);
                if (gr.insert(s).second) changed = true;
            }
        }
        if (gr.size() > 64) throw Error("torsion closure exceeded sanity bound");
    }
    return gr;
}

}  // namespace

TorsionResult torsion_order(const WeierstrassModel& m) {
    TorsionResult res;

    // gcd bound over odd good primes (reduction is injective on torsion for
    // odd primes of good reduction); collect through p <= 200 and extend
    // until at least 20 primes contribute.
    long bound = 0;
    int used = 0;
    for (u64 p = 3; p < 10000 && (p <= 200 || used < 20); ++p) {
        if (!is_prime_u64(p)) continue;
        if (divides(Int(static_cast<unsigned long>(p)), m.disc)) continue;
        u64 n = point_count(m, p, CountStrategy::auto_select);
        bound = bound == 0 ? static_cast<long>(n) : std::gcd(bound, static_cast<long>(n));
        ++used;
        if (bound == 1) break;
    }
    if (bound == 0) bound = 1;
    res.bound = bound;
    if (bound == 1) {
        res.certified_order = 1;
        return res;
    }

    // Lutz-Nagell on the scaled short model Y^2 = X^3 + A X + B,
    // (X, Y) = (36 x + 3 b2, 108 (2y + a1 x + a3)).
    Int A = -27 * m.c4;
    Int B = -54 * m.c6;
    auto lift = [&](const Int& X, const Int& Y) {
        Rat x = Rat(X - 3 * m.b2) / 36;
        Rat y = (Rat(Y) / 108 - Rat(m.a1) * x - Rat(m.a3)) / 2;
        x.canonicalize();
        y.canonicalize();
        return RatPoint::affine(x, y);
    };

    std::vector<RatPoint> torsion_pts;
    auto consider = [&](const Int& X, const Int& Y) {
        RatPoint pt = lift(X, Y);
        if (!on_curve(m, pt)) throw Error("torsion_order: lifted point off curve");
        if (point_order_up_to(m, pt, 12)) torsion_pts.push_back(pt);
    };

    // Y = 0: the 2-torsion candidates. No factoring needed.
    std::vector<Int> two_tors = integer_cubic_roots(A, B);
    for (const Int& X : two_tors) consider(X, 0);

    // If the bound is a power of two and there is no 2-torsion, the group is
    // trivial regardless of whether the discriminant factors.
    long odd = bound;
    while (odd % 2 == 0) odd /= 2;
    if (odd == 1 && two_tors.empty()) {
        res.certified_order = 1;
        return res;
    }

    // Full search needs the square divisors of the short discriminant.
    Factorization f;
    bool complete = factor_int(m.disc, f);
    if (complete) {
        Factorization fs = f;  // disc_short = 6^12 * disc
        fs[Int(2)] += 12;
        fs[Int(3)] += 12;
        std::vector<Int> ys{1};
        for (const auto& [p, e] : fs) {
            long half = e / 2;
            std::vector<Int> next;
            Int pe = 1;
            for (long i = 0; i <= half; ++i) {
                for (const Int& y : ys) next.push_back(y * pe);
                pe *= p;
            }
            ys = std::move(next);
            if (ys.size() > 200000) {
                complete = false;
                break;
            }
        }
        if (complete) {
            for (const Int& Y : ys) {
                if (Y == 0) continue;
                for (const Int& X : integer_cubic_roots(A, B - Y * Y)) {
                    consider(X, Y);
                    consider(X, -Y);
                }
            }
        }
    }

    auto group = closure(m, torsion_pts);
    long order = static_cast<long>(group.size());

    if (complete) {
        res.certified_order = order;
    } else if (order == bound) {
        res.certified_order = order;
    }
    if (res.certified_order && bound % *res.certified_order != 0)
        throw Error("torsion_order: certified order does not divide the gcd bound");
    for (const auto& pt : group)
        if (!pt.inf) res.witness_points.push_back(pt);
    return res;
}

}  // namespace ecvis::ec
