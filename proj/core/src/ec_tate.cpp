#include "ecvis/ec/tate.hpp"

#include <algorithm>
#include <vector>

#include "ecvis/ec/reduce.hpp"
#include "ecvis/errors.hpp"

namespace ecvis::ec {

std::string Kodaira::str() const {
    switch (family) {
        case Family::In: return "I" + std::to_string(n);
        case Family::Istar: return "I" + std::to_string(n) + "*";
        case Family::II: return "II";
        case Family::III: return "III";
        case Family::IV: return "IV";
        case Family::IVstar: return "IV*";
        case Family::IIIstar: return "III*";
        case Family::IIstar: return "II*";
    }
    return "?";
}

namespace {

constexpr u64 kBruteRootBound = 1024;

u64 mod_u(const Int& x, u64 p) { return fmod(x, Int(static_cast<unsigned long>(p))).get_ui(); }

u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>((unsigned __int128)a * b % p); }

u64 powm(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invm(u64 a, u64 p) { return powm(a % p, p - 2, p); }

u64 subm(u64 a, u64 b, u64 p) { return (a + p - b % p) % p; }

int legendre(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    return powm(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// ---- polynomial helpers over F_p (dense, degree <= 3) ----

using Poly = std::vector<u64>;  // coefficient i of x^i; normalized (no leading zeros)

void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_rem(Poly a, const Poly& b, u64 p) {
    // remainder of a mod b; b nonzero
    while (a.size() >= b.size() && !a.empty()) {
        u64 q = mulm(a.back(), invm(b.back(), p), p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = subm(a[shift + i], mulm(q, b[i], p), p);
        poly_trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, u64 p) {
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + mulm(a[i], b[j], p)) % p;
    poly_trim(c);
    return poly_rem(c, mod, p);
}

// x^p mod f, for monic f of degree >= 2
Poly poly_xpow_p(const Poly& f, u64 p) {
    Poly result{1};
    Poly base{0, 1};
    base = poly_rem(base, f, p);
    u64 e = p;
    while (e) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

struct QuadInfo {
    bool separable = false;  // distinct roots over the algebraic closure
    int rational = 0;        // rational roots, counted without multiplicity
    u64 repeated = 0;        // the double root when not separable
};

// a x^2 + b x + c over F_p, a != 0 mod p
QuadInfo quadratic_info(u64 a, u64 b, u64 c, u64 p) {
    a %= p, b %= p, c %= p;
    QuadInfo q;
    if (p == 2) {
        q.separable = (b % 2) != 0;
        for (u64 t = 0; t < 2; ++t)
            if ((mulm(a, mulm(t, t, p), p) + mulm(b, t, p) + c) % p == 0) q.rational++;
        if (!q.separable) {
            q.rational = std::min(q.rational, 1);
            for (u64 t = 0; t < 2; ++t)
                if ((mulm(a, mulm(t, t, p), p) + mulm(b, t, p) + c) % p == 0) q.repeated = t;
        }
        return q;
    }
    u64 disc = subm(mulm(b, b, p), mulm(4, mulm(a, c, p), p), p);
    int chi = legendre(disc, p);
    if (chi == 0) {
        q.separable = false;
        q.rational = 1;
        q.repeated = mulm(subm(0, b, p), invm(mulm(2, a, p), p), p);
    } else {
        q.separable = true;
        q.rational = (chi == 1) ? 2 : 0;
    }
    return q;
}

struct CubicInfo {
    int distinct = 3;   // distinct roots over the closure: 1, 2 or 3
    int rational = 0;   // rational roots without multiplicity
    u64 repeated = 0;   // the repeated root when distinct < 3
};

// monic x^3 + b x^2 + c x + d over F_p
CubicInfo cubic_info(u64 b, u64 c, u64 d, u64 p) {
    b %= p, c %= p, d %= p;
    CubicInfo out;
    if (p <= kBruteRootBound) {
        std::vector<u64> roots;
        std::vector<int> mult;
        for (u64 t = 0; t < p; ++t) {
            u64 val = (mulm(t, mulm(t, t, p), p) + mulm(b, mulm(t, t, p), p) + mulm(c, t, p) + d) % p;
            if (val != 0) continue;
            // multiplicity by synthetic division: quotient x^2 + q1 x + q0
            u64 q1 = (b + t) % p, q0 = (c + mulm(t, (b + t) % p, p)) % p;
            int mm = 1;
            u64 v2 = (mulm(t, t, p) + mulm(q1, t, p) + q0) % p;
            if (v2 == 0) {
                mm = 2;
                if ((2 * t + q1) % p == 0) mm = 3;
            }
            roots.push_back(t);
            mult.push_back(mm);
        }
        out.rational = static_cast<int>(roots.size());
        int total_mult = 0;
        for (int mm : mult) total_mult += mm;
        // distinct roots over the closure: total multiplicity of rational
        // roots plus the irrational ones (which are simple unless the
        // repeated root were irrational -- impossible for a cubic, since a
        // repeated root of a cubic over F_p is rational: it is a root of the
        // gcd with the derivative, which has degree <= 1 unless the cubic is
        // a p-th-power pattern handled by the scan above).
        bool has_repeat = false;
        for (size_t i = 0; i < roots.size(); ++i) {
            if (mult[i] >= 2) {
                has_repeat = true;
                out.repeated = roots[i];
                out.distinct = (mult[i] == 3) ? 1 : 2;
            }
        }
        if (!has_repeat) out.distinct = 3;
        return out;
    }
    // large p (>= 5): gcd with derivative distinguishes the multiplicity
    // pattern, then x^p - x counts rational roots in the squarefree case.
    Poly f{d, c, b, 1};
    Poly df{c, mulm(2, b, p), 3 % p};
    poly_trim(df);
    Poly g = poly_gcd(f, df, p);
    if (g.size() <= 1) {
        out.distinct = 3;
        Poly xp = poly_xpow_p(f, p);
        // gcd(x^p - x, f): subtract x
        Poly h = xp;
        if (h.size() < 2) h.resize(2, 0);
        h[1] = subm(h[1], 1, p);
        poly_trim(h);
        Poly rg = poly_gcd(f, h, p);
        out.rational = static_cast<int>(rg.empty() ? 0 : rg.size() - 1);
        return out;
    }
    if (g.size() == 2) {
        out.distinct = 2;
        out.repeated = mulm(subm(0, g[0], p), invm(g[1], p), p);
        out.rational = 2;  // double root and the complementary simple root
        return out;
    }
    out.distinct = 1;
    // triple root: f = (x - r)^3, so b = -3r
    out.repeated = mulm(subm(0, b, p), invm(3 % p, p), p);
    out.rational = 1;
    return out;
}

// singular point of the reduction (p | disc), as residues mod p
std::pair<u64, u64> singular_point(const WeierstrassModel& m, u64 p) {
    if (p <= 3) {
        u64 a1 = mod_u(m.a1, p), a2 = mod_u(m.a2, p), a3 = mod_u(m.a3, p), a4 = mod_u(m.a4, p),
            a6 = mod_u(m.a6, p);
        for (u64 x = 0; x < p; ++x) {
            for (u64 y = 0; y < p; ++y) {
                u64 f = (mulm(y, y, p) + mulm(a1, mulm(x, y, p), p) + mulm(a3, y, p) + p * p -
                         (mulm(x, mulm(x, x, p), p) + mulm(a2, mulm(x, x, p), p) + mulm(a4, x, p) +
                          a6) % p) % p;
                if (f != 0) continue;
                u64 fx = (mulm(a1, y, p) + p * p -
                          (mulm(3, mulm(x, x, p), p) + mulm(2, mulm(a2, x, p), p) + a4) % p) % p;
                u64 fy = (mulm(2, y, p) + mulm(a1, x, p) + a3) % p;
                if (fx % p == 0 && fy % p == 0) return {x, y};
            }
        }
        throw Error("singular_point: not found at p=" + std::to_string(p));
    }
    // p >= 5: use the short form Y^2 = X^3 + A X + B
    u64 A = mod_u(-27 * m.c4, p), B = mod_u(-54 * m.c6, p);
    u64 X0;
    if (A == 0 && B == 0) {
        X0 = 0;
    } else {
        // double root of the cubic: X0 = -3B / (2A)
        if (A == 0) throw Error("singular_point: unexpected A=0, B!=0");
        X0 = mulm(subm(0, mulm(3, B, p), p), invm(mulm(2, A, p), p), p);
    }
    u64 b2 = mod_u(m.b2, p);
    u64 x0 = mulm(subm(X0, mulm(3, b2, p), p), invm(36 % p, p), p);
    u64 y0 = mulm(subm(0, (mulm(mod_u(m.a1, p), x0, p) + mod_u(m.a3, p)) % p, p), invm(2, p), p);
    return {x0, y0};
}

long val_p(const Int& x, u64 p) {
    if (x == 0) return 1 << 20;
    return valuation(x, Int(static_cast<unsigned long>(p)));
}

Int shift_div(const Int& x, u64 p, long k) {
    return divexact(x, pow_int(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(k)));
}

}  // namespace

LocalData tate_local_data(const WeierstrassModel& m, u64 p) {
    LocalData out;
    out.p = p;
    Int pp(static_cast<unsigned long>(p));
    long v = (m.disc == 0) ? throw SingularModelError() : val_p(m.disc, p);
    out.v_disc = v;
    if (v == 0) {
        out.kodaira = {Kodaira::Family::In, 0};
        out.f_p = 0;
        out.c_p = 1;
        return out;
    }

    WeierstrassModel E = m;

    // Step 2: move the singular point of the reduction to the origin.
    {
        auto [x0, y0] = singular_point(E, p);
        E = transform_model(E, 1, Int(static_cast<unsigned long>(x0)),
                            0, Int(static_cast<unsigned long>(y0)));
        if (val_p(E.a3, p) < 1 || val_p(E.a4, p) < 1 || val_p(E.a6, p) < 1)
            throw Error("tate: origin translation failed");
    }

    // Step 3: multiplicative reduction.
    if (val_p(E.b2, p) == 0) {
        out.kodaira = {Kodaira::Family::In, v};
        out.f_p = 1;
        bool split;
        if (p == 2) {
            // tangent cone T^2 + a1 T - a2 at the origin
            u64 a1 = mod_u(E.a1, 2), a2 = mod_u(E.a2, 2);
            split = false;
            for (u64 t = 0; t < 2; ++t)
                if ((t * t + a1 * t + a2) % 2 == 0) split = true;
        } else {
            split = legendre(mod_u(-E.c6, p), p) == 1;
        }
        out.c_p = split ? v : (v % 2 == 0 ? 2 : 1);
        return out;
    }

    // Step 4: type II.
    if (val_p(E.a6, p) < 2) {
        out.kodaira = {Kodaira::Family::II, 0};
        out.f_p = v;
        out.c_p = 1;
        return out;
    }
    // Step 5: type III.
    if (val_p(E.b8, p) < 3) {
        out.kodaira = {Kodaira::Family::III, 0};
        out.f_p = v - 1;
        out.c_p = 2;
        return out;
    }
    // Step 6: type IV.
    if (val_p(E.b6, p) < 3) {
        out.kodaira = {Kodaira::Family::IV, 0};
        out.f_p = v - 2;
        QuadInfo q = quadratic_info(1, mod_u(shift_div(E.a3, p, 1), p),
                                    mod_u(-shift_div(E.a6, p, 2), p), p);
        out.c_p = (q.rational == 2) ? 3 : 1;
        return out;
    }

    // Step 7: normalize to p | a1, a2; p^2 | a3, a4; p^3 | a6.
    {
        bool done = false;
        if (p >= 3) {
            Int inv2_p = Int(static_cast<unsigned long>(invm(2, p)));
            Int s = fmod(-E.a1 * inv2_p, pp);
            E = transform_model(E, 1, 0, s, 0);
            Int p2 = pp * pp;
            // 2 t = -a3 mod p^2
            Int inv2_p2;
            mpz_invert(inv2_p2.get_mpz_t(), Int(2).get_mpz_t(), p2.get_mpz_t());
            Int t = fmod(-E.a3 * inv2_p2, p2);
            E = transform_model(E, 1, 0, 0, t);
            done = true;
        } else {
            for (u64 s = 0; s < 2 && !done; ++s) {
                for (u64 t = 0; t < 8 && !done; ++t) {
                    WeierstrassModel C = transform_model(E, 1, 0, Int(static_cast<unsigned long>(s)),
                                                        Int(static_cast<unsigned long>(t)));
                    if (val_p(C.a1, p) >= 1 && val_p(C.a2, p) >= 1 && val_p(C.a3, p) >= 2 &&
                        val_p(C.a4, p) >= 2 && val_p(C.a6, p) >= 3) {
                        E = C;
                        done = true;
                    }
                }
            }
        }
        if (!done || val_p(E.a1, p) < 1 || val_p(E.a2, p) < 1 || val_p(E.a3, p) < 2 ||
            val_p(E.a4, p) < 2 || val_p(E.a6, p) < 3)
            throw Error("tate: step 7 normalization failed at p=" + std::to_string(p));
    }

    // Step 8: the cubic P(T) = T^3 + (a2/p) T^2 + (a4/p^2) T + a6/p^3.
    CubicInfo ci = cubic_info(mod_u(shift_div(E.a2, p, 1), p), mod_u(shift_div(E.a4, p, 2), p),
                              mod_u(shift_div(E.a6, p, 3), p), p);
    if (ci.distinct == 3) {
        out.kodaira = {Kodaira::Family::Istar, 0};
        out.f_p = v - 4;
        out.c_p = 1 + ci.rational;
        return out;
    }

    if (ci.distinct == 2) {
        // Type I_n* for some n >= 1: translate the double root to T = 0.
        E = transform_model(E, 1, Int(static_cast<unsigned long>(ci.repeated)) * pp, 0, 0);
        if (val_p(E.a2, p) != 1 || val_p(E.a4, p) < 3 || val_p(E.a6, p) < 4)
            throw Error("tate: I_n* entry state invalid");
        long n = 1;
        while (true) {
            long k = (n + 1) / 2;
            if (n % 2 == 1) {
                // quadratic Y^2 + (a3/p^{k+1}) Y - a6/p^{2k+2}
                QuadInfo q = quadratic_info(1, mod_u(shift_div(E.a3, p, k + 1), p),
                                            mod_u(-shift_div(E.a6, p, 2 * k + 2), p), p);
                if (q.separable) {
                    out.kodaira = {Kodaira::Family::Istar, n};
                    out.f_p = v - 4 - n;
                    out.c_p = (q.rational == 2) ? 4 : 2;
                    return out;
                }
                Int t = Int(static_cast<unsigned long>(q.repeated)) *
                        pow_int(pp, static_cast<unsigned long>(k + 1));
                E = transform_model(E, 1, 0, 0, t);
            } else {
                k = n / 2;
                // quadratic (a2/p) X^2 + (a4/p^{k+2}) X + a6/p^{2k+3}
                QuadInfo q = quadratic_info(mod_u(shift_div(E.a2, p, 1), p),
                                            mod_u(shift_div(E.a4, p, k + 2), p),
                                            mod_u(shift_div(E.a6, p, 2 * k + 3), p), p);
                if (q.separable) {
                    out.kodaira = {Kodaira::Family::Istar, n};
                    out.f_p = v - 4 - n;
                    out.c_p = (q.rational == 2) ? 4 : 2;
                    return out;
                }
                Int r = Int(static_cast<unsigned long>(q.repeated)) *
                        pow_int(pp, static_cast<unsigned long>(k + 1));
                E = transform_model(E, 1, r, 0, 0);
            }
            ++n;
            if (n > v) throw Error("tate: I_n* loop exceeded discriminant valuation");
        }
    }

    // Triple root: translate it to T = 0.
    E = transform_model(E, 1, Int(static_cast<unsigned long>(ci.repeated)) * pp, 0, 0);
    if (val_p(E.a2, p) < 2 || val_p(E.a4, p) < 3 || val_p(E.a6, p) < 4)
        throw Error("tate: triple-root state invalid");

    // Step 9: quadratic Y^2 + (a3/p^2) Y - a6/p^4.
    {
        QuadInfo q = quadratic_info(1, mod_u(shift_div(E.a3, p, 2), p),
                                    mod_u(-shift_div(E.a6, p, 4), p), p);
        if (q.separable) {
            out.kodaira = {Kodaira::Family::IVstar, 0};
            out.f_p = v - 6;
            out.c_p = (q.rational == 2) ? 3 : 1;
            return out;
        }
        Int t = Int(static_cast<unsigned long>(q.repeated)) * pp * pp;
        E = transform_model(E, 1, 0, 0, t);
        if (val_p(E.a3, p) < 3 || val_p(E.a6, p) < 5) throw Error("tate: step 9 state invalid");
    }

    // Step 10: type III*.
    if (val_p(E.a4, p) < 4) {
        out.kodaira = {Kodaira::Family::IIIstar, 0};
        out.f_p = v - 7;
        out.c_p = 2;
        return out;
    }
    // Step 11: type II*.
    if (val_p(E.a6, p) < 6) {
        out.kodaira = {Kodaira::Family::IIstar, 0};
        out.f_p = v - 8;
        out.c_p = 1;
        return out;
    }
    throw NonMinimalModelError("tate: model is not minimal at p=" + std::to_string(p));
}

Int conductor(const WeierstrassModel& minimal) {
    Factorization f;
    if (!factor_int(minimal.disc, f))
        throw SearchExhaustedError("conductor: discriminant factorization budget exceeded");
    Int n = 1;
    for (const auto& [p, e] : f) {
        if (!p.fits_ulong_p()) throw Error("conductor: prime too large");
        LocalData ld = tate_local_data(minimal, p.get_ui());
        n *= pow_int(p, static_cast<unsigned long>(ld.f_p));
    }
    return n;
}

}  // namespace ecvis::ec
