#include "ecvis/ec/model.hpp"

#include <sstream>

#include "ecvis/errors.hpp"

namespace ecvis::ec {

std::string WeierstrassModel::ainvs_str() const {
    std::ostringstream os;
    os << "[" << a1 << "," << a2 << "," << a3 << "," << a4 << "," << a6 << "]";
    return os.str();
}

WeierstrassModel compute_invariants(const Int& a1, const Int& a2, const Int& a3, const Int& a4,
                                    const Int& a6) {
    WeierstrassModel m;
    m.a1 = a1;
    m.a2 = a2;
    m.a3 = a3;
    m.a4 = a4;
    m.a6 = a6;
    m.b2 = a1 * a1 + 4 * a2;
    m.b4 = 2 * a4 + a1 * a3;
    m.b6 = a3 * a3 + 4 * a6;
    m.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    m.c4 = m.b2 * m.b2 - 24 * m.b4;
    m.c6 = -m.b2 * m.b2 * m.b2 + 36 * m.b2 * m.b4 - 216 * m.b6;
    m.disc = -m.b2 * m.b2 * m.b8 - 8 * m.b4 * m.b4 * m.b4 - 27 * m.b6 * m.b6 + 9 * m.b2 * m.b4 * m.b6;
    if (m.disc == 0) throw SingularModelError();
    if (4 * m.b8 != m.b2 * m.b6 - m.b4 * m.b4)
        throw Error("invariant violation: 4*b8 != b2*b6 - b4^2");
    if (m.c4 * m.c4 * m.c4 - m.c6 * m.c6 != 1728 * m.disc)
        throw Error("invariant violation: c4^3 - c6^2 != 1728*disc");
    Rat j(m.c4 * m.c4 * m.c4, m.disc);
    j.canonicalize();
    m.j_num = j.get_num();
    m.j_den = j.get_den();
    return m;
}

WeierstrassModel compute_invariants(const std::array<Int, 5>& a) {
    return compute_invariants(a[0], a[1], a[2], a[3], a[4]);
}

bool try_transform_model(const WeierstrassModel& m, const Int& u, const Int& r, const Int& s,
                         const Int& t, WeierstrassModel* out) {
    if (u == 0) return false;
    Int n1 = m.a1 + 2 * s;
    Int n2 = m.a2 - s * m.a1 + 3 * r - s * s;
    Int n3 = m.a3 + r * m.a1 + 2 * t;
    Int n4 = m.a4 - s * m.a3 + 2 * r * m.a2 - (t + r * s) * m.a1 + 3 * r * r - 2 * s * t;
    Int n6 = m.a6 + r * m.a4 + r * r * m.a2 + r * r * r - t * m.a3 - t * t - r * t * m.a1;
    Int u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    if (!divides(u, n1) || !divides(u2, n2) || !divides(u3, n3) || !divides(u4, n4) ||
        !divides(u6, n6))
        return false;
    *out = compute_invariants(divexact(n1, u), divexact(n2, u2), divexact(n3, u3),
                              divexact(n4, u4), divexact(n6, u6));
    return true;
}

WeierstrassModel transform_model(const WeierstrassModel& m, const Int& u, const Int& r,
                                 const Int& s, const Int& t) {
    WeierstrassModel out;
    if (!try_transform_model(m, u, r, s, t, &out))
        throw Error("transform_model: non-integral result for u=" + to_string(u));
    return out;
}

bool same_curve(const WeierstrassModel& a, const WeierstrassModel& b) {
    return a.a1 == b.a1 && a.a2 == b.a2 && a.a3 == b.a3 && a.a4 == b.a4 && a.a6 == b.a6;
}

}  // namespace ecvis::ec
