#pragma once

#include <array>
#include <string>

#include "ecvis/util/int.hpp"

namespace ecvis::ec {

// Integral Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
// together with its derived invariants. Construction rejects singular input
// and asserts the classical identities
//   4*b8 = b2*b6 - b4^2   and   c4^3 - c6^2 = 1728*disc.
struct WeierstrassModel {
    Int a1, a2, a3, a4, a6;
    Int b2, b4, b6, b8;
    Int c4, c6;
    Int disc;
    Int j_num;  // j = j_num / j_den in lowest terms, j_den > 0
    Int j_den;

    std::array<Int, 5> ainvs() const { return {a1, a2, a3, a4, a6}; }
    std::string ainvs_str() const;
};

// Builds the model and all derived invariants from the five a-invariants.
// Throws SingularModelError when the discriminant vanishes.
WeierstrassModel compute_invariants(const Int& a1, const Int& a2, const Int& a3, const Int& a4,
                                    const Int& a6);
WeierstrassModel compute_invariants(const std::array<Int, 5>& a);

// Applies the substitution x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
// Requires the transformed coefficients to be integral; throws otherwise.
WeierstrassModel transform_model(const WeierstrassModel& m, const Int& u, const Int& r,
                                 const Int& s, const Int& t);

// Same substitution without the integrality requirement (coefficients in Q
// are scaled away by the caller); only used internally by minimal-model
// search, exposed for tests.
bool try_transform_model(const WeierstrassModel& m, const Int& u, const Int& r, const Int& s,
                         const Int& t, WeierstrassModel* out);

bool same_curve(const WeierstrassModel& a, const WeierstrassModel& b);

}  // namespace ecvis::ec
