#pragma once

#include "ecvis/ec/model.hpp"
#include "ecvis/ec/reduce.hpp"

namespace ecvis::ec {

enum class CountStrategy { naive, bsgs, auto_select };

// Frobenius trace a_l of the reduction at l. Requires the model minimal at l.
// Good reduction: a_l = l + 1 - #E(F_l); split multiplicative: 1; nonsplit
// multiplicative: -1; additive: 0. The naive and bsgs strategies agree
// wherever both run; auto_select switches to bsgs above the interval
// ambiguity threshold.
i64 trace_of_frobenius(const WeierstrassModel& m, u64 l,
                       CountStrategy strategy = CountStrategy::auto_select);

// Group order #E(F_p) for a good prime p.
u64 point_count(const WeierstrassModel& m, u64 p, CountStrategy strategy);

// Below this prime BSGS falls back to exhaustive counting: the Hasse interval
// is too short to isolate a unique group-order multiple reliably.
inline constexpr u64 kBsgsMinPrime = 229;

bool hasse_bound_ok(i64 a, u64 p);

}  // namespace ecvis::ec
