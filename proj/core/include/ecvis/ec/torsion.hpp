#pragma once

#include <optional>
#include <vector>

#include "ecvis/ec/model.hpp"

namespace ecvis::ec {

struct RatPoint {
    bool inf = true;
    Rat x, y;

    static RatPoint infinity() { return {}; }
    static RatPoint affine(Rat xx, Rat yy) { return {false, std::move(xx), std::move(yy)}; }
    bool operator==(const RatPoint&) const = default;
};

bool on_curve(const WeierstrassModel& m, const RatPoint& pt);
RatPoint negate(const WeierstrassModel& m, const RatPoint& pt);
RatPoint add(const WeierstrassModel& m, const RatPoint& a, const RatPoint& b);
RatPoint mul(const WeierstrassModel& m, long k, const RatPoint& a);

// Order of a point when it is at most `max_order`, otherwise nullopt.
std::optional<long> point_order_up_to(const WeierstrassModel& m, const RatPoint& pt,
                                      long max_order);

struct TorsionResult {
    long bound = 1;                      // gcd-of-counts upper bound
    std::optional<long> certified_order; // nullopt = unknown
    std::vector<RatPoint> witness_points;
};

// Torsion certification: gcd bound over good primes first, Lutz-Nagell search
// only when the bound exceeds 1. `certified_order` stays empty when the
// discriminant resists factorization and no shortcut applies.
TorsionResult torsion_order(const WeierstrassModel& minimal);

}  // namespace ecvis::ec
