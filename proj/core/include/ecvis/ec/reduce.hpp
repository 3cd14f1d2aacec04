#pragma once

#include <array>

#include "ecvis/ec/model.hpp"

namespace ecvis::ec {

enum class ReductionKind { good, multiplicative_split, multiplicative_nonsplit, additive };

// The reduction of a (p-minimal) model modulo p.
struct ReducedCurve {
    u64 p = 0;
    std::array<u64, 5> a;  // a-invariants mod p
    ReductionKind kind = ReductionKind::good;
};

// Classifies the reduction of `m` at p. Requires `m` minimal at p.
ReducedCurve reduce(const WeierstrassModel& m, u64 p);

const char* reduction_kind_name(ReductionKind k);

}  // namespace ecvis::ec
