#pragma once

#include <string>

#include "ecvis/ec/model.hpp"
#include "ecvis/util/primes.hpp"

namespace ecvis::ec {

struct Kodaira {
    enum class Family { In, Istar, II, III, IV, IVstar, IIIstar, IIstar };
    Family family = Family::In;
    long n = 0;  // meaningful for In / Istar

    std::string str() const;
    bool operator==(const Kodaira&) const = default;
};

// Local reduction data at p: Kodaira type, conductor exponent f_p, and the
// order c_p of the arithmetic component group (Tamagawa number).
struct LocalData {
    u64 p = 0;
    Kodaira kodaira;
    long f_p = 0;
    long c_p = 1;
    long v_disc = 0;
};

// Full Tate algorithm, all p including 2 and 3. Requires the model to be
// minimal at p; throws NonMinimalModelError when the case analysis runs off
// the end (the caller should minimize first).
LocalData tate_local_data(const WeierstrassModel& m, u64 p);

// Conductor N = prod p^{f_p} over the primes dividing the minimal
// discriminant.
Int conductor(const WeierstrassModel& minimal);

}  // namespace ecvis::ec
