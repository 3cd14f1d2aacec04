#pragma once

#include <optional>

#include "ecvis/ec/model.hpp"

namespace ecvis::ec {

// Laska-Kraus-Connell reduction to the global minimal model over Q, followed
// by the canonical normalization a1, a3 in {0,1}, a2 in {-1,0,1}. The result
// is isomorphic to the input over Q and idempotent under re-application.
WeierstrassModel minimal_model(const WeierstrassModel& m);

// Canonical (u=1, r, s, t) normalization only.
WeierstrassModel normalized_model(const WeierstrassModel& m);

// Reconstructs an integral model with invariants exactly (c4, c6), if one
// exists. The search over b2 residues doubles as the admissibility test.
std::optional<WeierstrassModel> model_from_c4c6(const Int& c4, const Int& c6);

bool is_globally_minimal(const WeierstrassModel& m);

}  // namespace ecvis::ec
