#pragma once

#include "matchdim/graph.hpp"
#include "matchdim/invariants.hpp"

namespace matchdim {

/// Default vertex cap for the exhaustive reference solver. The CLI honors the
/// MATCHDIM_ORACLE_CAP environment variable as an override.
inline constexpr int kDefaultOracleCap = 12;

/// Reference profile computed by brute force, kept deliberately independent
/// of the optimized solvers in invariants.cpp:
///   - every matching is enumerated by recursive edge inclusion/exclusion;
///     maximality and induced-ness are checked per candidate,
///   - every vertex subset is enumerated for the independent-set number.
/// Throws std::invalid_argument if g.order() == 0 or g.order() > cap.
InvariantProfile oracle_profile(const Graph& g, int cap = kDefaultOracleCap);

}  // namespace matchdim
