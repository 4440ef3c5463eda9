#pragma once

#include <limits>

namespace argonaut::agents {

// Utility values are finite doubles. The unbounded ends of the utility scale
// are represented by saturating sentinels that order correctly against every
// finite value; arithmetic clamps into the sentinel range instead of
// producing IEEE infinities.

inline constexpr double kPositiveInfinity = std::numeric_limits<double>::max();
inline constexpr double kNegativeInfinity = std::numeric_limits<double>::lowest();

inline bool is_positive_sentinel(double v) { return v == kPositiveInfinity; }
inline bool is_negative_sentinel(double v) { return v == kNegativeInfinity; }

/// Sum with sentinel saturation. A sentinel absorbs any finite addend;
/// opposite sentinels annihilate to 0.
double saturating_add(double a, double b);

} // namespace argonaut::agents
