#include "argonaut/agents/utility.hpp"

namespace argonaut::agents {

double saturating_add(double a, double b) {
    const bool a_pos = is_positive_sentinel(a), a_neg = is_negative_sentinel(a);
    const bool b_pos = is_positive_sentinel(b), b_neg = is_negative_sentinel(b);
    if ((a_pos && b_neg) || (a_neg && b_pos)) return 0.0;
    if (a_pos || b_pos) return kPositiveInfinity;
    if (a_neg || b_neg) return kNegativeInfinity;
    const double sum = a + b;
    if (sum > kPositiveInfinity) return kPositiveInfinity;
    if (sum < kNegativeInfinity) return kNegativeInfinity;
    return sum;
}

} // namespace argonaut::agents
