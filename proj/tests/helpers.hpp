#pragma once

#include <vector>

#include "surfq/quiver.hpp"

namespace surfq::testing {

inline Quiver make_quiver(int n, const std::vector<std::array<int, 3>>& arrows) {
    Quiver q(n);
    for (const auto& a : arrows) q.add_arrow(a[0], a[1], a[2]);
    return q;
}

// Markov quiver 0=>1=>2=>0 with double arrows.
inline Quiver markov() { return make_quiver(3, {{0, 1, 2}, {1, 2, 2}, {2, 0, 2}}); }

} // namespace surfq::testing
