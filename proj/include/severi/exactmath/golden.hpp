#pragma once

#include <cstdint>

namespace severi {

/// Decides (1 + sqrt 5) * s > 2r exactly. With t = 2r - s the inequality is
/// sqrt(5) s > t, which holds outright for t <= 0 and otherwise iff 5s^2 > t^2.
/// Requires 0 <= s <= r and r >= 1 (DomainError otherwise).
bool golden_exceeds(std::int64_t s, std::int64_t r);

}  // namespace severi
