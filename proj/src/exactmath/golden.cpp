#include "severi/exactmath/golden.hpp"

#include <string>

#include "severi/errors.hpp"
#include "severi/exactmath/rational.hpp"

namespace severi {

bool golden_exceeds(std::int64_t s, std::int64_t r) {
  if (r <= 0 || s < 0 || s > r)
    throw DomainError("golden_exceeds needs 0 <= s <= r, r >= 1; got s=" + std::to_string(s) +
                      " r=" + std::to_string(r));
  if (s == 0) return false;
  const BigInt t = 2 * BigInt(r) - s;
  if (t <= 0) return true;
  return 5 * BigInt(s) * BigInt(s) > t * t;
}

}  // namespace severi
