#include "planar_gw/p2_oracle.hpp"

#include "planar_gw/gw_table.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace planar_gw::p2 {

namespace {

std::mutex cache_mutex;
std::vector<BigInt> cache{BigInt(0), BigInt(1)};  // index d; K_0 is unused

}  // namespace

BigInt kontsevich(int d) {
  if (d <= 0) throw std::invalid_argument("kontsevich: d must be >= 1, got " + std::to_string(d));
  std::scoped_lock lock(cache_mutex);
  for (int n = static_cast<int>(cache.size()); n <= d; ++n) {
    BigInt total = 0;
    for (int d1 = 1; d1 < n; ++d1) {
      const int d2 = n - d1;
      const BigInt b1 = d1;
      const BigInt b2 = d2;
      total += cache[d1] * cache[d2] *
               (b1 * b1 * b2 * b2 * gw::binomial(3 * n - 4, 3 * d1 - 2) -
                b1 * b1 * b1 * b2 * gw::binomial(3 * n - 4, 3 * d1 - 1));
    }
    cache.push_back(total);
  }
  return cache[d];
}

}  // namespace planar_gw::p2
