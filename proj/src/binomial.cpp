#include "tspread/binomial.hpp"

#include <numeric>
#include <stdexcept>

namespace tspread {

std::uint64_t binomial(std::int64_t a, std::int64_t k) {
  if (k < 0 || a < 0 || a < k) return 0;
  if (k > a - k) k = a - k;
  std::uint64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (a-k+i) / i is exact at every step; divide out the gcd first to
    // keep the intermediate product small.
    std::uint64_t num = static_cast<std::uint64_t>(a - k + i);
    std::uint64_t den = static_cast<std::uint64_t>(i);
    const std::uint64_t g = std::gcd(r, den);
    r /= g;
    den /= g;
    num /= den;  // den now divides num
    if (num != 0 && r > UINT64_MAX / num) throw std::overflow_error("binomial coefficient overflows 64 bits");
    r *= num;
  }
  return r;
}

}  // namespace tspread
