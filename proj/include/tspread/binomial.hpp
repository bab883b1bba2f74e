#pragma once

#include <cstdint>

namespace tspread {

/// Exact C(a, k) with C(a, k) = 0 whenever a < k, a < 0 or k < 0. Throws
/// std::overflow_error if the value does not fit in 64 bits.
std::uint64_t binomial(std::int64_t a, std::int64_t k);

}  // namespace tspread
