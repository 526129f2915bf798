#pragma once

#include "freshcsma/simd/kernels.hpp"

namespace freshcsma::simd::detail {

// 2^52 as a double and as its bit pattern: the classic exact bridge between
// non-negative integers below 2^52 and doubles.
inline constexpr double kMagic = 4503599627370496.0;
inline constexpr std::int64_t kMagicBits = 0x4330000000000000LL;
inline constexpr double kTimerCeiling = 2251799813685248.0;  // 2^51

const KernelTable* avx2_table();
const KernelTable* neon_table();

}  // namespace freshcsma::simd::detail
