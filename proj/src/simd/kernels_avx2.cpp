// Compiled with -mavx2 only; reached through the dispatcher after a CPU check.

#include <immintrin.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "kernels_internal.hpp"

namespace freshcsma::simd {

namespace {

inline __m256d i64_to_f64(__m256i v) {
  const __m256i magic_bits = _mm256_set1_epi64x(detail::kMagicBits);
  const __m256d magic = _mm256_set1_pd(detail::kMagic);
  return _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(v, magic_bits)), magic);
}

// Input must be integral and in [0, 2^52).
inline __m256i f64_to_i64(__m256d v) {
  const __m256i magic_bits = _mm256_set1_epi64x(detail::kMagicBits);
  const __m256d magic = _mm256_set1_pd(detail::kMagic);
  return _mm256_sub_epi64(_mm256_castpd_si256(_mm256_add_pd(v, magic)), magic_bits);
}

void weighted_square_avx2(const double* w, const std::int64_t* a, double scale, double* out,
                          std::size_t n) {
  const __m256d vscale = _mm256_set1_pd(scale);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d ad = i64_to_f64(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)));
    const __m256d wv = _mm256_loadu_pd(w + i);
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_mul_pd(wv, _mm256_mul_pd(ad, ad)), vscale));
  }
  for (; i < n; ++i) {
    const auto ai = static_cast<double>(a[i]);
    out[i] = w[i] * (ai * ai) * scale;
  }
}

void scaled_counts_avx2(const std::int64_t* c, double scale, double* out, std::size_t n) {
  const __m256d vscale = _mm256_set1_pd(scale);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d cd = i64_to_f64(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + i)));
    _mm256_storeu_pd(out + i, _mm256_mul_pd(cd, vscale));
  }
  for (; i < n; ++i) out[i] = static_cast<double>(c[i]) * scale;
}

void subtract_avx2(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

void discretize_avx2(const double* log_z, double ln_beta, std::int64_t b_offset,
                     std::int64_t* out, std::size_t n) {
  const auto b = static_cast<double>(b_offset);
  const __m256d vb = _mm256_set1_pd(b);
  const __m256d vlnb = _mm256_set1_pd(ln_beta);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d ceiling = _mm256_set1_pd(detail::kTimerCeiling);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d q = _mm256_div_pd(_mm256_loadu_pd(log_z + i), vlnb);
    __m256d d = _mm256_add_pd(vb, _mm256_floor_pd(q));
    d = _mm256_min_pd(_mm256_max_pd(d, zero), ceiling);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), f64_to_i64(d));
  }
  for (; i < n; ++i) {
    double d = b + std::floor(log_z[i] / ln_beta);
    d = std::min(std::max(d, 0.0), detail::kTimerCeiling);
    out[i] = static_cast<std::int64_t>(d);
  }
}

Extremum<std::int64_t> min_i64_avx2(const std::int64_t* v, std::size_t n) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::size_t i = 0;
  if (n >= 4) {
    __m256i acc = _mm256_set1_epi64x(best);
    for (; i + 4 <= n; i += 4) {
      const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
      acc = _mm256_blendv_epi8(acc, x, _mm256_cmpgt_epi64(acc, x));
    }
    alignas(32) std::int64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    best = std::min({lanes[0], lanes[1], lanes[2], lanes[3]});
  }
  for (; i < n; ++i) best = std::min(best, v[i]);

  Extremum<std::int64_t> r{best, 0, n};
  const __m256i target = _mm256_set1_epi64x(best);
  i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    const auto mask = static_cast<unsigned>(
        _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(x, target))));
    if (mask != 0 && r.first == n) r.first = i + static_cast<std::size_t>(std::countr_zero(mask));
    r.count += static_cast<std::size_t>(std::popcount(mask));
  }
  for (; i < n; ++i) {
    if (v[i] == best) {
      if (r.first == n) r.first = i;
      ++r.count;
    }
  }
  return r;
}

template <bool kMin>
Extremum<double> extremum_f64_avx2(const double* v, std::size_t n) {
  double best = v[0];
  std::size_t i = 0;
  if (n >= 4) {
    __m256d acc = _mm256_set1_pd(best);
    for (; i + 4 <= n; i += 4) {
      const __m256d x = _mm256_loadu_pd(v + i);
      acc = kMin ? _mm256_min_pd(acc, x) : _mm256_max_pd(acc, x);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    for (double l : lanes) best = kMin ? std::min(best, l) : std::max(best, l);
  }
  for (; i < n; ++i) best = kMin ? std::min(best, v[i]) : std::max(best, v[i]);

  Extremum<double> r{best, 0, n};
  const __m256d target = _mm256_set1_pd(best);
  i = 0;
  for (; i + 4 <= n; i += 4) {
    const auto mask = static_cast<unsigned>(
        _mm256_movemask_pd(_mm256_cmp_pd(_mm256_loadu_pd(v + i), target, _CMP_EQ_OQ)));
    if (mask != 0 && r.first == n) r.first = i + static_cast<std::size_t>(std::countr_zero(mask));
    r.count += static_cast<std::size_t>(std::popcount(mask));
  }
  for (; i < n; ++i) {
    if (v[i] == best) {
      if (r.first == n) r.first = i;
      ++r.count;
    }
  }
  // Report the stored element so a signed zero matches the scalar result.
  r.value = v[r.first];
  return r;
}

Extremum<double> min_f64_avx2(const double* v, std::size_t n) {
  return extremum_f64_avx2<true>(v, n);
}

Extremum<double> max_f64_avx2(const double* v, std::size_t n) {
  return extremum_f64_avx2<false>(v, n);
}

constexpr KernelTable kAvx2{
    Isa::Avx2,       weighted_square_avx2, scaled_counts_avx2, subtract_avx2,
    discretize_avx2, min_i64_avx2,         min_f64_avx2,       max_f64_avx2,
};

}  // namespace

const KernelTable* detail::avx2_table() { return &kAvx2; }

}  // namespace freshcsma::simd
