// AArch64 Advanced SIMD variants. Two doubles per register.

#include <arm_neon.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "kernels_internal.hpp"

namespace freshcsma::simd {

namespace {

void weighted_square_neon(const double* w, const std::int64_t* a, double scale, double* out,
                          std::size_t n) {
  const float64x2_t vscale = vdupq_n_f64(scale);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t ad = vcvtq_f64_s64(vld1q_s64(a + i));
    const float64x2_t prod = vmulq_f64(vld1q_f64(w + i), vmulq_f64(ad, ad));
    vst1q_f64(out + i, vmulq_f64(prod, vscale));
  }
  for (; i < n; ++i) {
    const auto ai = static_cast<double>(a[i]);
    out[i] = w[i] * (ai * ai) * scale;
  }
}

void scaled_counts_neon(const std::int64_t* c, double scale, double* out, std::size_t n) {
  const float64x2_t vscale = vdupq_n_f64(scale);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vmulq_f64(vcvtq_f64_s64(vld1q_s64(c + i)), vscale));
  for (; i < n; ++i) out[i] = static_cast<double>(c[i]) * scale;
}

void subtract_neon(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

void discretize_neon(const double* log_z, double ln_beta, std::int64_t b_offset,
                     std::int64_t* out, std::size_t n) {
  const auto b = static_cast<double>(b_offset);
  const float64x2_t vb = vdupq_n_f64(b);
  const float64x2_t vlnb = vdupq_n_f64(ln_beta);
  const float64x2_t zero = vdupq_n_f64(0.0);
  const float64x2_t ceiling = vdupq_n_f64(detail::kTimerCeiling);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t d = vaddq_f64(vb, vrndmq_f64(vdivq_f64(vld1q_f64(log_z + i), vlnb)));
    d = vminq_f64(vmaxq_f64(d, zero), ceiling);
    vst1q_s64(out + i, vcvtq_s64_f64(d));
  }
  for (; i < n; ++i) {
    double d = b + std::floor(log_z[i] / ln_beta);
    d = std::min(std::max(d, 0.0), detail::kTimerCeiling);
    out[i] = static_cast<std::int64_t>(d);
  }
}

Extremum<std::int64_t> min_i64_neon(const std::int64_t* v, std::size_t n) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::size_t i = 0;
  if (n >= 2) {
    int64x2_t acc = vdupq_n_s64(best);
    for (; i + 2 <= n; i += 2) {
      const int64x2_t x = vld1q_s64(v + i);
      acc = vbslq_s64(vcltq_s64(x, acc), x, acc);
    }
    best = std::min(vgetq_lane_s64(acc, 0), vgetq_lane_s64(acc, 1));
  }
  for (; i < n; ++i) best = std::min(best, v[i]);

  Extremum<std::int64_t> r{best, 0, n};
  for (i = 0; i < n; ++i) {
    if (v[i] == best) {
      if (r.first == n) r.first = i;
      ++r.count;
    }
  }
  return r;
}

template <bool kMin>
Extremum<double> extremum_f64_neon(const double* v, std::size_t n) {
  double best = v[0];
  std::size_t i = 0;
  if (n >= 2) {
    float64x2_t acc = vdupq_n_f64(best);
    for (; i + 2 <= n; i += 2) {
      const float64x2_t x = vld1q_f64(v + i);
      acc = kMin ? vminq_f64(acc, x) : vmaxq_f64(acc, x);
    }
    best = kMin ? vminvq_f64(acc) : vmaxvq_f64(acc);
  }
  for (; i < n; ++i) best = kMin ? std::min(best, v[i]) : std::max(best, v[i]);

  Extremum<double> r{best, 0, n};
  for (i = 0; i < n; ++i) {
    if (v[i] == best) {
      if (r.first == n) r.first = i;
      ++r.count;
    }
  }
  r.value = v[r.first];
  return r;
}

Extremum<double> min_f64_neon(const double* v, std::size_t n) {
  return extremum_f64_neon<true>(v, n);
}

Extremum<double> max_f64_neon(const double* v, std::size_t n) {
  return extremum_f64_neon<false>(v, n);
}

constexpr KernelTable kNeon{
    Isa::Neon,       weighted_square_neon, scaled_counts_neon, subtract_neon,
    discretize_neon, min_i64_neon,         min_f64_neon,       max_f64_neon,
};

}  // namespace

const KernelTable* detail::neon_table() { return &kNeon; }

}  // namespace freshcsma::simd
