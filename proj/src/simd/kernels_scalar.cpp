#include <algorithm>
#include <cmath>

#include "kernels_internal.hpp"

namespace freshcsma::simd {

namespace {

void weighted_square_scalar(const double* w, const std::int64_t* a, double scale, double* out,
                            std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const auto ai = static_cast<double>(a[i]);
    out[i] = w[i] * (ai * ai) * scale;
  }
}

void scaled_counts_scalar(const std::int64_t* c, double scale, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<double>(c[i]) * scale;
}

void subtract_scalar(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}

void discretize_scalar(const double* log_z, double ln_beta, std::int64_t b_offset,
                       std::int64_t* out, std::size_t n) {
  const auto b = static_cast<double>(b_offset);
  for (std::size_t i = 0; i < n; ++i) {
    double d = b + std::floor(log_z[i] / ln_beta);
    d = std::max(d, 0.0);
    d = std::min(d, detail::kTimerCeiling);
    out[i] = static_cast<std::int64_t>(d);
  }
}

template <typename T, typename Better>
Extremum<T> extremum_scalar(const T* v, std::size_t n, Better better) {
  Extremum<T> r{v[0], 1, 0};
  for (std::size_t i = 1; i < n; ++i) {
    if (better(v[i], r.value)) {
      r = {v[i], 1, i};
    } else if (v[i] == r.value) {
      ++r.count;
    }
  }
  return r;
}

Extremum<std::int64_t> min_i64_scalar(const std::int64_t* v, std::size_t n) {
  return extremum_scalar(v, n, [](std::int64_t x, std::int64_t y) { return x < y; });
}

Extremum<double> min_f64_scalar(const double* v, std::size_t n) {
  return extremum_scalar(v, n, [](double x, double y) { return x < y; });
}

Extremum<double> max_f64_scalar(const double* v, std::size_t n) {
  return extremum_scalar(v, n, [](double x, double y) { return x > y; });
}

constexpr KernelTable kScalar{
    Isa::Scalar,        weighted_square_scalar, scaled_counts_scalar, subtract_scalar,
    discretize_scalar, min_i64_scalar,          min_f64_scalar,       max_f64_scalar,
};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace freshcsma::simd
