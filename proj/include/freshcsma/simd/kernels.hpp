#pragma once

// Data-parallel inner loops of contention resolution.
//
// Every kernel exists as a scalar reference and, where the target has one,
// a vector variant. Only IEEE-exact operations (add, sub, mul, div, floor,
// min, max, compare) appear in kernels, so all variants agree bit for bit;
// the transcendental calls (log/exp) stay in scalar code outside.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace freshcsma::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

/// Smallest (or largest) element, how many elements equal it, and the first
/// index where it occurs.
template <typename T>
struct Extremum {
  T value;
  std::size_t count;
  std::size_t first;
};

struct KernelTable {
  Isa isa;

  /// out[i] = w[i] * (a[i] * a[i]) * scale. Requires 0 <= a[i] < 2^52.
  void (*weighted_square)(const double* w, const std::int64_t* a, double scale, double* out,
                          std::size_t n);

  /// out[i] = c[i] * scale. Requires 0 <= c[i] < 2^52.
  void (*scaled_counts)(const std::int64_t* c, double scale, double* out, std::size_t n);

  /// out[i] = a[i] - b[i].
  void (*subtract)(const double* a, const double* b, double* out, std::size_t n);

  /// out[i] = clamp(B + floor(log_z[i] / ln_beta), 0, 2^51).
  void (*discretize)(const double* log_z, double ln_beta, std::int64_t b_offset,
                     std::int64_t* out, std::size_t n);

  /// n >= 1 for the three reductions.
  Extremum<std::int64_t> (*min_i64)(const std::int64_t* v, std::size_t n);
  Extremum<double> (*min_f64)(const double* v, std::size_t n);
  Extremum<double> (*max_f64)(const double* v, std::size_t n);
};

const KernelTable& scalar_kernels();

/// True when the variant is compiled in and the running CPU supports it.
bool isa_available(Isa isa);

/// Throws std::runtime_error when the variant is unavailable.
const KernelTable& kernels_for(Isa isa);

/// Best available variant, chosen once. The FRESHCSMA_SIMD environment
/// variable (scalar, avx2, neon) forces a choice when that variant exists.
const KernelTable& active_kernels();

// Span front-ends over active_kernels().

void weighted_square(std::span<const double> w, std::span<const std::int64_t> a, double scale,
                     std::span<double> out);
void scaled_counts(std::span<const std::int64_t> c, double scale, std::span<double> out);
void subtract(std::span<const double> a, std::span<const double> b, std::span<double> out);
void discretize(std::span<const double> log_z, double ln_beta, std::int64_t b_offset,
                std::span<std::int64_t> out);
Extremum<std::int64_t> min_element(std::span<const std::int64_t> v);
Extremum<double> min_element(std::span<const double> v);
Extremum<double> max_element(std::span<const double> v);

}  // namespace freshcsma::simd
