#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_internal.hpp"

namespace freshcsma::simd {

#ifndef FRESHCSMA_HAVE_AVX2
const KernelTable* detail::avx2_table() { return nullptr; }
#endif
#ifndef FRESHCSMA_HAVE_NEON
const KernelTable* detail::neon_table() { return nullptr; }
#endif

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(FRESHCSMA_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
      // Advanced SIMD is mandatory on AArch64.
      return detail::neon_table() != nullptr;
  }
  return false;
}

const KernelTable& kernels_for(Isa isa) {
  if (!isa_available(isa)) {
    throw std::runtime_error("kernel variant '" + std::string(to_string(isa)) +
                             "' is not available on this machine");
  }
  switch (isa) {
    case Isa::Avx2:
      return *detail::avx2_table();
    case Isa::Neon:
      return *detail::neon_table();
    case Isa::Scalar:
      break;
  }
  return scalar_kernels();
}

namespace {

const KernelTable& select_kernels() {
  if (const char* forced = std::getenv("FRESHCSMA_SIMD")) {
    const std::string name(forced);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
      if (name == to_string(isa) && isa_available(isa)) return kernels_for(isa);
    }
  }
  if (isa_available(Isa::Avx2)) return kernels_for(Isa::Avx2);
  if (isa_available(Isa::Neon)) return kernels_for(Isa::Neon);
  return scalar_kernels();
}

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("kernel operands differ in length");
}

void require_nonempty(std::size_t n) {
  if (n == 0) throw std::invalid_argument("reduction over an empty range");
}

}  // namespace

const KernelTable& active_kernels() {
  static const KernelTable& table = select_kernels();
  return table;
}

void weighted_square(std::span<const double> w, std::span<const std::int64_t> a, double scale,
                     std::span<double> out) {
  require_same_size(w.size(), a.size());
  require_same_size(w.size(), out.size());
  active_kernels().weighted_square(w.data(), a.data(), scale, out.data(), out.size());
}

void scaled_counts(std::span<const std::int64_t> c, double scale, std::span<double> out) {
  require_same_size(c.size(), out.size());
  active_kernels().scaled_counts(c.data(), scale, out.data(), out.size());
}

void subtract(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  require_same_size(a.size(), b.size());
  require_same_size(a.size(), out.size());
  active_kernels().subtract(a.data(), b.data(), out.data(), out.size());
}

void discretize(std::span<const double> log_z, double ln_beta, std::int64_t b_offset,
                std::span<std::int64_t> out) {
  require_same_size(log_z.size(), out.size());
  active_kernels().discretize(log_z.data(), ln_beta, b_offset, out.data(), out.size());
}

Extremum<std::int64_t> min_element(std::span<const std::int64_t> v) {
  require_nonempty(v.size());
  return active_kernels().min_i64(v.data(), v.size());
}

Extremum<double> min_element(std::span<const double> v) {
  require_nonempty(v.size());
  return active_kernels().min_f64(v.data(), v.size());
}

Extremum<double> max_element(std::span<const double> v) {
  require_nonempty(v.size());
  return active_kernels().max_f64(v.data(), v.size());
}

}  // namespace freshcsma::simd
