#include "cleanroom/kernels.hpp"

// Reference kernels. Plain left-to-right loops; the AVX2 variants must agree
// with these within a small reassociation tolerance.

namespace cleanroom::kernels {
namespace {

double sum_scalar(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

double abs_diff_sum_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d < 0 ? -d : d;
  }
  return acc;
}

double masked_sum_scalar(const double* x, const std::uint8_t* mask, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask[i]) acc += x[i];
  }
  return acc;
}

std::size_t count_below_scalar(const std::uint64_t* x, std::size_t n,
                               std::uint64_t threshold) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += x[i] < threshold;
  return count;
}

}  // namespace

namespace detail {
const Table kScalarTable = {sum_scalar, abs_diff_sum_scalar, masked_sum_scalar,
                            count_below_scalar};
}  // namespace detail

}  // namespace cleanroom::kernels
