#pragma once

// Inner-loop reductions for the float-mode probability engine.
//
// Every kernel has a scalar reference implementation and, on x86-64 with
// AVX2, a vectorized variant. The implementation is picked once at runtime
// (CPU detection, overridable via CLEANROOM_KERNELS=scalar|avx2 or select()),
// and the two are equivalence-tested against each other. Exact-rational code
// never calls these.

#include <cstddef>
#include <cstdint>

namespace cleanroom::kernels {

enum class Impl { kScalar = 0, kAvx2 = 1 };

/// Implementation currently in use.
Impl active();
const char* impl_name(Impl impl);
bool supported(Impl impl);
/// Force an implementation (tests); throws if unsupported on this machine.
void select(Impl impl);

/// Sum of x[0..n).
double sum(const double* x, std::size_t n);

/// Sum of |a[i] - b[i]|.
double abs_diff_sum(const double* a, const double* b, std::size_t n);

/// Sum of x[i] where mask[i] != 0.
double masked_sum(const double* x, const std::uint8_t* mask, std::size_t n);

/// Count of draws strictly below threshold (batched Bernoulli trials).
std::size_t count_below(const std::uint64_t* x, std::size_t n,
                        std::uint64_t threshold);

namespace detail {
struct Table {
  double (*sum)(const double*, std::size_t);
  double (*abs_diff_sum)(const double*, const double*, std::size_t);
  double (*masked_sum)(const double*, const std::uint8_t*, std::size_t);
  std::size_t (*count_below)(const std::uint64_t*, std::size_t, std::uint64_t);
};
extern const Table kScalarTable;
#if defined(CLEANROOM_HAVE_AVX2)
extern const Table kAvx2Table;
#endif
}  // namespace detail

}  // namespace cleanroom::kernels
