#include "cleanroom/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cleanroom::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(CLEANROOM_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const detail::Table* table_for(Impl impl) {
  switch (impl) {
    case Impl::kScalar:
      return &detail::kScalarTable;
    case Impl::kAvx2:
#if defined(CLEANROOM_HAVE_AVX2)
      return &detail::kAvx2Table;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

struct State {
  std::atomic<const detail::Table*> table;
  std::atomic<Impl> impl;

  State() {
    Impl pick = cpu_has_avx2() ? Impl::kAvx2 : Impl::kScalar;
    if (const char* env = std::getenv("CLEANROOM_KERNELS")) {
      const std::string want(env);
      if (want == "scalar") {
        pick = Impl::kScalar;
      } else if (want == "avx2" && cpu_has_avx2()) {
        pick = Impl::kAvx2;
      }
    }
    impl.store(pick);
    table.store(table_for(pick));
  }
};

State& state() {
  static State s;
  return s;
}

}  // namespace

Impl active() { return state().impl.load(); }

const char* impl_name(Impl impl) {
  return impl == Impl::kAvx2 ? "avx2" : "scalar";
}

bool supported(Impl impl) { return table_for(impl) != nullptr; }

void select(Impl impl) {
  const detail::Table* t = table_for(impl);
  if (t == nullptr || (impl == Impl::kAvx2 && !cpu_has_avx2())) {
    throw std::runtime_error(std::string("kernel impl unavailable: ") +
                             impl_name(impl));
  }
  state().impl.store(impl);
  state().table.store(t);
}

double sum(const double* x, std::size_t n) { return state().table.load()->sum(x, n); }

double abs_diff_sum(const double* a, const double* b, std::size_t n) {
  return state().table.load()->abs_diff_sum(a, b, n);
}

double masked_sum(const double* x, const std::uint8_t* mask, std::size_t n) {
  return state().table.load()->masked_sum(x, mask, n);
}

std::size_t count_below(const std::uint64_t* x, std::size_t n,
                        std::uint64_t threshold) {
  return state().table.load()->count_below(x, n, threshold);
}

}  // namespace cleanroom::kernels
