#include "kernels_impl.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace bentkit::kernels {
namespace {

bool env_forces_scalar() {
  const char* env = std::getenv("BENTKIT_SIMD");
  return env != nullptr && std::string_view(env) == "scalar";
}

std::atomic<bool>& scalar_forced() {
  static std::atomic<bool> flag{env_forces_scalar()};
  return flag;
}

}  // namespace

const KernelSet* avx2() {
#if defined(BENTKIT_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  if (supported) return &detail::avx2_set();
#endif
  return nullptr;
}

const KernelSet& active() {
  if (!scalar_forced().load(std::memory_order_relaxed)) {
    if (const KernelSet* set = avx2()) return *set;
  }
  return scalar();
}

void force_scalar(bool on) { scalar_forced().store(on, std::memory_order_relaxed); }

std::vector<const KernelSet*> available() {
  std::vector<const KernelSet*> sets{&scalar()};
  if (const KernelSet* set = avx2()) sets.push_back(set);
  return sets;
}

}  // namespace bentkit::kernels
