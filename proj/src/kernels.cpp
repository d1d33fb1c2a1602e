#include "lorentz/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace lorentz::kern {

#if defined(__x86_64__) || defined(__i386__)
namespace detail {
const Ops* avx2_ops_impl();
}
#endif

const Ops* avx2_ops() {
#if defined(__x86_64__) || defined(__i386__)
  return detail::avx2_ops_impl();
#else
  return nullptr;
#endif
}

const Ops& active_ops() {
  static const Ops* chosen = []() -> const Ops* {
    if (const char* env = std::getenv("LORENTZ_KERNEL")) {
      if (std::strcmp(env, "scalar") == 0) return &scalar_ops();
      if (std::strcmp(env, "avx2") == 0 && avx2_ops()) return avx2_ops();
    }
    if (const Ops* a = avx2_ops()) return a;
    return &scalar_ops();
  }();
  return *chosen;
}

}  // namespace lorentz::kern
