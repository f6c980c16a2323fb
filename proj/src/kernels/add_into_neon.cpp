#include <fracpow/kernels.hpp>

#if defined(__aarch64__)
#include <arm_neon.h>

namespace fracpow::kernels
{

void add_into_neon(std::int64_t *dst, const std::int64_t *src, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_s64(dst + i, vaddq_s64(vld1q_s64(dst + i), vld1q_s64(src + i)));
    }
    for (; i < n; ++i) {
        dst[i] += src[i];
    }
}

} // namespace fracpow::kernels
#endif
