#include <fracpow/kernels.hpp>

namespace fracpow::kernels
{

void add_into_scalar(std::int64_t *dst, const std::int64_t *src, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] += src[i];
    }
}

} // namespace fracpow::kernels
