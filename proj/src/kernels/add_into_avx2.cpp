#include <fracpow/kernels.hpp>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace fracpow::kernels
{

__attribute__((target("avx2"))) void add_into_avx2(std::int64_t *dst, const std::int64_t *src, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i a0 = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(dst + i));
        __m256i a1 = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(dst + i + 4));
        const __m256i b0 = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(src + i));
        const __m256i b1 = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(src + i + 4));
        a0 = _mm256_add_epi64(a0, b0);
        a1 = _mm256_add_epi64(a1, b1);
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + i), a0);
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + i + 4), a1);
    }
    for (; i + 4 <= n; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(dst + i));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i *>(dst + i), _mm256_add_epi64(a, b));
    }
    for (; i < n; ++i) {
        dst[i] += src[i];
    }
}

} // namespace fracpow::kernels
#endif
