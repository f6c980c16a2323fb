#ifndef FRACPOW_KERNELS_HPP
#define FRACPOW_KERNELS_HPP

#include <cstddef>
#include <cstdint>

namespace fracpow::kernels
{

enum class Isa { scalar, avx2, neon };

const char *isa_name(Isa isa);

// Instruction sets this binary can run here, best first.
bool isa_supported(Isa isa);
Isa best_isa();

// Variant used by dispatching calls. Defaults to best_isa(); FRACPOW_ISA
// (scalar|avx2|neon) overrides it at first use.
Isa active_isa();
// Throws usage_error for an unsupported set.
void set_active_isa(Isa isa);

// dst[i] += src[i] for i < n. No overflow check; callers bound the sums.
void add_into(std::int64_t *dst, const std::int64_t *src, std::size_t n);

void add_into_scalar(std::int64_t *dst, const std::int64_t *src, std::size_t n);
#if defined(__x86_64__) || defined(__i386__)
void add_into_avx2(std::int64_t *dst, const std::int64_t *src, std::size_t n);
#endif
#if defined(__aarch64__)
void add_into_neon(std::int64_t *dst, const std::int64_t *src, std::size_t n);
#endif

} // namespace fracpow::kernels

#endif
