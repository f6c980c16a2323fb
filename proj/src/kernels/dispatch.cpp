#include <atomic>
#include <cstdlib>
#include <string>
#include <string_view>

#include <fracpow/error.hpp>
#include <fracpow/kernels.hpp>

namespace fracpow::kernels
{

namespace
{

Isa initial_isa()
{
    if (const char *env = std::getenv("FRACPOW_ISA")) {
        const std::string_view v(env);
        for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
            if (v == isa_name(isa) && isa_supported(isa)) {
                return isa;
            }
        }
    }
    return best_isa();
}

std::atomic<Isa> &active()
{
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

} // namespace

const char *isa_name(Isa isa)
{
    switch (isa) {
    case Isa::scalar:
        return "scalar";
    case Isa::avx2:
        return "avx2";
    case Isa::neon:
        return "neon";
    }
    return "unknown";
}

bool isa_supported(Isa isa)
{
    switch (isa) {
    case Isa::scalar:
        return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    case Isa::neon:
#if defined(__aarch64__)
        return true;
#else
        return false;
#endif
    }
    return false;
}

Isa best_isa()
{
    for (Isa isa : {Isa::avx2, Isa::neon}) {
        if (isa_supported(isa)) {
            return isa;
        }
    }
    return Isa::scalar;
}

Isa active_isa()
{
    return active().load(std::memory_order_relaxed);
}

void set_active_isa(Isa isa)
{
    if (!isa_supported(isa)) {
        throw usage_error(std::string("instruction set not available: ") + isa_name(isa));
    }
    active().store(isa, std::memory_order_relaxed);
}

void add_into(std::int64_t *dst, const std::int64_t *src, std::size_t n)
{
    switch (active_isa()) {
#if defined(__x86_64__) || defined(__i386__)
    case Isa::avx2:
        add_into_avx2(dst, src, n);
        return;
#endif
#if defined(__aarch64__)
    case Isa::neon:
        add_into_neon(dst, src, n);
        return;
#endif
    default:
        add_into_scalar(dst, src, n);
    }
}

} // namespace fracpow::kernels
