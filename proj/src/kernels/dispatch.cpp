#include "funcut/kernels.hpp"

#include <atomic>
#include <cassert>

namespace funcut::kernels {

namespace {

std::atomic<Isa> &selected() {
    static std::atomic<Isa> isa{detect_isa()};
    return isa;
}

} // namespace

bool isa_supported(Isa isa) noexcept {
    switch (isa) {
    case Isa::Scalar:
        return true;
    case Isa::Avx2:
#if defined(FUNCUT_HAVE_AVX2)
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }
    return false;
}

Isa detect_isa() noexcept { return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

Isa active_isa() noexcept { return selected().load(std::memory_order_relaxed); }

void set_isa(Isa isa) noexcept {
    selected().store(isa_supported(isa) ? isa : Isa::Scalar, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
    case Isa::Scalar:
        return "scalar";
    case Isa::Avx2:
        return "avx2";
    }
    return "unknown";
}

void butterfly_pass(std::span<std::complex<double>> data, std::span<const std::complex<double>> twiddles,
                    std::size_t half) noexcept {
    assert(twiddles.size() >= half && data.size() % (2 * half) == 0);
#if defined(FUNCUT_HAVE_AVX2)
    if (active_isa() == Isa::Avx2) {
        avx2::butterfly_pass(data.data(), data.size(), twiddles.data(), half);
        return;
    }
#endif
    scalar::butterfly_pass(data.data(), data.size(), twiddles.data(), half);
}

void clenshaw(std::span<const double> re, std::span<const double> im, std::span<const double> xs,
              std::span<std::complex<double>> out) noexcept {
    assert(!re.empty() && re.size() == im.size() && out.size() == xs.size());
#if defined(FUNCUT_HAVE_AVX2)
    if (active_isa() == Isa::Avx2) {
        avx2::clenshaw(re.data(), im.data(), re.size(), xs.data(), xs.size(), out.data());
        return;
    }
#endif
    scalar::clenshaw(re.data(), im.data(), re.size(), xs.data(), xs.size(), out.data());
}

} // namespace funcut::kernels
