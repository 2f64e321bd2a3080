#pragma once

// Data-parallel inner loops with a scalar reference and an AVX2 variant.
//
// Every variant performs the same IEEE operations in the same order per lane
// (no FMA contraction), so all variants are bitwise interchangeable. The
// variant is picked once at runtime from the CPU's feature bits and may be
// pinned for testing.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace funcut::kernels {

enum class Isa { Scalar, Avx2 };

/// Best variant supported by this CPU and build.
Isa detect_isa() noexcept;

/// Variant currently used by the dispatching entry points.
Isa active_isa() noexcept;

/// Pin a variant. Requesting an unsupported one falls back to Scalar.
void set_isa(Isa isa) noexcept;

bool isa_supported(Isa isa) noexcept;
std::string_view isa_name(Isa isa) noexcept;

/// One radix-2 decimation-in-time pass over a bit-reversed buffer:
/// for each block of 2*half entries, data[i] +/- twiddles[j] * data[i+half].
/// twiddles holds `half` entries.
void butterfly_pass(std::span<std::complex<double>> data, std::span<const std::complex<double>> twiddles,
                    std::size_t half) noexcept;

/// Clenshaw evaluation of sum_k (re[k] + i im[k]) T_k(x) at every x in xs.
/// re and im have equal nonzero length.
void clenshaw(std::span<const double> re, std::span<const double> im, std::span<const double> xs,
              std::span<std::complex<double>> out) noexcept;

namespace scalar {
void butterfly_pass(std::complex<double> *data, std::size_t n, const std::complex<double> *twiddles,
                    std::size_t half) noexcept;
void clenshaw(const double *re, const double *im, std::size_t ncoeffs, const double *xs, std::size_t nx,
              std::complex<double> *out) noexcept;
} // namespace scalar

#if defined(FUNCUT_HAVE_AVX2)
namespace avx2 {
void butterfly_pass(std::complex<double> *data, std::size_t n, const std::complex<double> *twiddles,
                    std::size_t half) noexcept;
void clenshaw(const double *re, const double *im, std::size_t ncoeffs, const double *xs, std::size_t nx,
              std::complex<double> *out) noexcept;
} // namespace avx2
#endif

} // namespace funcut::kernels
