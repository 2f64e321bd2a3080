#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace funcut::fft {

/// exp(-2 pi i num / den) with the angle reduced to an octant in integer
/// arithmetic first, so quarter turns are exact and symmetric roots agree.
std::complex<double> unit_root(std::size_t num, std::size_t den);

/// Unnormalized forward DFT, X_k = sum_j x_j exp(-2 pi i jk/N), in place.
/// Radix-2 for powers of two, Bluestein's chirp transform otherwise.
void forward(std::span<std::complex<double>> data);

/// Unnormalized inverse DFT (positive exponent), in place.
void inverse(std::span<std::complex<double>> data);

/// O(N^2) forward DFT with exactly reduced roots. Reference path for tests
/// and for callers that ask for it explicitly.
std::vector<std::complex<double>> forward_direct(std::span<const std::complex<double>> data);

bool is_power_of_two(std::size_t n) noexcept;

} // namespace funcut::fft
