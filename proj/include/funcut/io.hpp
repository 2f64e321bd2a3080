#pragma once

// Coefficient files: UTF-8 CSV with header `index,re,im` (Chebyshev, index =
// degree from 0) or `wavenumber,re,im` (trigonometric, -m..m in order).
// Numbers are written in the shortest form that parses back to the same
// binary64 value.

#include "funcut/series.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace funcut::io {

class FormatError : public std::runtime_error {
public:
    FormatError(std::size_t line, const std::string &what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct CoefficientFile {
    Basis basis = Basis::Chebyshev;
    std::vector<Complex> coeffs;
};

/// Shortest round-trip decimal representation.
std::string format_double(double v);

void write_coefficients(std::ostream &os, Basis basis, std::span<const Complex> coeffs);

/// Parses and validates a coefficient file. Throws FormatError.
CoefficientFile read_coefficients(std::istream &is);

} // namespace funcut::io
