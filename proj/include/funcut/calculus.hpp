#pragma once

#include "funcut/series.hpp"

namespace funcut {

/// Exact coefficient negation; no re-chop.
Fun negate(const Fun &f);

/// Coefficient-wise sum after zero-padding the shorter series. Throws
/// std::invalid_argument on interval or basis mismatch.
Fun add(const Fun &f, const Fun &g, bool post_simplify = false, double tol = 0x1p-52);

/// Product by Chebyshev linearization (T_m T_n = (T_{m+n} + T_{|m-n|})/2) or
/// wavenumber convolution, followed by simplify.
Fun multiply(const Fun &f, const Fun &g, double tol = 0x1p-52);

/// Indefinite integral F with F(a) = 0, followed by simplify. Chebyshev only.
Fun cumsum(const Fun &f, double tol = 0x1p-52);

/// Zero-pad to max(17, round(1.25 n)), run standard_chop and keep the
/// retained prefix. An unhappy chop returns f unchanged.
Fun simplify(const Fun &f, double tol = 0x1p-52);

/// Max |value| of a series on its own natural grid.
double series_vscale(const CoefficientSeries &series);

} // namespace funcut
