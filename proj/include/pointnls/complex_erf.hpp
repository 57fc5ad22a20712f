#pragma once

#include "pointnls/types.hpp"

// Complex error function to ~1e-13 relative accuracy, plus the scaled
// complement e^{z^2} erfc(z) used to evaluate e^{i lam t}[1 - erf(.)]
// without cancellation. Principal square-root branch throughout.

namespace pointnls::specfun {

// erf(z). Throws OverflowError when |Re z^2| >= 700 and on non-finite input.
Complex erf_complex(Complex z);

// e^{z^2} (1 - erf(z)). Requires Re z >= 0 (callers reflect for Re z < 0);
// equal to the Faddeeva function w(iz).
Complex erfc_scaled(Complex z);

// Faddeeva w(z) = e^{-z^2} erfc(-iz) for Im z >= 0.
Complex faddeeva_w(Complex z);

namespace detail {
// the two internal evaluation routes, exposed for the crossover consistency test
Complex erf_series(Complex z);
Complex erf_via_w(Complex z);
} // namespace detail

} // namespace pointnls::specfun
