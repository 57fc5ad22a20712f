#include "pointnls/complex_erf.hpp"

#include <array>
#include <cmath>

#include "pointnls/errors.hpp"

namespace pointnls::specfun {

namespace {

constexpr double kSqrtPi = 1.7724538509055160272981674833411;
constexpr double kMidH = 0.25;     // midpoint-rule step
constexpr int kMidN = 28;          // nodes at +-(k+1/2)h, |t| <= 7
constexpr int kCfDepth = 24;       // Laplace continued fraction depth
constexpr double kCfRadius = 12.0; // |z| above which the CF is used
constexpr int kTaylorTerms = 48;

const std::array<double, 2 * kMidN>& midpoint_weights() {
    static const std::array<double, 2 * kMidN> table = [] {
        std::array<double, 2 * kMidN> w{};
        for (int k = -kMidN; k < kMidN; ++k) {
            const double t = (k + 0.5) * kMidH;
            w[static_cast<std::size_t>(k + kMidN)] = std::exp(-t * t);
        }
        return w;
    }();
    return table;
}

// midpoint rule for w(z) = (i/pi) int e^{-t^2}/(z-t) dt plus the pole
// correction picked up when Im z is comparable to the grid step
Complex w_midpoint(Complex z) {
    const auto& wts = midpoint_weights();
    Complex s{0.0, 0.0};
    for (int k = -kMidN; k < kMidN; ++k) {
        const double t = (k + 0.5) * kMidH;
        s += wts[static_cast<std::size_t>(k + kMidN)] / (z - t);
    }
    Complex w = Complex(0.0, kMidH / kPi) * s;
    w += 2.0 * std::exp(-z * z) / (1.0 + std::exp(Complex(0.0, -2.0 * kPi / kMidH) * z));
    return w;
}

Complex w_continued_fraction(Complex z) {
    Complex f{0.0, 0.0};
    for (int n = kCfDepth; n >= 1; --n) f = (0.5 * n) / (z - f);
    return Complex(0.0, 1.0 / kSqrtPi) / (z - f);
}

// Taylor continuation of w from z0 (where the midpoint rule is safe) down to
// z near the real axis, using w' = -2 z w + 2i/sqrt(pi)
Complex w_taylor_from(Complex z, Complex z0) {
    std::array<Complex, kTaylorTerms + 1> d;
    d[0] = w_midpoint(z0);
    d[1] = -2.0 * z0 * d[0] + Complex(0.0, 2.0 / kSqrtPi);
    for (int n = 1; n < kTaylorTerms; ++n)
        d[static_cast<std::size_t>(n + 1)] = -2.0 * z0 * d[static_cast<std::size_t>(n)]
                                             - 2.0 * n * d[static_cast<std::size_t>(n - 1)];
    const Complex dz = z - z0;
    Complex acc = d[kTaylorTerms];
    for (int n = kTaylorTerms - 1; n >= 0; --n) acc = d[static_cast<std::size_t>(n)] + acc * dz / (n + 1.0);
    return acc;
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

} // namespace

Complex faddeeva_w(Complex z) {
    if (!finite(z)) throw OverflowError("faddeeva_w: non-finite argument");
    if (std::abs(z) >= kCfRadius) return w_continued_fraction(z);
    if (z.imag() < 0.25 && std::abs(z.real()) < 7.5)
        return w_taylor_from(z, z + Complex(0.0, 0.75));
    return w_midpoint(z);
}

namespace detail {

Complex erf_series(Complex z) {
    const Complex zz = z * z;
    Complex term = z;
    Complex sum = z;
    for (int n = 1; n <= 200; ++n) {
        term *= -zz / static_cast<double>(n);
        const Complex c = term / (2.0 * n + 1.0);
        sum += c;
        if (std::abs(c) <= 1e-18 * std::max(1.0, std::abs(sum))) break;
    }
    return (2.0 / kSqrtPi) * sum;
}

Complex erf_via_w(Complex z) {
    if (z.real() >= 0.0)
        return 1.0 - std::exp(-z * z) * faddeeva_w(Complex(-z.imag(), z.real()));
    return -(1.0 - std::exp(-z * z) * faddeeva_w(Complex(z.imag(), -z.real())));
}

} // namespace detail

Complex erf_complex(Complex z) {
    if (!finite(z)) throw OverflowError("erf_complex: non-finite argument");
    const double re2 = z.real() * z.real() - z.imag() * z.imag();
    if (std::abs(re2) >= 700.0) throw OverflowError("erf_complex: |Re z^2| >= 700");
    if (std::abs(z) <= 3.0) return detail::erf_series(z);
    return detail::erf_via_w(z);
}

Complex erfc_scaled(Complex z) {
    if (!finite(z)) throw OverflowError("erfc_scaled: non-finite argument");
    if (z.real() >= 0.0) return faddeeva_w(Complex(-z.imag(), z.real()));
    // reflection: e^{z^2} erfc(z) = 2 e^{z^2} - e^{z^2} erfc(-z)
    const double re2 = z.real() * z.real() - z.imag() * z.imag();
    if (re2 >= 700.0) throw OverflowError("erfc_scaled: e^{z^2} overflows");
    return 2.0 * std::exp(z * z) - faddeeva_w(Complex(z.imag(), -z.real()));
}

} // namespace pointnls::specfun
