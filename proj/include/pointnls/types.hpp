#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace pointnls {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338328;

// principal-branch constants sqrt(i), sqrt(-i)
inline const Complex kSqrtI{0.7071067811865475244008443621048490393, 0.7071067811865475244008443621048490393};
inline const Complex kSqrtMinusI{0.7071067811865475244008443621048490393, -0.7071067811865475244008443621048490393};

// Geometry and coupling of the double well: point scatterers at -a and +a.
// gamma1/gamma2 are the linear strengths; gamma_nl and sigma drive the
// nonlinear coupling gamma_j(t) = gamma_nl |q_j(t)|^{2 sigma}. alpha/beta
// weight the two-eigenstate initial superposition.
struct WellConfig {
    double a = 1.0;
    double gamma1 = -1.0;
    double gamma2 = -1.0;
    double sigma = 0.0;
    double gamma_nl = 0.0;
    double alpha = 1.0;
    double beta = 0.0;

    bool symmetric() const { return gamma1 == gamma2; }
};

// homogeneous grid t_l = (l-1) dt, l = 1..K (1-based, as in the charge system)
struct TimeGrid {
    double T = 1.0;
    int K = 2;

    double dt() const { return T / (K - 1); }
    double node(int l) const { return (l - 1) * dt(); }
    std::vector<double> nodes() const {
        std::vector<double> t(K);
        for (int l = 1; l <= K; ++l) t[l - 1] = node(l);
        return t;
    }
};

// uniform space grid x_i = -Lx + (i-1) dx, i = 1..N, with x_N = +Lx.
// The last node duplicates the first under the periodic convention, so the
// FFT length is N-1.
struct SpaceGrid {
    double Lx = 40.0;
    int N = 4097;

    int fft_size() const { return N - 1; }
    double dx() const { return 2.0 * Lx / (N - 1); }
    double node(int i) const { return -Lx + (i - 1) * dx(); }
};

} // namespace pointnls
