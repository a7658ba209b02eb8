#include "melab/support/cgamma.hpp"

#include <cmath>

namespace melab::support {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Lanczos (g = 7, n = 9)
constexpr double kLanczos[] = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7,
};

std::complex<double> log_gamma_core(std::complex<double> z) {
    // valid for Re(z) > 0.5
    z -= 1.0;
    std::complex<double> x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
    std::complex<double> t = z + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// overflow-safe log sin(pi z); branch is arbitrary, exp() of it is exact
std::complex<double> log_sin_pi(std::complex<double> z) {
    const std::complex<double> i2pi(0.0, 2.0 * kPi);
    const std::complex<double> log_2i = std::log(std::complex<double>(0.0, 2.0));
    if (z.imag() >= 0.0) {
        // sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2 i)
        return std::complex<double>(0.0, -kPi) * z + std::log(std::exp(i2pi * z) - 1.0) - log_2i;
    }
    // sin(pi z) = e^{i pi z} (1 - e^{-2 i pi z}) / (2 i)
    return std::complex<double>(0.0, kPi) * z + std::log(1.0 - std::exp(-i2pi * z)) - log_2i;
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
    if (z.real() >= 0.5) return log_gamma_core(z);
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(kPi) - log_sin_pi(z) - log_gamma_core(1.0 - z);
}

std::complex<double> log_gamma_r(std::complex<double> s) {
    return -0.5 * s * std::log(kPi) + log_gamma(0.5 * s);
}

}  // namespace melab::support
