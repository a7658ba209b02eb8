#pragma once

#include <complex>

namespace melab::support {

// principal-branch log Gamma, ~1e-13 relative accuracy (Lanczos g=7)
std::complex<double> log_gamma(std::complex<double> z);

// log of Gamma_R(s) = pi^{-s/2} Gamma(s/2)
std::complex<double> log_gamma_r(std::complex<double> s);

}  // namespace melab::support
