#pragma once

#include <functional>
#include <vector>

namespace melab::support {

struct GaussLegendre {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

// cached Gauss-Legendre rule of the given order
const GaussLegendre& gauss_legendre(int order);

struct QuadResult {
    double value = 0.0;
    double error = 0.0;     // estimated absolute error
    int evaluations = 0;
};

// Adaptive panel-bisection integration of f on [a, b].  Error estimated by
// comparing each panel against its two halves.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, int order = 12, int max_depth = 40);

// complex-valued variant (shared refinement on |.|)
struct QuadResultC {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    int evaluations = 0;
};

QuadResultC integrate_adaptive_c(const std::function<std::complex<double>(double)>& f, double a,
                                 double b, double abs_tol, int order = 12, int max_depth = 40);

}  // namespace melab::support
