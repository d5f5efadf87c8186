#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace oplab {

// Gauss-Kronrod 7-15 pair on [-1,1]; the embedded Gauss rule uses the odd nodes.
struct GK15 {
    static constexpr int n = 15;
    static const double nodes[15];
    static const double wk[15]; // Kronrod weights
    static const double wg[7];  // Gauss weights (nodes 1,3,5,7,9,11,13)
};

struct QuadOptions {
    double abs_tol = 1e-10;
    int max_panels = 4000;
    int min_depth = 0;
    long max_evals = 0; // 0 = unlimited
};

struct ScalarQuad {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    long evals = 0;
    bool converged = true;
};

// Globally adaptive GK15 over [a,b] with optional interior breakpoints.
ScalarQuad adaptive_integrate(const std::function<std::complex<double>(double)>& f,
                              double a, double b, const QuadOptions& opt = {},
                              const std::vector<double>& breakpoints = {});

// Integral over [0,1] of an integrand with endpoint singularities of
// Holder type: split at 1/2 and substitute t = u^2 (resp. 1-t = u^2) so
// t^{kappa-1} dt becomes 2 u^{2 kappa - 1} du.
ScalarQuad integrate_unit_interval_endpoint_singular(
    const std::function<std::complex<double>(double)>& f, const QuadOptions& opt = {},
    const std::vector<double>& interior_breakpoints = {});

} // namespace oplab
