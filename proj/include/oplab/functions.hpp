#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace oplab {

// A scalar function f that is C^n away from finitely many points and carries
// the power-singularity bookkeeping: |f^{(k)}(x)| <= M |x - x0|^{gamma-k} on
// the support [x0 - R, x0 + R]. For smooth compactly supported functions the
// convention is x0 = 2, gamma = 2, R = 3 (the singular point sits outside the
// support, so the weights are bounded above and below).
struct SingularFunction {
    using Evaluator = std::function<std::complex<double>(int, double)>;

    std::string label;
    Evaluator deriv;                     // (k, t) -> f^{(k)}(t), k = 0..max_order
    std::vector<double> singular_points; // X = {z_1 ... z_N}
    double gamma = 2.0;
    int n = 2;                           // smoothness order used by the seminorm
    double x0 = 0.0;
    double support_radius = 1.0;         // R
    bool compactly_supported = true;
    bool real_valued = true;
    int max_order = 2;                   // highest derivative the evaluator provides

    std::complex<double> eval_derivative(int k, double t) const { return deriv(k, t); }
    std::complex<double> operator()(double t) const { return deriv(0, t); }
    double eval_real(double t) const { return deriv(0, t).real(); }
};

struct SeminormResult {
    double value = 0.0;
    double finest_spacing = 0.0; // smallest |x - x0| gap resolved by the grid
    long grid_points = 0;
};

struct SeminormGrid {
    int points_per_decade = 512;
    int decades = 8;
    int uniform_points = 2048;
};

// ||| f |||_n = max_{0<=k<=n} sup_{x != x0} |f^{(k)}(x)| |x-x0|^{-gamma+k},
// approximated on a grid that is log-spaced toward x0 and uniform on the
// support. Grid abscissae are relative to the support radius, so the result
// is exactly invariant under the rescaling f -> R^{-gamma} f(R .).
// Functions with several singular points are measured through the smooth
// partition of unity (max over single-point pieces).
// Throws std::domain_error when the sampled values grow without bound.
SeminormResult seminorm_n(const SingularFunction& f, const SeminormGrid& grid = {});

// eta_beta: Renyi (beta != 1) / von Neumann (beta = 1) entropy on [0,1],
// extended by zero to the rest of the line.
double eta(double beta, double t);
double eta_derivative(double beta, int k, double t);

// eta_beta packaged as a SingularFunction (singular points {0,1}).
SingularFunction make_eta(double beta);

// g1(t) = g(t) zeta((t-z)/r), g2 = g - g1. g1 inherits the singularity at z,
// g2 is C^n at z (and keeps any other singular points of g).
// Throws std::invalid_argument for r <= 0.
std::pair<SingularFunction, SingularFunction>
split_at_singularity(const SingularFunction& g, double z, double r);

struct HolderReport {
    double kappa = 1.0;       // min{gamma, 1}
    double constant = 0.0;    // empirical sup |f(t1)-f(t2)| / |t1-t2|^kappa
    double sup_norm = 0.0;
    double sup_bound = 0.0;   // |||f|||_0 R^gamma
};

HolderReport holder_modulus(const SingularFunction& f);

// Max over the seminorm grid of |f^{(k)}(x)| - M |x-x0|^{gamma-k}; passing
// means <= slack for the declared/computed seminorm M.
double fbound_max_violation(const SingularFunction& f, double seminorm_value,
                            const SeminormGrid& grid = {});

// Remark-2.6 rescaling g(t) = R^{-gamma} f(x0 + R t): unit support radius,
// singularity moved to 0, same seminorm.
SingularFunction rescaled_to_unit(const SingularFunction& f);

// Smooth partition into single-singularity pieces plus a smooth remainder.
std::vector<SingularFunction> partition_single_singularity(const SingularFunction& f);

// Registry, addressable from CLI/config. Labels:
//   "eta:<beta>"        entropy function
//   "abs_pow:<gamma>"   |t|^gamma zeta(t)
//   "poly:<p>"          t^p (not compactly supported)
//   "bump"              zeta(t) itself
//   "gauss_bump"        exp(-4 t^2) zeta(t)
//   "cos_bump:<k>"      cos(k t) zeta(t)
//   "sin_bump:<k>"      sin(k t) zeta(t)
//   "poly_bump:<p>"     t^p zeta(t)
// Throws std::invalid_argument for unknown labels.
SingularFunction function_registry(const std::string& label);

// The five smooth reference functions used by the calculus test suites.
std::vector<std::string> smooth_registry_labels();

} // namespace oplab
