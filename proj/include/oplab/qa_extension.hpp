#pragma once

#include "oplab/functions.hpp"

#include <complex>

namespace oplab {

// Quasi-analytic extension of a power-singular function, built at the
// normalized frame (singularity at 0, unit support radius):
//   ftilde(x,y) = [sum_{l<n} g^{(l)}(x) (iy)^l / l!] zeta(y/x),  ftilde(0,y) = 0,
//   omega = dbar ftilde
//         = 1/2 g^{(n)}(x) (iy)^{n-1}/(n-1)! zeta(y/x)
//           + [sum_{l<n} g^{(l)}(x) (iy)^l / l!] * 1/2 zeta'(y/x) (i - y/x) / x.
// Both vanish identically for |y| >= |x| (cone support).
// The original function is recovered by f(x) = R^gamma g((x - x0)/R).
class QAExtension {
public:
    std::complex<double> eval_ftilde(double x, double y) const;
    std::complex<double> eval_omega(double x, double y) const;

    const SingularFunction& unit_function() const { return g_; }
    int order() const { return n_; }
    double gamma() const { return gamma_; }
    double original_x0() const { return x0_; }
    double original_radius() const { return radius_; }
    bool real_valued() const { return g_.real_valued; }

private:
    friend QAExtension build_extension(const SingularFunction& f, int n);
    SingularFunction g_; // normalized: x0 = 0, support radius 1
    int n_ = 2;
    double gamma_ = 0.0;
    double x0_ = 0.0;
    double radius_ = 1.0;
};

// Builds the extension after the Remark-2.6 normalization. n = 0 picks the
// function's declared order. Throws std::invalid_argument for n < 2 and
// std::domain_error for non-compactly-supported f (those go through the
// partition-of-unity pathway of the unbounded-support bound instead).
QAExtension build_extension(const SingularFunction& f, int n = 0);

struct L1WeightReport {
    double value = 0.0;          // integral of |y|^{-1} |omega| over the plane
    double quad_error = 0.0;
    double majorant_constant = 0.0; // empirical sup |omega| / (|x|^{gamma-n} |y|^{n-1})
    long evals = 0;
};

// Definition 3.1 (2): |y|^{-1} omega must be integrable; returns the value by
// adaptive quadrature in cone coordinates together with the empirical
// constant of the bound |omega| <= C |x|^{gamma-n} |y|^{n-1}.
L1WeightReport verify_l1_weight(const QAExtension& ext);

struct PlaneHolderReport {
    double kappa = 1.0;
    double constant = 0.0;        // sup |ftilde(p) - ftilde(q)| / |p-q|^kappa
    double origin_constant = 0.0; // sup |ftilde(x,y)| / |x|^gamma
};

PlaneHolderReport holder_check_plane(const QAExtension& ext, int pairs = 4000,
                                     unsigned seed = 7);

} // namespace oplab
