#pragma once

#include <vector>

namespace oplab {

// Smooth step S: R -> [0,1] built from the bump h(u) = exp(-1/(1-u^2)).
// S(u) = int_{-1}^{u} h / int_{-1}^{1} h, so S = 0 on (-inf,-1], S = 1 on [1,inf).
// Derivatives of any order are available in closed form: S^{(k)} = h^{(k-1)}/I0,
// and h^{(k)}(u) = h(u) * A_k(u) / (1-u^2)^{2k} with polynomials A_k generated by
//   A_1 = -2u,  A_{k+1} = A_k' s^2 + 4k u A_k s - 2u A_k,  s = 1 - u^2.
class SmoothStep {
public:
    static const SmoothStep& instance();

    double value(double u) const;
    // k >= 1
    double derivative(int k, double u) const;
    double bump(double u) const;            // h(u), zero outside (-1,1)
    double bump_derivative(int k, double u) const;
    double normalizer() const { return norm_; }

private:
    SmoothStep();
    double partial_integral(double a, double b) const; // int_a^b h, [a,b] inside [-1,1]

    std::vector<std::vector<double>> poly_;  // A_k coefficients, poly_[k]
    std::vector<double> cum_;                // cumulative integrals at breakpoints
    std::vector<double> bp_;                 // breakpoints over [-1,1]
    double norm_ = 0.0;
};

// The cutoff of the extension construction: zeta(t) = 1 for |t| <= 1/2,
// zeta(t) = 0 for |t| >= 1, C^inf in between, monotone on each side.
// Realized as zeta(t) = S(3 - 4|t|).
class CutoffZeta {
public:
    double eval(double t) const;
    double eval_derivative(int k, double t) const;  // k = 0 allowed
};

// Partition-of-unity bump: Upsilon(t) supported in (-1,1) with
// sum_m Upsilon(t - m) = 1 for all t. Built from zeta by periodic normalization.
class UnityBump {
public:
    double eval(double t) const;
    double eval_derivative(int k, double t) const;
};

} // namespace oplab
