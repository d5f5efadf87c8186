#pragma once

#include "oplab/dense_operator.hpp"
#include "oplab/functions.hpp"

namespace oplab {

struct SingularValueProfile {
    Eigen::VectorXd values; // descending, non-negative
    Eigen::Index source_dim = 0;
};

struct QuasiNormReport {
    double p = 1.0;
    double value = 0.0;
    double q_exponent = 1.0; // q with kappa = 2^{1/q - 1}
};

SingularValueProfile singular_values(const DenseOperator& t);
SingularValueProfile singular_values(const Eigen::MatrixXcd& t);

double schatten_from_profile(const SingularValueProfile& prof, double p);
QuasiNormReport schatten_norm(const DenseOperator& t, double p);
QuasiNormReport schatten_norm(const Eigen::MatrixXcd& t, double p);

// |T|^sigma via SVD, sigma in (0,1]
DenseOperator fractional_power_abs(const DenseOperator& t, double sigma);

// PSD power A^gamma via eigendecomposition (small negative eigenvalues from
// roundoff are clamped to zero)
Eigen::MatrixXcd psd_power(const Eigen::MatrixXcd& a, double gamma);

struct QTriangleReport {
    double slack = 0.0; // ||T1||^q + ||T2||^q - ||T1+T2||^q
    bool holds = true;
};

QTriangleReport q_triangle_check(const Eigen::MatrixXcd& t1, const Eigen::MatrixXcd& t2,
                                 double q);

// slack of || |A-B|^gamma ||_p - || A^gamma - B^gamma ||_p  (>= 0 up to roundoff)
double bks_check(const Eigen::MatrixXcd& a_psd, const Eigen::MatrixXcd& b_psd,
                 double gamma, double p);

// Theorem-2.4 ratio ||f(A)J - Jf(B)||_p / (|||f|||_n R^{gamma-sigma} ||J||^{1-sigma} |||V|^sigma||_p).
// Uses the spectral path for f(A), f(B). Throws std::invalid_argument when
// (n - sigma)^{-1} >= min(p,1) or sigma >= gamma.
double bound_ratio_thm24(const SingularFunction& f, const DenseOperator& a,
                         const DenseOperator& b, const Eigen::MatrixXcd& j, double sigma,
                         double p);

// Theorem-2.8 ratio ||f(PAP)P - Pf(A)||_p / (|||f|||_n R^{gamma-sigma} |||PA(I-P)|^sigma||_p),
// delegated to the quasi-commutator with B1 = PAP, B2 = A, J = P.
double projection_bound_thm28(const SingularFunction& f, const DenseOperator& a,
                              const Eigen::MatrixXcd& p_proj, double sigma, double p);

// Ratio of the unbounded-support bound: g smooth with |g^{(k)}| <= (1+|x|)^{-beta},
// assembled from unit-width partition pieces g_m = Upsilon(. - m) g. Requires
// min(p,1) * beta > 1.
double unbounded_support_bound(const SingularFunction& g, double beta,
                               const DenseOperator& a, const DenseOperator& b,
                               const Eigen::MatrixXcd& j, double sigma, double p);

} // namespace oplab
