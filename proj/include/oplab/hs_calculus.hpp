#pragma once

#include "oplab/dense_operator.hpp"
#include "oplab/functions.hpp"
#include "oplab/qa_extension.hpp"

#include <stdexcept>

namespace oplab {

struct QuadratureSpec {
    double target_tolerance = 1e-7;
    int max_refinement_depth = 40;
    double y_floor = 0.0;        // diagnostic inner cutoff delta, 0 = off
    std::string scheme = "gk15-cone";
    int max_panels = 20000;
};

struct ToleranceError : std::runtime_error {
    ToleranceError(const std::string& what, double achieved_)
        : std::runtime_error(what), achieved(achieved_) {}
    double achieved;
};

// (A - z)^{-1} by direct factorization; requires Im z != 0 and Hermitian A.
DenseOperator resolvent(const DenseOperator& a, std::complex<double> z);

struct HSApplyResult {
    DenseOperator op;
    double certified_error = 0.0; // accumulated quadrature error (Frobenius)
    long resolvent_evals = 0;
};

// f(A) = (1/pi) integral of omega(x,y) R(x+iy; A) dx dy over the support cone,
// computed with a globally adaptive Gauss-Kronrod scheme in the coordinates
// u = x, v = y/x. Resolvents are evaluated on the Householder tridiagonal
// form of A (never through an eigendecomposition, which is the oracle's path).
HSApplyResult hs_apply(const QAExtension& ext, const DenseOperator& a,
                       const QuadratureSpec& spec = {});

// Oracle: eigendecomposition A = U diag(lambda) U*, returns U f(lambda) U*.
DenseOperator spectral_apply(const SingularFunction& f, const DenseOperator& a);

enum class CalculusMethod { hs, spectral };

struct QuasiCommutatorResult {
    DenseOperator value; // f(A) J - J f(B)
    DenseOperator v;     // V = A J - J B
    double certified_error = 0.0;
};

QuasiCommutatorResult quasi_commutator(const SingularFunction& f, const DenseOperator& a,
                                       const DenseOperator& b, const Eigen::MatrixXcd& j,
                                       CalculusMethod method,
                                       const QuadratureSpec& spec = {});

namespace detail {

// Unitary reduction A = Q T Q* with T real symmetric tridiagonal.
struct HermitianTridiagonal {
    Eigen::MatrixXcd q;
    Eigen::VectorXd diag;
    Eigen::VectorXd off;
};

HermitianTridiagonal tridiagonalize(const Eigen::MatrixXcd& a);

// Full inverse of (T - z) for real symmetric tridiagonal T, Im z != 0.
// Output is complex symmetric. Uses the two-sided pivot recurrences; all
// pivots satisfy |pivot| >= |Im z| so no pivoting is needed.
void tridiagonal_resolvent(const Eigen::VectorXd& diag, const Eigen::VectorXd& off,
                           std::complex<double> z, Eigen::MatrixXcd& out);

} // namespace detail

} // namespace oplab
