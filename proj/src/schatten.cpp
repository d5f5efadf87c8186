#include "oplab/schatten.hpp"

#include "oplab/cutoff.hpp"
#include "oplab/hs_calculus.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace oplab {

SingularValueProfile singular_values(const Eigen::MatrixXcd& t) {
    SingularValueProfile out;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(t);
    out.values = svd.singularValues();
    out.source_dim = std::min(t.rows(), t.cols());
    return out;
}

SingularValueProfile singular_values(const DenseOperator& t) { return singular_values(t.mat); }

double schatten_from_profile(const SingularValueProfile& prof, double p) {
    if (p <= 0.0) throw std::invalid_argument("schatten norm: p must be positive");
    double acc = 0.0;
    for (Eigen::Index i = 0; i < prof.values.size(); ++i)
        acc += std::pow(prof.values(i), p);
    return std::pow(acc, 1.0 / p);
}

QuasiNormReport schatten_norm(const Eigen::MatrixXcd& t, double p) {
    QuasiNormReport rep;
    rep.p = p;
    rep.q_exponent = std::min(p, 1.0);
    rep.value = schatten_from_profile(singular_values(t), p);
    return rep;
}

QuasiNormReport schatten_norm(const DenseOperator& t, double p) { return schatten_norm(t.mat, p); }

DenseOperator fractional_power_abs(const DenseOperator& t, double sigma) {
    if (!(sigma > 0.0 && sigma <= 1.0))
        throw std::invalid_argument("fractional_power_abs: sigma must be in (0,1]");
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(t.mat, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Eigen::VectorXd s = svd.singularValues();
    for (Eigen::Index i = 0; i < s.size(); ++i) s(i) = std::pow(s(i), sigma);
    // |T|^sigma = V s^sigma V*
    return DenseOperator((svd.matrixV() * s.asDiagonal() * svd.matrixV().adjoint()).eval(),
                         true);
}

Eigen::MatrixXcd psd_power(const Eigen::MatrixXcd& a, double gamma) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
    if (es.info() != Eigen::Success) throw std::runtime_error("psd_power: eigensolver failed");
    Eigen::VectorXd lam = es.eigenvalues();
    const double floor = -1e-10 * std::max(1.0, std::abs(lam(lam.size() - 1)));
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        if (lam(i) < floor) throw std::domain_error("psd_power: input is not PSD");
        lam(i) = std::pow(std::max(lam(i), 0.0), gamma);
    }
    return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

QTriangleReport q_triangle_check(const Eigen::MatrixXcd& t1, const Eigen::MatrixXcd& t2,
                                 double q) {
    if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("q_triangle_check: q in (0,1]");
    const double a = schatten_norm(t1, q).value;
    const double b = schatten_norm(t2, q).value;
    const double c = schatten_norm((t1 + t2).eval(), q).value;
    QTriangleReport rep;
    rep.slack = std::pow(a, q) + std::pow(b, q) - std::pow(c, q);
    rep.holds = rep.slack >= -1e-10 * std::max(1.0, std::pow(c, q));
    return rep;
}

double bks_check(const Eigen::MatrixXcd& a_psd, const Eigen::MatrixXcd& b_psd, double gamma,
                 double p) {
    if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("bks_check: gamma in (0,1)");
    const Eigen::MatrixXcd diff = a_psd - b_psd;
    Eigen::MatrixXcd abs_diff_pow;
    {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(diff);
        Eigen::VectorXd lam = es.eigenvalues();
        for (Eigen::Index i = 0; i < lam.size(); ++i) lam(i) = std::pow(std::abs(lam(i)), gamma);
        abs_diff_pow = es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
    }
    const double lhs = schatten_norm(abs_diff_pow, p).value;
    const double rhs =
        schatten_norm((psd_power(a_psd, gamma) - psd_power(b_psd, gamma)).eval(), p).value;
    return lhs - rhs;
}

namespace {

void check_thm24_params(const SingularFunction& f, double sigma, double p) {
    if (!(sigma > 0.0 && sigma <= 1.0))
        throw std::invalid_argument("bound ratio: sigma must be in (0,1]");
    if (!(sigma < f.gamma))
        throw std::invalid_argument("bound ratio: sigma must be < gamma");
    const double q = std::min(p, 1.0);
    if (!(1.0 / (f.n - sigma) < q))
        throw std::invalid_argument(
            "bound ratio: need (n - sigma)^{-1} < min(p,1); e.g. n = 2 with sigma = 1 "
            "is not allowed");
}

} // namespace

double bound_ratio_thm24(const SingularFunction& f, const DenseOperator& a,
                         const DenseOperator& b, const Eigen::MatrixXcd& j, double sigma,
                         double p) {
    check_thm24_params(f, sigma, p);
    auto qc = quasi_commutator(f, a, b, j, CalculusMethod::spectral);
    const double num = schatten_norm(qc.value, p).value;
    const double seminorm = seminorm_n(f).value;
    const double jnorm = operator_norm_estimate(j);
    const double vterm = schatten_norm(fractional_power_abs(qc.v, sigma), p).value;
    const double denon = seminorm * std::pow(f.support_radius, f.gamma - sigma) *
                         std::pow(jnorm, 1.0 - sigma) * vterm;
    if (denon == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return num / denon;
}

double projection_bound_thm28(const SingularFunction& f, const DenseOperator& a,
                              const Eigen::MatrixXcd& p_proj, double sigma, double p) {
    check_thm24_params(f, sigma, p);
    const double proj_defect =
        std::max((p_proj * p_proj - p_proj).cwiseAbs().maxCoeff(),
                 (p_proj - p_proj.adjoint()).cwiseAbs().maxCoeff());
    if (proj_defect > 1e-10)
        throw std::invalid_argument("projection_bound_thm28: P is not an orthogonal projection");
    // B1 = PAP, B2 = A, J = P; V = B1 J - J B2 = -PA(I-P)
    DenseOperator b1(((p_proj * a.mat * p_proj + (p_proj * a.mat * p_proj).adjoint()) * 0.5).eval(), true);
    auto qc = quasi_commutator(f, b1, a, p_proj, CalculusMethod::spectral);
    const double num = schatten_norm(qc.value, p).value;
    const double seminorm = seminorm_n(f).value;
    const double vterm = schatten_norm(fractional_power_abs(qc.v, sigma), p).value;
    const double denom =
        seminorm * std::pow(f.support_radius, f.gamma - sigma) * vterm;
    if (denom == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return num / denom;
}

double unbounded_support_bound(const SingularFunction& g, double beta,
                               const DenseOperator& a, const DenseOperator& b,
                               const Eigen::MatrixXcd& j, double sigma, double p) {
    const double q = std::min(p, 1.0);
    if (!(q * beta > 1.0))
        throw std::invalid_argument("unbounded_support_bound: need q * beta > 1");
    if (!(sigma > 0.0 && sigma <= 1.0))
        throw std::invalid_argument("unbounded_support_bound: sigma in (0,1]");
    a.assert_hermitian();
    b.assert_hermitian();
    const double reach =
        std::max(operator_norm_estimate(a.mat), operator_norm_estimate(b.mat)) + 2.0;
    const int mmax = int(std::ceil(reach));
    // numerator assembled from the unit-width pieces g_m = Upsilon(. - m) g
    Eigen::MatrixXcd num = Eigen::MatrixXcd::Zero(a.rows(), b.cols());
    UnityBump ups;
    for (int m = -mmax; m <= mmax; ++m) {
        SingularFunction gm;
        gm.label = g.label + "#piece";
        gm.real_valued = g.real_valued;
        gm.max_order = std::min(g.max_order, 3);
        gm.deriv = [&ups, base = g.deriv, m, k_max = gm.max_order](int k, double t)
            -> std::complex<double> {
            std::complex<double> acc = 0.0;
            double binom = 1.0;
            for (int i = 0; i <= k; ++i) {
                acc += binom * ups.eval_derivative(i, t - m) * base(k - i, t);
                binom = binom * double(k - i) / double(i + 1);
            }
            return acc;
        };
        DenseOperator fa = spectral_apply(gm, a), fb = spectral_apply(gm, b);
        num += fa.mat * j - j * fb.mat;
    }
    const double num_norm = schatten_norm(num, p).value;
    const Eigen::MatrixXcd v = a.mat * j - j * b.mat;
    const double denom = std::pow(operator_norm_estimate(j), 1.0 - sigma) *
                         schatten_norm(fractional_power_abs(DenseOperator(v), sigma), p).value;
    if (denom == 0.0) return num_norm == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return num_norm / denom;
}

} // namespace oplab
