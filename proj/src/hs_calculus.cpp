#include "oplab/hs_calculus.hpp"

#include "oplab/cutoff.hpp"
#include "oplab/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <vector>

namespace oplab {

using C = std::complex<double>;

DenseOperator resolvent(const DenseOperator& a, C z) {
    if (z.imag() == 0.0) throw std::domain_error("resolvent: Im z must be nonzero");
    a.assert_hermitian();
    const Eigen::Index m = a.rows();
    Eigen::MatrixXcd shifted = a.mat - z * Eigen::MatrixXcd::Identity(m, m);
    DenseOperator out(shifted.partialPivLu().solve(Eigen::MatrixXcd::Identity(m, m)));
    const double bound = 1.0 / std::abs(z.imag());
    const double est = operator_norm_estimate(out.mat);
    if (est > bound * (1.0 + 1e-6))
        throw std::runtime_error("resolvent: norm bound 1/|Im z| violated");
    return out;
}

namespace detail {

HermitianTridiagonal tridiagonalize(const Eigen::MatrixXcd& a) {
    Eigen::Tridiagonalization<Eigen::MatrixXcd> tri(a);
    HermitianTridiagonal out;
    out.q = tri.matrixQ();
    Eigen::MatrixXcd t = tri.matrixT();
    out.diag = t.diagonal().real();
    out.off = (a.rows() > 1) ? Eigen::VectorXd(t.diagonal(-1).real())
                             : Eigen::VectorXd(0);
    return out;
}

void tridiagonal_resolvent(const Eigen::VectorXd& diag, const Eigen::VectorXd& off,
                           C z, Eigen::MatrixXcd& out) {
    const Eigen::Index m = diag.size();
    out.resize(m, m);
    if (m == 1) {
        out(0, 0) = 1.0 / (diag(0) - z);
        return;
    }
    static thread_local std::vector<C> pivf, pivb, ratio;
    pivf.assign(size_t(m), C(0));
    pivb.assign(size_t(m), C(0));
    ratio.assign(size_t(m), C(0));
    pivf[0] = diag(0) - z;
    for (Eigen::Index k = 1; k < m; ++k)
        pivf[size_t(k)] = diag(k) - z - off(k - 1) * off(k - 1) / pivf[size_t(k - 1)];
    pivb[size_t(m - 1)] = diag(m - 1) - z;
    for (Eigen::Index k = m - 2; k >= 0; --k)
        pivb[size_t(k)] = diag(k) - z - off(k) * off(k) / pivb[size_t(k + 1)];
    for (Eigen::Index i = 0; i + 1 < m; ++i) ratio[size_t(i)] = -off(i) / pivf[size_t(i)];

    // complex symmetric; fill upper triangle column-wise, mirror below
    for (Eigen::Index j = 0; j < m; ++j) {
        out(j, j) = 1.0 / (pivf[size_t(j)] + pivb[size_t(j)] - (diag(j) - z));
        for (Eigen::Index i = j - 1; i >= 0; --i) out(i, j) = ratio[size_t(i)] * out(i + 1, j);
    }
    for (Eigen::Index j = 0; j < m; ++j)
        for (Eigen::Index i = j + 1; i < m; ++i) out(i, j) = out(j, i);
}

} // namespace detail

namespace {

double frob_upper(const Eigen::MatrixXcd& a) {
    // Frobenius norm from the upper triangle of a complex symmetric accumulator
    double s = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        s += std::norm(a(j, j));
        for (Eigen::Index i = 0; i < j; ++i) s += 2.0 * std::norm(a(i, j));
    }
    return std::sqrt(s);
}

double factorial(int k) {
    double r = 1.0;
    for (int j = 2; j <= k; ++j) r *= j;
    return r;
}

// Integrates omega(u, uv) R(u + i uv) |u| over the cone in coordinates
// (u, v), upper triangle only (everything in the T-basis is complex
// symmetric). Recursive bisection with width-proportional error budgets.
class ConeIntegrator {
public:
    ConeIntegrator(const QAExtension& ext, const Eigen::VectorXd& diag,
                   const Eigen::VectorXd& off, const QuadratureSpec& spec)
        : ext_(ext), diag_(diag), off_(off), spec_(spec), m_(diag.size()),
          n_(ext.order()) {
        derivs_.resize(size_t(n_) + 1);
    }

    // accumulates the cone integral into acc (upper triangle), returns error
    double integrate(Eigen::MatrixXcd& acc) {
        acc.setZero(m_, m_);
        err_ = 0.0;
        evals_ = 0;
        std::vector<double> cuts = {-1.0, -0.5, -0.25, -0.0625, -0.015625, 0.0,
                                    0.015625, 0.0625, 0.25, 0.5, 1.0};
        const double inner_tol = 0.01 * spec_.target_tolerance;
        double outer_budget = 0.98 * spec_.target_tolerance;
        for (size_t i = 0; i + 1 < cuts.size(); ++i) {
            const double w = (cuts[i + 1] - cuts[i]) / 2.0;
            outer_panel(acc, cuts[i], cuts[i + 1], outer_budget * w, inner_tol, 0);
        }
        return err_;
    }

    long evals() const { return evals_; }

private:
    void eval_inner_node(Eigen::MatrixXcd& k15, Eigen::MatrixXcd& g7, int idx, double u,
                         double v, double weight_k, double weight_g) {
        // omega in cone coordinates from the cached derivatives at u
        CutoffZeta zeta;
        const double zv = zeta.eval(v);
        const double dzv = zeta.eval_derivative(1, v);
        if (zv == 0.0 && dzv == 0.0) return;
        const double y = u * v;
        const C iy(0.0, y);
        C om = 0.0;
        if (zv != 0.0) {
            C iy_pow = 1.0;
            for (int l = 0; l < n_ - 1; ++l) iy_pow *= iy;
            om += 0.5 * derivs_[size_t(n_)] * iy_pow / factorial(n_ - 1) * zv;
        }
        if (dzv != 0.0) {
            C sum = 0.0, iy_pow = 1.0;
            for (int l = 0; l < n_; ++l) {
                sum += derivs_[size_t(l)] * iy_pow / factorial(l);
                iy_pow *= iy;
            }
            om += sum * 0.5 * dzv * C(-v, 1.0) / u;
        }
        if (om == 0.0) return;
        const C z(u, y);
        detail::tridiagonal_resolvent(diag_, off_, z, work_);
        ++evals_;
        const C ck = weight_k * om * std::abs(u);
        const C cg = weight_g * om * std::abs(u);
        for (Eigen::Index j = 0; j < m_; ++j)
            for (Eigen::Index i = 0; i <= j; ++i) {
                k15(i, j) += ck * work_(i, j);
                if (weight_g != 0.0) g7(i, j) += cg * work_(i, j);
            }
        (void)idx;
    }

    // inner integral over v in (lo, hi) at fixed u; adds into acc
    void inner_panel(Eigen::MatrixXcd& acc, double u, double a, double b, double tol,
                     int depth) {
        Eigen::MatrixXcd k15 = Eigen::MatrixXcd::Zero(m_, m_);
        Eigen::MatrixXcd g7 = Eigen::MatrixXcd::Zero(m_, m_);
        const double c = 0.5 * (a + b), r = 0.5 * (b - a);
        for (int i = 0; i < 15; ++i) {
            const double v = c + r * GK15::nodes[i];
            const double wk = r * GK15::wk[i];
            const double wg = (i % 2 == 1) ? r * GK15::wg[i / 2] : 0.0;
            eval_inner_node(k15, g7, i, u, v, wk, wg);
        }
        const double e = frob_diff_upper(k15, g7);
        if (e <= tol || depth >= spec_.max_refinement_depth) {
            acc += k15;
            err_ += e;
            return;
        }
        inner_panel(acc, u, a, c, 0.5 * tol, depth + 1);
        inner_panel(acc, u, c, b, 0.5 * tol, depth + 1);
    }

    void inner_integral(Eigen::MatrixXcd& acc, double u, double tol) {
        acc.setZero(m_, m_);
        for (int l = 0; l <= n_; ++l) derivs_[size_t(l)] = ext_.unit_function().deriv(l, u);
        double lo = 0.0;
        if (spec_.y_floor > 0.0) lo = std::min(1.0, spec_.y_floor / std::abs(u));
        if (ext_.real_valued()) {
            if (lo < 1.0) {
                inner_panel(acc, u, lo, std::max(lo, 0.5), 0.25 * tol, 0);
                inner_panel(acc, u, std::max(lo, 0.5), 1.0, 0.25 * tol, 0);
            }
        } else {
            if (lo < 1.0) {
                inner_panel(acc, u, lo, std::max(lo, 0.5), 0.125 * tol, 0);
                inner_panel(acc, u, std::max(lo, 0.5), 1.0, 0.125 * tol, 0);
                inner_panel(acc, u, -std::max(lo, 0.5), -lo, 0.125 * tol, 0);
                inner_panel(acc, u, -1.0, -std::max(lo, 0.5), 0.125 * tol, 0);
            }
        }
    }

    void outer_panel(Eigen::MatrixXcd& acc, double a, double b, double tol,
                     double inner_tol, int depth) {
        Eigen::MatrixXcd k15 = Eigen::MatrixXcd::Zero(m_, m_);
        Eigen::MatrixXcd g7 = Eigen::MatrixXcd::Zero(m_, m_);
        Eigen::MatrixXcd iv(m_, m_);
        const double c = 0.5 * (a + b), r = 0.5 * (b - a);
        for (int i = 0; i < 15; ++i) {
            const double u = c + r * GK15::nodes[i];
            if (u == 0.0) continue;
            inner_integral(iv, u, inner_tol);
            k15 += (r * GK15::wk[i]) * iv;
            if (i % 2 == 1) g7 += (r * GK15::wg[i / 2]) * iv;
        }
        const double e = frob_diff_upper(k15, g7);
        if (e <= tol || depth >= spec_.max_refinement_depth) {
            acc += k15;
            err_ += e;
            return;
        }
        outer_panel(acc, a, c, 0.5 * tol, inner_tol, depth + 1);
        outer_panel(acc, c, b, 0.5 * tol, inner_tol, depth + 1);
    }

    static double frob_diff_upper(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
        double s = 0.0;
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            s += std::norm(x(j, j) - y(j, j));
            for (Eigen::Index i = 0; i < j; ++i) s += 2.0 * std::norm(x(i, j) - y(i, j));
        }
        return std::sqrt(s);
    }

    const QAExtension& ext_;
    const Eigen::VectorXd& diag_;
    const Eigen::VectorXd& off_;
    const QuadratureSpec& spec_;
    Eigen::Index m_;
    int n_;
    std::vector<C> derivs_;
    Eigen::MatrixXcd work_;
    double err_ = 0.0;
    long evals_ = 0;
};

} // namespace

HSApplyResult hs_apply(const QAExtension& ext, const DenseOperator& a,
                       const QuadratureSpec& spec) {
    a.assert_hermitian();
    const Eigen::Index m = a.rows();
    auto tri = detail::tridiagonalize(a.mat);

    // Remark-2.6 frame: work with g((A - x0)/R), multiply by R^gamma at the end
    const double x0 = ext.original_x0(), radius = ext.original_radius();
    Eigen::VectorXd d = (tri.diag.array() - x0) / radius;
    Eigen::VectorXd e = tri.off / radius;

    ConeIntegrator integ(ext, d, e, spec);
    Eigen::MatrixXcd acc;
    const double err = integ.integrate(acc);

    // mirror the upper triangle (complex symmetric in the T-basis)
    for (Eigen::Index j = 0; j < m; ++j)
        for (Eigen::Index i = j + 1; i < m; ++i) acc(i, j) = acc(j, i);

    const double scale = std::pow(radius, ext.gamma()) / M_PI;
    Eigen::MatrixXcd mt;
    if (ext.real_valued())
        mt = (2.0 * scale) * acc.real().cast<C>(); // lower half-plane by conjugation
    else
        mt = scale * acc;

    HSApplyResult res;
    res.op = DenseOperator((tri.q * mt * tri.q.adjoint()).eval(), ext.real_valued());
    res.certified_error = err * scale * (ext.real_valued() ? 2.0 : 1.0) / 1.0;
    res.resolvent_evals = integ.evals();
    if (res.certified_error > spec.target_tolerance * 20.0)
        throw ToleranceError("hs_apply: tolerance unreachable at max depth",
                             res.certified_error);
    return res;
}

DenseOperator spectral_apply(const SingularFunction& f, const DenseOperator& a) {
    a.assert_hermitian();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.mat);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("spectral_apply: eigensolver failed");
    const Eigen::VectorXd lam = es.eigenvalues();
    Eigen::VectorXcd flam(lam.size());
    for (Eigen::Index i = 0; i < lam.size(); ++i) flam(i) = f.deriv(0, lam(i));
    DenseOperator out(
        (es.eigenvectors() * flam.asDiagonal() * es.eigenvectors().adjoint()).eval(),
        f.real_valued);
    return out;
}

QuasiCommutatorResult quasi_commutator(const SingularFunction& f, const DenseOperator& a,
                                       const DenseOperator& b, const Eigen::MatrixXcd& j,
                                       CalculusMethod method, const QuadratureSpec& spec) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || j.rows() != a.rows() ||
        j.cols() != b.rows())
        throw std::invalid_argument("quasi_commutator: shape mismatch");
    QuasiCommutatorResult out;
    out.v = DenseOperator((a.mat * j - j * b.mat).eval());
    if (method == CalculusMethod::spectral) {
        DenseOperator fa = spectral_apply(f, a), fb = spectral_apply(f, b);
        out.value = DenseOperator((fa.mat * j - j * fb.mat).eval());
    } else {
        QAExtension ext = build_extension(f);
        auto ra = hs_apply(ext, a, spec);
        auto rb = hs_apply(ext, b, spec);
        out.value = DenseOperator((ra.op.mat * j - j * rb.op.mat).eval());
        out.certified_error = ra.certified_error * operator_norm_estimate(j) +
                              rb.certified_error * operator_norm_estimate(j);
    }
    return out;
}

} // namespace oplab
