#include "oplab/qa_extension.hpp"

#include "oplab/cutoff.hpp"
#include "oplab/quadrature.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace oplab {

namespace {
using C = std::complex<double>;

double factorial(int k) {
    double r = 1.0;
    for (int j = 2; j <= k; ++j) r *= j;
    return r;
}
} // namespace

C QAExtension::eval_ftilde(double x, double y) const {
    if (x == 0.0) return 0.0;
    const double v = y / x;
    if (std::abs(v) >= 1.0) return 0.0;
    CutoffZeta zeta;
    const double z = zeta.eval(v);
    if (z == 0.0) return 0.0;
    C sum = 0.0;
    C iy_pow = 1.0;
    const C iy(0.0, y);
    for (int l = 0; l < n_; ++l) {
        sum += g_.deriv(l, x) * iy_pow / factorial(l);
        iy_pow *= iy;
    }
    return sum * z;
}

C QAExtension::eval_omega(double x, double y) const {
    if (x == 0.0) return 0.0;
    const double v = y / x;
    if (std::abs(v) >= 1.0) return 0.0;
    CutoffZeta zeta;
    const double z = zeta.eval(v);
    const double dz = zeta.eval_derivative(1, v);
    const C iy(0.0, y);
    C out = 0.0;
    if (z != 0.0) {
        C iy_pow = 1.0;
        for (int l = 0; l < n_ - 1; ++l) iy_pow *= iy;
        out += 0.5 * g_.deriv(n_, x) * iy_pow / factorial(n_ - 1) * z;
    }
    if (dz != 0.0) {
        C sum = 0.0, iy_pow = 1.0;
        for (int l = 0; l < n_; ++l) {
            sum += g_.deriv(l, x) * iy_pow / factorial(l);
            iy_pow *= iy;
        }
        // dbar of zeta(y/x) = 1/2 zeta'(y/x) (i - y/x) / x
        out += sum * 0.5 * dz * C(-v, 1.0) / x;
    }
    return out;
}

QAExtension build_extension(const SingularFunction& f, int n) {
    if (n == 0) n = f.n;
    if (n < 2) throw std::invalid_argument("build_extension: order n must be at least 2");
    if (!f.compactly_supported)
        throw std::domain_error(
            "build_extension: function is not compactly supported; use the "
            "partition-of-unity pathway (unbounded_support_bound)");
    if (n > f.max_order)
        throw std::invalid_argument("build_extension: function does not provide derivatives up to n");
    QAExtension ext;
    ext.g_ = rescaled_to_unit(f);
    ext.n_ = n;
    ext.gamma_ = f.gamma;
    ext.x0_ = f.x0;
    ext.radius_ = f.support_radius;
    return ext;
}

L1WeightReport verify_l1_weight(const QAExtension& ext) {
    L1WeightReport rep;
    // cone coordinates x = u, y = u v: integral of |omega(u, uv)| / |v| du dv
    QuadOptions inner_opt;
    inner_opt.abs_tol = 1e-9;
    inner_opt.max_panels = 400;
    QuadOptions outer_opt;
    outer_opt.abs_tol = 1e-8;
    outer_opt.max_panels = 800;
    long evals = 0;
    auto inner = [&](double u) -> C {
        auto q = adaptive_integrate(
            [&](double v) -> C {
                if (v == 0.0) return 0.0;
                return std::abs(ext.eval_omega(u, u * v)) / std::abs(v);
            },
            -1.0, 1.0, inner_opt, {-0.5, 0.0, 0.5});
        evals += q.evals;
        return q.value;
    };
    std::vector<double> cuts;
    for (int d = 1; d <= 40; ++d) {
        cuts.push_back(std::pow(2.0, -d));
        cuts.push_back(-std::pow(2.0, -d));
    }
    auto q = adaptive_integrate(inner, -1.0, 1.0, outer_opt, cuts);
    rep.value = q.value.real();
    rep.quad_error = q.error;
    rep.evals = evals;
    if (!std::isfinite(rep.value))
        throw std::domain_error("verify_l1_weight: quadrature did not converge");

    // empirical constant of |omega| <= C |x|^{gamma-n} |y|^{n-1} on the cone
    double cmax = 0.0;
    const double gamma = ext.gamma();
    const int n = ext.order();
    for (int i = 1; i <= 60; ++i) {
        const double u = double(i) / 60.0;
        for (int j = 1; j < 40; ++j) {
            const double v = double(j) / 40.0;
            for (double su : {-1.0, 1.0})
                for (double sv : {-1.0, 1.0}) {
                    const double x = su * u, y = su * u * sv * v;
                    const double maj = std::pow(u, gamma - n) * std::pow(u * v, n - 1);
                    if (maj > 0.0)
                        cmax = std::max(cmax, std::abs(ext.eval_omega(x, y)) / maj);
                }
        }
    }
    rep.majorant_constant = cmax;
    return rep;
}

PlaneHolderReport holder_check_plane(const QAExtension& ext, int pairs, unsigned seed) {
    PlaneHolderReport rep;
    rep.kappa = std::min(ext.gamma(), 1.0);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(-1.2, 1.2);
    double cmax = 0.0;
    for (int i = 0; i < pairs; ++i) {
        const double x1 = box(rng), y1 = box(rng), x2 = box(rng), y2 = box(rng);
        const double d = std::hypot(x1 - x2, y1 - y2);
        if (d < 1e-12) continue;
        const double diff = std::abs(ext.eval_ftilde(x1, y1) - ext.eval_ftilde(x2, y2));
        cmax = std::max(cmax, diff / std::pow(d, rep.kappa));
    }
    rep.constant = cmax;
    double omax = 0.0;
    for (int i = 1; i <= 80; ++i) {
        const double x = double(i) / 80.0;
        for (int j = 0; j < 20; ++j) {
            const double y = x * (double(j) / 20.0);
            for (double sx : {-1.0, 1.0})
                for (double sy : {-1.0, 1.0})
                    omax = std::max(omax, std::abs(ext.eval_ftilde(sx * x, sy * y)) /
                                              std::pow(x, ext.gamma()));
        }
    }
    rep.origin_constant = omax;
    return rep;
}

} // namespace oplab
