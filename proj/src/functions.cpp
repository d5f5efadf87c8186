#include "oplab/functions.hpp"

#include "oplab/cutoff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oplab {

namespace {

double binom(int n, int k) {
    double r = 1.0;
    for (int j = 0; j < k; ++j) r = r * double(n - j) / double(j + 1);
    return r;
}

using C = std::complex<double>;

// Leibniz product of two evaluators
SingularFunction::Evaluator product(SingularFunction::Evaluator a, SingularFunction::Evaluator b) {
    return [a = std::move(a), b = std::move(b)](int k, double t) -> C {
        C acc = 0.0;
        for (int j = 0; j <= k; ++j) acc += binom(k, j) * a(j, t) * b(k - j, t);
        return acc;
    };
}

SingularFunction::Evaluator zeta_evaluator(double center, double radius) {
    return [center, radius](int k, double t) -> C {
        CutoffZeta z;
        double scale = std::pow(1.0 / radius, k);
        return z.eval_derivative(k, (t - center) / radius) * scale;
    };
}

// d^k/dt^k |t|^g  =  g (g-1) ... (g-k+1) |t|^{g-k} sgn(t)^k
SingularFunction::Evaluator abs_pow_evaluator(double g) {
    return [g](int k, double t) -> C {
        if (t == 0.0) return (k == 0) ? C(0.0) : C(0.0);
        double c = 1.0;
        for (int j = 0; j < k; ++j) c *= (g - j);
        double sgn = (t < 0 && (k % 2)) ? -1.0 : 1.0;
        return c * std::pow(std::abs(t), g - k) * sgn;
    };
}

} // namespace

double eta(double beta, double t) {
    if (beta <= 0) throw std::invalid_argument("eta: beta must be positive");
    if (t <= 0.0 || t >= 1.0) return 0.0;
    if (beta == 1.0) return -t * std::log(t) - (1.0 - t) * std::log(1.0 - t);
    return std::log(std::pow(t, beta) + std::pow(1.0 - t, beta)) / (1.0 - beta);
}

double eta_derivative(double beta, int k, double t) {
    if (k == 0) return eta(beta, t);
    if (t <= 0.0 || t >= 1.0) return 0.0;
    const double s = 1.0 - t;
    if (beta == 1.0) {
        if (k == 1) return std::log(s) - std::log(t);
        if (k == 2) return -1.0 / t - 1.0 / s;
        if (k == 3) return 1.0 / (t * t) - 1.0 / (s * s);
        throw std::invalid_argument("eta_derivative: order too high");
    }
    const double w = std::pow(t, beta) + std::pow(s, beta);
    const double w1 = beta * (std::pow(t, beta - 1) - std::pow(s, beta - 1));
    if (k == 1) return w1 / ((1.0 - beta) * w);
    const double w2 = beta * (beta - 1) * (std::pow(t, beta - 2) + std::pow(s, beta - 2));
    if (k == 2) return (w2 * w - w1 * w1) / ((1.0 - beta) * w * w);
    throw std::invalid_argument("eta_derivative: order too high");
}

SingularFunction make_eta(double beta) {
    SingularFunction f;
    f.label = "eta:" + std::to_string(beta);
    f.singular_points = {0.0, 1.0};
    // The paper's classification: gamma = beta for beta < 1; any gamma < 1
    // works for beta = 1 (we take 0.95); for beta > 1 the function is C^1
    // with |eta''| <= C t^{-1}, i.e. gamma = 1.
    if (beta < 1.0)
        f.gamma = beta;
    else if (beta == 1.0)
        f.gamma = 0.95;
    else
        f.gamma = 1.0;
    f.n = 2;
    f.max_order = 2;
    f.x0 = 0.0;
    f.support_radius = 1.0; // support [0,1] inside [x0-R, x0+R]
    f.deriv = [beta](int k, double t) -> C { return eta_derivative(beta, k, t); };
    return f;
}

SingularFunction rescaled_to_unit(const SingularFunction& f) {
    SingularFunction g = f;
    const double R = f.support_radius, x0 = f.x0, gam = f.gamma;
    g.label = f.label + "@unit";
    g.x0 = 0.0;
    g.support_radius = 1.0;
    g.singular_points.clear();
    for (double z : f.singular_points) g.singular_points.push_back((z - x0) / R);
    g.deriv = [base = f.deriv, R, x0, gam](int k, double t) -> C {
        return std::pow(R, double(k) - gam) * base(k, x0 + R * t);
    };
    return g;
}

std::pair<SingularFunction, SingularFunction>
split_at_singularity(const SingularFunction& g, double z, double r) {
    if (r <= 0.0) throw std::invalid_argument("split_at_singularity: radius must be positive");
    SingularFunction g1 = g;
    g1.label = g.label + "#near:" + std::to_string(z);
    g1.deriv = product(g.deriv, zeta_evaluator(z, r));
    g1.singular_points = {z};
    g1.x0 = z;
    g1.support_radius = r;

    SingularFunction g2 = g;
    g2.label = g.label + "#far:" + std::to_string(z);
    g2.deriv = [a = g.deriv, b = g1.deriv](int k, double t) -> C { return a(k, t) - b(k, t); };
    g2.singular_points.clear();
    for (double s : g.singular_points)
        if (s != z) g2.singular_points.push_back(s);
    if (g2.singular_points.empty()) {
        // smooth remainder, Corollary-2.5 style declaration relative to z
        g2.gamma = 2.0;
        g2.x0 = z + 2.0 * std::max(1.0, g.support_radius);
        g2.support_radius = 3.0 * std::max(1.0, g.support_radius);
    }
    return {g1, g2};
}

std::vector<SingularFunction> partition_single_singularity(const SingularFunction& f) {
    if (f.singular_points.size() <= 1) return {f};
    double min_gap = std::numeric_limits<double>::infinity();
    auto pts = f.singular_points;
    std::sort(pts.begin(), pts.end());
    for (size_t i = 1; i < pts.size(); ++i) min_gap = std::min(min_gap, pts[i] - pts[i - 1]);
    const double r = std::min(1.0, 0.4 * min_gap);
    std::vector<SingularFunction> pieces;
    SingularFunction rest = f;
    for (double z : pts) {
        auto [near, far] = split_at_singularity(rest, z, r);
        pieces.push_back(near);
        rest = far;
    }
    pieces.push_back(rest);
    return pieces;
}

namespace {

SeminormResult seminorm_single(const SingularFunction& f, const SeminormGrid& grid) {
    const double R = f.support_radius, x0 = f.x0, gam = f.gamma;
    std::vector<double> offsets; // relative to R
    for (int d = 0; d < grid.decades; ++d)
        for (int i = 0; i < grid.points_per_decade; ++i)
            offsets.push_back(std::pow(10.0, -(d + double(i) / grid.points_per_decade)));
    for (int i = 1; i <= grid.uniform_points; ++i)
        offsets.push_back(double(i) / grid.uniform_points);

    double value = 0.0;
    std::vector<double> decade_max(size_t(grid.decades), 0.0);
    for (double off : offsets) {
        for (double sgn : {-1.0, 1.0}) {
            const double x = x0 + sgn * off * R;
            const double w = std::pow(off * R, -gam);
            for (int k = 0; k <= f.n; ++k) {
                const double v = std::abs(f.deriv(k, x)) * w * std::pow(off * R, k);
                if (!std::isfinite(v)) throw std::domain_error("seminorm diverges: gamma/n inconsistent with f");
                value = std::max(value, v);
                const int dec = std::min(grid.decades - 1, std::max(0, int(-std::log10(off))));
                decade_max[size_t(dec)] = std::max(decade_max[size_t(dec)], v);
            }
        }
    }
    // divergence heuristic: deepest decades keep growing
    const int D = grid.decades;
    if (D >= 4 && decade_max[size_t(D - 1)] > 100.0 * std::max(1e-300, decade_max[1]) &&
        decade_max[size_t(D - 1)] > 2.0 * decade_max[size_t(D - 2)] &&
        decade_max[size_t(D - 2)] > 2.0 * decade_max[size_t(D - 3)])
        throw std::domain_error("seminorm diverges: gamma/n inconsistent with f");

    SeminormResult res;
    res.value = value;
    res.finest_spacing = R * std::pow(10.0, -grid.decades);
    res.grid_points = long(offsets.size()) * 2 * (f.n + 1);
    return res;
}

} // namespace

SeminormResult seminorm_n(const SingularFunction& f, const SeminormGrid& grid) {
    if (!f.compactly_supported)
        throw std::domain_error("seminorm diverges: gamma/n inconsistent with f");
    if (f.singular_points.size() > 1) {
        SeminormResult res;
        for (const auto& piece : partition_single_singularity(f)) {
            auto r = seminorm_single(piece, grid);
            res.value = std::max(res.value, r.value);
            res.finest_spacing = std::max(res.finest_spacing, r.finest_spacing);
            res.grid_points += r.grid_points;
        }
        return res;
    }
    return seminorm_single(f, grid);
}

double fbound_max_violation(const SingularFunction& f, double seminorm_value,
                            const SeminormGrid& grid) {
    if (f.singular_points.size() > 1) {
        double worst = -std::numeric_limits<double>::infinity();
        for (const auto& piece : partition_single_singularity(f))
            worst = std::max(worst, fbound_max_violation(piece, seminorm_value, grid));
        return worst;
    }
    const double R = f.support_radius, x0 = f.x0, gam = f.gamma;
    double worst = -std::numeric_limits<double>::infinity();
    for (int d = 0; d < grid.decades; ++d)
        for (int i = 0; i < grid.points_per_decade; ++i) {
            const double off = std::pow(10.0, -(d + double(i) / grid.points_per_decade)) * R;
            for (double sgn : {-1.0, 1.0}) {
                const double x = x0 + sgn * off;
                for (int k = 0; k <= f.n; ++k)
                    worst = std::max(worst, std::abs(f.deriv(k, x)) -
                                                seminorm_value * std::pow(off, gam - k));
            }
        }
    return worst;
}

HolderReport holder_modulus(const SingularFunction& f) {
    HolderReport rep;
    rep.kappa = std::min(f.gamma, 1.0);
    const double R = f.support_radius, x0 = f.x0;
    std::vector<double> xs;
    const int m = 160;
    for (int i = 0; i <= m; ++i) xs.push_back(x0 - R + 2.0 * R * i / m);
    for (int d = 1; d <= 24; ++d) {
        xs.push_back(x0 + R * std::pow(2.0, -d));
        xs.push_back(x0 - R * std::pow(2.0, -d));
    }
    for (double z : f.singular_points)
        for (int d = 1; d <= 24; ++d) {
            xs.push_back(z + std::pow(2.0, -d));
            xs.push_back(z - std::pow(2.0, -d));
        }
    double sup = 0.0, constant = 0.0;
    std::vector<double> vals(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        vals[i] = std::abs(f.deriv(0, xs[i]));
        sup = std::max(sup, vals[i]);
    }
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j) {
            const double dx = std::abs(xs[i] - xs[j]);
            if (dx == 0.0) continue;
            const double diff = std::abs(f.deriv(0, xs[i]) - f.deriv(0, xs[j]));
            constant = std::max(constant, diff / std::pow(dx, rep.kappa));
        }
    rep.constant = constant;
    rep.sup_norm = sup;
    rep.sup_bound = seminorm_n(f).value * std::pow(R, f.gamma);
    return rep;
}

namespace {

SingularFunction make_abs_pow(double g) {
    SingularFunction f;
    f.label = "abs_pow:" + std::to_string(g);
    f.singular_points = {0.0};
    f.gamma = g;
    f.n = 2;
    f.max_order = 6;
    f.x0 = 0.0;
    f.support_radius = 1.0;
    f.deriv = product(abs_pow_evaluator(g), zeta_evaluator(0.0, 1.0));
    return f;
}

SingularFunction make_poly(int p) {
    SingularFunction f;
    f.label = "poly:" + std::to_string(p);
    f.gamma = 2.0;
    f.n = 2;
    f.max_order = 8;
    f.x0 = 0.0;
    f.support_radius = std::numeric_limits<double>::infinity();
    f.compactly_supported = false;
    f.deriv = [p](int k, double t) -> C {
        if (k > p) return 0.0;
        double c = 1.0;
        for (int j = 0; j < k; ++j) c *= (p - j);
        return c * std::pow(t, p - k);
    };
    return f;
}

SingularFunction smooth_bump_base(std::string label, SingularFunction::Evaluator factor) {
    SingularFunction f;
    f.label = std::move(label);
    f.gamma = 2.0;
    f.n = 4;
    f.max_order = 6;
    f.x0 = 2.0; // Corollary-2.5 convention for smooth compactly supported functions
    f.support_radius = 3.0;
    f.deriv = product(std::move(factor), zeta_evaluator(0.0, 1.0));
    return f;
}

SingularFunction::Evaluator one_evaluator() {
    return [](int k, double) -> C { return k == 0 ? 1.0 : 0.0; };
}

SingularFunction::Evaluator gauss_evaluator(double a) {
    // d^k/dt^k exp(-a t^2) = exp(-a t^2) P_k(t), P_0 = 1, P_{k+1} = P_k' - 2 a t P_k
    return [a](int k, double t) -> C {
        std::vector<std::vector<double>> P(size_t(k) + 1);
        P[0] = {1.0};
        for (int j = 0; j < k; ++j) {
            std::vector<double> next(P[size_t(j)].size() + 1, 0.0);
            for (size_t i = 1; i < P[size_t(j)].size(); ++i) next[i - 1] += P[size_t(j)][i] * double(i);
            for (size_t i = 0; i < P[size_t(j)].size(); ++i) next[i + 1] -= 2.0 * a * P[size_t(j)][i];
            P[size_t(j) + 1] = std::move(next);
        }
        double r = 0.0;
        for (size_t i = P[size_t(k)].size(); i-- > 0;) r = r * t + P[size_t(k)][i];
        return std::exp(-a * t * t) * r;
    };
}

SingularFunction::Evaluator cos_evaluator(double w) {
    return [w](int k, double t) -> C {
        const double c = std::pow(w, k);
        switch (k % 4) {
            case 0: return c * std::cos(w * t);
            case 1: return -c * std::sin(w * t);
            case 2: return -c * std::cos(w * t);
            default: return c * std::sin(w * t);
        }
    };
}

SingularFunction::Evaluator sin_evaluator(double w) {
    return [w](int k, double t) -> C {
        const double c = std::pow(w, k);
        switch (k % 4) {
            case 0: return c * std::sin(w * t);
            case 1: return c * std::cos(w * t);
            case 2: return -c * std::sin(w * t);
            default: return -c * std::cos(w * t);
        }
    };
}

SingularFunction::Evaluator monomial_evaluator(int p) {
    return [p](int k, double t) -> C {
        if (k > p) return 0.0;
        double c = 1.0;
        for (int j = 0; j < k; ++j) c *= (p - j);
        return c * std::pow(t, p - k);
    };
}

} // namespace

SingularFunction function_registry(const std::string& label) {
    auto colon = label.find(':');
    const std::string name = label.substr(0, colon);
    const std::string arg = (colon == std::string::npos) ? "" : label.substr(colon + 1);
    auto num = [&]() -> double {
        if (arg.empty()) throw std::invalid_argument("function_registry: missing parameter in '" + label + "'");
        return std::stod(arg);
    };
    if (name == "eta") return make_eta(num());
    if (name == "abs_pow") return make_abs_pow(num());
    if (name == "poly") return make_poly(int(num()));
    if (name == "bump") return smooth_bump_base("bump", one_evaluator());
    if (name == "gauss_bump") return smooth_bump_base("gauss_bump", gauss_evaluator(4.0));
    if (name == "cos_bump") return smooth_bump_base(label, cos_evaluator(num()));
    if (name == "sin_bump") return smooth_bump_base(label, sin_evaluator(num()));
    if (name == "poly_bump") return smooth_bump_base(label, monomial_evaluator(int(num())));
    throw std::invalid_argument("function_registry: unknown label '" + label + "'");
}

std::vector<std::string> smooth_registry_labels() {
    return {"bump", "gauss_bump", "cos_bump:2", "sin_bump:3", "poly_bump:3"};
}

} // namespace oplab
