#include "oplab/cutoff.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace oplab {

namespace {

// 20-point Gauss-Legendre on [-1,1]
constexpr int kGL = 20;
constexpr std::array<double, kGL> kGLNodes = {
    -0.9931285991850949, -0.9639719272779138, -0.9122344282513259,
    -0.8391169718222188, -0.7463319064601508, -0.6360536807265150,
    -0.5108670019508271, -0.3737060887154196, -0.2277858511416451,
    -0.0765265211334973,  0.0765265211334973,  0.2277858511416451,
     0.3737060887154196,  0.5108670019508271,  0.6360536807265150,
     0.7463319064601508,  0.8391169718222188,  0.9122344282513259,
     0.9639719272779138,  0.9931285991850949};
constexpr std::array<double, kGL> kGLWeights = {
    0.0176140071391521, 0.0406014298003869, 0.0626720483341091,
    0.0832767415767048, 0.1019301198172404, 0.1181945319615184,
    0.1316886384491766, 0.1420961093183821, 0.1491729864726037,
    0.1527533871307258, 0.1527533871307258, 0.1491729864726037,
    0.1420961093183821, 0.1316886384491766, 0.1181945319615184,
    0.1019301198172404, 0.0832767415767048, 0.0626720483341091,
    0.0406014298003869, 0.0176140071391521};

double raw_bump(double u) {
    if (std::abs(u) >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - u * u));
}

std::vector<double> poly_mul(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<double> poly_add(std::vector<double> a, const std::vector<double>& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0.0);
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

std::vector<double> poly_der(const std::vector<double>& a) {
    if (a.size() <= 1) return {0.0};
    std::vector<double> out(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * double(i);
    return out;
}

double poly_eval(const std::vector<double>& a, double u) {
    double r = 0.0;
    for (size_t i = a.size(); i-- > 0;) r = r * u + a[i];
    return r;
}

constexpr int kMaxBumpOrder = 8;
constexpr int kBreaks = 2048;

} // namespace

const SmoothStep& SmoothStep::instance() {
    static const SmoothStep s;
    return s;
}

SmoothStep::SmoothStep() {
    const std::vector<double> s2 = {1.0, 0.0, -1.0}; // 1 - u^2
    poly_.resize(kMaxBumpOrder + 1);
    poly_[0] = {1.0};
    poly_[1] = {0.0, -2.0};
    for (int k = 1; k < kMaxBumpOrder; ++k) {
        auto t1 = poly_mul(poly_der(poly_[k]), poly_mul(s2, s2));
        auto t2 = poly_mul({0.0, 4.0 * k}, poly_mul(poly_[k], s2));
        auto t3 = poly_mul({0.0, -2.0}, poly_[k]);
        poly_[k + 1] = poly_add(poly_add(t1, t2), t3);
    }

    bp_.resize(kBreaks + 1);
    cum_.resize(kBreaks + 1);
    for (int i = 0; i <= kBreaks; ++i) bp_[i] = -1.0 + 2.0 * i / kBreaks;
    cum_[0] = 0.0;
    for (int i = 0; i < kBreaks; ++i)
        cum_[i + 1] = cum_[i] + partial_integral(bp_[i], bp_[i + 1]);
    norm_ = cum_[kBreaks];
}

double SmoothStep::partial_integral(double a, double b) const {
    double c = 0.5 * (a + b), r = 0.5 * (b - a), acc = 0.0;
    for (int i = 0; i < kGL; ++i) acc += kGLWeights[i] * raw_bump(c + r * kGLNodes[i]);
    return acc * r;
}

double SmoothStep::bump(double u) const { return raw_bump(u); }

double SmoothStep::bump_derivative(int k, double u) const {
    if (k == 0) return raw_bump(u);
    if (k > kMaxBumpOrder) throw std::invalid_argument("SmoothStep: bump derivative order too high");
    if (std::abs(u) >= 1.0) return 0.0;
    const double s = 1.0 - u * u;
    return raw_bump(u) * poly_eval(poly_[k], u) / std::pow(s, 2 * k);
}

double SmoothStep::value(double u) const {
    if (u <= -1.0) return 0.0;
    if (u >= 1.0) return 1.0;
    // locate breakpoint panel, integrate the remainder with one GL pass
    int i = int((u + 1.0) * 0.5 * kBreaks);
    if (i >= kBreaks) i = kBreaks - 1;
    return (cum_[i] + partial_integral(bp_[i], u)) / norm_;
}

double SmoothStep::derivative(int k, double u) const {
    if (k == 0) return value(u);
    return bump_derivative(k - 1, u) / norm_;
}

double CutoffZeta::eval(double t) const {
    return SmoothStep::instance().value(3.0 - 4.0 * std::abs(t));
}

double CutoffZeta::eval_derivative(int k, double t) const {
    if (k == 0) return eval(t);
    const double a = std::abs(t);
    if (a <= 0.5 || a >= 1.0) return 0.0;
    const double sgn = (t > 0) ? 1.0 : -1.0;
    double scale = 1.0;
    for (int i = 0; i < k; ++i) scale *= -4.0 * sgn;
    return SmoothStep::instance().derivative(k, 3.0 - 4.0 * a) * scale;
}

// Upsilon(t) = zeta(t) / sum_m zeta(t - m). The denominator is a smooth,
// 1-periodic, strictly positive function; only m in {-1,0,1,2} near the
// fractional part of t can contribute.
namespace {
double unity_denom_der(int k, double t) {
    double base = std::floor(t);
    CutoffZeta z;
    double s = 0.0;
    for (int m = -1; m <= 2; ++m) s += z.eval_derivative(k, t - (base + m));
    return s;
}
} // namespace

double UnityBump::eval(double t) const {
    CutoffZeta z;
    double num = z.eval(t);
    if (num == 0.0) return 0.0;
    return num / unity_denom_der(0, t);
}

double UnityBump::eval_derivative(int k, double t) const {
    if (k == 0) return eval(t);
    if (k > 3) throw std::invalid_argument("UnityBump: derivative order too high");
    CutoffZeta z;
    if (z.eval(t) == 0.0 && z.eval_derivative(1, t) == 0.0 && std::abs(t) >= 1.0) return 0.0;
    const double D = unity_denom_der(0, t);
    const double D1 = unity_denom_der(1, t);
    const double D2 = unity_denom_der(2, t);
    const double D3 = unity_denom_der(3, t);
    // derivatives of 1/D
    const double q0 = 1.0 / D;
    const double q1 = -D1 / (D * D);
    const double q2 = (2 * D1 * D1 - D * D2) / (D * D * D);
    const double q3 = (-6 * D1 * D1 * D1 + 6 * D * D1 * D2 - D * D * D3) / (D * D * D * D);
    const double q[4] = {q0, q1, q2, q3};
    double acc = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= k; ++j) {
        acc += binom * z.eval_derivative(j, t) * q[k - j];
        binom = binom * double(k - j) / double(j + 1);
    }
    return acc;
}

} // namespace oplab
