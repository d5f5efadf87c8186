#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <string>

namespace oplab {

// Symbol a(x, xi) on R^2 x R^2. xi-compact symbols declare a support radius
// so the Nyquist check and the cross-term compressions know the band limit.
struct Symbol2 {
    std::string label;
    std::function<std::complex<double>(const Eigen::Vector2d&, const Eigen::Vector2d&)> eval;
    double xi_support_radius = 0.0; // 0 = not xi-compact (bandlimited only by the grid)
    bool x_independent = true;
    bool separable = false; // a(x,xi) = phi(x) psi(xi)
    std::function<std::complex<double>(const Eigen::Vector2d&)> phi; // when separable
    std::function<std::complex<double>(const Eigen::Vector2d&)> psi;

    std::complex<double> operator()(const Eigen::Vector2d& x, const Eigen::Vector2d& xi) const {
        return eval(x, xi);
    }
};

Symbol2 make_constant_symbol(std::complex<double> c);
// smooth radial xi-bump c * zeta(|xi| / (2 rho)) : equals c for |xi| <= rho,
// vanishes for |xi| >= 2 rho
Symbol2 make_xi_bump(std::complex<double> c, double rho);
// separable phi(x) psi(xi): smooth bumps of the given radii
Symbol2 make_separable_bump(double x_radius, double xi_radius);

// "const:<c>", "xibump:<c>:<rho>", "sep:<rx>:<rxi>"
Symbol2 symbol_registry(const std::string& label);

} // namespace oplab
