#include "oplab/quadrature.hpp"

namespace oplab {

// Kronrod extension of the 7-point Gauss rule (Patterson values).
const double GK15::nodes[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898,  0.0,                0.207784955007898,
     0.405845151377397,  0.586087235467691,  0.741531185599394,
     0.864864423359769,  0.949107912342759,  0.991455371120813};
const double GK15::wk[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728, 0.204432940075298,
    0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
const double GK15::wg[7] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469, 0.381830050505119, 0.279705391489277,
    0.129484966168870};

namespace {

struct Panel {
    double a, b;
    std::complex<double> value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel eval_panel(const std::function<std::complex<double>(double)>& f, double a, double b,
                 long& evals) {
    const double c = 0.5 * (a + b), r = 0.5 * (b - a);
    std::complex<double> k{0.0, 0.0}, g{0.0, 0.0};
    for (int i = 0; i < 15; ++i) {
        const std::complex<double> v = f(c + r * GK15::nodes[i]);
        ++evals;
        k += GK15::wk[i] * v;
        if (i % 2 == 1) g += GK15::wg[i / 2] * v;
    }
    k *= r;
    g *= r;
    return Panel{a, b, k, std::abs(k - g)};
}

} // namespace

ScalarQuad adaptive_integrate(const std::function<std::complex<double>(double)>& f,
                              double a, double b, const QuadOptions& opt,
                              const std::vector<double>& breakpoints) {
    ScalarQuad out;
    if (a == b) return out;

    std::vector<double> cuts = {a, b};
    for (double c : breakpoints)
        if (c > std::min(a, b) && c < std::max(a, b)) cuts.push_back(c);
    std::sort(cuts.begin(), cuts.end());
    if (a > b) std::reverse(cuts.begin(), cuts.end());

    std::priority_queue<Panel> heap;
    std::complex<double> total{0.0, 0.0};
    double err = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        Panel p = eval_panel(f, cuts[i], cuts[i + 1], out.evals);
        total += p.value;
        err += p.error;
        heap.push(p);
    }
    int panels = int(cuts.size()) - 1;
    while (err > opt.abs_tol && panels < opt.max_panels &&
           (opt.max_evals == 0 || out.evals < opt.max_evals)) {
        Panel top = heap.top();
        heap.pop();
        const double mid = 0.5 * (top.a + top.b);
        if (mid == top.a || mid == top.b) { // interval exhausted
            heap.push(Panel{top.a, top.b, top.value, 0.0});
            err -= top.error;
            continue;
        }
        Panel l = eval_panel(f, top.a, mid, out.evals);
        Panel r = eval_panel(f, mid, top.b, out.evals);
        total += l.value + r.value - top.value;
        err += l.error + r.error - top.error;
        heap.push(l);
        heap.push(r);
        ++panels;
    }
    out.value = total;
    out.error = err;
    out.converged = (err <= opt.abs_tol);
    return out;
}

ScalarQuad integrate_unit_interval_endpoint_singular(
    const std::function<std::complex<double>(double)>& f, const QuadOptions& opt,
    const std::vector<double>& interior_breakpoints) {
    QuadOptions half = opt;
    half.abs_tol = 0.5 * opt.abs_tol;
    std::vector<double> left_cuts, right_cuts;
    for (double c : interior_breakpoints) {
        if (c > 0.0 && c < 0.5) left_cuts.push_back(std::sqrt(c));
        if (c >= 0.5 && c < 1.0) right_cuts.push_back(std::sqrt(1.0 - c));
    }
    // t = u^2 on [0, 1/2]
    auto lo = adaptive_integrate(
        [&f](double u) { return 2.0 * u * f(u * u); }, 0.0, std::sqrt(0.5), half, left_cuts);
    // 1 - t = u^2 on [1/2, 1]
    auto hi = adaptive_integrate(
        [&f](double u) { return 2.0 * u * f(1.0 - u * u); }, 0.0, std::sqrt(0.5), half,
        right_cuts);
    ScalarQuad out;
    out.value = lo.value + hi.value;
    out.error = lo.error + hi.error;
    out.evals = lo.evals + hi.evals;
    out.converged = lo.converged && hi.converged;
    return out;
}

} // namespace oplab
