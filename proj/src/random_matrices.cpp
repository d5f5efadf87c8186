#include "oplab/random_matrices.hpp"

#include <Eigen/Eigenvalues>

namespace oplab {

MatrixSampler::MatrixSampler(std::uint64_t suite_seed, std::uint64_t instance_id) {
    std::seed_seq seq{std::uint32_t(suite_seed), std::uint32_t(suite_seed >> 32),
                      std::uint32_t(instance_id), std::uint32_t(instance_id >> 32),
                      0x9e3779b9u};
    rng_.seed(seq);
}

Eigen::MatrixXcd MatrixSampler::gaussian(int rows, int cols) {
    Eigen::MatrixXcd g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            g(i, j) = std::complex<double>(normal_(rng_), normal_(rng_)) / std::sqrt(2.0);
    return g;
}

Eigen::MatrixXcd MatrixSampler::gue(int m, double spectral_radius) {
    Eigen::MatrixXcd g = gaussian(m, m);
    Eigen::MatrixXcd h = (g + g.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    const double r = std::max(std::abs(es.eigenvalues()(0)),
                              std::abs(es.eigenvalues()(m - 1)));
    if (r > 0) h *= spectral_radius / r;
    return h;
}

Eigen::MatrixXcd MatrixSampler::wishart(int m) {
    Eigen::MatrixXcd g = gaussian(m, m);
    return g * g.adjoint() / double(m);
}

Eigen::MatrixXcd MatrixSampler::haar_projection(int m, int k) {
    Eigen::MatrixXcd g = gaussian(m, k);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(m, k);
    return q * q.adjoint();
}

Eigen::MatrixXcd MatrixSampler::hermitian_in(int m, double lo, double hi) {
    Eigen::MatrixXcd h = gue(m, 1.0);
    // affine map of [-1,1] onto [lo,hi]
    const double c = 0.5 * (lo + hi), r = 0.5 * (hi - lo);
    return r * h + c * Eigen::MatrixXcd::Identity(m, m);
}

double MatrixSampler::uniform(double a, double b) {
    std::uniform_real_distribution<double> d(a, b);
    return d(rng_);
}

int MatrixSampler::uniform_int(int a, int b) {
    std::uniform_int_distribution<int> d(a, b);
    return d(rng_);
}

} // namespace oplab
