#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>

namespace oplab {

// Deterministic per-instance generators for the verification sweeps.
// Every instance is seeded from (suite_seed, instance_id) so sweeps can be
// distributed without changing results.
class MatrixSampler {
public:
    MatrixSampler(std::uint64_t suite_seed, std::uint64_t instance_id);

    // Hermitian, GUE-type entries, rescaled to the requested spectral radius.
    Eigen::MatrixXcd gue(int m, double spectral_radius = 1.0);
    // PSD Wishart G G* / m
    Eigen::MatrixXcd wishart(int m);
    // rank-k orthogonal projection with Haar-random range
    Eigen::MatrixXcd haar_projection(int m, int k);
    // iid complex Gaussian
    Eigen::MatrixXcd gaussian(int rows, int cols);
    // Hermitian with spectrum inside [lo, hi]
    Eigen::MatrixXcd hermitian_in(int m, double lo, double hi);

    double uniform(double a, double b);
    int uniform_int(int a, int b);

private:
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace oplab
