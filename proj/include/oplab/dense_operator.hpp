#pragma once

#include <Eigen/Dense>

#include <complex>
#include <memory>
#include <optional>
#include <string>

namespace oplab {

struct GridMeta {
    int dimension = 0;
    int points_per_axis = 0;
    double spacing = 0.0;
    double alpha = 0.0;
};

// Finite Hermitian or general matrix with optional discretization metadata.
struct DenseOperator {
    Eigen::MatrixXcd mat;
    bool hermitian = false;
    std::shared_ptr<const GridMeta> grid_meta;

    DenseOperator() = default;
    explicit DenseOperator(Eigen::MatrixXcd m, bool herm = false)
        : mat(std::move(m)), hermitian(herm) {}

    Eigen::Index rows() const { return mat.rows(); }
    Eigen::Index cols() const { return mat.cols(); }

    // max-abs deviation from A = A*
    double hermiticity_defect() const;
    // enforce the declared flag (throws if badly violated), symmetrizing roundoff
    void assert_hermitian(double tol = 1e-12) const;
};

DenseOperator hermitian_part(const DenseOperator& a);

// operator-norm estimate by power iteration on A*A (deterministic start)
double operator_norm_estimate(const Eigen::MatrixXcd& a, int iters = 40);

// Textual matrix format: first line "rows cols", then row-major entries
// as "a+bi" tokens separated by whitespace.
void write_matrix(const std::string& path, const Eigen::MatrixXcd& m);
Eigen::MatrixXcd read_matrix(const std::string& path);
std::complex<double> parse_complex(const std::string& token);
std::string format_complex(const std::complex<double>& z);

} // namespace oplab
