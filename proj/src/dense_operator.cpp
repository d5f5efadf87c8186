#include "oplab/dense_operator.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oplab {

double DenseOperator::hermiticity_defect() const {
    if (mat.rows() != mat.cols()) return std::numeric_limits<double>::infinity();
    return (mat - mat.adjoint()).cwiseAbs().maxCoeff();
}

void DenseOperator::assert_hermitian(double tol) const {
    if (!hermitian) throw std::domain_error("operator is not flagged Hermitian");
    const double defect = hermiticity_defect();
    if (!(defect <= tol))
        throw std::domain_error("Hermitian flag violated: defect = " + std::to_string(defect));
}

DenseOperator hermitian_part(const DenseOperator& a) {
    DenseOperator out(((a.mat + a.mat.adjoint()) * 0.5).eval(), true);
    out.grid_meta = a.grid_meta;
    return out;
}

double operator_norm_estimate(const Eigen::MatrixXcd& a, int iters) {
    if (a.size() == 0) return 0.0;
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(a.cols());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        v(i) += std::complex<double>(0.0, 0.3 * double((i * 2654435761u) % 97) / 97.0);
    v.normalize();
    double s = 0.0;
    for (int it = 0; it < iters; ++it) {
        Eigen::VectorXcd w = a.adjoint() * (a * v);
        const double nn = w.norm();
        if (nn == 0.0) return 0.0;
        v = w / nn;
        s = std::sqrt(nn);
    }
    return s;
}

std::string format_complex(const std::complex<double>& z) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

std::complex<double> parse_complex(const std::string& token) {
    // forms: "a", "a+bi", "a-bi", "bi"
    if (token.empty()) throw std::invalid_argument("parse_complex: empty token");
    std::string s = token;
    bool has_i = (s.back() == 'i' || s.back() == 'I');
    if (!has_i) return {std::stod(s), 0.0};
    s.pop_back();
    // split at the last sign that is not an exponent sign and not leading
    size_t split = std::string::npos;
    for (size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        if (s.empty() || s == "+" || s == "-") s += "1";
        return {0.0, std::stod(s)};
    }
    const double re = std::stod(s.substr(0, split));
    std::string im = s.substr(split);
    if (im == "+" || im == "-") im += "1";
    return {re, std::stod(im)};
}

void write_matrix(const std::string& path, const Eigen::MatrixXcd& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_matrix: cannot open " + path);
    out << m.rows() << " " << m.cols() << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out << format_complex(m(i, j));
            out << (j + 1 == m.cols() ? "\n" : " ");
        }
    }
}

Eigen::MatrixXcd read_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_matrix: cannot open " + path);
    Eigen::Index rows = 0, cols = 0;
    in >> rows >> cols;
    if (rows <= 0 || cols <= 0) throw std::runtime_error("read_matrix: bad header in " + path);
    Eigen::MatrixXcd m(rows, cols);
    std::string tok;
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) {
            if (!(in >> tok)) throw std::runtime_error("read_matrix: truncated file " + path);
            m(i, j) = parse_complex(tok);
        }
    return m;
}

} // namespace oplab
