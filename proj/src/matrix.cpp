#include "ado/matrix.hpp"

namespace ado {

MatrixC kron(const MatrixC& a, const MatrixC& b) {
    MatrixC out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

double max_abs(const MatrixC& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

std::complex<double> extract_scalar(const MatrixC& m, double* residual) {
    const auto n = m.rows();
    std::complex<double> s = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) s += m(i, i);
    s /= double(n);
    double r = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            r = std::max(r, std::abs(m(i, j) - (i == j ? s : std::complex<double>(0.0))));
    if (residual) *residual = r;
    return s;
}

}  // namespace ado
