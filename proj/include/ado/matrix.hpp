#pragma once

#include <complex>

#include <Eigen/Dense>

namespace ado {

using MatrixC = Eigen::MatrixXcd;

// Kronecker product, first factor most significant: index (i,k) -> i*B.rows()+k.
MatrixC kron(const MatrixC& a, const MatrixC& b);

double max_abs(const MatrixC& m);

// Scalar s with m ~ s*Id. *residual receives the max of off-diagonal
// magnitudes and diagonal spread; the caller decides whether it is tolerable.
std::complex<double> extract_scalar(const MatrixC& m, double* residual);

}  // namespace ado
