#pragma once

#include <functional>
#include <span>
#include <vector>

namespace proxdec {

// Row-major dense real matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {}
  DenseMatrix(int rows, int cols, std::vector<double> data);

  static DenseMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::span<const double> row(int i) const { return {data_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)}; }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

std::vector<double> matvec(const DenseMatrix& A, std::span<const double> x);
std::vector<double> tmatvec(const DenseMatrix& A, std::span<const double> x);  // A^T x
DenseMatrix matmul(const DenseMatrix& A, const DenseMatrix& B);
DenseMatrix transpose(const DenseMatrix& A);
DenseMatrix gram(const DenseMatrix& A);        // A^T A, exactly symmetric
DenseMatrix outer_gram(const DenseMatrix& A);  // A A^T, exactly symmetric
double frobenius_norm(const DenseMatrix& A);
double max_abs(const DenseMatrix& A);

// Solves M x = b for symmetric positive definite M. Throws std::runtime_error
// when a non-positive pivot shows M is not positive definite, and
// std::invalid_argument on shape or symmetry violations.
std::vector<double> cholesky_solve(const DenseMatrix& M, std::span<const double> b);

struct SpectrumEstimate {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  int iterations_used = 0;
  bool converged = false;
};

// Extreme eigenvalues of a symmetric PSD matrix. lambda_max comes from power
// iteration (successive relative change < 1e-10, capped at 5000 iterations);
// lambda_min from power iteration on the shifted matrix lambda_max*I - S.
SpectrumEstimate extreme_eigs(const DenseMatrix& S);

// Step size 2 / (lambda_min + lambda_max).
double spectral_step(const SpectrumEstimate& spectrum);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column k pairs with values[k]
};

// Cyclic Jacobi eigendecomposition of a symmetric matrix.
EigenDecomposition jacobi_eigs(const DenseMatrix& S);

// Principal symmetric square root of a symmetric PSD matrix.
DenseMatrix sym_sqrt(const DenseMatrix& R);

// Central finite differences, (f(x+h e_k) - f(x-h e_k)) / (2h).
std::vector<double> finite_diff_grad(const std::function<double(std::span<const double>)>& f,
                                     std::span<const double> x, double step);

}  // namespace proxdec
