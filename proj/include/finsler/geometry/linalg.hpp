#pragma once

#include <stdexcept>
#include <vector>

namespace finsler::geometry {

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major square matrix helpers for small n.
namespace linalg {

/// Inverse by Gauss-Jordan elimination with partial pivoting. Throws when a
/// pivot falls below 1e-12 times the max-abs entry.
std::vector<double> inverse(const std::vector<double>& a, int n);

/// Solve a x = b.
std::vector<double> solve(const std::vector<double>& a, const std::vector<double>& b, int n);

/// Eigenvalues of a symmetric matrix (cyclic Jacobi), ascending.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n);

double max_abs(const std::vector<double>& a);

}  // namespace linalg
}  // namespace finsler::geometry
