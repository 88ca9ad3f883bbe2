#pragma once

#include <vector>

#include "toughlab/errors.hpp"

namespace toughlab {

// Dense real symmetric matrix; writes mirror so entries(i,j) == entries(j,i)
// holds exactly at all times.
class SymMatrix {
 public:
  explicit SymMatrix(int order);

  int order() const { return n_; }

  double operator()(int i, int j) const { return a_[index(i, j)]; }

  void set(int i, int j, double value) {
    a_[index(i, j)] = value;
    a_[index(j, i)] = value;
  }

  double trace() const;
  double frobenius_norm() const;

 private:
  std::size_t index(int i, int j) const;

  int n_;
  std::vector<double> a_;
};

// All eigenvalues, sorted ascending, via cyclic Jacobi rotations. Sweeps
// stop once the off-diagonal Frobenius norm drops below tol times the
// matrix norm; quadratic convergence means the achieved accuracy is
// usually near machine precision. Deterministic across runs.
std::vector<double> eigenvalues_sym(const SymMatrix& m, double tol = 1e-12);

double min_eigenvalue(const SymMatrix& m, double tol = 1e-12);

}  // namespace toughlab
