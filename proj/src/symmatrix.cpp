#include "toughlab/symmatrix.hpp"

#include <algorithm>
#include <cmath>

namespace toughlab {

SymMatrix::SymMatrix(int order) : n_(order) {
  if (order < 1) throw InputError("matrix order must be positive");
  a_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0.0);
}

std::size_t SymMatrix::index(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) throw InputError("matrix index out of range");
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
         static_cast<std::size_t>(j);
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : a_) s += x * x;
  return std::sqrt(s);
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      const double x = a[static_cast<std::size_t>(p) * n + q];
      s += 2.0 * x * x;
    }
  return std::sqrt(s);
}

}  // namespace

std::vector<double> eigenvalues_sym(const SymMatrix& m, double tol) {
  const int n = m.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m(i, j);

  const double scale = m.frobenius_norm();
  if (scale > 0.0) {
    const double threshold = tol * scale;
    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    while (off_diagonal_norm(a, n) > threshold) {
      if (++sweep > kMaxSweeps) throw InternalError("jacobi eigensolver did not converge");
      for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
          const double apq = a[static_cast<std::size_t>(p) * n + q];
          if (apq == 0.0) continue;
          const double app = a[static_cast<std::size_t>(p) * n + p];
          const double aqq = a[static_cast<std::size_t>(q) * n + q];
          const double theta = (aqq - app) / (2.0 * apq);
          // t = sgn(theta) / (|theta| + sqrt(theta^2 + 1)), guarded against
          // theta^2 overflow.
          double t;
          if (std::abs(theta) > 1e150) {
            t = 1.0 / (2.0 * theta);
          } else {
            t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
            if (theta < 0.0) t = -t;
          }
          const double c = 1.0 / std::sqrt(t * t + 1.0);
          const double s = t * c;
          a[static_cast<std::size_t>(p) * n + p] = app - t * apq;
          a[static_cast<std::size_t>(q) * n + q] = aqq + t * apq;
          a[static_cast<std::size_t>(p) * n + q] = 0.0;
          a[static_cast<std::size_t>(q) * n + p] = 0.0;
          for (int k = 0; k < n; ++k) {
            if (k == p || k == q) continue;
            const double akp = a[static_cast<std::size_t>(k) * n + p];
            const double akq = a[static_cast<std::size_t>(k) * n + q];
            const double nkp = c * akp - s * akq;
            const double nkq = s * akp + c * akq;
            a[static_cast<std::size_t>(k) * n + p] = nkp;
            a[static_cast<std::size_t>(p) * n + k] = nkp;
            a[static_cast<std::size_t>(k) * n + q] = nkq;
            a[static_cast<std::size_t>(q) * n + k] = nkq;
          }
        }
      }
    }
  }

  std::vector<double> eigs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eigs[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i) * n + i];
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

double min_eigenvalue(const SymMatrix& m, double tol) {
  return eigenvalues_sym(m, tol).front();
}

}  // namespace toughlab
