#include "toughlab/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace toughlab {

SymMatrix laplacian(const Graph& g) {
  const int n = g.order();
  SymMatrix m(n);
  for (int v = 0; v < n; ++v) {
    m.set(v, v, static_cast<double>(g.degree(v)));
    for (std::uint64_t b = g.neighbors(v).mask(); b != 0; b &= b - 1) {
      const int u = std::countr_zero(b);
      if (u > v) m.set(v, u, -1.0);
    }
  }
  return m;
}

LaplacianSpectrum spectrum(const Graph& g, double tol) {
  if (g.order() < 2)
    throw DomainError("spectrum needs at least two vertices (no second eigenvalue)");
  if (!is_connected(g)) throw DomainError("graph is disconnected");

  LaplacianSpectrum s;
  s.eigenvalues = eigenvalues_sym(laplacian(g));
  s.tol = tol;
  s.mu2 = s.eigenvalues[1];
  s.mu_n = s.eigenvalues.back();

  const int n = g.order();
  if (std::abs(s.eigenvalues.front()) > tol)
    throw InternalError("laplacian lost its zero eigenvalue");
  if (s.mu2 <= tol)
    throw InternalError("spectral connectivity signal disagrees with structural check");
  double sum = 0.0;
  for (double e : s.eigenvalues) sum += e;
  if (std::abs(sum - 2.0 * g.edge_count()) > tol * n)
    throw InternalError("laplacian trace identity violated");
  return s;
}

int multiplicity(const LaplacianSpectrum& s, double value) {
  const double radius = 1e-6 * std::max(1.0, s.mu_n);
  int count = 0;
  for (double e : s.eigenvalues)
    if (std::abs(e - value) <= radius) ++count;
  return count;
}

double toughness_bound(const Graph& g) {
  if (is_complete(g))
    throw DomainError("bound undefined for complete graphs (toughness is infinite)");
  const LaplacianSpectrum s = spectrum(g);
  const int delta = min_degree(g);
  return s.mu2 / (s.mu_n - delta);
}

FiedlerCheck fiedler_check(const Graph& g) {
  if (is_complete(g)) throw DomainError("eigenvalue chain applies to non-complete graphs");
  const LaplacianSpectrum s = spectrum(g);
  const int delta = min_degree(g);
  FiedlerCheck out;
  out.mu2 = s.mu2;
  out.delta_minus_mu2 = delta - s.mu2;
  out.mun_minus_one_minus_delta = s.mu_n - 1.0 - delta;
  out.holds = s.mu2 > s.tol && out.delta_minus_mu2 >= -1e-8 &&
              out.mun_minus_one_minus_delta > 0.0;
  return out;
}

}  // namespace toughlab
