#pragma once

#include <vector>

#include "toughlab/graph.hpp"
#include "toughlab/symmatrix.hpp"

namespace toughlab {

// Default tolerance for spectrum classification (zero detection,
// connectivity). Spectra at this scale are integers or well-separated
// algebraic numbers, so this is generous.
inline constexpr double kSpectrumTol = 1e-10;

// Full Laplacian spectrum of a connected graph, eigenvalues ascending.
// mu2 is the algebraic connectivity, mu_n the largest eigenvalue.
struct LaplacianSpectrum {
  std::vector<double> eigenvalues;
  double mu2 = 0.0;
  double mu_n = 0.0;
  double tol = kSpectrumTol;
};

// Degree diagonal minus adjacency; row sums are all zero.
SymMatrix laplacian(const Graph& g);

// Throws DomainError for disconnected input (connectivity is decided
// structurally; the spectral mu2 > tol signal is cross-checked against it)
// and for single-vertex graphs, which have no second eigenvalue.
LaplacianSpectrum spectrum(const Graph& g, double tol = kSpectrumTol);

// Eigenvalues within the clustering radius 1e-6 * max(1, mu_n) of `value`.
int multiplicity(const LaplacianSpectrum& s, double value);

// mu2 / (mu_n - delta). Throws DomainError for complete graphs (the bound
// is undefined there; toughness is infinite by convention).
double toughness_bound(const Graph& g);

// The eigenvalue chain 0 < mu2 <= delta < mu_n - 1 for connected
// non-complete graphs, with the two interesting slacks.
struct FiedlerCheck {
  bool holds = false;
  double mu2 = 0.0;
  double delta_minus_mu2 = 0.0;
  double mun_minus_one_minus_delta = 0.0;
};

FiedlerCheck fiedler_check(const Graph& g);

}  // namespace toughlab
