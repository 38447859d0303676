#pragma once

#include <vector>

#include "logvalence/complex_polynomial.hpp"

namespace logvalence {

struct RootSet {
    std::vector<Complex> roots;      // deg(poly) entries, multiplicity as clusters
    std::vector<double> residuals;   // |poly(root)| after coefficient normalization
};

struct RootCluster {
    Complex center;
    int multiplicity;
};

/// Fujiwara upper bound on root moduli: 2 max_k (|a_{n-k}|/|a_n|)^(1/k)
/// (with the customary factor 1/2 on the constant term).
double fujiwara_bound(const ComplexPolynomial& poly);

/// All complex roots by simultaneous Ehrlich-Aberth iteration. Coefficients
/// are normalized to unit max modulus; initial guesses sit on circles whose
/// radii come from the Newton polygon of the coefficient moduli, which keeps
/// widely separated root scales converging together. Deterministic for a
/// given (poly, tol, max_iter).
///
/// Throws NonConvergence when the sweep budget runs out.
RootSet find_roots(const ComplexPolynomial& poly, double tol = 1e-12, int max_iter = 400);

/// Greedy clustering of a root list; roots within `radius` of a cluster
/// center join it, centers are running means.
std::vector<RootCluster> cluster_roots(const std::vector<Complex>& roots, double radius);

}  // namespace logvalence
