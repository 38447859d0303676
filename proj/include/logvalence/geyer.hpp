#pragma once

#include <vector>

#include "logvalence/complex_polynomial.hpp"

namespace logvalence {

/// Real polynomial p of degree n whose anti-map conj(p) fixes its n-1
/// finite critical points: p'(z_j) = 0 and p(z_j) = conj(z_j).
struct GeyerPolynomial {
    ComplexPolynomial poly;
    std::vector<Complex> critical_points;  // closed under conjugation

    int n() const { return poly.degree(); }
};

/// Max over j of |p'(z_j)| and |p(z_j) - conj(z_j)|.
double geyer_residual(const GeyerPolynomial& g);

/// Throws std::invalid_argument when the residuals or structure fail the
/// type invariants (real coefficients, distinct conjugation-closed critical
/// set, residuals <= 1e-9).
void validate_geyer(const GeyerPolynomial& g);

/// Direct solve: with p'(z) = a prod(z - z_j), solve the real linear system
/// p(z_j) = conj(z_j) for (a, d) in least squares. When the system is
/// underdetermined (n = 2) the monic normalization pins a. Throws
/// Unrealizable when the best residual exceeds 1e-9.
GeyerPolynomial geyer_from_critical_points(const std::vector<Complex>& points);

/// Full Newton solve with the critical points as unknowns, parametrized as
/// reals plus conjugate pairs so real coefficients hold by construction.
/// Two normalization equations freeze the affine gauge: sum Re z_j and
/// sum |z_j|^2 keep their seed values. Throws NonConvergence.
GeyerPolynomial geyer_solve(int n, const std::vector<Complex>& seed_points);

/// Conjugate by A(z) = lambda z: critical points scale, the polynomial
/// stays Geyer. Used to pick the affine representative whose perturbed
/// instance keeps the orbit multiplier away from 0.
GeyerPolynomial rescale_geyer(const GeyerPolynomial& g, double lambda);

/// Deterministic seed ladder for a given n: a curated known-good seed
/// first, then scaled roots of unity, rotated roots of unity, and real
/// spreads in [-1, 1].
std::vector<std::vector<Complex>> geyer_seed_ladder(int n);

}  // namespace logvalence
