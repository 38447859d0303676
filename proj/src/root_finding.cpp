#include "logvalence/root_finding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "logvalence/errors.hpp"

namespace logvalence {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

/// Initial guesses on circles with radii from the upper convex hull of
/// (k, log|a_k|): each hull edge from k1 to k2 contributes k2-k1 points on
/// the circle of radius (|a_{k1}|/|a_{k2}|)^(1/(k2-k1)).
std::vector<Complex> initial_guesses(const std::vector<Complex>& a) {
    const int n = static_cast<int>(a.size()) - 1;
    std::vector<int> idx;
    std::vector<double> logmod(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        double m = std::abs(a[k]);
        logmod[k] = (m > 0.0) ? std::log(m) : -1e300;
    }
    // upper convex hull over nonzero entries, endpoints 0 and n always present
    for (int k = 0; k <= n; ++k) {
        if (logmod[k] <= -1e299 && k != 0 && k != n) continue;
        while (idx.size() >= 2) {
            int i = idx[idx.size() - 2], j = idx[idx.size() - 1];
            // drop j if it lies below the chord i..k
            double lhs = (logmod[j] - logmod[i]) * (k - i);
            double rhs = (logmod[k] - logmod[i]) * (j - i);
            if (lhs <= rhs)
                idx.pop_back();
            else
                break;
        }
        idx.push_back(k);
    }

    std::vector<Complex> guesses;
    guesses.reserve(n);
    const double two_pi = 2.0 * std::numbers::pi;
    int seg = 0;
    for (std::size_t e = 0; e + 1 < idx.size(); ++e, ++seg) {
        int k1 = idx[e], k2 = idx[e + 1];
        int count = k2 - k1;
        double r;
        if (logmod[k1] <= -1e299) {
            r = 0.0;  // exact zero roots (valuation), handled upstream but be safe
        } else {
            r = std::exp((logmod[k1] - logmod[k2]) / count);
        }
        r = std::max(r, 1e-12);
        for (int j = 0; j < count; ++j) {
            double phase = two_pi * j / count + 0.45 + 0.3 * seg;
            guesses.push_back(r * Complex(std::cos(phase), std::sin(phase)));
        }
    }
    return guesses;
}

}  // namespace

double fujiwara_bound(const ComplexPolynomial& poly) {
    const auto& a = poly.coeffs();
    const int n = poly.degree();
    if (n < 1) return 0.0;
    const double an = std::abs(a[n]);
    double best = 0.0;
    for (int k = 1; k <= n; ++k) {
        double num = std::abs(a[n - k]);
        if (k == n) num *= 0.5;
        if (num == 0.0) continue;
        best = std::max(best, std::pow(num / an, 1.0 / k));
    }
    return 2.0 * best;
}

RootSet find_roots(const ComplexPolynomial& poly, double tol, int max_iter) {
    if (poly.degree() < 1 || poly.leading() == Complex(0.0))
        throw std::invalid_argument("find_roots: degree >= 1 with nonzero leading coefficient required");

    // exact zero roots: strip the valuation first
    std::vector<Complex> a = poly.coeffs();
    int valuation = 0;
    while (a.size() > 1 && a.front() == Complex(0.0)) {
        a.erase(a.begin());
        ++valuation;
    }

    RootSet out;
    for (int i = 0; i < valuation; ++i) {
        out.roots.push_back(Complex(0.0));
        out.residuals.push_back(0.0);
    }
    const int n = static_cast<int>(a.size()) - 1;
    if (n == 0) return out;

    // normalize to unit max coefficient
    double scale = 0.0;
    for (const Complex& c : a) scale = std::max(scale, std::abs(c));
    for (Complex& c : a) c /= scale;
    ComplexPolynomial work{std::vector<Complex>(a)};

    std::vector<Complex> z = initial_guesses(a);
    std::vector<bool> done(n, false);

    const double l1 = work.l1_norm();
    bool all_done = false;
    for (int iter = 0; iter < max_iter && !all_done; ++iter) {
        all_done = true;
        for (int k = 0; k < n; ++k) {
            if (done[k]) continue;
            Complex pv, dv;
            work.eval_with_derivative(z[k], pv, dv);
            const double pmag = std::abs(pv);
            // backward-error floor: |p(z)| cannot be resolved below rounding
            const double noise = 8.0 * kEps * work.eval_magnitude_bound(std::abs(z[k]));
            if (pmag <= noise) {
                done[k] = true;
                continue;
            }
            Complex w;
            if (dv == Complex(0.0)) {
                w = Complex(0.1) * (std::abs(z[k]) + 1.0);
            } else {
                w = pv / dv;
            }
            Complex repulsion(0.0);
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                Complex diff = z[k] - z[j];
                if (diff == Complex(0.0)) diff = Complex(1e-14, 1e-14);
                repulsion += Complex(1.0) / diff;
            }
            Complex denom = Complex(1.0) - w * repulsion;
            Complex correction = (denom == Complex(0.0)) ? w : w / denom;
            z[k] -= correction;
            if (std::abs(correction) <= tol * (1.0 + std::abs(z[k])) || pmag <= tol * l1) {
                done[k] = true;
            } else {
                all_done = false;
            }
        }
    }
    if (!all_done) {
        // accept if every residual is already at the mixed tolerance
        for (int k = 0; k < n; ++k) {
            if (std::abs(work.eval(z[k])) > tol * l1)
                throw NonConvergence("find_roots: Ehrlich-Aberth budget exhausted");
        }
    }

    for (int k = 0; k < n; ++k) {
        out.roots.push_back(z[k]);
        out.residuals.push_back(std::abs(work.eval(z[k])));
    }
    return out;
}

std::vector<RootCluster> cluster_roots(const std::vector<Complex>& roots, double radius) {
    std::vector<RootCluster> clusters;
    std::vector<Complex> sums;
    for (Complex r : roots) {
        bool placed = false;
        for (std::size_t i = 0; i < clusters.size(); ++i) {
            if (std::abs(r - clusters[i].center) <= radius) {
                sums[i] += r;
                clusters[i].multiplicity += 1;
                clusters[i].center = sums[i] / static_cast<double>(clusters[i].multiplicity);
                placed = true;
                break;
            }
        }
        if (!placed) {
            clusters.push_back({r, 1});
            sums.push_back(r);
        }
    }
    return clusters;
}

}  // namespace logvalence
