#include "logvalence/geyer.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "logvalence/errors.hpp"

namespace logvalence {

namespace {

struct CriticalParams {
    std::vector<double> reals;                    // real critical points
    std::vector<std::pair<double, double>> pairs; // (u, v), v > 0, for u +/- iv
};

CriticalParams split_conjugation_closed(const std::vector<Complex>& points) {
    CriticalParams cp;
    std::vector<bool> used(points.size(), false);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (used[i]) continue;
        const Complex z = points[i];
        if (std::abs(z.imag()) < 1e-12) {
            cp.reals.push_back(z.real());
            used[i] = true;
            continue;
        }
        bool matched = false;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i || used[j]) continue;
            if (std::abs(points[j] - std::conj(z)) < 1e-9) {
                used[i] = used[j] = true;
                cp.pairs.emplace_back(z.real(), std::abs(z.imag()));
                matched = true;
                break;
            }
        }
        if (!matched)
            throw std::invalid_argument("critical point set is not closed under conjugation");
    }
    return cp;
}

std::vector<Complex> params_to_points(const CriticalParams& cp) {
    std::vector<Complex> pts;
    for (double x : cp.reals) pts.emplace_back(x, 0.0);
    for (auto [u, v] : cp.pairs) {
        pts.emplace_back(u, v);
        pts.emplace_back(u, -v);
    }
    return pts;
}

/// monic prod(z - z_j) assembled from real linear and quadratic factors, so
/// the coefficients are exactly real.
ComplexPolynomial monic_from_params(const CriticalParams& cp) {
    ComplexPolynomial w = ComplexPolynomial::constant(Complex(1.0));
    for (double x : cp.reals) w = w * ComplexPolynomial{Complex(-x), Complex(1.0)};
    for (auto [u, v] : cp.pairs)
        w = w * ComplexPolynomial{Complex(u * u + v * v), Complex(-2.0 * u), Complex(1.0)};
    return w;
}

/// p = a * antiderivative(W) + d for real (a, d).
ComplexPolynomial assemble(const ComplexPolynomial& w_int, double a, double d) {
    ComplexPolynomial p = Complex(a) * w_int;
    p += ComplexPolynomial::constant(Complex(d));
    return p;
}

/// Least-squares (a, d) for p(z_j) = conj(z_j); one row per real point,
/// two per conjugate pair. When rank deficient (n = 2) the extra row a = n
/// makes p monic, matching the z^2 - 2z + 2 convention.
std::pair<double, double> solve_linear_part(const CriticalParams& cp, const ComplexPolynomial& w_int,
                                            int n) {
    std::vector<std::array<double, 3>> rows;
    for (double x : cp.reals) {
        Complex val = w_int.eval(Complex(x, 0.0));
        rows.push_back({val.real(), 1.0, x});
    }
    for (auto [u, v] : cp.pairs) {
        Complex val = w_int.eval(Complex(u, v));
        rows.push_back({val.real(), 1.0, u});
        rows.push_back({val.imag(), 0.0, -v});
    }
    Eigen::MatrixXd A(rows.size(), 2);
    Eigen::VectorXd b(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        A(i, 0) = rows[i][0];
        A(i, 1) = rows[i][1];
        b(i) = rows[i][2];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-12);
    if (svd.rank() < 2) {
        Eigen::MatrixXd A2(A.rows() + 1, 2);
        Eigen::VectorXd b2(b.size() + 1);
        A2.topRows(A.rows()) = A;
        b2.head(b.size()) = b;
        A2(A.rows(), 0) = 1.0;
        A2(A.rows(), 1) = 0.0;
        b2(b.size()) = static_cast<double>(n);
        Eigen::Vector2d sol = A2.colPivHouseholderQr().solve(b2);
        return {sol(0), sol(1)};
    }
    Eigen::Vector2d sol = svd.solve(b);
    return {sol(0), sol(1)};
}

void check_distinct(const std::vector<Complex>& pts, double tol) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (std::abs(pts[i] - pts[j]) < tol)
                throw std::invalid_argument("critical points must be distinct");
}

}  // namespace

double geyer_residual(const GeyerPolynomial& g) {
    const ComplexPolynomial dp = g.poly.derivative();
    double res = 0.0;
    for (Complex z : g.critical_points) {
        res = std::max(res, std::abs(dp.eval(z)));
        res = std::max(res, std::abs(g.poly.eval(z) - std::conj(z)));
    }
    return res;
}

void validate_geyer(const GeyerPolynomial& g) {
    if (g.n() < 2) throw std::invalid_argument("geyer polynomial must have degree >= 2");
    if (static_cast<int>(g.critical_points.size()) != g.n() - 1)
        throw std::invalid_argument("geyer polynomial needs n-1 critical points");
    if (!g.poly.has_real_coeffs(1e-12))
        throw std::invalid_argument("geyer polynomial must have real coefficients");
    check_distinct(g.critical_points, 1e-6);
    split_conjugation_closed(g.critical_points);  // throws if not closed
    if (geyer_residual(g) > 1e-9)
        throw std::invalid_argument("geyer residual exceeds 1e-9");
}

GeyerPolynomial geyer_from_critical_points(const std::vector<Complex>& points) {
    if (points.empty()) throw std::invalid_argument("need at least one critical point");
    check_distinct(points, 1e-9);
    const CriticalParams cp = split_conjugation_closed(points);
    const int n = static_cast<int>(points.size()) + 1;
    const ComplexPolynomial w_int = monic_from_params(cp).antiderivative();
    auto [a, d] = solve_linear_part(cp, w_int, n);
    GeyerPolynomial g{assemble(w_int, a, d), params_to_points(cp)};
    const double res = geyer_residual(g);
    if (res > 1e-9)
        throw Unrealizable(res, "prescribed critical set admits no real (a, d); residual " +
                                    std::to_string(res));
    return g;
}

namespace {

/// Residual vector of the Newton system: fit equations followed by the two
/// gauge conditions (sum Re z_j and sum |z_j|^2 at their seed values).
Eigen::VectorXd geyer_system(const CriticalParams& cp, double a, double d, double s0, double t0) {
    const ComplexPolynomial w_int = monic_from_params(cp).antiderivative();
    const ComplexPolynomial p = assemble(w_int, a, d);
    const std::size_t m_fit = cp.reals.size() + 2 * cp.pairs.size();
    Eigen::VectorXd F(m_fit + 2);
    std::size_t r = 0;
    for (double x : cp.reals) F(r++) = p.eval(Complex(x, 0.0)).real() - x;
    for (auto [u, v] : cp.pairs) {
        Complex val = p.eval(Complex(u, v)) - Complex(u, -v);
        F(r++) = val.real();
        F(r++) = val.imag();
    }
    double s = 0.0, t = 0.0;
    for (double x : cp.reals) {
        s += x;
        t += x * x;
    }
    for (auto [u, v] : cp.pairs) {
        s += 2.0 * u;
        t += 2.0 * (u * u + v * v);
    }
    F(r++) = s - s0;
    F(r++) = t - t0;
    return F;
}

struct PackedParams {
    CriticalParams cp;
    double a, d;

    Eigen::VectorXd pack() const {
        Eigen::VectorXd q(cp.reals.size() + 2 * cp.pairs.size() + 2);
        std::size_t i = 0;
        for (double x : cp.reals) q(i++) = x;
        for (auto [u, v] : cp.pairs) {
            q(i++) = u;
            q(i++) = v;
        }
        q(i++) = a;
        q(i) = d;
        return q;
    }
    void unpack(const Eigen::VectorXd& q) {
        std::size_t i = 0;
        for (double& x : cp.reals) x = q(i++);
        for (auto& [u, v] : cp.pairs) {
            u = q(i++);
            v = q(i++);
        }
        a = q(i++);
        d = q(i);
    }
};

}  // namespace

GeyerPolynomial geyer_solve(int n, const std::vector<Complex>& seed_points) {
    if (n < 2) throw std::invalid_argument("geyer_solve: n >= 2 required");
    if (static_cast<int>(seed_points.size()) != n - 1)
        throw std::invalid_argument("geyer_solve: need n-1 seed points");

    PackedParams pp;
    pp.cp = split_conjugation_closed(seed_points);

    // initial (a, d) from the direct least-squares solve at the seed
    const ComplexPolynomial w_int0 = monic_from_params(pp.cp).antiderivative();
    std::tie(pp.a, pp.d) = solve_linear_part(pp.cp, w_int0, n);
    if (std::abs(pp.a) < 1e-3) pp.a = static_cast<double>(n);

    double s0 = 0.0, t0 = 0.0;
    for (double x : pp.cp.reals) {
        s0 += x;
        t0 += x * x;
    }
    for (auto [u, v] : pp.cp.pairs) {
        s0 += 2.0 * u;
        t0 += 2.0 * (u * u + v * v);
    }

    Eigen::VectorXd q = pp.pack();
    const int dim = static_cast<int>(q.size());
    constexpr int kMaxIter = 120;
    bool converged = false;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        pp.unpack(q);
        Eigen::VectorXd F = geyer_system(pp.cp, pp.a, pp.d, s0, t0);
        const double fnorm = F.lpNorm<Eigen::Infinity>();
        if (fnorm < 1e-13) {
            converged = true;
            break;
        }
        // central-difference Jacobian; the system is small (dim <= n+1)
        Eigen::MatrixXd J(F.size(), dim);
        for (int i = 0; i < dim; ++i) {
            const double h = 1e-7 * (1.0 + std::abs(q(i)));
            Eigen::VectorXd qp = q, qm = q;
            qp(i) += h;
            qm(i) -= h;
            PackedParams tp = pp, tm = pp;
            tp.unpack(qp);
            tm.unpack(qm);
            J.col(i) = (geyer_system(tp.cp, tp.a, tp.d, s0, t0) -
                        geyer_system(tm.cp, tm.a, tm.d, s0, t0)) /
                       (2.0 * h);
        }
        Eigen::VectorXd step = J.colPivHouseholderQr().solve(-F);
        bool moved = false;
        for (double alpha : {1.0, 0.5, 0.25, 0.125, 0.0625, 0.03125}) {
            Eigen::VectorXd qn = q + alpha * step;
            PackedParams tn = pp;
            tn.unpack(qn);
            bool valid = true;
            for (auto [u, v] : tn.cp.pairs)
                if (v <= 1e-9) valid = false;
            if (!valid) continue;
            if (geyer_system(tn.cp, tn.a, tn.d, s0, t0).lpNorm<Eigen::Infinity>() < fnorm) {
                q = qn;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    if (!converged) throw NonConvergence("geyer_solve: Newton iteration stalled from this seed");

    pp.unpack(q);
    if (std::abs(pp.a) < 1e-8) throw NonConvergence("geyer_solve: degenerate solution (a ~ 0)");
    const ComplexPolynomial w_int = monic_from_params(pp.cp).antiderivative();
    GeyerPolynomial g{assemble(w_int, pp.a, pp.d), params_to_points(pp.cp)};
    validate_geyer(g);
    return g;
}

GeyerPolynomial rescale_geyer(const GeyerPolynomial& g, double lambda) {
    if (lambda == 0.0) throw std::invalid_argument("rescale_geyer: lambda must be nonzero");
    // A o p o A^{-1} with A(z) = lambda z: coefficient k scales by lambda^(1-k)
    std::vector<Complex> c = g.poly.coeffs();
    double scale = lambda;
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] *= scale;
        scale /= lambda;
    }
    GeyerPolynomial out{ComplexPolynomial(std::move(c)), g.critical_points};
    for (Complex& z : out.critical_points) z *= lambda;
    return out;
}

std::vector<std::vector<Complex>> geyer_seed_ladder(int n) {
    std::vector<std::vector<Complex>> ladder;
    // curated seeds known to converge quickly
    switch (n) {
        case 2: ladder.push_back({Complex(1.0)}); break;
        case 3: ladder.push_back({Complex(-1.0), Complex(1.0)}); break;
        case 4: ladder.push_back({Complex(0.5), Complex(0.1, 1.0), Complex(0.1, -1.0)}); break;
        case 5:
            ladder.push_back({Complex(-0.86), Complex(0.45), Complex(1.11, 1.14), Complex(1.11, -1.14)});
            break;
        case 6:
            ladder.push_back({Complex(0.5361), Complex(0.2416, 0.8487), Complex(0.2416, -0.8487),
                              Complex(-0.2762, 1.1512), Complex(-0.2762, -1.1512)});
            break;
        default: break;
    }
    const int k = n - 1;
    const double two_pi = 2.0 * std::numbers::pi;
    for (double rho : {1.0, 0.75, 1.25}) {
        std::vector<Complex> rou;
        for (int j = 0; j < k; ++j) {
            double th = two_pi * j / k;
            rou.emplace_back(rho * std::cos(th), rho * std::sin(th));
        }
        ladder.push_back(rou);
    }
    {
        // rotated roots of unity, still conjugation closed
        std::vector<Complex> rot;
        for (int j = 0; j < k; ++j) {
            double th = (2.0 * j + 1.0) * std::numbers::pi / k;
            rot.emplace_back(std::cos(th), std::sin(th));
        }
        ladder.push_back(rot);
    }
    {
        std::vector<Complex> spread;
        for (int j = 0; j < k; ++j)
            spread.emplace_back(k == 1 ? 1.0 : -1.0 + 2.0 * j / (k - 1.0), 0.0);
        ladder.push_back(spread);
    }
    return ladder;
}

}  // namespace logvalence
