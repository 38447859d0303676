#pragma once

#include <cmath>

#include "logvalence/complex_polynomial.hpp"

namespace logvalence {

inline Complex complex_infinity() {
    return Complex(std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity());
}

inline bool is_complex_infinity(Complex z) {
    return std::isinf(z.real()) || std::isinf(z.imag());
}

/// The disc automorphism direction M_delta(w) = (w + delta) / (1 + delta w).
struct MoebiusParam {
    Complex delta;
};

/// M_delta on the extended plane: M(inf) = 1/delta, M(-1/delta) = inf.
Complex moebius_apply(const MoebiusParam& m, Complex w);

/// The pair (c, p) representing r(z) = c + 1/p(z). Such r has a degree
/// n-1 critical point at infinity and r(inf) = c.
struct StandardRationalMap {
    Complex c;
    ComplexPolynomial p;

    int n() const { return p.degree(); }
    Complex r(Complex z) const { return c + Complex(1.0) / p.eval(z); }
    /// r'(z) = -p'(z)/p(z)^2.
    Complex r_prime(Complex z) const {
        Complex pv, dv;
        p.eval_with_derivative(z, pv, dv);
        return -dv / (pv * pv);
    }
    /// One step of the anti-map conj(r): z -> conj(c + 1/p(z)).
    Complex anti_step(Complex z) const {
        if (is_complex_infinity(z)) return std::conj(c);
        Complex pv = p.eval(z);
        if (pv == Complex(0.0)) return complex_infinity();
        return std::conj(c + Complex(1.0) / pv);
    }
};

/// Convert M_delta o p to standard form: c = 1/delta and
/// p_delta(z) = delta (1 + delta p(z)) / (delta^2 - 1), so that
/// M_delta(p(z)) == c + 1/p_delta(z) identically.
StandardRationalMap perturb_to_standard_form(const ComplexPolynomial& p, const MoebiusParam& delta);

}  // namespace logvalence
