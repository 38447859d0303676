#pragma once

#include <complex>
#include <vector>

namespace logvalence {

using Complex = std::complex<double>;

/// Dense univariate polynomial over the complex numbers, coefficients in
/// ascending powers: coeffs()[k] multiplies z^k. The trailing (leading)
/// coefficient is nonzero unless the polynomial is identically zero, which
/// is stored as the single entry {0}.
class ComplexPolynomial {
public:
    ComplexPolynomial() : coeffs_{Complex(0.0)} {}
    explicit ComplexPolynomial(std::vector<Complex> coeffs);
    ComplexPolynomial(std::initializer_list<Complex> coeffs)
        : ComplexPolynomial(std::vector<Complex>(coeffs)) {}

    static ComplexPolynomial constant(Complex value) { return ComplexPolynomial({value}); }
    /// (z - r0)(z - r1)...; real coefficients are not assumed.
    static ComplexPolynomial from_roots(const std::vector<Complex>& roots);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Complex(0.0); }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex leading() const { return coeffs_.back(); }
    /// Coefficient of z^k (0 beyond the stored degree).
    Complex coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Complex(0.0);
    }

    /// Horner evaluation.
    Complex eval(Complex z) const;
    /// Horner evaluation of the value and the first derivative together.
    void eval_with_derivative(Complex z, Complex& value, Complex& deriv) const;
    /// sum_k |a_k| |z|^k, the natural backward-error scale of eval at z.
    double eval_magnitude_bound(double abs_z) const;

    ComplexPolynomial derivative() const;
    /// Antiderivative with zero constant term.
    ComplexPolynomial antiderivative() const;
    /// Polynomial with every coefficient conjugated; satisfies
    /// conj_coeffs(p)(conj(z)) == conj(p(z)).
    ComplexPolynomial conj_coeffs() const;

    double max_coeff_norm() const;
    double l1_norm() const;
    bool has_real_coeffs(double tol = 1e-12) const;

    /// Drop leading coefficients whose contribution on the circle |z| = rho
    /// is below rel_tol times the largest term there. Keeps far-field
    /// structure that a plain magnitude trim would destroy.
    ComplexPolynomial trimmed_at_scale(double rho, double rel_tol = 1e-13) const;

    ComplexPolynomial operator-() const;
    ComplexPolynomial& operator+=(const ComplexPolynomial& rhs);
    ComplexPolynomial& operator-=(const ComplexPolynomial& rhs);
    ComplexPolynomial& operator*=(Complex scalar);

    friend ComplexPolynomial operator+(ComplexPolynomial lhs, const ComplexPolynomial& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend ComplexPolynomial operator-(ComplexPolynomial lhs, const ComplexPolynomial& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend ComplexPolynomial operator*(const ComplexPolynomial& lhs, const ComplexPolynomial& rhs);
    friend ComplexPolynomial operator*(Complex scalar, ComplexPolynomial p) {
        p *= scalar;
        return p;
    }
    friend ComplexPolynomial operator*(ComplexPolynomial p, Complex scalar) {
        p *= scalar;
        return p;
    }

private:
    void trim_exact_zeros();

    std::vector<Complex> coeffs_;
};

ComplexPolynomial pow(const ComplexPolynomial& base, int exponent);

/// outer(inner(z)) by Horner-style nested multiplication.
ComplexPolynomial compose(const ComplexPolynomial& outer, const ComplexPolynomial& inner);

}  // namespace logvalence
