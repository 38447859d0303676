#include "logvalence/complex_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace logvalence {

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Complex(0.0));
    trim_exact_zeros();
}

void ComplexPolynomial::trim_exact_zeros() {
    while (coeffs_.size() > 1 && coeffs_.back() == Complex(0.0)) coeffs_.pop_back();
}

ComplexPolynomial ComplexPolynomial::from_roots(const std::vector<Complex>& roots) {
    std::vector<Complex> c{Complex(1.0)};
    for (Complex r : roots) {
        std::vector<Complex> next(c.size() + 1, Complex(0.0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] -= r * c[i];
            next[i + 1] += c[i];
        }
        c = std::move(next);
    }
    return ComplexPolynomial(std::move(c));
}

Complex ComplexPolynomial::eval(Complex z) const {
    Complex acc = coeffs_.back();
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

void ComplexPolynomial::eval_with_derivative(Complex z, Complex& value, Complex& deriv) const {
    value = coeffs_.back();
    deriv = Complex(0.0);
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
        deriv = deriv * z + value;
        value = value * z + *it;
    }
}

double ComplexPolynomial::eval_magnitude_bound(double abs_z) const {
    double acc = 0.0, zk = 1.0;
    for (const Complex& a : coeffs_) {
        acc += std::abs(a) * zk;
        zk *= abs_z;
    }
    return acc;
}

ComplexPolynomial ComplexPolynomial::derivative() const {
    if (coeffs_.size() == 1) return ComplexPolynomial();
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return ComplexPolynomial(std::move(d));
}

ComplexPolynomial ComplexPolynomial::antiderivative() const {
    std::vector<Complex> a(coeffs_.size() + 1, Complex(0.0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) a[k + 1] = coeffs_[k] / static_cast<double>(k + 1);
    return ComplexPolynomial(std::move(a));
}

ComplexPolynomial ComplexPolynomial::conj_coeffs() const {
    std::vector<Complex> c(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] = std::conj(coeffs_[k]);
    return ComplexPolynomial(std::move(c));
}

double ComplexPolynomial::max_coeff_norm() const {
    double m = 0.0;
    for (const Complex& a : coeffs_) m = std::max(m, std::abs(a));
    return m;
}

double ComplexPolynomial::l1_norm() const {
    double s = 0.0;
    for (const Complex& a : coeffs_) s += std::abs(a);
    return s;
}

bool ComplexPolynomial::has_real_coeffs(double tol) const {
    double scale = std::max(1.0, max_coeff_norm());
    for (const Complex& a : coeffs_)
        if (std::abs(a.imag()) > tol * scale) return false;
    return true;
}

ComplexPolynomial ComplexPolynomial::trimmed_at_scale(double rho, double rel_tol) const {
    if (coeffs_.size() == 1) return *this;
    // weight of coefficient k on the circle |z| = rho, computed in log space
    // so that huge degrees do not overflow
    const double lr = std::log(std::max(rho, 1e-300));
    std::vector<double> logw(coeffs_.size(), -1e300);
    double wmax = -1e300;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        double m = std::abs(coeffs_[k]);
        if (m == 0.0) continue;
        logw[k] = std::log(m) + static_cast<double>(k) * lr;
        wmax = std::max(wmax, logw[k]);
    }
    const double cutoff = wmax + std::log(rel_tol);
    std::size_t last = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (logw[k] > cutoff) last = k;
    std::vector<Complex> kept(coeffs_.begin(), coeffs_.begin() + last + 1);
    return ComplexPolynomial(std::move(kept));
}

ComplexPolynomial ComplexPolynomial::operator-() const {
    std::vector<Complex> c(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] = -coeffs_[k];
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial& ComplexPolynomial::operator+=(const ComplexPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Complex(0.0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim_exact_zeros();
    return *this;
}

ComplexPolynomial& ComplexPolynomial::operator-=(const ComplexPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Complex(0.0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim_exact_zeros();
    return *this;
}

ComplexPolynomial& ComplexPolynomial::operator*=(Complex scalar) {
    for (Complex& a : coeffs_) a *= scalar;
    trim_exact_zeros();
    return *this;
}

ComplexPolynomial operator*(const ComplexPolynomial& lhs, const ComplexPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return ComplexPolynomial();
    std::vector<Complex> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Complex(0.0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial pow(const ComplexPolynomial& base, int exponent) {
    if (exponent < 0) throw std::invalid_argument("pow: negative exponent");
    ComplexPolynomial acc = ComplexPolynomial::constant(Complex(1.0));
    for (int i = 0; i < exponent; ++i) acc = acc * base;
    return acc;
}

ComplexPolynomial compose(const ComplexPolynomial& outer, const ComplexPolynomial& inner) {
    ComplexPolynomial acc = ComplexPolynomial::constant(outer.coeffs().back());
    for (int k = outer.degree() - 1; k >= 0; --k) {
        acc = acc * inner;
        acc += ComplexPolynomial::constant(outer.coeffs()[k]);
    }
    return acc;
}

}  // namespace logvalence
