#include "logvalence/standard_form.hpp"

#include <stdexcept>

namespace logvalence {

Complex moebius_apply(const MoebiusParam& m, Complex w) {
    const Complex d = m.delta;
    if (is_complex_infinity(w)) {
        if (d == Complex(0.0)) return complex_infinity();
        return Complex(1.0) / d;
    }
    Complex denom = Complex(1.0) + d * w;
    if (denom == Complex(0.0)) return complex_infinity();
    return (w + d) / denom;
}

StandardRationalMap perturb_to_standard_form(const ComplexPolynomial& p, const MoebiusParam& delta) {
    const Complex d = delta.delta;
    if (d == Complex(0.0)) throw std::invalid_argument("perturb_to_standard_form: delta must be nonzero");
    if (std::abs(d) >= 1.0) throw std::invalid_argument("perturb_to_standard_form: |delta| < 1 required");
    if (p.degree() < 2) throw std::invalid_argument("perturb_to_standard_form: deg p >= 2 required");
    // p_delta = delta (1 + delta p) / (delta^2 - 1)
    ComplexPolynomial pd = d * p;
    pd += ComplexPolynomial::constant(Complex(1.0));
    pd *= d / (d * d - Complex(1.0));
    return StandardRationalMap{Complex(1.0) / d, pd};
}

}  // namespace logvalence
