#ifndef DPCOLOR_POLYNOMIAL_HPP
#define DPCOLOR_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace dpcolor {

// Univariate polynomial with exact integer coefficients, coefficient index =
// degree, trailing zeros trimmed. The zero polynomial has no coefficients.
class IntPolynomial {
 public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);

    static IntPolynomial constant(mpz_class c);
    static IntPolynomial monomial(int degree, mpz_class c = 1);
    // (x + shift)^k
    static IntPolynomial shifted_power(long shift, int k);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    mpz_class coeff(int i) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    mpz_class evaluate(const mpz_class& x) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    // Human-readable form like "m^4 - 4m^3 + 6m^2 - 3m".
    std::string to_string(const std::string& var = "m") const;

 private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

} // namespace dpcolor

#endif
