#include "dpcolor/polynomial.hpp"

#include <sstream>

namespace dpcolor {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(mpz_class c) { return IntPolynomial({std::move(c)}); }

IntPolynomial IntPolynomial::monomial(int degree, mpz_class c) {
    std::vector<mpz_class> v(degree + 1, mpz_class(0));
    v[degree] = std::move(c);
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::shifted_power(long shift, int k) {
    IntPolynomial base({mpz_class(shift), mpz_class(1)});
    IntPolynomial out = constant(1);
    for (int i = 0; i < k; ++i) out = out * base;
    return out;
}

mpz_class IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpz_class(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpz_class(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream ss;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const mpz_class& c = coeffs_[d];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) ss << "-";
            first = false;
        } else {
            ss << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || d == 0) ss << a.get_str();
        if (d >= 1) {
            ss << var;
            if (d >= 2) ss << "^" << d;
        }
    }
    return ss.str();
}

} // namespace dpcolor
