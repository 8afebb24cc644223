#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ringlab {

// Integer polynomial, coefficients stored constant term first.  The
// representation is canonical: no trailing zero coefficients, so the zero
// polynomial has an empty coefficient vector.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    static IntPolynomial constant(const mpz_class& c);
    static IntPolynomial monomial(const mpz_class& c, std::size_t degree);
    // "x" convenience: the identity polynomial.
    static IntPolynomial x();
    // Parses a constant-first comma-separated list, e.g. "0,3,1" = x^2 + 3x.
    static IntPolynomial parse(const std::string& text);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    mpz_class coeff(std::size_t i) const;  // 0 outside the stored range
    mpz_class leading() const;             // 0 for the zero polynomial
    bool is_monic() const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    IntPolynomial scaled(const mpz_class& c) const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    // q(p): substitution.
    IntPolynomial compose(const IntPolynomial& p) const;

    // Exact evaluation at a rational point.
    mpq_class eval(const mpq_class& x) const;
    mpz_class eval(const mpz_class& x) const;

    // Coefficients reduced into [0, m).  m >= 1.
    IntPolynomial reduced_mod(const mpz_class& m) const;

    // Division by a monic divisor: *this = q * d + r with deg r < deg d.
    // Exact over the integers because d is monic.
    void divmod_monic(const IntPolynomial& d, IntPolynomial& q, IntPolynomial& r) const;

    std::string str() const;       // constant-first CSV, "" for zero -> "0"
    std::string pretty() const;    // human form, e.g. "x^2 + 3x - 1"

  private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

// gcd of all coefficients (positive); error on the zero polynomial.
mpz_class content(const IntPolynomial& q);

}  // namespace ringlab
