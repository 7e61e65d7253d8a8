#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qreal/number.hpp"

namespace qreal {

/// Finite sum of rational multiples of integer powers of one variable.
///
/// Stored as a valuation plus a dense coefficient run; the first and last
/// stored coefficients are always nonzero, and zero has no coefficients.
/// The same type serves as an ordinary polynomial (valuation >= 0), which is
/// how the algebraic-number code uses it for polynomials in x.
class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;
    LaurentPolynomial(long constant);  // NOLINT(google-explicit-constructor)
    LaurentPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
    LaurentPolynomial(int valuation, std::vector<Rational> coeffs);

    static LaurentPolynomial monomial(const Rational& coeff, int exponent);
    /// Coefficients listed from exponent 0 upward.
    static LaurentPolynomial from_ints(std::initializer_list<long> ascending);
    static LaurentPolynomial variable() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    int valuation() const { return valuation_; }
    /// Highest exponent; equals valuation() - 1 for the zero polynomial.
    int degree() const { return valuation_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coefficient(int exponent) const;
    const Rational& lowest_coefficient() const { return coeffs_.front(); }
    const Rational& leading_coefficient() const { return coeffs_.back(); }

    bool is_integral() const;
    bool is_monomial() const { return coeffs_.size() == 1; }
    /// Coefficient list reads the same in both directions.
    bool is_palindromic() const;

    LaurentPolynomial shifted(int k) const;  // multiply by q^k
    LaurentPolynomial scaled(const Rational& factor) const;
    /// p(1/q).
    LaurentPolynomial inverted_variable() const;
    LaurentPolynomial derivative() const;
    /// p(x + a); defined for polynomials (valuation >= 0).
    LaurentPolynomial taylor_shift(const Rational& a) const;
    /// x^d p(1/x) for d = degree(); defined for polynomials.
    LaurentPolynomial reversed() const;

    Rational evaluate(const Rational& at) const;
    /// Sign of p(at) without forming the full value when at is an integer.
    int sign_at(const Rational& at) const { return sgn(evaluate(at)); }

    /// gcd of the numerators over lcm of denominators, positive; 0 for zero.
    Rational content() const;
    /// Integer-coefficient primitive part with positive leading coefficient.
    LaurentPolynomial primitive_part() const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);
    LaurentPolynomial& operator*=(const LaurentPolynomial& other);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.valuation_ == b.valuation_ && a.coeffs_ == b.coeffs_;
    }

    /// Human-readable form. Compact drops the spaces around signs:
    /// "1+q+2q^2+q^3" versus "1 + q + 2q^2 + q^3".
    std::string to_string(bool compact = false, const std::string& var = "q") const;

  private:
    void normalize();

    int valuation_ = 0;
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of polynomial division; both arguments must be
/// ordinary polynomials (valuation >= 0) and the divisor nonzero.
struct PolyDivision {
    LaurentPolynomial quotient;
    LaurentPolynomial remainder;
};
PolyDivision divmod(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Monic gcd over Q of two ordinary polynomials; zero only if both are zero.
LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Exact quotient a / b when b divides a over Q; std::nullopt otherwise.
std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Term formatting shared with the series printer.
std::string format_term(const Rational& coeff, int exponent, const std::string& var, bool first,
                        bool compact);

}  // namespace qreal
