#pragma once

#include <optional>
#include <string>

#include "qreal/laurent.hpp"
#include "qreal/series.hpp"

namespace qreal {

/// Quotient of two integer polynomials in q in a unique normal form:
/// coprime, integer coefficients with no common content, both of
/// valuation >= 0, and the denominator's lowest nonzero coefficient positive.
class RationalFunctionQ {
  public:
    RationalFunctionQ() : den_(1) {}
    RationalFunctionQ(const LaurentPolynomial& p);  // NOLINT(google-explicit-constructor)
    /// Throws InvalidInput when den is zero.
    RationalFunctionQ(const LaurentPolynomial& num, const LaurentPolynomial& den);

    const LaurentPolynomial& numerator() const { return num_; }
    const LaurentPolynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Value at q = at, or std::nullopt when the denominator vanishes there.
    std::optional<Rational> evaluate(const Rational& at) const;

    RationalFunctionQ inverse() const;

    friend RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b);
    friend RationalFunctionQ operator/(const RationalFunctionQ& a, const RationalFunctionQ& b);
    RationalFunctionQ operator-() const { return RationalFunctionQ(-num_, den_); }
    friend bool operator==(const RationalFunctionQ& a, const RationalFunctionQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// "(1+q+2q^2+q^3)/(1+q+q^2)"; a polynomial prints without a denominator.
    std::string to_string() const;

  private:
    LaurentPolynomial num_;
    LaurentPolynomial den_;
};

/// Laurent expansion at q = 0, exact below `order`.
TruncatedLaurentSeries expand(const RationalFunctionQ& f, int order);

}  // namespace qreal
