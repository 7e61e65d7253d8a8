#pragma once

#include <string>
#include <vector>

#include "qreal/laurent.hpp"
#include "qreal/number.hpp"

namespace qreal {

/// Laurent series known exactly below a tracked order.
///
/// Coefficients of q^k are exact for valuation() <= k < order(); nothing is
/// claimed at or beyond order(). A series that is zero up to its order has no
/// stored coefficients and valuation() == order().
class TruncatedLaurentSeries {
  public:
    TruncatedLaurentSeries() = default;
    /// Coefficients start at exponent `valuation`; entries at or beyond
    /// `order` are dropped.
    TruncatedLaurentSeries(int valuation, std::vector<Rational> coeffs, int order);

    static TruncatedLaurentSeries zero(int order);
    /// The exact polynomial truncated at `order`.
    static TruncatedLaurentSeries from_polynomial(const LaurentPolynomial& p, int order);

    int valuation() const { return valuation_; }
    int order() const { return order_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of q^exponent; throws InsufficientPrecision at or beyond order().
    Rational coefficient(int exponent) const;
    bool is_integral() const;

    TruncatedLaurentSeries truncated(int order) const;
    TruncatedLaurentSeries shifted(int k) const;  // multiply by q^k
    /// Exact part as a Laurent polynomial (all terms below order()).
    LaurentPolynomial polynomial_part() const;

    TruncatedLaurentSeries operator-() const;
    friend TruncatedLaurentSeries operator+(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b);
    friend TruncatedLaurentSeries operator-(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b);
    friend TruncatedLaurentSeries operator*(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b);
    /// Throws InsufficientPrecision when b is zero up to its order.
    friend TruncatedLaurentSeries operator/(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b);

    // Exact polynomials act without costing precision beyond their valuation.
    friend TruncatedLaurentSeries operator+(const TruncatedLaurentSeries& a, const LaurentPolynomial& p);
    friend TruncatedLaurentSeries operator*(const LaurentPolynomial& p, const TruncatedLaurentSeries& a);
    /// Throws InvalidInput for p == 0.
    friend TruncatedLaurentSeries operator/(const TruncatedLaurentSeries& a, const LaurentPolynomial& p);

    /// Structural equality: same order, valuation and coefficients.
    friend bool operator==(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) = default;

    /// "-q^-2 - 2q^-1 + 2 - q + O(q^5)".
    std::string to_string() const;

  private:
    void normalize();

    int valuation_ = 0;
    int order_ = 0;
    std::vector<Rational> coeffs_;
};

/// True when both series agree on every exponent below min(a.order, b.order).
bool agree(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b);
/// Smallest exponent where a and b differ, or min order when they agree.
int agreement_frontier(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b);

enum class SeriesOp { add, sub, mul, div };

TruncatedLaurentSeries series_binop(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b, SeriesOp op);

/// Square root with positive leading coefficient. Throws NoSeriesSquareRoot for
/// an odd valuation or a leading coefficient that is not a rational square.
TruncatedLaurentSeries series_sqrt(const TruncatedLaurentSeries& s);

/// Laurent expansion of num/den at q = 0, exact below `order`. The fraction
/// need not be reduced.
TruncatedLaurentSeries expand_quotient(const LaurentPolynomial& num, const LaurentPolynomial& den, int order);

}  // namespace qreal
