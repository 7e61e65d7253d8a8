#pragma once

#include <string>
#include <vector>

#include "qreal/laurent.hpp"
#include "qreal/number.hpp"

namespace qreal {

/// Real root of an integer polynomial pinned by a rational isolating interval.
///
/// Either lo < hi with p(lo) p(hi) < 0 and exactly one root of p in (lo, hi),
/// or lo == hi and p(lo) == 0 (an exact rational root).
class AlgebraicNumber {
  public:
    /// Certifies the interval with a Sturm count; throws InvalidInput if it
    /// does not contain exactly one simple root, SquarefreeRequired if p has
    /// repeated factors.
    AlgebraicNumber(LaurentPolynomial poly, Rational lo, Rational hi);

    const LaurentPolynomial& polynomial() const { return poly_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    bool is_rational() const { return lo_ == hi_; }
    int degree() const { return poly_.degree(); }

    /// Halves the interval (or lands exactly on a rational root).
    void bisect();
    /// Refines until hi - lo <= width.
    void refine_to(const Rational& width);
    /// Floor of the value, certified by integer sign tests.
    Integer floor_value();
    /// Sign of (value - x), exact.
    int compare(const Rational& x);
    double approximate();

    std::string to_string() const;

  private:
    AlgebraicNumber(LaurentPolynomial poly, Rational lo, Rational hi, bool trusted);
    friend std::vector<AlgebraicNumber> isolate_real_roots(const LaurentPolynomial& p);
    /// Replace the interval with a sub-interval split at x, keeping the root.
    void split_at(const Rational& x);

    LaurentPolynomial poly_;
    Rational lo_;
    Rational hi_;
};

/// Sturm sequence of p: p, p', then negated remainders.
std::vector<LaurentPolynomial> sturm_sequence(const LaurentPolynomial& p);
/// Number of distinct real roots of p in (lo, hi], from a Sturm sequence.
int count_roots(const std::vector<LaurentPolynomial>& sturm, const Rational& lo, const Rational& hi);
/// Cauchy bound: every real root has |x| < bound.
Rational root_bound(const LaurentPolynomial& p);
bool is_squarefree(const LaurentPolynomial& p);

/// Disjoint isolating intervals for every real root of a squarefree integer
/// polynomial, sorted ascending. Throws SquarefreeRequired otherwise.
std::vector<AlgebraicNumber> isolate_real_roots(const LaurentPolynomial& p);

}  // namespace qreal
